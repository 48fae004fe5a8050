#include "prodineq/int_poly.hpp"

#include <algorithm>

#include "prodineq/errors.hpp"

namespace prodineq {

namespace {
const mpz_class kZero = 0;
}

IntPoly::IntPoly(std::vector<mpz_class> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void IntPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPoly IntPoly::constant(const mpz_class& v) { return IntPoly(std::vector<mpz_class>{v}); }

IntPoly IntPoly::monomial(const mpz_class& coeff, std::size_t degree) {
    std::vector<mpz_class> c(degree + 1, mpz_class(0));
    c[degree] = coeff;
    return IntPoly(std::move(c));
}

const mpz_class& IntPoly::coeff(std::size_t i) const {
    return i < coeffs_.size() ? coeffs_[i] : kZero;
}

const mpz_class& IntPoly::leading() const {
    if (is_zero()) fail(Errc::ZeroPolynomial, "zero polynomial has no leading coefficient");
    return coeffs_.back();
}

IntPoly IntPoly::operator-() const {
    std::vector<mpz_class> c(coeffs_);
    for (auto& v : c) v = -v;
    return IntPoly(std::move(c));
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
    std::vector<mpz_class> c(std::max(a.coeffs_.size(), b.coeffs_.size()), mpz_class(0));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) + b.coeff(i);
    return IntPoly(std::move(c));
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) {
    std::vector<mpz_class> c(std::max(a.coeffs_.size(), b.coeffs_.size()), mpz_class(0));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) - b.coeff(i);
    return IntPoly(std::move(c));
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return IntPoly();
    std::vector<mpz_class> c(a.coeffs_.size() + b.coeffs_.size() - 1, mpz_class(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return IntPoly(std::move(c));
}

IntPoly operator*(const mpz_class& c, const IntPoly& a) {
    if (c == 0) return IntPoly();
    std::vector<mpz_class> out(a.coeffs_);
    for (auto& v : out) v *= c;
    return IntPoly(std::move(out));
}

std::string IntPoly::str() const {
    if (is_zero()) return "0";
    std::string out;
    for (int i = degree(); i >= 0; --i) {
        const mpz_class& c = coeffs_[i];
        if (c == 0) continue;
        const bool first = out.empty();
        mpz_class a = abs(c);
        if (!first) out += c > 0 ? " + " : " - ";
        if (first && c < 0) out += "-";
        if (a != 1 || i == 0) out += a.get_str();
        if (i > 0) {
            out += "x";
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

IntPoly power_product(const std::vector<unsigned long>& exponents) {
    IntPoly result = IntPoly::constant(1);
    for (unsigned long e : exponents) {
        if (e == 0) fail(Errc::ExponentZero, "power product factor x^0 - 1");
        // result *= (x^e - 1) as a shift-and-subtract.
        std::vector<mpz_class> next(result.coeffs().size() + e, mpz_class(0));
        for (std::size_t i = 0; i < result.coeffs().size(); ++i) {
            next[i + e] += result.coeffs()[i];
            next[i] -= result.coeffs()[i];
        }
        result = IntPoly(std::move(next));
    }
    return result;
}

IntPoly sub_scaled(const IntPoly& a, const mpz_class& ca, const IntPoly& b, const mpz_class& cb) {
    std::vector<mpz_class> c(std::max(a.coeffs().size(), b.coeffs().size()), mpz_class(0));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = ca * a.coeff(i) - cb * b.coeff(i);
    return IntPoly(std::move(c));
}

mpq_class eval_rational(const IntPoly& poly, const mpq_class& x) {
    if (poly.is_zero()) return mpq_class(0);
    const int n = poly.degree();
    const mpz_class& a = x.get_num();
    const mpz_class& b = x.get_den();

    // Horner over the integers: value = sum c_i a^i b^(n-i) / b^n.
    mpz_class acc = poly.coeff(n);
    mpz_class bpow = 1;
    for (int i = n - 1; i >= 0; --i) {
        bpow *= b;
        acc = acc * a + poly.coeff(i) * bpow;
    }
    mpq_class r(acc, bpow);
    r.canonicalize();
    return r;
}

int sign_at(const IntPoly& poly, const mpq_class& x) {
    if (poly.is_zero()) return 0;
    const int n = poly.degree();
    mpz_class acc = poly.coeff(n);
    mpz_class bpow = 1;
    const mpz_class& a = x.get_num();
    const mpz_class& b = x.get_den();
    for (int i = n - 1; i >= 0; --i) {
        bpow *= b;
        acc = acc * a + poly.coeff(i) * bpow;
    }
    return sgn(acc);
}

IntPoly taylor_shift(const IntPoly& poly, const mpz_class& a) {
    if (poly.is_zero()) return poly;
    std::vector<mpz_class> c(poly.coeffs());
    const std::size_t n = c.size();
    // Synthetic-division form of the shift: after pass i, c holds the
    // coefficients of poly(a + t) up to index i.
    for (std::size_t i = 0; i + 1 < n; ++i)
        for (std::size_t j = n - 1; j > i; --j) c[j - 1] += a * c[j];
    return IntPoly(std::move(c));
}

IntPoly taylor_shift_one(const IntPoly& poly) { return taylor_shift(poly, 1); }

MultiplicityAtOne root_multiplicity_at_one(const IntPoly& poly) {
    if (poly.is_zero()) fail(Errc::ZeroPolynomial, "multiplicity of the zero polynomial");
    MultiplicityAtOne out{0, poly};
    for (;;) {
        // Synthetic division by (x - 1): remainder is the value at 1.
        const auto& c = out.quotient.coeffs();
        const int n = out.quotient.degree();
        if (n < 0) break;
        std::vector<mpz_class> q(static_cast<std::size_t>(n), mpz_class(0));
        mpz_class carry = c[n];
        for (int i = n - 1; i >= 0; --i) {
            q[i] = carry;
            carry += c[i];
        }
        if (carry != 0) break;  // 1 is not a root of the current quotient
        out.quotient = IntPoly(std::move(q));
        ++out.multiplicity;
        if (out.quotient.is_zero()) fail(Errc::Internal, "division by (x-1) emptied polynomial");
    }
    return out;
}

unsigned multiplicity_at_zero(const IntPoly& poly) {
    if (poly.is_zero()) return 0;
    unsigned k = 0;
    while (poly.coeff(k) == 0) ++k;
    return k;
}

IntPoly strip_zero_root(const IntPoly& poly, unsigned k) {
    if (k == 0) return poly;
    std::vector<mpz_class> c(poly.coeffs().begin() + k, poly.coeffs().end());
    return IntPoly(std::move(c));
}

IntPoly derivative(const IntPoly& poly) {
    if (poly.degree() < 1) return IntPoly();
    std::vector<mpz_class> c(static_cast<std::size_t>(poly.degree()), mpz_class(0));
    for (std::size_t i = 1; i < poly.coeffs().size(); ++i)
        c[i - 1] = mpz_class(i) * poly.coeffs()[i];
    return IntPoly(std::move(c));
}

mpz_class content(const IntPoly& poly) {
    mpz_class g = 0;
    for (const auto& c : poly.coeffs()) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

IntPoly primitive_part(const IntPoly& poly) {
    if (poly.is_zero()) return poly;
    const mpz_class g = content(poly);
    if (g == 1) return poly;
    std::vector<mpz_class> c(poly.coeffs());
    for (auto& v : c) v /= g;
    return IntPoly(std::move(c));
}

IntPoly pseudo_rem(const IntPoly& a, const IntPoly& b) {
    if (b.is_zero()) fail(Errc::ZeroPolynomial, "pseudo remainder by zero");
    if (a.degree() < b.degree()) return a;

    const mpz_class lc = abs(b.leading());
    const int delta = a.degree() - b.degree();
    mpz_class scale;
    mpz_pow_ui(scale.get_mpz_t(), lc.get_mpz_t(), static_cast<unsigned long>(delta) + 1);

    std::vector<mpz_class> r(a.coeffs());
    for (auto& v : r) v *= scale;

    const mpz_class blead = b.leading();
    for (int k = delta; k >= 0; --k) {
        const std::size_t top = static_cast<std::size_t>(b.degree() + k);
        if (r[top] == 0) continue;
        mpz_class q = r[top] / blead;  // exact by the scaling
        for (int i = 0; i <= b.degree(); ++i)
            r[static_cast<std::size_t>(i + k)] -= q * b.coeff(static_cast<std::size_t>(i));
    }
    r.resize(static_cast<std::size_t>(b.degree()));
    return IntPoly(std::move(r));
}

IntPoly exact_div(const IntPoly& a, const IntPoly& b) {
    if (b.is_zero()) fail(Errc::ZeroPolynomial, "division by zero polynomial");
    if (a.is_zero()) return IntPoly();
    if (a.degree() < b.degree()) fail(Errc::Internal, "exact_div: degree underflow");

    std::vector<mpz_class> r(a.coeffs());
    std::vector<mpz_class> q(static_cast<std::size_t>(a.degree() - b.degree()) + 1, mpz_class(0));
    const mpz_class& blead = b.leading();
    for (int k = a.degree() - b.degree(); k >= 0; --k) {
        const std::size_t top = static_cast<std::size_t>(b.degree() + k);
        if (r[top] == 0) continue;
        mpz_class qc;
        mpz_class rem;
        mpz_tdiv_qr(qc.get_mpz_t(), rem.get_mpz_t(), r[top].get_mpz_t(), blead.get_mpz_t());
        if (rem != 0) fail(Errc::Internal, "exact_div: inexact step");
        q[static_cast<std::size_t>(k)] = qc;
        for (int i = 0; i <= b.degree(); ++i)
            r[static_cast<std::size_t>(i + k)] -= qc * b.coeff(static_cast<std::size_t>(i));
    }
    for (const auto& v : r)
        if (v != 0) fail(Errc::Internal, "exact_div: non-zero remainder");
    return IntPoly(std::move(q));
}

IntPoly poly_gcd(IntPoly a, IntPoly b) {
    if (a.is_zero()) return primitive_part(b);
    if (b.is_zero()) return primitive_part(a);
    mpz_class cont_gcd;
    mpz_gcd(cont_gcd.get_mpz_t(), content(a).get_mpz_t(), content(b).get_mpz_t());

    a = primitive_part(a);
    b = primitive_part(b);
    if (a.degree() < b.degree()) std::swap(a, b);
    while (!b.is_zero()) {
        IntPoly r = primitive_part(pseudo_rem(a, b));
        a = std::move(b);
        b = std::move(r);
    }
    if (a.leading() < 0) a = -a;
    return cont_gcd * a;
}

IntPoly squarefree_part(const IntPoly& poly) {
    if (poly.is_zero()) fail(Errc::ZeroPolynomial, "squarefree part of zero");
    if (poly.degree() == 0) return IntPoly::constant(1);
    IntPoly g = poly_gcd(poly, derivative(poly));
    IntPoly sf = primitive_part(exact_div(poly, g));
    if (sf.leading() < 0) sf = -sf;
    return sf;
}

mpz_class root_bound(const IntPoly& poly) {
    if (poly.is_zero()) fail(Errc::ZeroPolynomial, "root bound of zero polynomial");
    const mpz_class lead = abs(poly.leading());
    mpz_class maxc = 0;
    for (int i = 0; i < poly.degree(); ++i) {
        mpz_class a = abs(poly.coeff(static_cast<std::size_t>(i)));
        if (a > maxc) maxc = a;
    }
    mpz_class q;
    mpz_cdiv_q(q.get_mpz_t(), maxc.get_mpz_t(), lead.get_mpz_t());
    return q + 2;  // strict: |root| <= 1 + max|c_i|/lead < bound
}

}  // namespace prodineq
