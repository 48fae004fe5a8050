#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace prodineq {

/// Dense univariate polynomial with arbitrary-precision integer coefficients.
/// coeff(i) is the coefficient of x^i; the zero polynomial has no coefficients
/// and degree() == -1 (the "minus infinity" marker).
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<mpz_class> coeffs);

    static IntPoly constant(const mpz_class& v);
    static IntPoly monomial(const mpz_class& coeff, std::size_t degree);

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const mpz_class& coeff(std::size_t i) const;
    const std::vector<mpz_class>& coeffs() const { return coeffs_; }
    const mpz_class& leading() const;

    IntPoly operator-() const;
    friend IntPoly operator+(const IntPoly& a, const IntPoly& b);
    friend IntPoly operator-(const IntPoly& a, const IntPoly& b);
    friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
    friend IntPoly operator*(const mpz_class& c, const IntPoly& a);
    bool operator==(const IntPoly&) const = default;

    /// "x^3 - 2x + 1" style rendering, for reports and test failure output.
    std::string str() const;

private:
    void trim();
    std::vector<mpz_class> coeffs_;
};

/// Expanded product of (x^e - 1) over the exponent list. Throws Errc::ExponentZero.
IntPoly power_product(const std::vector<unsigned long>& exponents);

/// ca*a - cb*b, exact.
IntPoly sub_scaled(const IntPoly& a, const mpz_class& ca, const IntPoly& b, const mpz_class& cb);

/// Exact evaluation at a rational point.
mpq_class eval_rational(const IntPoly& poly, const mpq_class& x);

/// Sign of poly(x) without building the full value's canonical form.
int sign_at(const IntPoly& poly, const mpq_class& x);

/// Coefficients of poly(a + t) as a polynomial in t.
IntPoly taylor_shift(const IntPoly& poly, const mpz_class& a);

/// Coefficients of poly(1 + t); all of them >= 0 certifies poly >= 0 on x >= 1.
IntPoly taylor_shift_one(const IntPoly& poly);

struct MultiplicityAtOne {
    unsigned multiplicity;  // largest m with (x-1)^m dividing the polynomial
    IntPoly quotient;       // poly / (x-1)^m
};

/// Throws Errc::ZeroPolynomial on the zero polynomial.
MultiplicityAtOne root_multiplicity_at_one(const IntPoly& poly);

/// Multiplicity of the root 0, i.e. the index of the first non-zero coefficient.
unsigned multiplicity_at_zero(const IntPoly& poly);
IntPoly strip_zero_root(const IntPoly& poly, unsigned k);

IntPoly derivative(const IntPoly& poly);

/// Positive gcd of the coefficients (0 for the zero polynomial).
mpz_class content(const IntPoly& poly);
IntPoly primitive_part(const IntPoly& poly);  // sign of the leading coefficient preserved

/// Remainder of |lc(b)|^(deg a - deg b + 1) * a  divided by b; exact over the integers.
/// The positive scaling keeps the remainder's sign equal to that of (a mod b).
IntPoly pseudo_rem(const IntPoly& a, const IntPoly& b);

/// Quotient of an exact division; throws Errc::Internal if b does not divide a.
IntPoly exact_div(const IntPoly& a, const IntPoly& b);

/// Primitive gcd with positive leading coefficient (primitive PRS).
IntPoly poly_gcd(IntPoly a, IntPoly b);

/// poly / gcd(poly, poly'): same distinct roots, all simple. Primitive, positive leading.
IntPoly squarefree_part(const IntPoly& poly);

/// Cauchy-style bound: every real root x of poly satisfies |x| < bound.
mpz_class root_bound(const IntPoly& poly);

}  // namespace prodineq
