#include "prodineq/rational.hpp"

#include <cctype>

#include "prodineq/errors.hpp"

namespace prodineq {

mpq_class parse_rational(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.empty()) fail(Errc::BadInput, "empty rational literal");

    auto digits_ok = [](const std::string& part) {
        std::size_t i = (part.size() > 1 && (part[0] == '+' || part[0] == '-')) ? 1 : 0;
        if (i >= part.size()) return false;
        for (; i < part.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(part[i]))) return false;
        return true;
    };

    const auto slash = s.find('/');
    if (slash == std::string::npos) {
        if (!digits_ok(s)) fail(Errc::BadInput, "not a rational: '" + text + "'");
    } else {
        const std::string num = s.substr(0, slash);
        const std::string den = s.substr(slash + 1);
        if (!digits_ok(num) || !digits_ok(den))
            fail(Errc::BadInput, "not a rational: '" + text + "'");
        if (mpz_class(den) == 0) fail(Errc::BadInput, "zero denominator in '" + text + "'");
    }

    mpq_class v;
    if (mpq_set_str(v.get_mpq_t(), s.c_str(), 10) != 0)
        fail(Errc::BadInput, "not a rational: '" + text + "'");
    v.canonicalize();
    return v;
}

std::string rational_str(const mpq_class& v) { return v.get_str(); }

mpz_class floor_q(const mpq_class& v) {
    mpz_class r;
    mpz_fdiv_q(r.get_mpz_t(), v.get_num_mpz_t(), v.get_den_mpz_t());
    return r;
}

mpz_class ceil_q(const mpq_class& v) {
    mpz_class r;
    mpz_cdiv_q(r.get_mpz_t(), v.get_num_mpz_t(), v.get_den_mpz_t());
    return r;
}

mpz_class common_denominator(const std::vector<mpq_class>& values) {
    mpz_class l = 1;
    for (const auto& v : values) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
    return l;
}

std::pair<mpz_class, mpz_class> reduced_pair(const mpq_class& a, const mpq_class& b) {
    if (a <= 0 || b <= 0) fail(Errc::BadInput, "reduced_pair needs positive values");
    mpz_class x = a.get_num() * b.get_den();
    mpz_class y = b.get_num() * a.get_den();
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
    return {x / g, y / g};
}

mpq_class simplest_in(const mpq_class& lo, const std::optional<mpq_class>& hi) {
    if (hi && !(lo < *hi)) fail(Errc::InvalidInterval, "simplest_in: empty interval");

    // Unbounded: the smallest integer strictly above lo.
    if (!hi) return mpq_class(floor_q(lo) + 1);

    const mpz_class fl = floor_q(lo);
    const mpq_class next_int(fl + 1);
    if (next_int < *hi) return next_int;

    if (lo == mpq_class(fl)) {
        // lo is an integer and (lo, hi) fits inside (fl, fl+1]: fl + 1/m.
        mpq_class gap = *hi - lo;  // 0 < gap <= 1
        mpz_class m = floor_q(1 / gap) + 1;
        return lo + mpq_class(1) / mpq_class(m);
    }

    // Both endpoints in (fl, fl+1): recurse on the reciprocal of the fractional parts.
    mpq_class inner = simplest_in(1 / (*hi - mpq_class(fl)),
                                  std::optional<mpq_class>(1 / (lo - mpq_class(fl))));
    mpq_class r = mpq_class(fl) + 1 / inner;
    r.canonicalize();
    return r;
}

mpq_class pow_rational(const mpq_class& base, const mpz_class& e) {
    if (e < 0 || !e.fits_ulong_p()) fail(Errc::BadInput, "unsupported exponent");
    const unsigned long ue = e.get_ui();
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), ue);
    mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), ue);
    mpq_class r(num, den);
    r.canonicalize();
    return r;
}

std::optional<mpq_class> exact_root(const mpq_class& x, unsigned long k) {
    if (x <= 0 || k == 0) return std::nullopt;
    if (k == 1) return x;
    mpz_class num_root, den_root;
    const int num_exact = mpz_root(num_root.get_mpz_t(), x.get_num_mpz_t(), k);
    if (!num_exact) return std::nullopt;
    const int den_exact = mpz_root(den_root.get_mpz_t(), x.get_den_mpz_t(), k);
    if (!den_exact) return std::nullopt;
    mpq_class r(num_root, den_root);
    r.canonicalize();
    return r;
}

}  // namespace prodineq
