#include "prodineq/numeric_oracle.hpp"

#include <algorithm>

#include "prodineq/errors.hpp"

namespace prodineq {

BigFloat::BigFloat(mpfr_prec_t prec) {
    mpfr_init2(v_, prec);
    mpfr_set_zero(v_, 1);
}

BigFloat::BigFloat(const BigFloat& other) {
    mpfr_init2(v_, mpfr_get_prec(other.v_));
    mpfr_set(v_, other.v_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& other) noexcept {
    mpfr_init2(v_, mpfr_get_prec(other.v_));
    mpfr_swap(v_, other.v_);
}

BigFloat& BigFloat::operator=(const BigFloat& other) {
    if (this != &other) {
        mpfr_set_prec(v_, mpfr_get_prec(other.v_));
        mpfr_set(v_, other.v_, MPFR_RNDN);
    }
    return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& other) noexcept {
    if (this != &other) mpfr_swap(v_, other.v_);
    return *this;
}

BigFloat::~BigFloat() { mpfr_clear(v_); }

BigFloat BigFloat::from_string(const std::string& s, mpfr_prec_t prec) {
    BigFloat r(prec);
    if (mpfr_set_str(r.v_, s.c_str(), 10, MPFR_RNDN) != 0)
        fail(Errc::BadInput, "not a number: '" + s + "'");
    return r;
}

BigFloat BigFloat::from_rational(const mpq_class& q, mpfr_prec_t prec) {
    BigFloat r(prec);
    mpfr_set_q(r.v_, q.get_mpq_t(), MPFR_RNDN);
    return r;
}

BigFloat BigFloat::from_double(double d, mpfr_prec_t prec) {
    BigFloat r(prec);
    mpfr_set_d(r.v_, d, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::from_long(long v, mpfr_prec_t prec) {
    BigFloat r(prec);
    mpfr_set_si(r.v_, v, MPFR_RNDN);
    return r;
}

mpfr_prec_t BigFloat::precision() const { return mpfr_get_prec(v_); }
int BigFloat::sign() const { return mpfr_sgn(v_); }
bool BigFloat::is_zero() const { return mpfr_zero_p(v_) != 0; }
double BigFloat::to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

std::string BigFloat::str(std::size_t digits) const {
    char* s = nullptr;
    if (mpfr_asprintf(&s, "%.*Rg", static_cast<int>(digits), v_) < 0)
        fail(Errc::Internal, "mpfr_asprintf failed");
    std::string out(s);
    mpfr_free_str(s);
    return out;
}

namespace {

mpfr_prec_t joint_prec(const BigFloat& a, const BigFloat& b) {
    return std::max(a.precision(), b.precision());
}

}  // namespace

BigFloat operator+(const BigFloat& a, const BigFloat& b) {
    BigFloat r(joint_prec(a, b));
    mpfr_add(const_cast<mpfr_ptr>(r.raw()), a.raw(), b.raw(), MPFR_RNDN);
    return r;
}

BigFloat operator-(const BigFloat& a, const BigFloat& b) {
    BigFloat r(joint_prec(a, b));
    mpfr_sub(const_cast<mpfr_ptr>(r.raw()), a.raw(), b.raw(), MPFR_RNDN);
    return r;
}

BigFloat operator*(const BigFloat& a, const BigFloat& b) {
    BigFloat r(joint_prec(a, b));
    mpfr_mul(const_cast<mpfr_ptr>(r.raw()), a.raw(), b.raw(), MPFR_RNDN);
    return r;
}

BigFloat operator/(const BigFloat& a, const BigFloat& b) {
    BigFloat r(joint_prec(a, b));
    mpfr_div(const_cast<mpfr_ptr>(r.raw()), a.raw(), b.raw(), MPFR_RNDN);
    return r;
}

BigFloat BigFloat::operator-() const {
    BigFloat r(precision());
    mpfr_neg(r.v_, v_, MPFR_RNDN);
    return r;
}

BigFloat pow(const BigFloat& base, const BigFloat& exponent) {
    BigFloat r(joint_prec(base, exponent));
    mpfr_pow(const_cast<mpfr_ptr>(r.raw()), base.raw(), exponent.raw(), MPFR_RNDN);
    return r;
}

BigFloat sqrt(const BigFloat& v) {
    BigFloat r(v.precision());
    mpfr_sqrt(const_cast<mpfr_ptr>(r.raw()), v.raw(), MPFR_RNDN);
    return r;
}

BigFloat abs(const BigFloat& v) {
    BigFloat r(v.precision());
    mpfr_abs(const_cast<mpfr_ptr>(r.raw()), v.raw(), MPFR_RNDN);
    return r;
}

BigFloat log(const BigFloat& v) {
    BigFloat r(v.precision());
    mpfr_log(const_cast<mpfr_ptr>(r.raw()), v.raw(), MPFR_RNDN);
    return r;
}

BigFloat log10(const BigFloat& v) {
    BigFloat r(v.precision());
    mpfr_log10(const_cast<mpfr_ptr>(r.raw()), v.raw(), MPFR_RNDN);
    return r;
}

BigFloat exp10(const BigFloat& v) {
    BigFloat r(v.precision());
    mpfr_exp10(const_cast<mpfr_ptr>(r.raw()), v.raw(), MPFR_RNDN);
    return r;
}

BigFloat mul_2si(const BigFloat& v, long e) {
    BigFloat r(v.precision());
    mpfr_mul_2si(const_cast<mpfr_ptr>(r.raw()), v.raw(), e, MPFR_RNDN);
    return r;
}

BigFloat max(const BigFloat& a, const BigFloat& b) { return cmp(a, b) >= 0 ? a : b; }

int cmp(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.raw(), b.raw()); }

Approx Approx::exact(BigFloat v) {
    const mpfr_prec_t prec = v.precision();
    return {std::move(v), BigFloat(prec)};
}

namespace {

/// Upper bound on the rounding error of one operation: zero when mpfr reports
/// the result exact, else |value| * 2^(1-prec).
BigFloat rounding_term(const BigFloat& value, int ternary) {
    if (ternary == 0) return BigFloat(value.precision());
    if (value.is_zero()) return mul_2si(BigFloat::from_long(1, value.precision()),
                                        -4 * static_cast<long>(value.precision()));
    return mul_2si(abs(value), 1 - static_cast<long>(value.precision()));
}

}  // namespace

Approx approx_add(const Approx& a, const Approx& b) {
    BigFloat value(joint_prec(a.value, b.value));
    const int t = mpfr_add(const_cast<mpfr_ptr>(value.raw()), a.value.raw(), b.value.raw(),
                           MPFR_RNDN);
    BigFloat err = a.error + b.error + rounding_term(value, t);
    return {std::move(value), std::move(err)};
}

Approx approx_sub(const Approx& a, const Approx& b) {
    BigFloat value(joint_prec(a.value, b.value));
    const int t = mpfr_sub(const_cast<mpfr_ptr>(value.raw()), a.value.raw(), b.value.raw(),
                           MPFR_RNDN);
    BigFloat err = a.error + b.error + rounding_term(value, t);
    return {std::move(value), std::move(err)};
}

Approx approx_mul(const Approx& a, const Approx& b) {
    BigFloat value(joint_prec(a.value, b.value));
    const int t = mpfr_mul(const_cast<mpfr_ptr>(value.raw()), a.value.raw(), b.value.raw(),
                           MPFR_RNDN);
    BigFloat err = abs(a.value) * b.error + abs(b.value) * a.error + a.error * b.error +
                   rounding_term(value, t);
    return {std::move(value), std::move(err)};
}

Approx approx_div(const Approx& a, const Approx& b) {
    if (b.value.is_zero()) fail(Errc::BadInput, "division by zero");
    BigFloat value(joint_prec(a.value, b.value));
    const int t = mpfr_div(const_cast<mpfr_ptr>(value.raw()), a.value.raw(), b.value.raw(),
                           MPFR_RNDN);
    // First order: |a/b| * (rel_a + rel_b).
    BigFloat err = (a.error + abs(value) * b.error) / abs(b.value) + rounding_term(value, t);
    return {std::move(value), std::move(err)};
}

Approx approx_pow(const Approx& base, const Approx& exponent) {
    if (base.value.sign() <= 0) fail(Errc::BadInput, "pow needs a positive base");
    BigFloat value(joint_prec(base.value, exponent.value));
    const int t = mpfr_pow(const_cast<mpfr_ptr>(value.raw()), base.value.raw(),
                           exponent.value.raw(), MPFR_RNDN);
    BigFloat err = rounding_term(value, t);
    if (!base.error.is_zero())
        err = err + abs(exponent.value * value / base.value) * base.error;
    if (!exponent.error.is_zero()) err = err + abs(value * log(base.value)) * exponent.error;
    return {std::move(value), std::move(err)};
}

const char* conclusion_name(Conclusion c) {
    switch (c) {
        case Conclusion::Holds: return "holds";
        case Conclusion::Violated: return "violated";
        case Conclusion::Equality: return "equality";
        case Conclusion::Inconclusive: return "inconclusive";
    }
    return "?";
}

Conclusion classify_gap(const Approx& lhs, const Approx& rhs, const BigFloat& tau) {
    const Approx gap = approx_sub(rhs, lhs);
    if (gap.value.is_zero() && gap.error.is_zero()) return Conclusion::Equality;
    const BigFloat scale = max(abs(lhs.value), abs(rhs.value));
    const BigFloat margin = gap.error + tau * scale;
    if (gap.value > margin) return Conclusion::Holds;
    if (gap.value < -margin) return Conclusion::Violated;
    return Conclusion::Inconclusive;
}

bool FurutaParams::admissible(const BigFloat& p, const BigFloat& q, const BigFloat& r) {
    if (p.sign() < 0 || r.sign() < 0) return false;
    const BigFloat one = BigFloat::from_long(1, q.precision());
    if (q < one) return false;
    return p + r <= (one + r) * q;
}

FurutaParams FurutaParams::make(BigFloat p, BigFloat q, BigFloat r) {
    if (!admissible(p, q, r))
        fail(Errc::ConstraintViolated, "need 0 <= p, 1 <= q, 0 <= r, p + r <= (1 + r) q");
    return {std::move(p), std::move(q), std::move(r)};
}

BigFloat FurutaParams::prefactor_exponent() const {
    const BigFloat one = BigFloat::from_long(1, q.precision());
    return (one + r - (p + r) / q) / BigFloat::from_long(2, q.precision());
}

SideEval furuta_sides(const FurutaParams& params, const BigFloat& x) {
    if (x.sign() <= 0) fail(Errc::BadInput, "x must be positive");
    const mpfr_prec_t prec = std::max(x.precision(), params.p.precision());
    const Approx one = Approx::exact(BigFloat::from_long(1, prec));
    const Approx xa = Approx::exact(x);
    const Approx pp = Approx::exact(params.p);
    const Approx qq = Approx::exact(params.q);
    const Approx rr = Approx::exact(params.r);

    const Approx inner = approx_div(approx_add(pp, rr), qq);        // (p+r)/q
    const Approx pre_exp = approx_div(approx_sub(approx_add(one, rr), inner),
                                      Approx::exact(BigFloat::from_long(2, prec)));

    const Approx lhs = approx_mul(
        approx_pow(xa, pre_exp),
        approx_mul(approx_sub(approx_pow(xa, pp), one), approx_sub(approx_pow(xa, inner), one)));
    const Approx rhs = approx_mul(
        approx_div(pp, qq),
        approx_mul(approx_sub(approx_pow(xa, approx_add(pp, rr)), one), approx_sub(xa, one)));
    return {lhs, rhs};
}

void ScanConfig::validate() const {
    if (lo <= 0) fail(Errc::BadInput, "scan range must start above 0");
    if (!(lo < hi)) fail(Errc::BadInput, "scan range is empty");
    if (samples < 1) fail(Errc::BadInput, "need at least one sample");
    if (tau <= 0) fail(Errc::BadInput, "tolerance must be positive");
}

std::optional<ScanViolation> scan_violation(const std::vector<BigFloat>& p,
                                            const std::vector<BigFloat>& q,
                                            const ScanConfig& cfg) {
    if (p.size() != q.size()) fail(Errc::LengthMismatch, "tuples differ in length");
    cfg.validate();

    const mpfr_prec_t prec = cfg.precision;
    const BigFloat tau = BigFloat::from_rational(cfg.tau, prec);
    const Approx one = Approx::exact(BigFloat::from_long(1, prec));

    Approx coeff_left = one;   // prod q_j
    Approx coeff_right = one;  // prod p_j
    for (const auto& e : q) coeff_left = approx_mul(coeff_left, Approx::exact(e));
    for (const auto& e : p) coeff_right = approx_mul(coeff_right, Approx::exact(e));

    const BigFloat lo = BigFloat::from_rational(cfg.lo, prec);
    const BigFloat width = BigFloat::from_rational(cfg.hi - cfg.lo, prec);
    const BigFloat count = BigFloat::from_long(static_cast<long>(cfg.samples), prec);

    for (unsigned i = 1; i <= cfg.samples; ++i) {
        const BigFloat x = lo + width * BigFloat::from_long(static_cast<long>(i), prec) / count;
        const Approx xa = Approx::exact(x);

        Approx lhs = coeff_left;
        for (const auto& e : p)
            lhs = approx_mul(lhs, approx_sub(approx_pow(xa, Approx::exact(e)), one));
        Approx rhs = coeff_right;
        for (const auto& e : q)
            rhs = approx_mul(rhs, approx_sub(approx_pow(xa, Approx::exact(e)), one));

        if (classify_gap(lhs, rhs, tau) == Conclusion::Violated)
            return ScanViolation{x, lhs.value, rhs.value};
    }
    return std::nullopt;
}

std::vector<BigFloat> grid_points(const XGrid& grid, mpfr_prec_t precision) {
    if (grid.lo <= 0 || !(grid.lo < grid.hi) || grid.count < 2)
        fail(Errc::BadInput, "grid needs 0 < lo < hi and count >= 2");
    std::vector<BigFloat> xs;
    xs.reserve(grid.count);
    const BigFloat lo = BigFloat::from_rational(grid.lo, precision);
    const BigFloat hi = BigFloat::from_rational(grid.hi, precision);
    const BigFloat steps = BigFloat::from_long(static_cast<long>(grid.count) - 1, precision);
    if (grid.log_spaced) {
        const BigFloat l0 = log10(lo);
        const BigFloat l1 = log10(hi);
        for (unsigned k = 0; k < grid.count; ++k) {
            const BigFloat t =
                l0 + (l1 - l0) * BigFloat::from_long(static_cast<long>(k), precision) / steps;
            xs.push_back(exp10(t));
        }
    } else {
        for (unsigned k = 0; k < grid.count; ++k)
            xs.push_back(lo + (hi - lo) *
                                  BigFloat::from_long(static_cast<long>(k), precision) / steps);
    }
    return xs;
}

SweepReport furuta_sweep(const std::vector<BigFloat>& ps, const std::vector<BigFloat>& qs,
                         const std::vector<BigFloat>& rs, const XGrid& grid,
                         mpfr_prec_t precision, const mpq_class& tau) {
    SweepReport report;
    report.min_gap = BigFloat(precision);
    bool have_min = false;
    const BigFloat tau_f = BigFloat::from_rational(tau, precision);
    const std::vector<BigFloat> xs = grid_points(grid, precision);

    for (const auto& p : ps) {
        for (const auto& q : qs) {
            for (const auto& r : rs) {
                if (!FurutaParams::admissible(p, q, r)) continue;
                ++report.admissible_triples;
                const FurutaParams params = FurutaParams::make(p, q, r);
                for (const auto& x : xs) {
                    const SideEval sides = furuta_sides(params, x);
                    ++report.evaluated;
                    const Approx gap = approx_sub(sides.rhs, sides.lhs);
                    if (classify_gap(sides.lhs, sides.rhs, tau_f) == Conclusion::Violated)
                        ++report.alerts;
                    if (!have_min || gap.value < report.min_gap) {
                        have_min = true;
                        report.min_gap = gap.value;
                        report.min_gap_band = gap.error;
                        report.at_p = p;
                        report.at_q = q;
                        report.at_r = r;
                        report.at_x = x;
                    }
                }
            }
        }
    }
    return report;
}

}  // namespace prodineq
