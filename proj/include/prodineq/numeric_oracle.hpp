#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <optional>
#include <string>
#include <vector>

namespace prodineq {

/// RAII wrapper over mpfr_t with an explicit significand precision in bits.
/// Binary operations run at the larger of the two operand precisions.
class BigFloat {
public:
    explicit BigFloat(mpfr_prec_t prec = 256);
    BigFloat(const BigFloat& other);
    BigFloat(BigFloat&& other) noexcept;
    BigFloat& operator=(const BigFloat& other);
    BigFloat& operator=(BigFloat&& other) noexcept;
    ~BigFloat();

    static BigFloat from_string(const std::string& s, mpfr_prec_t prec = 256);
    static BigFloat from_rational(const mpq_class& q, mpfr_prec_t prec = 256);
    static BigFloat from_double(double d, mpfr_prec_t prec = 256);
    static BigFloat from_long(long v, mpfr_prec_t prec = 256);

    mpfr_prec_t precision() const;
    int sign() const;
    bool is_zero() const;
    double to_double() const;
    std::string str(std::size_t digits = 30) const;

    friend BigFloat operator+(const BigFloat& a, const BigFloat& b);
    friend BigFloat operator-(const BigFloat& a, const BigFloat& b);
    friend BigFloat operator*(const BigFloat& a, const BigFloat& b);
    friend BigFloat operator/(const BigFloat& a, const BigFloat& b);
    BigFloat operator-() const;

    friend BigFloat pow(const BigFloat& base, const BigFloat& exponent);
    friend BigFloat sqrt(const BigFloat& v);
    friend BigFloat abs(const BigFloat& v);
    friend BigFloat log(const BigFloat& v);
    friend BigFloat log10(const BigFloat& v);
    friend BigFloat exp10(const BigFloat& v);
    friend BigFloat mul_2si(const BigFloat& v, long e);
    friend BigFloat max(const BigFloat& a, const BigFloat& b);

    friend int cmp(const BigFloat& a, const BigFloat& b);
    friend bool operator<(const BigFloat& a, const BigFloat& b) { return cmp(a, b) < 0; }
    friend bool operator>(const BigFloat& a, const BigFloat& b) { return cmp(a, b) > 0; }
    friend bool operator<=(const BigFloat& a, const BigFloat& b) { return cmp(a, b) <= 0; }
    friend bool operator>=(const BigFloat& a, const BigFloat& b) { return cmp(a, b) >= 0; }
    friend bool operator==(const BigFloat& a, const BigFloat& b) { return cmp(a, b) == 0; }

    mpfr_srcptr raw() const { return v_; }

private:
    mpfr_t v_;
};

/// Value with a running first-order absolute error bound. An error of exactly
/// zero means every operation so far was exact (mpfr reported no rounding).
struct Approx {
    BigFloat value;
    BigFloat error;

    static Approx exact(BigFloat v);
    bool is_exact() const { return error.is_zero(); }
};

Approx approx_add(const Approx& a, const Approx& b);
Approx approx_sub(const Approx& a, const Approx& b);
Approx approx_mul(const Approx& a, const Approx& b);
Approx approx_div(const Approx& a, const Approx& b);
/// base^exponent for base > 0.
Approx approx_pow(const Approx& base, const Approx& exponent);

enum class Conclusion { Holds, Violated, Equality, Inconclusive };
const char* conclusion_name(Conclusion c);

/// Compares lhs <= rhs with the accumulated error band plus a relative
/// tolerance; a gap inside the band is Inconclusive, never coerced.
Conclusion classify_gap(const Approx& lhs, const Approx& rhs, const BigFloat& tau);

/// Parameters of the fractional-power inequality
///   x^{(1+r-(p+r)/q)/2} (x^p - 1)(x^{(p+r)/q} - 1) <= (p/q)(x^{p+r} - 1)(x - 1)
/// with 0 <= p, 1 <= q, 0 <= r and p + r <= (1+r) q.
struct FurutaParams {
    BigFloat p, q, r;

    static bool admissible(const BigFloat& p, const BigFloat& q, const BigFloat& r);
    /// Throws Errc::ConstraintViolated when the parameter constraints fail.
    static FurutaParams make(BigFloat p, BigFloat q, BigFloat r);
    BigFloat prefactor_exponent() const;  // (1 + r - (p+r)/q)/2 >= 0
};

struct SideEval {
    Approx lhs;
    Approx rhs;
};

/// Both sides at x > 0, with error bounds. Exact zeros stay exact (x = 1, p = 0).
SideEval furuta_sides(const FurutaParams& params, const BigFloat& x);

struct ScanConfig {
    mpq_class lo{1};
    mpq_class hi{10};
    unsigned samples = 1000;
    mpfr_prec_t precision = 256;
    mpq_class tau{mpz_class(1), mpz_class("1000000000000000000000000000000")};  // 1e-30 relative

    void validate() const;  // lo > 0, samples >= 1, tau > 0
};

struct ScanViolation {
    BigFloat x;
    BigFloat lhs;
    BigFloat rhs;
};

/// Samples coeff_left*prod(x^{p_j}-1) <= coeff_right*prod(x^{q_j}-1) over
/// (lo, hi]; returns the first sample violating beyond the error band plus tau.
/// The float path for exponents outside the exact pipeline; it can miss
/// violations but never fabricates one.
std::optional<ScanViolation> scan_violation(const std::vector<BigFloat>& p,
                                            const std::vector<BigFloat>& q,
                                            const ScanConfig& cfg);

struct XGrid {
    mpq_class lo{mpz_class(1), mpz_class(10)};
    mpq_class hi{10};
    unsigned count = 100;
    bool log_spaced = true;
};

std::vector<BigFloat> grid_points(const XGrid& grid, mpfr_prec_t precision);

struct SweepReport {
    unsigned long evaluated = 0;  // (params, x) pairs actually checked
    unsigned long admissible_triples = 0;
    unsigned long alerts = 0;  // gaps negative beyond the error band plus tau
    BigFloat min_gap;
    BigFloat min_gap_band;
    BigFloat at_p, at_q, at_r, at_x;
};

/// Exhaustive check of the fractional-power inequality over a parameter grid;
/// any alert would contradict its claim.
SweepReport furuta_sweep(const std::vector<BigFloat>& ps, const std::vector<BigFloat>& qs,
                         const std::vector<BigFloat>& rs, const XGrid& grid,
                         mpfr_prec_t precision = 256,
                         const mpq_class& tau = ScanConfig{}.tau);

}  // namespace prodineq
