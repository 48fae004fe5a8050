#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <vector>

namespace prodineq {

/// Sorted tuple of positive exact rational exponents. Default-constructed
/// tuples are empty placeholders; every populated tuple comes from normalize().
class ExponentTuple {
public:
    ExponentTuple() = default;

    /// Sorts a copy of `raw` ascending. Throws Errc::EmptyTuple / Errc::NonPositiveExponent.
    static ExponentTuple normalize(std::vector<mpq_class> raw);

    std::size_t size() const { return entries_.size(); }
    const mpq_class& operator[](std::size_t i) const { return entries_[i]; }
    const std::vector<mpq_class>& entries() const { return entries_; }

    mpq_class sum() const;
    mpq_class product() const;

    bool operator==(const ExponentTuple&) const = default;

private:
    std::vector<mpq_class> entries_;
};

/// A claimed inequality  coeff_left * prod(x^{p_j}-1)  <=  coeff_right * prod(x^{q_j}-1)
/// with coeff_left = prod(q_j) and coeff_right = prod(p_j), plus the pair in lowest terms.
struct InequalityInstance {
    ExponentTuple p;
    ExponentTuple q;
    mpq_class coeff_left;    // prod q_j
    mpq_class coeff_right;   // prod p_j
    mpz_class reduced_left;  // coeff pair over their greatest common rational factor
    mpz_class reduced_right;

    static InequalityInstance make(ExponentTuple p, ExponentTuple q);
};

struct LevelCheck {
    std::size_t k;  // 1-based level, 2..n
    mpq_class suffix_p;
    mpq_class suffix_q;
    bool satisfied;
};

struct DominanceReport {
    bool sums_equal = false;
    mpq_class sum_p;
    mpq_class sum_q;
    std::vector<LevelCheck> levels;  // k = 2..n
    std::optional<std::size_t> first_violation;
    bool satisfied = false;
};

/// Suffix-sum dominance: equal totals and sum_{j>=k} p_j <= sum_{j>=k} q_j for k = 2..n.
/// Exact comparisons only. Throws Errc::LengthMismatch.
DominanceReport check_dominance(const ExponentTuple& p, const ExponentTuple& q);

struct Integerized {
    std::vector<mpz_class> p;
    std::vector<mpz_class> q;
    mpz_class scale;  // lcm of all entry denominators
};

/// Clear denominators: scale L = lcm of denominators, entries become L*p_j, L*q_j.
/// The inequality in x on (1,oo) holds iff the scaled one in t on (1,oo) does (x = t^L).
Integerized integerize(const ExponentTuple& p, const ExponentTuple& q);

enum class ReciprocalDirection { SameDirection, Reversed };

/// Direction of the claim on (0,1): same as on (1,oo) for even n, reversed for odd n.
ReciprocalDirection reciprocal_direction(std::size_t n);

}  // namespace prodineq
