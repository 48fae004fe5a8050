#pragma once

#include <gmpxx.h>

#include <optional>
#include <variant>
#include <vector>

#include "prodineq/exponent_tuple.hpp"
#include "prodineq/int_poly.hpp"

namespace prodineq {

enum class Region { RightOfOne, UnitInterval };
enum class Direction { Holds, Refuted, Equality };

const char* region_name(Region r);
const char* direction_name(Direction d);

/// The exact object every verdict is judged against: the scaled difference
///   D = clearing * (coeff_right * PP(L*q) - coeff_left * PP(L*p))
/// where PP is the power product and L clears rational exponents. For t > 0,
/// sign D(t) = sign(RHS - LHS) of the claimed inequality at x = t^L.
struct DifferenceBuild {
    InequalityInstance instance;
    mpz_class scale;            // L
    mpz_class clearing_factor;  // least common denominator of the coefficient pair
    IntPoly difference;
};

DifferenceBuild build_difference(const ExponentTuple& p, const ExponentTuple& q);

struct CertIdenticallyZero {};

/// After stripping (x-1)^multiplicity, every coefficient of quotient(1+t) is
/// >= 0, so the difference is >= 0 for all x >= 1.
struct CertShiftedNonnegative {
    unsigned multiplicity;
    std::vector<mpz_class> shifted;
};

struct CertSample {
    mpq_class point;
    mpq_class value;  // exact value of the difference at the point
};

/// The stripped quotient has `root_count` distinct roots in the region and one
/// exact positive (resp. negative, for sign = -1) sample per root-free gap, so
/// sign * difference >= 0 throughout; interior zeros are even-order tangencies.
struct CertSturmPositive {
    unsigned multiplicity;       // of (x-1) in the difference
    unsigned zero_multiplicity;  // of x in the remaining quotient
    unsigned root_count;
    std::vector<CertSample> samples;  // root_count + 1 of them, ascending
};

/// Exact witness in the integerized variable t (x = t^L); value = D(witness) < 0.
struct CertRefutation {
    mpq_class witness;
    mpq_class value;
};

struct Certificate {
    Region region = Region::RightOfOne;
    int sign = +1;  // the nonnegativity variants certify sign * difference >= 0
    std::variant<CertIdenticallyZero, CertShiftedNonnegative, CertSturmPositive, CertRefutation>
        body;

    const char* variant_name() const;
};

struct Verdict {
    Direction direction = Direction::Holds;
    Certificate certificate;
    DominanceReport dominance;  // informational; Holds can occur with dominance unsatisfied
    Region region = Region::RightOfOne;

    // Unit-interval extras: for odd n the reverse inequality holds on (0,1).
    bool reverse_holds = false;
    std::optional<Certificate> reverse_certificate;
};

/// Complete decision of the claim on (1, oo). Does not require dominance.
/// Ladder: zero difference -> Equality; all shifted coefficients nonnegative ->
/// Holds; otherwise Sturm root isolation decides, emitting either gap samples
/// (Holds) or an exact negative witness (Refuted).
Verdict decide(const ExponentTuple& p, const ExponentTuple& q);

/// Decision of the claim on (0,1). Requires equal sums (Errc::UnequalSums).
/// When dominance holds the outcome is forced by the parity of n and is
/// cross-checked against the exact analysis.
Verdict decide_unit_interval(const ExponentTuple& p, const ExponentTuple& q);

/// Re-checks every claimed fact of the certificate from the difference alone:
/// multiplicities, shifted coefficients, Sturm counts, sample interleaving and
/// exact evaluations. Returns false on any mismatch.
bool verify_certificate(const DifferenceBuild& build, const Certificate& cert);

/// sum q_j^2 - sum p_j^2 < 0 forces the difference negative just right of 1
/// (its order-(n+2) Taylor coefficient at 1 is that quantity times a positive
/// factor). Advisory fast path; only meaningful when the sums are equal.
struct SpreadHint {
    mpq_class spread;
};
std::optional<SpreadHint> necessary_spread_check(const ExponentTuple& p, const ExponentTuple& q);

}  // namespace prodineq
