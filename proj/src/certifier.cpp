#include "prodineq/certifier.hpp"

#include <algorithm>

#include "prodineq/errors.hpp"
#include "prodineq/rational.hpp"
#include "prodineq/sturm.hpp"

namespace prodineq {

namespace {

constexpr unsigned long kMaxTotalDegree = 2'000'000;

OpenInterval region_interval(Region r) {
    return r == Region::RightOfOne ? OpenInterval::above(1)
                                   : OpenInterval::between(0, 1);
}

std::vector<unsigned long> to_exponents(const std::vector<mpz_class>& scaled) {
    std::vector<unsigned long> exps;
    unsigned long total = 0;
    exps.reserve(scaled.size());
    for (const auto& e : scaled) {
        if (!e.fits_ulong_p()) fail(Errc::BadInput, "scaled exponent too large to expand");
        const unsigned long v = e.get_ui();
        total += v;
        if (total > kMaxTotalDegree) fail(Errc::BadInput, "total degree too large to expand");
        exps.push_back(v);
    }
    return exps;
}

mpz_class integral_value(const mpq_class& v) {
    mpq_class c = v;
    c.canonicalize();
    if (c.get_den() != 1) fail(Errc::Internal, "expected an integral value");
    return c.get_num();
}

struct StrippedDifference {
    unsigned multiplicity;       // of (x-1)
    unsigned zero_multiplicity;  // of x in what remains
    IntPoly quotient;            // difference / ((x-1)^m * x^k)
};

StrippedDifference strip(const IntPoly& difference) {
    auto m = root_multiplicity_at_one(difference);
    const unsigned k = multiplicity_at_zero(m.quotient);
    return {m.multiplicity, k, strip_zero_root(m.quotient, k)};
}

struct SignSummary {
    unsigned root_count;
    std::vector<CertSample> samples;
    bool all_positive = true;
    bool all_negative = true;
    std::optional<std::size_t> first_negative;
};

/// Per-gap sign analysis of `difference` over the region, with root structure
/// taken from the stripped quotient (same roots inside the open region).
SignSummary summarize(const IntPoly& difference, const IntPoly& quotient,
                      const OpenInterval& interval) {
    SignSummary s;
    const auto points = region_samples(quotient, interval);
    s.root_count = static_cast<unsigned>(points.size() - 1);
    s.samples.reserve(points.size());
    for (std::size_t i = 0; i < points.size(); ++i) {
        CertSample sample{points[i], eval_rational(difference, points[i])};
        const int sg = sgn(sample.value);
        if (sg == 0) fail(Errc::Internal, "region sample landed on a root");
        if (sg > 0) s.all_negative = false;
        if (sg < 0) {
            s.all_positive = false;
            if (!s.first_negative) s.first_negative = i;
        }
        s.samples.push_back(std::move(sample));
    }
    return s;
}

bool all_nonnegative(const IntPoly& poly) {
    for (const auto& c : poly.coeffs())
        if (c < 0) return false;
    return true;
}

}  // namespace

const char* region_name(Region r) {
    return r == Region::RightOfOne ? "gt1" : "unit";
}

const char* direction_name(Direction d) {
    switch (d) {
        case Direction::Holds: return "holds";
        case Direction::Refuted: return "refuted";
        case Direction::Equality: return "equality";
    }
    return "?";
}

const char* Certificate::variant_name() const {
    switch (body.index()) {
        case 0: return "identically_zero";
        case 1: return "shifted_nonnegative";
        case 2: return "sturm_positive";
        case 3: return "refutation";
    }
    return "?";
}

DifferenceBuild build_difference(const ExponentTuple& p, const ExponentTuple& q) {
    DifferenceBuild build;
    build.instance = InequalityInstance::make(p, q);
    const Integerized scaled = integerize(p, q);
    build.scale = scaled.scale;

    mpz_lcm(build.clearing_factor.get_mpz_t(), build.instance.coeff_left.get_den_mpz_t(),
            build.instance.coeff_right.get_den_mpz_t());
    const mpz_class right_scale =
        integral_value(mpq_class(build.clearing_factor) * build.instance.coeff_right);
    const mpz_class left_scale =
        integral_value(mpq_class(build.clearing_factor) * build.instance.coeff_left);

    build.difference = sub_scaled(power_product(to_exponents(scaled.q)), right_scale,
                                  power_product(to_exponents(scaled.p)), left_scale);
    return build;
}

std::optional<SpreadHint> necessary_spread_check(const ExponentTuple& p,
                                                 const ExponentTuple& q) {
    if (p.size() != q.size()) fail(Errc::LengthMismatch, "tuples differ in length");
    mpq_class spread = 0;
    for (std::size_t i = 0; i < p.size(); ++i) spread += q[i] * q[i] - p[i] * p[i];
    if (spread < 0) return SpreadHint{spread};
    return std::nullopt;
}

Verdict decide(const ExponentTuple& p, const ExponentTuple& q) {
    Verdict v;
    v.region = Region::RightOfOne;
    v.dominance = check_dominance(p, q);
    const DifferenceBuild build = build_difference(p, q);

    if (build.difference.is_zero()) {
        v.direction = Direction::Equality;
        v.certificate = {Region::RightOfOne, +1, CertIdenticallyZero{}};
        return v;
    }

    const auto mult = root_multiplicity_at_one(build.difference);

    // A negative spread means the difference dips below zero just right of 1;
    // the shifted-coefficient test cannot succeed, so go straight to isolation.
    const bool negative_near_one =
        v.dominance.sums_equal && necessary_spread_check(p, q).has_value();

    if (!negative_near_one) {
        const IntPoly shifted = taylor_shift_one(mult.quotient);
        if (all_nonnegative(shifted)) {
            v.direction = Direction::Holds;
            v.certificate = {Region::RightOfOne, +1,
                             CertShiftedNonnegative{mult.multiplicity, shifted.coeffs()}};
            return v;
        }
    }

    const unsigned zero_mult = multiplicity_at_zero(mult.quotient);
    const IntPoly quotient = strip_zero_root(mult.quotient, zero_mult);
    const SignSummary summary =
        summarize(build.difference, quotient, OpenInterval::above(1));
    if (summary.all_positive) {
        v.direction = Direction::Holds;
        v.certificate = {Region::RightOfOne, +1,
                         CertSturmPositive{mult.multiplicity, zero_mult, summary.root_count,
                                           summary.samples}};
    } else {
        const CertSample& witness = summary.samples[*summary.first_negative];
        v.direction = Direction::Refuted;
        v.certificate = {Region::RightOfOne, +1, CertRefutation{witness.point, witness.value}};
    }

    if (v.dominance.satisfied && v.direction == Direction::Refuted)
        fail(Errc::Internal, "refuted although dominance is satisfied");
    return v;
}

Verdict decide_unit_interval(const ExponentTuple& p, const ExponentTuple& q) {
    Verdict v;
    v.region = Region::UnitInterval;
    v.dominance = check_dominance(p, q);
    if (!v.dominance.sums_equal)
        fail(Errc::UnequalSums, "unit-interval decision needs equal sums");

    const DifferenceBuild build = build_difference(p, q);
    if (build.difference.is_zero()) {
        v.direction = Direction::Equality;
        v.certificate = {Region::UnitInterval, +1, CertIdenticallyZero{}};
        return v;
    }

    const StrippedDifference stripped = strip(build.difference);
    const SignSummary summary =
        summarize(build.difference, stripped.quotient, OpenInterval::between(0, 1));

    if (summary.all_positive) {
        v.direction = Direction::Holds;
        v.certificate = {Region::UnitInterval, +1,
                         CertSturmPositive{stripped.multiplicity, stripped.zero_multiplicity,
                                           summary.root_count, summary.samples}};
    } else {
        const CertSample& witness = summary.samples[*summary.first_negative];
        v.direction = Direction::Refuted;
        v.certificate = {Region::UnitInterval, +1, CertRefutation{witness.point, witness.value}};
        if (summary.all_negative) {
            v.reverse_holds = true;
            v.reverse_certificate = {Region::UnitInterval, -1,
                                     CertSturmPositive{stripped.multiplicity,
                                                       stripped.zero_multiplicity,
                                                       summary.root_count, summary.samples}};
        }
    }

    // Parity cross-check: with dominance, even n holds and odd n reverses.
    if (v.dominance.satisfied && v.direction != Direction::Equality) {
        const bool even = reciprocal_direction(p.size()) == ReciprocalDirection::SameDirection;
        const bool consistent = even ? v.direction == Direction::Holds
                                     : (v.direction == Direction::Refuted && v.reverse_holds);
        if (!consistent) fail(Errc::Internal, "unit-interval parity check failed");
    }
    return v;
}

namespace {

/// Shrink an isolating interval until `point` lies outside of it.
void refine_away(const IntPoly& sf, RootInterval& iv, const mpq_class& point) {
    int budget = 512;
    while (iv.lo < point && point < iv.hi) {
        if (--budget < 0) fail(Errc::Internal, "refine_away budget exceeded");
        const int at_point = sign_at(sf, point);
        if (at_point == 0) fail(Errc::Internal, "refine_away: point is a root");
        if (sign_at(sf, iv.lo) != at_point)
            iv.hi = point;  // root is left of the point
        else
            iv.lo = point;
    }
}

bool verify_sturm_positive(const DifferenceBuild& build, const Certificate& cert,
                           const CertSturmPositive& body) {
    const IntPoly face = cert.sign >= 0 ? build.difference : -build.difference;
    if (face.is_zero()) return false;

    const auto m = root_multiplicity_at_one(face);
    if (m.multiplicity != body.multiplicity) return false;
    const unsigned k = multiplicity_at_zero(m.quotient);
    if (k != body.zero_multiplicity) return false;
    const IntPoly quotient = strip_zero_root(m.quotient, k);

    const OpenInterval interval = region_interval(cert.region);
    if (quotient.is_zero() || sign_at(quotient, interval.lo) == 0) return false;
    if (sturm_count(quotient, interval) != body.root_count) return false;
    if (body.samples.size() != static_cast<std::size_t>(body.root_count) + 1) return false;

    for (std::size_t i = 0; i < body.samples.size(); ++i) {
        const CertSample& s = body.samples[i];
        if (!interval.contains(s.point)) return false;
        if (i > 0 && !(body.samples[i - 1].point < s.point)) return false;
        if (eval_rational(build.difference, s.point) != s.value) return false;
        if (cert.sign * sgn(s.value) <= 0) return false;
    }

    // Samples must interleave the roots: one per root-free gap.
    if (body.root_count > 0) {
        const IntPoly sf = squarefree_part(quotient);
        mpq_class hi;
        if (interval.hi) {
            hi = *interval.hi;
        } else {
            hi = mpq_class(root_bound(sf));
            if (hi <= interval.lo) hi = interval.lo + 1;
        }
        SturmChain chain(sf);
        auto roots = isolate_roots(sf, chain, interval.lo, hi);
        if (roots.size() != body.root_count) return false;
        for (std::size_t i = 0; i < roots.size(); ++i) {
            refine_away(sf, roots[i], body.samples[i].point);
            refine_away(sf, roots[i], body.samples[i + 1].point);
            if (!(body.samples[i].point <= roots[i].lo)) return false;
            if (!(roots[i].hi <= body.samples[i + 1].point)) return false;
        }
    }
    return true;
}

}  // namespace

bool verify_certificate(const DifferenceBuild& build, const Certificate& cert) {
    try {
        if (std::holds_alternative<CertIdenticallyZero>(cert.body))
            return build.difference.is_zero();

        if (const auto* shifted = std::get_if<CertShiftedNonnegative>(&cert.body)) {
            if (cert.region != Region::RightOfOne || cert.sign != +1) return false;
            if (build.difference.is_zero()) return false;
            const auto m = root_multiplicity_at_one(build.difference);
            if (m.multiplicity != shifted->multiplicity) return false;
            const IntPoly recomputed = taylor_shift_one(m.quotient);
            if (recomputed.coeffs() != shifted->shifted) return false;
            return all_nonnegative(recomputed);
        }

        if (const auto* sturm = std::get_if<CertSturmPositive>(&cert.body))
            return verify_sturm_positive(build, cert, *sturm);

        if (const auto* refutation = std::get_if<CertRefutation>(&cert.body)) {
            const OpenInterval interval = region_interval(cert.region);
            if (!interval.contains(refutation->witness)) return false;
            if (eval_rational(build.difference, refutation->witness) != refutation->value)
                return false;
            return refutation->value < 0;
        }
    } catch (const Error&) {
        return false;
    }
    return false;
}

}  // namespace prodineq
