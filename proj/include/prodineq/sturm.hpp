#pragma once

#include <gmpxx.h>

#include <optional>
#include <vector>

#include "prodineq/int_poly.hpp"

namespace prodineq {

/// Open interval (lo, hi); hi omitted means +infinity.
struct OpenInterval {
    mpq_class lo;
    std::optional<mpq_class> hi;

    static OpenInterval above(mpq_class lo) { return {std::move(lo), std::nullopt}; }
    static OpenInterval between(mpq_class lo, mpq_class hi) {
        return {std::move(lo), std::move(hi)};
    }
    bool contains(const mpq_class& x) const { return lo < x && (!hi || x < *hi); }
};

/// Signed remainder sequence of a squarefree polynomial and its derivative,
/// built with negated integer pseudo-remainders stripped to primitive parts.
/// The positive scaling leaves all sign variations intact.
class SturmChain {
public:
    explicit SturmChain(IntPoly squarefree);

    const std::vector<IntPoly>& members() const { return chain_; }

    int variations_at(const mpq_class& x) const;
    int variations_at_pos_inf() const;

    /// Distinct roots in the half-open interval (a, b]. Requires f(a) != 0.
    unsigned count_half_open(const mpq_class& a, const mpq_class& b) const;
    /// Distinct roots in (a, +inf). Requires f(a) != 0.
    unsigned count_above(const mpq_class& a) const;

private:
    std::vector<IntPoly> chain_;
};

/// Number of distinct real roots of poly in the open interval. The left endpoint
/// must not be a root (Errc::EndpointIsRoot); callers strip known endpoint roots
/// first. Internally reduces to the squarefree part, so multiplicities are
/// counted once.
unsigned sturm_count(const IntPoly& poly, const OpenInterval& interval);

/// Open isolating interval for one distinct root: endpoints are rational
/// non-roots, and exactly one root of the (squarefree) polynomial lies inside.
struct RootInterval {
    mpq_class lo;
    mpq_class hi;
};

/// Disjoint, sorted isolating intervals for every distinct root of `squarefree`
/// in (a, b), with all interval endpoints strictly inside (a, b) and non-roots.
std::vector<RootInterval> isolate_roots(const IntPoly& squarefree, const SturmChain& chain,
                                        const mpq_class& a, const mpq_class& b);

/// One exact sample point per maximal root-free region of `interval`, sorted.
/// The polynomial has constant sign on the region around each sample.
std::vector<mpq_class> region_samples(const IntPoly& poly, const OpenInterval& interval);

/// An exact rational x inside the interval with poly(x) < 0. The caller has
/// established that a negative value exists; Errc::NoNegativeValue signals a
/// caller logic bug. Preference: the simplest rational (continued-fraction
/// mediants) inside an isolated negativity region found by Sturm bisection.
mpq_class isolate_negative(const IntPoly& poly, const OpenInterval& interval);

}  // namespace prodineq
