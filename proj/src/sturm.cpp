#include "prodineq/sturm.hpp"

#include <algorithm>

#include "prodineq/errors.hpp"
#include "prodineq/rational.hpp"

namespace prodineq {

namespace {

constexpr int kMaxBisections = 20000;

int sign_of(const IntPoly& f, const mpq_class& x) { return sign_at(f, x); }

/// A point near the middle of (lo, hi) that is not a root of f. Walks the
/// dyadic fractions 1/2, 1/4, 3/4, 1/8, ...; f has finitely many roots, so
/// at most deg(f) candidates can fail.
mpq_class nonroot_midpoint(const IntPoly& f, const mpq_class& lo, const mpq_class& hi) {
    const mpq_class width = hi - lo;
    for (unsigned long d = 2; d <= (1UL << 30); d *= 2) {
        for (unsigned long k = 1; k < d; k += 2) {
            mpq_class m = lo + width * mpq_class(k, d);
            m.canonicalize();
            if (sign_of(f, m) != 0) return m;
        }
    }
    fail(Errc::Internal, "could not find a non-root midpoint");
}

}  // namespace

SturmChain::SturmChain(IntPoly squarefree) {
    if (squarefree.is_zero()) fail(Errc::ZeroPolynomial, "Sturm chain of zero polynomial");
    chain_.push_back(primitive_part(squarefree));
    if (chain_.front().degree() == 0) return;
    chain_.push_back(primitive_part(derivative(chain_.front())));
    while (!chain_.back().is_zero() && chain_.back().degree() > 0) {
        IntPoly r = pseudo_rem(chain_[chain_.size() - 2], chain_.back());
        if (r.is_zero()) break;
        chain_.push_back(primitive_part(-r));
    }
}

int SturmChain::variations_at(const mpq_class& x) const {
    int variations = 0;
    int prev = 0;
    for (const auto& f : chain_) {
        const int s = sign_of(f, x);
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++variations;
        prev = s;
    }
    return variations;
}

int SturmChain::variations_at_pos_inf() const {
    int variations = 0;
    int prev = 0;
    for (const auto& f : chain_) {
        if (f.is_zero()) continue;
        const int s = sgn(f.leading());
        if (prev != 0 && s != prev) ++variations;
        prev = s;
    }
    return variations;
}

unsigned SturmChain::count_half_open(const mpq_class& a, const mpq_class& b) const {
    if (!(a < b)) fail(Errc::InvalidInterval, "count_half_open: empty interval");
    if (sign_of(chain_.front(), a) == 0)
        fail(Errc::EndpointIsRoot, "left endpoint is a root");
    const int va = variations_at(a);
    const int vb = variations_at(b);
    if (va < vb) fail(Errc::Internal, "sign variations increased left to right");
    return static_cast<unsigned>(va - vb);
}

unsigned SturmChain::count_above(const mpq_class& a) const {
    if (sign_of(chain_.front(), a) == 0)
        fail(Errc::EndpointIsRoot, "left endpoint is a root");
    const int va = variations_at(a);
    const int vinf = variations_at_pos_inf();
    if (va < vinf) fail(Errc::Internal, "sign variations increased toward +inf");
    return static_cast<unsigned>(va - vinf);
}

unsigned sturm_count(const IntPoly& poly, const OpenInterval& interval) {
    if (poly.is_zero()) fail(Errc::ZeroPolynomial, "root count of zero polynomial");
    if (sign_at(poly, interval.lo) == 0)
        fail(Errc::EndpointIsRoot, "left endpoint is a root");
    if (interval.hi && !(interval.lo < *interval.hi))
        fail(Errc::InvalidInterval, "empty interval");
    if (poly.degree() == 0) return 0;

    const IntPoly sf = squarefree_part(poly);
    if (sf.degree() == 0) return 0;
    SturmChain chain(sf);
    if (!interval.hi) return chain.count_above(interval.lo);
    unsigned count = chain.count_half_open(interval.lo, *interval.hi);
    if (sign_at(sf, *interval.hi) == 0) --count;  // (a,b] counted the right endpoint
    return count;
}

std::vector<RootInterval> isolate_roots(const IntPoly& squarefree, const SturmChain& chain,
                                        const mpq_class& a, const mpq_class& b) {
    if (sign_at(squarefree, a) == 0 || sign_at(squarefree, b) == 0)
        fail(Errc::EndpointIsRoot, "isolation endpoints must not be roots");

    int budget = kMaxBisections;
    auto spend = [&budget]() {
        if (--budget < 0) fail(Errc::Internal, "root isolation exceeded bisection budget");
    };

    std::vector<RootInterval> out;

    // count of distinct roots in the open interval (endpoints are non-roots).
    auto count_open = [&](const mpq_class& lo, const mpq_class& hi) -> unsigned {
        return chain.count_half_open(lo, hi) - (sign_at(squarefree, hi) == 0 ? 1u : 0u);
    };

    // Single-root refinement by sign change; keeps endpoints non-roots.
    auto refine_single = [&](mpq_class& lo, mpq_class& hi) {
        spend();
        const mpq_class m = nonroot_midpoint(squarefree, lo, hi);
        if (sign_at(squarefree, lo) != sign_of(squarefree, m))
            hi = m;
        else
            lo = m;
    };

    auto split = [&](auto&& self, const mpq_class& lo, const mpq_class& hi,
                     unsigned count) -> void {
        if (count == 0) return;
        if (count == 1) {
            mpq_class l = lo, h = hi;
            while (l == a || h == b) refine_single(l, h);
            out.push_back({l, h});
            return;
        }
        spend();
        const mpq_class m = nonroot_midpoint(squarefree, lo, hi);
        const unsigned left = count_open(lo, m);
        self(self, lo, m, left);
        self(self, m, hi, count - left);
    };

    const unsigned total = count_open(a, b);
    split(split, a, b, total);
    std::sort(out.begin(), out.end(),
              [](const RootInterval& x, const RootInterval& y) { return x.lo < y.lo; });
    return out;
}

namespace {

struct RegionAnalysis {
    std::vector<RootInterval> roots;
    std::vector<mpq_class> samples;
};

RegionAnalysis analyze(const IntPoly& poly, const OpenInterval& interval) {
    if (poly.is_zero()) fail(Errc::ZeroPolynomial, "sign analysis of zero polynomial");
    if (sign_at(poly, interval.lo) == 0)
        fail(Errc::EndpointIsRoot, "left endpoint is a root");
    if (interval.hi) {
        if (!(interval.lo < *interval.hi)) fail(Errc::InvalidInterval, "empty interval");
        if (sign_at(poly, *interval.hi) == 0)
            fail(Errc::EndpointIsRoot, "right endpoint is a root");
    }

    RegionAnalysis res;
    if (poly.degree() == 0) {
        res.samples.push_back(simplest_in(interval.lo, interval.hi));
        return res;
    }

    const IntPoly sf = squarefree_part(poly);
    // Finite search bound for right-unbounded intervals: beyond every root.
    mpq_class b;
    if (interval.hi) {
        b = *interval.hi;
    } else {
        b = mpq_class(root_bound(sf));
        if (b <= interval.lo) b = interval.lo + 1;
    }

    SturmChain chain(sf);
    res.roots = isolate_roots(sf, chain, interval.lo, b);

    if (res.roots.empty()) {
        res.samples.push_back(simplest_in(interval.lo, interval.hi));
        return res;
    }

    res.samples.push_back(simplest_in(interval.lo, res.roots.front().lo));
    for (std::size_t i = 0; i + 1 < res.roots.size(); ++i) {
        const mpq_class& lo = res.roots[i].hi;
        const mpq_class& hi = res.roots[i + 1].lo;
        res.samples.push_back(lo < hi ? simplest_in(lo, std::optional<mpq_class>(hi)) : lo);
    }
    const mpq_class& last_hi = res.roots.back().hi;
    if (interval.hi)
        res.samples.push_back(simplest_in(last_hi, interval.hi));
    else
        res.samples.push_back(simplest_in(last_hi, std::nullopt));
    return res;
}

}  // namespace

std::vector<mpq_class> region_samples(const IntPoly& poly, const OpenInterval& interval) {
    return analyze(poly, interval).samples;
}

mpq_class isolate_negative(const IntPoly& poly, const OpenInterval& interval) {
    if (poly.is_zero()) fail(Errc::NoNegativeValue, "polynomial is identically zero");
    const auto analysis = analyze(poly, interval);
    for (const auto& s : analysis.samples)
        if (sign_at(poly, s) < 0) return s;
    fail(Errc::NoNegativeValue, "no negative region found in interval");
}

}  // namespace prodineq
