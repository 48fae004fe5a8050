#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <random>
#include <utility>
#include <vector>

#include "prodineq/exponent_tuple.hpp"

namespace prodineq::testing {

/// Random tuple pairs for property suites. Dominance-satisfying pairs are
/// built by Robin Hood transfers: start with p = q and repeatedly move mass
/// from a larger entry to a smaller one, which preserves the suffix-sum
/// ordering and the total.
class PairGen {
public:
    explicit PairGen(std::uint64_t seed) : rng_(seed) {}

    std::mt19937_64& rng() { return rng_; }

    int uniform(int lo, int hi) {
        return std::uniform_int_distribution<int>(lo, hi)(rng_);
    }

    /// Sorted positive integer tuple, entries in [1, max_entry].
    std::vector<long> integer_tuple(int n, int max_entry) {
        std::vector<long> t(n);
        for (auto& v : t) v = uniform(1, max_entry);
        std::sort(t.begin(), t.end());
        return t;
    }

    /// Dominance-satisfying integer pair (p, q) with n entries <= max_entry.
    std::pair<std::vector<long>, std::vector<long>> dominant_integer_pair(int n, int max_entry) {
        std::vector<long> q = integer_tuple(n, max_entry);
        std::vector<long> p = q;
        const int transfers = uniform(0, 3 * n);
        for (int t = 0; t < transfers; ++t) {
            int lo = uniform(0, n - 1);
            int hi = uniform(0, n - 1);
            if (lo > hi) std::swap(lo, hi);
            const long room = (p[hi] - p[lo]) / 2;
            if (room <= 0) continue;
            const long delta = uniform(1, static_cast<int>(room));
            p[lo] += delta;
            p[hi] -= delta;
            std::sort(p.begin(), p.end());
        }
        return {p, q};
    }

    /// As above but entries are k/denominator with a shared denominator in [2,4],
    /// so every entry's reduced denominator stays <= 4.
    std::pair<std::vector<mpq_class>, std::vector<mpq_class>> dominant_rational_pair(
        int n, int max_entry) {
        const int den = uniform(2, 4);
        auto [pi, qi] = dominant_integer_pair(n, max_entry * den);
        auto to_rational = [den](const std::vector<long>& v) {
            std::vector<mpq_class> out;
            out.reserve(v.size());
            for (long e : v) {
                mpq_class r(e, den);
                r.canonicalize();
                out.push_back(r);
            }
            return out;
        };
        return {to_rational(pi), to_rational(qi)};
    }

    static ExponentTuple to_tuple(const std::vector<long>& v) {
        std::vector<mpq_class> entries(v.begin(), v.end());
        return ExponentTuple::normalize(std::move(entries));
    }

    static ExponentTuple to_tuple(const std::vector<mpq_class>& v) {
        return ExponentTuple::normalize(v);
    }

    /// Dominance pair as ExponentTuples; rational entries when denominators > 1.
    std::pair<ExponentTuple, ExponentTuple> dominant_pair(int n, int max_entry, bool rational) {
        if (rational) {
            auto [p, q] = dominant_rational_pair(n, max_entry);
            return {to_tuple(p), to_tuple(q)};
        }
        auto [p, q] = dominant_integer_pair(n, max_entry);
        return {to_tuple(p), to_tuple(q)};
    }

    /// Arbitrary (not necessarily dominant) positive tuple pair of equal length.
    std::pair<ExponentTuple, ExponentTuple> arbitrary_pair(int n, int max_entry) {
        return {to_tuple(integer_tuple(n, max_entry)), to_tuple(integer_tuple(n, max_entry))};
    }

private:
    std::mt19937_64 rng_;
};

}  // namespace prodineq::testing
