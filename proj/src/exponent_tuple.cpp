#include "prodineq/exponent_tuple.hpp"

#include <algorithm>

#include "prodineq/errors.hpp"
#include "prodineq/rational.hpp"

namespace prodineq {

ExponentTuple ExponentTuple::normalize(std::vector<mpq_class> raw) {
    if (raw.empty()) fail(Errc::EmptyTuple, "exponent tuple must be non-empty");
    for (const auto& e : raw)
        if (e <= 0) fail(Errc::NonPositiveExponent, "exponent " + rational_str(e) + " <= 0");
    std::sort(raw.begin(), raw.end());
    ExponentTuple t;
    t.entries_ = std::move(raw);
    return t;
}

mpq_class ExponentTuple::sum() const {
    mpq_class s = 0;
    for (const auto& e : entries_) s += e;
    return s;
}

mpq_class ExponentTuple::product() const {
    mpq_class prod = 1;
    for (const auto& e : entries_) prod *= e;
    return prod;
}

InequalityInstance InequalityInstance::make(ExponentTuple p, ExponentTuple q) {
    if (p.size() != q.size()) fail(Errc::LengthMismatch, "tuples differ in length");
    InequalityInstance inst;
    inst.coeff_left = q.product();
    inst.coeff_right = p.product();
    auto [rl, rr] = reduced_pair(inst.coeff_left, inst.coeff_right);
    inst.reduced_left = rl;
    inst.reduced_right = rr;
    inst.p = std::move(p);
    inst.q = std::move(q);
    return inst;
}

DominanceReport check_dominance(const ExponentTuple& p, const ExponentTuple& q) {
    if (p.size() != q.size()) fail(Errc::LengthMismatch, "tuples differ in length");
    const std::size_t n = p.size();

    DominanceReport rep;
    rep.sum_p = p.sum();
    rep.sum_q = q.sum();
    rep.sums_equal = rep.sum_p == rep.sum_q;

    // Suffix sums from the top, recorded for k = n down to 2, then reversed.
    mpq_class sp = 0, sq = 0;
    std::vector<LevelCheck> levels;
    for (std::size_t k = n; k >= 2; --k) {
        sp += p[k - 1];
        sq += q[k - 1];
        levels.push_back({k, sp, sq, sp <= sq});
    }
    std::reverse(levels.begin(), levels.end());
    rep.levels = std::move(levels);

    bool all_levels = true;
    for (const auto& lc : rep.levels) {
        if (!lc.satisfied) {
            all_levels = false;
            if (!rep.first_violation) rep.first_violation = lc.k;
        }
    }
    rep.satisfied = rep.sums_equal && all_levels;

    // Equal sums minus the level-2 suffix inequality forces q_1 <= p_1.
    if (rep.satisfied && !(q[0] <= p[0]))
        fail(Errc::Internal, "dominance satisfied but q_1 > p_1");
    return rep;
}

Integerized integerize(const ExponentTuple& p, const ExponentTuple& q) {
    std::vector<mpq_class> all = p.entries();
    all.insert(all.end(), q.entries().begin(), q.entries().end());
    const mpz_class scale = common_denominator(all);

    auto scaled = [&scale](const ExponentTuple& t) {
        std::vector<mpz_class> out;
        out.reserve(t.size());
        for (const auto& e : t.entries()) {
            mpq_class v = e * mpq_class(scale);
            v.canonicalize();
            out.push_back(v.get_num());  // denominator is 1 by construction
        }
        return out;
    };
    return {scaled(p), scaled(q), scale};
}

ReciprocalDirection reciprocal_direction(std::size_t n) {
    return n % 2 == 0 ? ReciprocalDirection::SameDirection : ReciprocalDirection::Reversed;
}

}  // namespace prodineq
