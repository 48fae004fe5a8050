#include "prodineq/proof_tree.hpp"

#include <algorithm>
#include <map>

#include "prodineq/certifier.hpp"
#include "prodineq/errors.hpp"
#include "prodineq/rational.hpp"

namespace prodineq {

bool BaseCase::hypotheses_hold() const {
    return a1 > 0 && b1 > 0 && a1 <= a2 && b1 <= b2 && b1 <= a1 && a2 <= b2 &&
           a1 + a2 == b1 + b2;
}

std::size_t select_pivot(const mpq_class& p1, const ExponentTuple& q) {
    const std::size_t n = q.size();
    if (n < 2) fail(Errc::PivotUnavailable, "pivot needs at least two entries");
    if (p1 < q[0]) fail(Errc::PivotUnavailable, "p1 below the smallest q entry");
    for (std::size_t k = n - 1; k >= 1; --k)
        if (q[k - 1] <= p1) return k;
    fail(Errc::PivotUnavailable, "unreachable");
}

ReductionStep reduce(const ExponentTuple& p, const ExponentTuple& q) {
    if (p.size() != q.size()) fail(Errc::LengthMismatch, "tuples differ in length");
    const std::size_t n = p.size();
    if (n < 2) fail(Errc::PivotUnavailable, "reduction needs level >= 2");

    ReductionStep step;
    step.level = n;
    step.p1 = p[0];
    step.pivot = select_pivot(step.p1, q);
    step.qk = q[step.pivot - 1];
    step.qk1 = q[step.pivot];
    step.qprime = step.qk + step.qk1 - step.p1;

    if (!(step.qk <= step.p1 && step.p1 <= step.qk1))
        fail(Errc::PivotUnavailable, "pivot does not bracket p1");
    if (!(step.qk <= step.qprime && step.qprime <= step.qk1))
        fail(Errc::Internal, "q' escaped the consumed pair");

    step.base.a1 = std::min(step.p1, step.qprime);
    step.base.a2 = std::max(step.p1, step.qprime);
    step.base.b1 = step.qk;
    step.base.b2 = step.qk1;
    if (!step.base.hypotheses_hold()) fail(Errc::Internal, "emitted base case is invalid");

    std::vector<mpq_class> rp(p.entries().begin() + 1, p.entries().end());
    std::vector<mpq_class> rq;
    rq.reserve(n - 1);
    for (std::size_t j = 0; j < n; ++j)
        if (j != step.pivot - 1 && j != step.pivot) rq.push_back(q[j]);
    rq.push_back(step.qprime);

    step.residual_p = ExponentTuple::normalize(std::move(rp));
    step.residual_q = ExponentTuple::normalize(std::move(rq));

    if (!check_dominance(step.residual_p, step.residual_q).satisfied)
        fail(Errc::DominanceLost, "residual tuples lost dominance");
    return step;
}

namespace {

bool base_case_certified(const BaseCase& base) {
    const auto a = ExponentTuple::normalize({base.a1, base.a2});
    const auto b = ExponentTuple::normalize({base.b1, base.b2});
    const Verdict v = decide(a, b);
    return v.direction == Direction::Holds || v.direction == Direction::Equality;
}

}  // namespace

ProofTree build_tree(const ExponentTuple& p, const ExponentTuple& q) {
    if (!check_dominance(p, q).satisfied)
        fail(Errc::DominanceNotSatisfied, "proof construction requires dominance");

    ProofTree tree;
    tree.target = InequalityInstance::make(p, q);

    ExponentTuple cur_p = p;
    ExponentTuple cur_q = q;
    while (cur_p.size() >= 2) {
        ReductionStep step = reduce(cur_p, cur_q);
        if (!base_case_certified(step.base))
            fail(Errc::Internal, "base case failed certification");
        cur_p = step.residual_p;
        cur_q = step.residual_q;
        tree.steps.push_back(std::move(step));
    }
    if (!(cur_p == cur_q)) fail(Errc::Internal, "final residual is not an equality");
    return tree;
}

bool verify_tree(const ProofTree& tree) {
    try {
        const std::size_t n = tree.target.p.size();
        if (tree.steps.size() + 1 != n) return false;

        std::map<mpq_class, long> balance;  // base-left minus base-right exponent counts
        mpq_class left_coeff = 1;           // product of the b1*b2 coefficients
        mpq_class right_coeff = 1;          // product of the a1*a2 coefficients

        ExponentTuple cur_p = tree.target.p;
        ExponentTuple cur_q = tree.target.q;
        for (const ReductionStep& step : tree.steps) {
            if (step.level != cur_p.size() || step.level < 2) return false;
            if (step.pivot < 1 || step.pivot > step.level - 1) return false;
            if (step.p1 != cur_p[0]) return false;
            if (step.qk != cur_q[step.pivot - 1] || step.qk1 != cur_q[step.pivot]) return false;
            if (step.qprime != step.qk + step.qk1 - step.p1) return false;

            if (step.base.a1 != std::min(step.p1, step.qprime) ||
                step.base.a2 != std::max(step.p1, step.qprime) ||
                step.base.b1 != step.qk || step.base.b2 != step.qk1)
                return false;
            if (!step.base.hypotheses_hold()) return false;
            if (!base_case_certified(step.base)) return false;

            balance[step.base.a1] += 1;
            balance[step.base.a2] += 1;
            balance[step.base.b1] -= 1;
            balance[step.base.b2] -= 1;
            left_coeff *= step.base.b1 * step.base.b2;
            right_coeff *= step.base.a1 * step.base.a2;

            std::vector<mpq_class> rp(cur_p.entries().begin() + 1, cur_p.entries().end());
            std::vector<mpq_class> rq;
            for (std::size_t j = 0; j < cur_q.size(); ++j)
                if (j != step.pivot - 1 && j != step.pivot) rq.push_back(cur_q[j]);
            rq.push_back(step.qprime);
            cur_p = ExponentTuple::normalize(std::move(rp));
            cur_q = ExponentTuple::normalize(std::move(rq));
            if (!(step.residual_p == cur_p) || !(step.residual_q == cur_q)) return false;
        }
        if (!(cur_p == cur_q)) return false;

        // Telescoping: cancelled base factors must reproduce the target's
        // factor multisets, i.e. base-left + target-q == base-right + target-p.
        for (const auto& e : tree.target.p.entries()) balance[e] -= 1;
        for (const auto& e : tree.target.q.entries()) balance[e] += 1;
        for (const auto& [value, count] : balance)
            if (count != 0) return false;

        // And the coefficient products must cancel to prod(q) vs prod(p).
        return left_coeff * tree.target.coeff_right == right_coeff * tree.target.coeff_left;
    } catch (const Error&) {
        return false;
    }
}

}  // namespace prodineq
