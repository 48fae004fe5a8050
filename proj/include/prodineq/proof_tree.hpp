#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <vector>

#include "prodineq/exponent_tuple.hpp"

namespace prodineq {

/// A two-factor instance: b1*b2*(x^{a1}-1)(x^{a2}-1) <= a1*a2*(x^{b1}-1)(x^{b2}-1),
/// valid whenever b1 <= a1 <= a2 <= b2 and a1+a2 = b1+b2.
struct BaseCase {
    mpq_class a1, a2;  // left exponents, a1 <= a2
    mpq_class b1, b2;  // right exponents, b1 <= b2

    bool hypotheses_hold() const;
    bool is_equality() const { return a1 == b1 && a2 == b2; }
};

/// One pivot reduction: extract p1, consume (q_k, q_{k+1}), synthesize
/// q' = q_k + q_{k+1} - p1, emit the base case (p1,q') vs (q_k,q_{k+1}) and
/// recurse on the residual tuples one level down.
struct ReductionStep {
    std::size_t level;  // tuple length before this step, >= 2
    std::size_t pivot;  // 1-based k with q_k <= p1 <= q_{k+1}
    mpq_class p1, qk, qk1, qprime;
    BaseCase base;
    ExponentTuple residual_p;
    ExponentTuple residual_q;
};

/// n-1 reduction steps whose base cases multiply and cancel back to the target.
struct ProofTree {
    InequalityInstance target;
    std::vector<ReductionStep> steps;
};

/// Largest k <= n-1 with q_k <= p1. Errc::PivotUnavailable when p1 < q_1.
std::size_t select_pivot(const mpq_class& p1, const ExponentTuple& q);

/// One reduction at level n >= 2. Residual dominance is re-verified exactly;
/// a failure (Errc::DominanceLost) signals an implementation bug.
ReductionStep reduce(const ExponentTuple& p, const ExponentTuple& q);

/// Requires dominance (Errc::DominanceNotSatisfied). Every emitted base case is
/// certified via the exact decision procedure.
ProofTree build_tree(const ExponentTuple& p, const ExponentTuple& q);

/// Re-checks the tree from scratch: base hypotheses, independent certification
/// of every base inequality, residual chaining, and the exact telescoping of
/// factor multisets and coefficients back to the target.
bool verify_tree(const ProofTree& tree);

}  // namespace prodineq
