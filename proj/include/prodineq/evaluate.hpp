#pragma once

#include <gmpxx.h>

#include <string>

#include "prodineq/exponent_tuple.hpp"

namespace prodineq {

/// Both sides of the claimed inequality at a rational point x > 0:
/// left = prod(q_j) * prod(x^{p_j}-1), right = prod(p_j) * prod(x^{q_j}-1).
/// Exact whenever every x^{p_j} is rational (integer exponents, or x a perfect
/// L-th power); otherwise evaluated at `precision` bits with an error bound.
struct SideValues {
    bool exact = false;
    mpq_class left;   // exact path only
    mpq_class right;  // exact path only
    std::string left_approx;
    std::string right_approx;
    std::string error_bound;
    int comparison = 0;      // sign of left - right; 0 also when inconclusive
    bool conclusive = true;  // false only on the numeric path inside the band
};

SideValues evaluate_sides(const ExponentTuple& p, const ExponentTuple& q, const mpq_class& x,
                          unsigned precision = 256);

}  // namespace prodineq
