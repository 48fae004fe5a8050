#include "prodineq/evaluate.hpp"

#include "prodineq/errors.hpp"
#include "prodineq/numeric_oracle.hpp"
#include "prodineq/rational.hpp"

namespace prodineq {

namespace {

mpq_class exact_side(const mpq_class& coeff, const std::vector<mpz_class>& scaled_exponents,
                     const mpq_class& root_of_x) {
    mpq_class value = coeff;
    for (const auto& e : scaled_exponents) value = value * (pow_rational(root_of_x, e) - 1);
    return value;
}

}  // namespace

SideValues evaluate_sides(const ExponentTuple& p, const ExponentTuple& q, const mpq_class& x,
                          unsigned precision) {
    if (p.size() != q.size()) fail(Errc::LengthMismatch, "tuples differ in length");
    if (x <= 0) fail(Errc::BadInput, "x must be positive");

    const InequalityInstance inst = InequalityInstance::make(p, q);
    const Integerized scaled = integerize(p, q);

    SideValues out;
    std::optional<mpq_class> root;
    if (scaled.scale == 1)
        root = x;
    else if (scaled.scale.fits_ulong_p())
        root = exact_root(x, scaled.scale.get_ui());

    if (root) {
        // x^{p_j} = root^{L p_j} with integer L p_j.
        out.exact = true;
        out.left = exact_side(inst.coeff_left, scaled.p, *root);
        out.right = exact_side(inst.coeff_right, scaled.q, *root);
        out.comparison = sgn(mpq_class(out.left - out.right));
        return out;
    }

    const auto prec = static_cast<mpfr_prec_t>(precision);
    const Approx one = Approx::exact(BigFloat::from_long(1, prec));
    const Approx xa = Approx::exact(BigFloat::from_rational(x, prec));
    const mpfr_prec_t root_prec = prec;
    Approx left = Approx::exact(BigFloat::from_rational(inst.coeff_left, root_prec));
    Approx right = Approx::exact(BigFloat::from_rational(inst.coeff_right, root_prec));
    for (const auto& e : p.entries())
        left = approx_mul(left, approx_sub(approx_pow(xa, Approx::exact(BigFloat::from_rational(
                                                              e, prec))),
                                           one));
    for (const auto& e : q.entries())
        right = approx_mul(right, approx_sub(approx_pow(xa, Approx::exact(BigFloat::from_rational(
                                                                e, prec))),
                                             one));

    out.exact = false;
    out.left_approx = left.value.str();
    out.right_approx = right.value.str();
    const Approx diff = approx_sub(left, right);
    out.error_bound = diff.error.str(10);
    if (diff.value > diff.error)
        out.comparison = 1;
    else if (diff.value < -diff.error)
        out.comparison = -1;
    else {
        out.comparison = 0;
        out.conclusive = diff.value.is_zero() && diff.error.is_zero();
    }
    return out;
}

}  // namespace prodineq
