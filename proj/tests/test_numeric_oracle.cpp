#include <doctest.h>

#include "prodineq/certifier.hpp"
#include "prodineq/errors.hpp"
#include "prodineq/numeric_oracle.hpp"
#include "support/generators.hpp"

using namespace prodineq;

namespace {

BigFloat bf(const char* s, mpfr_prec_t prec = 256) { return BigFloat::from_string(s, prec); }

std::vector<BigFloat> floats(std::vector<const char*> vals, mpfr_prec_t prec = 256) {
    std::vector<BigFloat> out;
    for (const char* v : vals) out.push_back(bf(v, prec));
    return out;
}

}  // namespace

TEST_CASE("BigFloat arithmetic and precision plumbing") {
    const BigFloat a = bf("2", 128);
    const BigFloat b = bf("3", 256);
    CHECK((a + b).precision() == 256);
    CHECK((a * b) == bf("6"));
    CHECK(sqrt(bf("2")).to_double() == doctest::Approx(1.4142135623730951));
    CHECK(bf("-5").sign() == -1);
    CHECK(BigFloat(64).is_zero());
    CHECK_THROWS_AS(BigFloat::from_string("zzz"), Error);
}

TEST_CASE("exactness tracking through approx arithmetic") {
    const Approx two = Approx::exact(bf("2"));
    const Approx three = Approx::exact(bf("3"));
    CHECK(approx_mul(two, three).is_exact());
    CHECK(approx_sub(two, two).is_exact());
    // 2/3 is not representable: error must be positive.
    CHECK(!approx_div(two, three).is_exact());
    // sqrt(2) via pow is inexact.
    CHECK(!approx_pow(two, Approx::exact(bf("0.5"))).is_exact());
    // 1^s and x^0 stay exact.
    CHECK(approx_pow(Approx::exact(bf("1")), Approx::exact(bf("7.25"))).is_exact());
    CHECK(approx_pow(two, Approx::exact(bf("0"))).is_exact());
}

TEST_CASE("furuta parameter constraint") {
    CHECK(FurutaParams::admissible(bf("2"), bf("2"), bf("1")));
    CHECK(FurutaParams::admissible(bf("0"), bf("1"), bf("0")));
    CHECK(FurutaParams::admissible(bf("4"), bf("2"), bf("2")));   // boundary p+r = (1+r)q
    CHECK(!FurutaParams::admissible(bf("5"), bf("2"), bf("0")));  // 5 > 2
    CHECK(!FurutaParams::admissible(bf("1"), bf("0.5"), bf("0")));
    CHECK(!FurutaParams::admissible(bf("-1"), bf("2"), bf("0")));
    CHECK_THROWS_AS(FurutaParams::make(bf("5"), bf("2"), bf("0")), Error);
}

TEST_CASE("furuta_sides worked examples") {
    SUBCASE("p=2 q=2 r=1 x=4: 105*sqrt(2) vs 189") {
        const auto params = FurutaParams::make(bf("2"), bf("2"), bf("1"));
        const auto sides = furuta_sides(params, bf("4"));
        CHECK(sides.lhs.value.to_double() == doctest::Approx(148.49242404917498));
        CHECK(sides.rhs.value.to_double() == doctest::Approx(189.0));
        CHECK(classify_gap(sides.lhs, sides.rhs, bf("1e-30")) == Conclusion::Holds);

        const BigFloat expected = bf("105") * sqrt(bf("2"));
        CHECK(abs(sides.lhs.value - expected) <= mul_2si(expected, -200));
    }
    SUBCASE("x=1 gives exact equality") {
        const auto params = FurutaParams::make(bf("2"), bf("3"), bf("1.5"));
        const auto sides = furuta_sides(params, bf("1"));
        CHECK(sides.lhs.value.is_zero());
        CHECK(sides.rhs.value.is_zero());
        CHECK(sides.lhs.error.is_zero());
        CHECK(sides.rhs.error.is_zero());
        CHECK(classify_gap(sides.lhs, sides.rhs, bf("1e-30")) == Conclusion::Equality);
    }
    SUBCASE("p=0 kills both sides") {
        const auto params = FurutaParams::make(bf("0"), bf("2"), bf("3"));
        const auto sides = furuta_sides(params, bf("7.5"));
        CHECK(sides.lhs.value.is_zero());
        CHECK(sides.rhs.value.is_zero());
        CHECK(classify_gap(sides.lhs, sides.rhs, bf("1e-30")) == Conclusion::Equality);
    }
    SUBCASE("identity case p=q=1, r=0") {
        const auto params = FurutaParams::make(bf("1"), bf("1"), bf("0"));
        const auto sides = furuta_sides(params, bf("3"));
        CHECK(abs(sides.lhs.value - sides.rhs.value) <= sides.lhs.error + sides.rhs.error);
    }
    SUBCASE("x below 1 still holds") {
        const auto params = FurutaParams::make(bf("2"), bf("2"), bf("1"));
        const auto sides = furuta_sides(params, bf("0.25"));
        CHECK(classify_gap(sides.lhs, sides.rhs, bf("1e-30")) != Conclusion::Violated);
    }
}

TEST_CASE("scan_violation finds the known counterexample region") {
    ScanConfig cfg;
    cfg.lo = 1;
    cfg.hi = 2;
    cfg.samples = 1000;
    const auto hit = scan_violation(floats({"2", "2", "8", "8"}), floats({"1", "5", "5", "9"}),
                                    cfg);
    REQUIRE(hit);
    CHECK(hit->lhs > hit->rhs);
    CHECK(hit->x > bf("1"));
    CHECK(hit->x <= bf("2"));
}

TEST_CASE("scan_violation is silent on identical tuples and on a holding instance") {
    ScanConfig cfg;
    cfg.lo = 1;
    cfg.hi = 10;
    cfg.samples = 300;
    CHECK(!scan_violation(floats({"2", "3"}), floats({"2", "3"}), cfg));
    CHECK(!scan_violation(floats({"6", "8", "8", "9"}), floats({"2", "5", "7", "17"}), cfg));
}

TEST_CASE("scan_violation accepts irrational exponents") {
    // p = (sqrt(2), 3 - sqrt(2)), q = (1, 2): equal sums, dominance-style spread.
    const BigFloat root2 = sqrt(bf("2"));
    const std::vector<BigFloat> p = {root2, bf("3") - root2};
    ScanConfig cfg;
    cfg.lo = 1;
    cfg.hi = 10;
    cfg.samples = 2000;
    CHECK(!scan_violation(p, floats({"1", "2"}), cfg));
}

TEST_CASE("scan config validation") {
    ScanConfig cfg;
    cfg.lo = 0;
    CHECK_THROWS_AS(cfg.validate(), Error);
    cfg.lo = 1;
    cfg.hi = mpq_class(1, 2);
    CHECK_THROWS_AS(cfg.validate(), Error);
    cfg.hi = 2;
    cfg.tau = 0;
    CHECK_THROWS_AS(cfg.validate(), Error);
}

TEST_CASE("furuta_sweep over a small admissible grid") {
    const auto vals = floats({"0", "0.5", "1", "2"});
    XGrid grid;
    grid.count = 25;
    const auto report = furuta_sweep(vals, vals, vals, grid, 128);
    CHECK(report.admissible_triples > 0);
    CHECK(report.evaluated == report.admissible_triples * grid.count);
    CHECK(report.alerts == 0);
    // The minimum observed gap can touch zero but must not be negative
    // beyond its own error band.
    CHECK(report.min_gap >= -(report.min_gap_band + bf("1e-20", 128)));
}

TEST_CASE("doubling the precision never flips a conclusive verdict") {
    const std::vector<std::pair<std::vector<const char*>, std::vector<const char*>>> cases = {
        {{"6", "8", "8", "9"}, {"2", "5", "7", "17"}},
        {{"2", "2", "8", "8"}, {"1", "5", "5", "9"}},
        {{"2", "3", "7"}, {"1", "5", "6"}},
    };
    for (const auto& [p, q] : cases) {
        ScanConfig lo_cfg;
        lo_cfg.lo = 1;
        lo_cfg.hi = 4;
        lo_cfg.samples = 200;
        lo_cfg.precision = 128;
        ScanConfig hi_cfg = lo_cfg;
        hi_cfg.precision = 256;
        const bool lo_hit = scan_violation(floats(p, 128), floats(q, 128), lo_cfg).has_value();
        const bool hi_hit = scan_violation(floats(p, 256), floats(q, 256), hi_cfg).has_value();
        CHECK(lo_hit == hi_hit);
    }
}

TEST_CASE("grid_points spacing") {
    XGrid grid;
    grid.count = 100;
    const auto xs = grid_points(grid, 128);
    REQUIRE(xs.size() == 100);
    CHECK(abs(xs.front() - bf("0.1", 128)) < bf("1e-30", 128));
    CHECK(abs(xs.back() - bf("10", 128)) < bf("1e-28", 128));
    for (std::size_t i = 1; i < xs.size(); ++i) CHECK(xs[i] > xs[i - 1]);
}
