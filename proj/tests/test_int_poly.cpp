#include <doctest.h>

#include <random>

#include "prodineq/errors.hpp"
#include "prodineq/int_poly.hpp"

using namespace prodineq;

namespace {

IntPoly poly(std::vector<long> coeffs) {
    return IntPoly(std::vector<mpz_class>(coeffs.begin(), coeffs.end()));
}

IntPoly random_poly(std::mt19937_64& rng, int max_degree, long coeff_bound) {
    std::uniform_int_distribution<int> deg(0, max_degree);
    std::uniform_int_distribution<long> coeff(-coeff_bound, coeff_bound);
    std::vector<mpz_class> c(deg(rng) + 1);
    for (auto& v : c) v = coeff(rng);
    return IntPoly(std::move(c));
}

}  // namespace

TEST_CASE("zero polynomial basics") {
    const IntPoly zero;
    CHECK(zero.is_zero());
    CHECK(zero.degree() == -1);
    CHECK(eval_rational(zero, mpq_class(7)) == 0);
    CHECK(IntPoly(std::vector<mpz_class>{0, 0, 0}).is_zero());
    CHECK_THROWS_AS(zero.leading(), Error);
}

TEST_CASE("power_product expansion") {
    CHECK(power_product({1}) == poly({-1, 1}));
    CHECK(power_product({2, 2}) == poly({1, 0, -2, 0, 1}));
    CHECK(power_product({1, 3}) == poly({1, -1, 0, -1, 1}));
    CHECK_THROWS_AS(power_product({2, 0}), Error);
}

TEST_CASE("power_product degree and root at 1") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> n(1, 6), e(1, 15);
    for (int iter = 0; iter < 100; ++iter) {
        std::vector<unsigned long> exps(n(rng));
        unsigned long total = 0;
        for (auto& v : exps) {
            v = e(rng);
            total += v;
        }
        const IntPoly pp = power_product(exps);
        CHECK(pp.degree() == static_cast<int>(total));
        CHECK(eval_rational(pp, mpq_class(1)) == 0);
        CHECK(pp.coeff(0) == (exps.size() % 2 == 0 ? 1 : -1));
    }
}

TEST_CASE("power_product evaluation agrees with factor-by-factor products") {
    std::mt19937_64 rng(12);
    std::uniform_int_distribution<int> n(1, 5), e(1, 12), num(-9, 9), den(1, 7);
    for (int iter = 0; iter < 200; ++iter) {
        std::vector<unsigned long> exps(n(rng));
        for (auto& v : exps) v = e(rng);
        mpq_class x(num(rng), den(rng));
        x.canonicalize();
        if (x == 0) continue;

        mpq_class expected = 1;
        for (auto v : exps) {
            mpq_class power = 1;
            for (unsigned long i = 0; i < v; ++i) power *= x;
            expected *= power - 1;
        }
        CHECK(eval_rational(power_product(exps), x) == expected);
    }
}

TEST_CASE("sub_scaled worked examples") {
    SUBCASE("full cancellation") {
        CHECK(sub_scaled(poly({-1, 1}), 1, poly({-1, 1}), 1).is_zero());
    }
    SUBCASE("4(x-1)(x^3-1) - 3(x^2-1)^2 is (x-1)^4") {
        const IntPoly d = sub_scaled(power_product({1, 3}), 4, power_product({2, 2}), 3);
        CHECK(d == poly({1, -4, 6, -4, 1}));
        CHECK(d == power_product({1, 1, 1, 1}));
    }
    SUBCASE("zero scale") {
        CHECK(sub_scaled(poly({0, 0, 1}), 0, poly({0, 1}), 2) == poly({0, -2}));
    }
}

TEST_CASE("eval_rational worked examples") {
    const IntPoly quartic = power_product({1, 1, 1, 1});  // (x-1)^4
    CHECK(eval_rational(quartic, mpq_class(2)) == 1);
    CHECK(eval_rational(quartic, mpq_class(1)) == 0);
    CHECK(eval_rational(quartic, mpq_class(3, 2)) == mpq_class(1, 16));
}

TEST_CASE("taylor shift worked examples") {
    CHECK(taylor_shift_one(power_product({1, 1, 1, 1})) == poly({0, 0, 0, 0, 1}));
    CHECK(taylor_shift_one(poly({0, 0, 1})) == poly({1, 2, 1}));
    CHECK(taylor_shift_one(poly({-1, 0, 0, 1})) == poly({0, 3, 3, 1}));
}

TEST_CASE("taylor shift round-trips through the inverse shift") {
    std::mt19937_64 rng(13);
    for (int iter = 0; iter < 500; ++iter) {
        const IntPoly f = random_poly(rng, 64, 1000000000L);
        CHECK(taylor_shift(taylor_shift_one(f), -1) == f);
    }
}

TEST_CASE("root multiplicity at one") {
    SUBCASE("pure power") {
        const auto m = root_multiplicity_at_one(power_product({1, 1, 1, 1}));
        CHECK(m.multiplicity == 4);
        CHECK(m.quotient == poly({1}));
    }
    SUBCASE("no root") {
        const auto m = root_multiplicity_at_one(poly({1, 0, 1}));
        CHECK(m.multiplicity == 0);
        CHECK(m.quotient == poly({1, 0, 1}));
    }
    SUBCASE("zero polynomial rejected") {
        CHECK_THROWS_AS(root_multiplicity_at_one(IntPoly()), Error);
    }
}

TEST_CASE("multiplicity equals the leading zero run of the shifted coefficients") {
    std::mt19937_64 rng(14);
    std::uniform_int_distribution<int> extra(0, 5);
    for (int iter = 0; iter < 200; ++iter) {
        IntPoly f = random_poly(rng, 12, 50);
        if (f.is_zero()) continue;
        const int k = extra(rng);
        for (int i = 0; i < k; ++i) f = f * poly({-1, 1});

        const auto m = root_multiplicity_at_one(f);
        const IntPoly shifted = taylor_shift_one(f);
        unsigned zeros = 0;
        while (shifted.coeff(zeros) == 0) ++zeros;
        CHECK(m.multiplicity == zeros);
        CHECK(m.multiplicity >= static_cast<unsigned>(k));
        // The quotient restores the original under multiplication.
        IntPoly check = m.quotient;
        for (unsigned i = 0; i < m.multiplicity; ++i) check = check * poly({-1, 1});
        CHECK(check == f);
    }
}

TEST_CASE("multiplicity at zero and stripping") {
    CHECK(multiplicity_at_zero(poly({0, 0, 3, 1})) == 2);
    CHECK(strip_zero_root(poly({0, 0, 3, 1}), 2) == poly({3, 1}));
    CHECK(multiplicity_at_zero(poly({5})) == 0);
}

TEST_CASE("derivative and content") {
    CHECK(derivative(poly({1, 2, 3})) == poly({2, 6}));
    CHECK(derivative(poly({9})).is_zero());
    CHECK(content(poly({6, -9, 12})) == 3);
    CHECK(primitive_part(poly({6, -9, 12})) == poly({2, -3, 4}));
    CHECK(primitive_part(poly({-4, -8})) == poly({-1, -2}));
}

TEST_CASE("exact division and gcd") {
    const IntPoly a = poly({-1, 1});    // x - 1
    const IntPoly b = poly({1, 1});     // x + 1
    const IntPoly c = poly({2, 0, 1});  // x^2 + 2
    const IntPoly product = a * a * b * c;

    CHECK(exact_div(product, a * b) == a * c);
    CHECK(poly_gcd(a * a * b, a * b * b) == a * b);
    CHECK(poly_gcd(c, poly({1})) == poly({1}));
    CHECK(poly_gcd(-(a * a), a * poly({3})) == a);
}

TEST_CASE("squarefree part keeps each distinct root once") {
    const IntPoly a = poly({-1, 1});
    const IntPoly b = poly({-2, 1});
    const IntPoly f = a * a * a * b;
    CHECK(squarefree_part(f) == a * b);
    CHECK(squarefree_part(a) == a);
    CHECK(squarefree_part(poly({7})) == poly({1}));
}

TEST_CASE("root bound exceeds every real root") {
    std::mt19937_64 rng(15);
    std::uniform_int_distribution<long> root(-30, 30);
    for (int iter = 0; iter < 100; ++iter) {
        IntPoly f = poly({1});
        long biggest = 0;
        for (int i = 0; i < 4; ++i) {
            const long r = root(rng);
            biggest = std::max(biggest, std::abs(r));
            f = f * poly({-r, 1});
        }
        CHECK(root_bound(f) > biggest);
    }
}

TEST_CASE("polynomial rendering") {
    CHECK(poly({1, -4, 6, -4, 1}).str() == "x^4 - 4x^3 + 6x^2 - 4x + 1");
    CHECK(poly({0, -2}).str() == "-2x");
    CHECK(IntPoly().str() == "0");
}
