#include <doctest.h>

#include <random>
#include <set>

#include "prodineq/errors.hpp"
#include "prodineq/rational.hpp"
#include "prodineq/sturm.hpp"

using namespace prodineq;

namespace {

IntPoly poly(std::vector<long> coeffs) {
    return IntPoly(std::vector<mpz_class>(coeffs.begin(), coeffs.end()));
}

IntPoly linear(const mpq_class& root) {
    // den*x - num vanishes exactly at root.
    return IntPoly({mpz_class(-root.get_num()), mpz_class(root.get_den())});
}

}  // namespace

TEST_CASE("sturm_count on fixed polynomials") {
    CHECK(sturm_count(poly({1, 0, 0, 0, 1}), OpenInterval::above(1)) == 0);  // t^4 + 1
    CHECK(sturm_count(poly({6, -5, 1}), OpenInterval::above(1)) == 2);       // (x-2)(x-3)
    CHECK(sturm_count(poly({6, -5, 1}), OpenInterval::between(1, mpq_class(5, 2))) == 1);
    CHECK(sturm_count(poly({6, -5, 1}), OpenInterval::above(mpq_class(7, 2))) == 0);

    // Repeated roots are counted once.
    const IntPoly f = linear(2) * linear(2) * linear(3);
    CHECK(sturm_count(f, OpenInterval::above(1)) == 2);
}

TEST_CASE("sturm_count endpoint and input errors") {
    CHECK_THROWS_AS(sturm_count(IntPoly(), OpenInterval::above(1)), Error);
    CHECK_THROWS_AS(sturm_count(poly({-2, 1}), OpenInterval::above(2)), Error);  // root at 2
    CHECK_THROWS_AS(sturm_count(poly({2, 1}), OpenInterval::between(3, 2)), Error);
}

TEST_CASE("sturm_count matches constructed root multisets") {
    std::mt19937_64 rng(21);
    std::uniform_int_distribution<int> count(1, 5), num(-20, 20), den(1, 5), mult(1, 3);
    for (int iter = 0; iter < 200; ++iter) {
        std::set<mpq_class> roots;
        IntPoly f = poly({1});
        for (int i = 0, n = count(rng); i < n; ++i) {
            mpq_class r(num(rng), den(rng));
            r.canonicalize();
            if (roots.count(r)) continue;
            roots.insert(r);
            const int m = mult(rng);
            for (int j = 0; j < m; ++j) f = f * linear(r);
        }

        // Endpoints chosen outside the root set.
        mpq_class lo(-41, 2), hi(41, 2);
        unsigned inside = 0;
        for (const auto& r : roots)
            if (lo < r && r < hi) ++inside;

        CHECK(sturm_count(f, OpenInterval::between(lo, hi)) == inside);

        // 3/7 cannot collide with any root: denominators there stay <= 5.
        unsigned above = 0;
        for (const auto& r : roots)
            if (r > mpq_class(3, 7)) ++above;
        CHECK(sturm_count(f, OpenInterval::above(mpq_class(3, 7))) == above);
    }
}

TEST_CASE("region_samples cover every sign region") {
    // (x-2)(x-4) on (1, oo): regions (1,2), (2,4), (4,oo).
    const IntPoly f = linear(2) * linear(4);
    const auto samples = region_samples(f, OpenInterval::above(1));
    REQUIRE(samples.size() == 3);
    CHECK(sign_at(f, samples[0]) > 0);
    CHECK(sign_at(f, samples[1]) < 0);
    CHECK(sign_at(f, samples[2]) > 0);
    CHECK(samples[0] > 1);
    CHECK(samples[1] > samples[0]);
    CHECK(samples[2] > samples[1]);
}

TEST_CASE("isolate_negative worked examples") {
    SUBCASE("constant negative") {
        const mpq_class w = isolate_negative(poly({-1}), OpenInterval::between(1, 2));
        CHECK(w == mpq_class(3, 2));
    }
    SUBCASE("x - 2 on (0, oo)") {
        const mpq_class w = isolate_negative(poly({-2, 1}), OpenInterval::above(0));
        CHECK(w > 0);
        CHECK(w < 2);
        CHECK(sign_at(poly({-2, 1}), w) < 0);
    }
    SUBCASE("negative leading coefficient, witness beyond all roots") {
        // -(x-2)(x-3) is negative on (1,2) and (3,oo).
        const IntPoly f = IntPoly::constant(-1) * linear(2) * linear(3);
        const mpq_class w = isolate_negative(f, OpenInterval::above(1));
        CHECK(sign_at(f, w) < 0);
    }
    SUBCASE("no negative value") {
        CHECK_THROWS_AS(isolate_negative(poly({1, 0, 1}), OpenInterval::above(1)), Error);
        CHECK_THROWS_AS(isolate_negative(IntPoly(), OpenInterval::above(1)), Error);
    }
}

TEST_CASE("isolate_negative finds witnesses for random sign patterns") {
    std::mt19937_64 rng(22);
    std::uniform_int_distribution<int> count(1, 4), num(2, 30);
    for (int iter = 0; iter < 100; ++iter) {
        // Strictly increasing roots > 1 with odd multiplicity: sign alternates.
        IntPoly f = poly({1});
        std::set<long> used;
        for (int i = 0, n = count(rng); i < n; ++i) used.insert(num(rng));
        for (long r : used) f = f * linear(r);

        // Negative somewhere iff there is at least one root (sign flips below the top one).
        const mpq_class w = isolate_negative(f, OpenInterval::above(1));
        CHECK(sign_at(f, w) < 0);
        CHECK(w > 1);
    }
}

TEST_CASE("sturm chain shape on a squarefree quartic") {
    const IntPoly f = poly({6, -5, 1}) * poly({-1, 0, 1});  // roots 2, 3, 1, -1
    const SturmChain chain(squarefree_part(f));
    REQUIRE(chain.members().size() >= 2);
    for (std::size_t i = 1; i < chain.members().size(); ++i)
        CHECK(chain.members()[i].degree() < chain.members()[i - 1].degree());
    CHECK(chain.members().back().degree() == 0);
}
