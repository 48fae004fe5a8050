#include <doctest.h>

#include "prodineq/errors.hpp"
#include "prodineq/proof_tree.hpp"
#include "prodineq/rational.hpp"
#include "support/generators.hpp"

using namespace prodineq;
using prodineq::testing::PairGen;

namespace {

ExponentTuple tuple(std::vector<long> v) {
    return PairGen::to_tuple(v);
}

}  // namespace

TEST_CASE("select_pivot picks the largest admissible k") {
    CHECK(select_pivot(mpq_class(2), tuple({1, 3, 5})) == 1);
    CHECK(select_pivot(mpq_class(6), tuple({2, 5, 7, 17})) == 2);
    CHECK(select_pivot(mpq_class(2), tuple({2, 2, 5})) == 2);   // ties: largest wins
    CHECK(select_pivot(mpq_class(9), tuple({1, 3, 5})) == 2);   // above q_{n-1}: k = n-1
    CHECK_THROWS_AS(select_pivot(mpq_class(1, 2), tuple({1, 3, 5})), Error);
}

TEST_CASE("reduce worked examples") {
    SUBCASE("three entries") {
        const auto step = reduce(tuple({2, 3, 4}), tuple({1, 3, 5}));
        CHECK(step.level == 3);
        CHECK(step.pivot == 1);
        CHECK(step.qprime == 2);
        CHECK(step.base.a1 == 2);
        CHECK(step.base.a2 == 2);
        CHECK(step.base.b1 == 1);
        CHECK(step.base.b2 == 3);
        CHECK(step.residual_p == tuple({3, 4}));
        CHECK(step.residual_q == tuple({2, 5}));
    }
    SUBCASE("identical tuples degenerate to an equality step") {
        const auto step = reduce(tuple({1, 2, 3}), tuple({1, 2, 3}));
        CHECK(step.qprime == 2);
        CHECK(step.base.is_equality());
        CHECK(step.residual_p == step.residual_q);
    }
    SUBCASE("four entries with interior pivot") {
        const auto step = reduce(tuple({6, 8, 8, 9}), tuple({2, 5, 7, 17}));
        CHECK(step.pivot == 2);
        CHECK(step.qprime == 6);
        CHECK(step.base.a1 == 6);
        CHECK(step.base.a2 == 6);
        CHECK(step.base.b1 == 5);
        CHECK(step.base.b2 == 7);
        CHECK(step.residual_p == tuple({8, 8, 9}));
        CHECK(step.residual_q == tuple({2, 6, 17}));
    }
}

TEST_CASE("build_tree worked examples") {
    SUBCASE("two entries: a single base case") {
        const auto tree = build_tree(tuple({1, 2}), tuple({1, 2}));
        REQUIRE(tree.steps.size() == 1);
        CHECK(tree.steps[0].base.is_equality());
        CHECK(verify_tree(tree));
    }
    SUBCASE("three entries: two steps") {
        const auto tree = build_tree(tuple({2, 3, 4}), tuple({1, 3, 5}));
        REQUIRE(tree.steps.size() == 2);
        CHECK(tree.steps[0].base.a1 == 2);
        CHECK(tree.steps[0].base.b2 == 3);
        CHECK(tree.steps[1].base.a1 == 3);
        CHECK(tree.steps[1].base.a2 == 4);
        CHECK(tree.steps[1].base.b1 == 2);
        CHECK(tree.steps[1].base.b2 == 5);
        CHECK(verify_tree(tree));
    }
    SUBCASE("single entry: empty tree") {
        const auto tree = build_tree(tuple({3}), tuple({3}));
        CHECK(tree.steps.empty());
        CHECK(verify_tree(tree));
    }
    SUBCASE("dominance is required") {
        CHECK_THROWS_AS(build_tree(tuple({2, 3, 7}), tuple({1, 5, 6})), Error);
    }
}

TEST_CASE("five-entry regression fixture") {
    // Locked pivot/q' schedule for p=(2,3,5,7,11), q=(1,1,4,4,18).
    const auto tree = build_tree(tuple({2, 3, 5, 7, 11}), tuple({1, 1, 4, 4, 18}));
    REQUIRE(tree.steps.size() == 4);

    CHECK(tree.steps[0].level == 5);
    CHECK(tree.steps[0].pivot == 2);
    CHECK(tree.steps[0].p1 == 2);
    CHECK(tree.steps[0].qk == 1);
    CHECK(tree.steps[0].qk1 == 4);
    CHECK(tree.steps[0].qprime == 3);

    CHECK(tree.steps[1].level == 4);
    CHECK(tree.steps[1].pivot == 2);
    CHECK(tree.steps[1].p1 == 3);
    CHECK(tree.steps[1].qprime == 4);
    CHECK(tree.steps[1].base.is_equality());

    CHECK(tree.steps[2].level == 3);
    CHECK(tree.steps[2].pivot == 2);
    CHECK(tree.steps[2].p1 == 5);
    CHECK(tree.steps[2].qk == 4);
    CHECK(tree.steps[2].qk1 == 18);
    CHECK(tree.steps[2].qprime == 17);

    CHECK(tree.steps[3].level == 2);
    CHECK(tree.steps[3].pivot == 1);
    CHECK(tree.steps[3].p1 == 7);
    CHECK(tree.steps[3].qprime == 11);

    CHECK(verify_tree(tree));
    CHECK(tree.target.reduced_left == 48);
    CHECK(tree.target.reduced_right == 385);
}

TEST_CASE("verify_tree rejects corrupted trees") {
    auto tree = build_tree(tuple({2, 3, 4}), tuple({1, 3, 5}));
    REQUIRE(verify_tree(tree));

    SUBCASE("perturbed q'") {
        tree.steps[0].qprime += 1;
        CHECK(!verify_tree(tree));
    }
    SUBCASE("perturbed base case") {
        tree.steps[0].base.a2 += 1;
        CHECK(!verify_tree(tree));
    }
    SUBCASE("dropped step") {
        tree.steps.pop_back();
        CHECK(!verify_tree(tree));
    }
    SUBCASE("swapped residual") {
        std::swap(tree.steps[0].residual_p, tree.steps[0].residual_q);
        CHECK(!verify_tree(tree));
    }
    SUBCASE("wrong target") {
        tree.target = InequalityInstance::make(tuple({2, 3, 4}), tuple({1, 2, 6}));
        CHECK(!verify_tree(tree));
    }
}

TEST_CASE("random dominance pairs build verified trees") {
    PairGen gen(41);
    for (int iter = 0; iter < 200; ++iter) {
        const int n = gen.uniform(1, 6);
        const bool rational = iter % 4 == 0;
        const auto [p, q] = gen.dominant_pair(n, 15, rational);

        const auto tree = build_tree(p, q);
        CHECK(tree.steps.size() + 1 == p.size());
        CHECK(verify_tree(tree));
        for (const auto& step : tree.steps) {
            CHECK(check_dominance(step.residual_p, step.residual_q).satisfied);
            CHECK(step.base.hypotheses_hold());
        }
    }
}
