#include "doctest.h"
#include "oracles.hpp"
#include "sgeval/tnorm.hpp"
#include "support.hpp"

using namespace sgeval;

TEST_CASE("product triple on the running example") {
    const auto g = testing::sg(testing::kFig1);
    const auto s = eval_tnorm(g, product_triple());
    CHECK(s[g.index_of("a1")] == doctest::Approx(0.8 * 0.9 * 0.6).epsilon(1e-12));
    CHECK(std::abs(s[g.index_of("a1")] - 0.432) <= 1e-9);
    CHECK(s[g.index_of("a4")] == 0.0);  // no tree
    CHECK(s[g.index_of("a2")] == 0.9);
}

TEST_CASE("an attacker with a tree discounts the target's tree") {
    const auto g = testing::sg(testing::kFig1 + std::string("a5: T => d @ 0.5\n"));
    const auto tp = eval_tnorm_traced(g, product_triple());
    const Index a1 = g.index_of("a1");
    REQUIRE(tp.trees[a1].size() == 1);
    CHECK(tp.intrinsic[a1][0] == doctest::Approx(0.432));
    // I of a4's tree is 0.7 * 0.5
    CHECK(tp.outcome[a1][0] == doctest::Approx(0.432 * (1 - 0.35)));
    const auto tm = eval_tnorm(g, minimum_triple());
    CHECK(tm[a1] == doctest::Approx(std::min(0.6, 1 - 0.5)));
}

TEST_CASE("an unsupported rule is bottom-strength") {
    const auto g = testing::sg("a: b => a @ 1\n");
    CHECK(eval_tnorm(g, product_triple())[0] == 0.0);
    CHECK(eval_tnorm(g, minimum_triple())[0] == 0.0);
}

TEST_CASE("builtin triples satisfy the De Morgan laws") {
    for (const auto& t : builtin_triples()) {
        CAPTURE(t.name);
        CHECK_FALSE(validate_triple(t).has_value());
    }
    DeMorganTriple broken = product_triple();
    broken.tconorm = [](double a, double b) { return std::max(a, b); };
    CHECK(validate_triple(broken).has_value());
}

TEST_CASE("both triples agree with the oracle on random graphs") {
    for (std::uint64_t k = 0; k < 400; ++k) {
        const auto g = testing::seeded_graph(31, k, 9);
        const auto p = eval_tnorm(g, product_triple());
        const auto m = eval_tnorm(g, minimum_triple());
        const auto op = oracle::tnorm_semantics(g, oracle::product());
        const auto om = oracle::tnorm_semantics(g, oracle::minimum());
        for (Index i = 0; i < g.size(); ++i) {
            CAPTURE(serialize_sg(g));
            CHECK(std::abs(p[i] - op.at(g.id(i))) <= 1e-12);
            CHECK(std::abs(m[i] - om.at(g.id(i))) <= 1e-12);
            CHECK(p[i] >= 0.0);
            CHECK(p[i] <= 1.0);
        }
    }
}

TEST_CASE("strengths stay below the weight of every tree member under min") {
    for (std::uint64_t k = 0; k < 200; ++k) {
        const auto g = testing::seeded_graph(32, k);
        const auto tr = eval_tnorm_traced(g, minimum_triple());
        for (Index i = 0; i < g.size(); ++i)
            for (std::size_t t = 0; t < tr.trees[i].size(); ++t) {
                for (Index m : tr.trees[i][t].members) CHECK(tr.intrinsic[i][t] <= g.weight(m));
                CHECK(tr.outcome[i][t] <= tr.intrinsic[i][t]);
            }
    }
}
