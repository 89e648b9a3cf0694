#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "sgeval/abstract.hpp"
#include "support.hpp"

using namespace sgeval;

TEST_CASE("probabilistic-sum aggregation") {
    CHECK(dfquad_aggregate({}) == 0.0);
    CHECK(dfquad_aggregate({0.4}) == 0.4);
    CHECK(dfquad_aggregate({0.5, 0.5}) == 0.75);
    CHECK(dfquad_aggregate({0.5, 0.5, 0.5}) == 0.875);
}

TEST_CASE("DF-QuAD combination") {
    CHECK(dfquad_combine(0.5, 0.0, 0.0) == 0.5);
    CHECK(dfquad_combine(0.5, 1.0, 0.0) == 0.0);
    CHECK(dfquad_combine(0.5, 0.0, 1.0) == 1.0);
    CHECK(dfquad_combine(0.8, 0.5, 0.5) == 0.8);
    CHECK(dfquad_combine(0.6, 0.25, 0.75) == doctest::Approx(0.6 + 0.4 * 0.5));
    CHECK(dfquad_score(0.5, {0.5}, {0.5, 0.5}) == doctest::Approx(0.5 + 0.5 * 0.25));
}

TEST_CASE("QEM influence") {
    CHECK(qem_h(-1.0) == 0.0);
    CHECK(qem_h(1.0) == 0.5);
    CHECK(qem_combine(0.5, {}, {}) == 0.5);
    CHECK(qem_combine(0.5, {1.0}, {}) == doctest::Approx(0.25));
    CHECK(qem_combine(0.5, {}, {1.0}) == doctest::Approx(0.75));
    CHECK(qem_combine(0.2, {0.3}, {0.3}) == 0.2);
}

TEST_CASE("bipolar graph validation") {
    CHECK_THROWS_AS(BipolarEvalGraph::build({"a", "a"}, {0.1, 0.2}, {}, {}), BipolarGraphError);
    CHECK_THROWS_AS(BipolarEvalGraph::build({"a"}, {1.2}, {}, {}), BipolarGraphError);
    CHECK_THROWS_AS(BipolarEvalGraph::build({"a", "b"}, {0.1, 0.2}, {{0, 1}, {1, 0}}, {}), BipolarGraphError);
    CHECK_THROWS_AS(BipolarEvalGraph::build({"a", "b"}, {0.1, 0.2}, {{0, 1}}, {{0, 1}}), BipolarGraphError);
    CHECK_THROWS_AS(BipolarEvalGraph::build({"a", "b"}, {0.1, 0.2}, {{0, 5}}, {}), BipolarGraphError);
    const auto bg = BipolarEvalGraph::build({"a", "b", "c"}, {0.5, 0.5, 0.5}, {{0, 2}}, {{1, 2}});
    CHECK(bg.attackers(2) == std::vector<Index>{0});
    CHECK(bg.supporters(2) == std::vector<Index>{1});
}

TEST_CASE("scores on a chain") {
    // c attacked by b, b supported by a
    const auto bg = BipolarEvalGraph::build({"a", "b", "c"}, {1.0, 0.5, 0.8}, {{1, 2}}, {{0, 1}});
    const auto d = eval_abstract(bg, dfquad());
    CHECK(d[1] == 1.0);
    CHECK(d[2] == doctest::Approx(0.0));
    const auto q = eval_abstract(bg, qem());
    CHECK(q[1] == doctest::Approx(0.75));
    CHECK(q[2] == doctest::Approx(0.8 - 0.8 * qem_h(0.75)));
}

TEST_CASE("statements as nodes agree with the oracle") {
    for (std::uint64_t k = 0; k < 300; ++k) {
        const auto g = testing::seeded_graph(41, k);
        const auto d = apply_abstract_to_sg(g, dfquad());
        const auto q = apply_abstract_to_sg(g, qem());
        const auto od = oracle::abstract_semantics(g, oracle::Gs::DfQuad);
        const auto oq = oracle::abstract_semantics(g, oracle::Gs::Qem);
        for (Index i = 0; i < g.size(); ++i) {
            CHECK(std::abs(d[i] - od.at(g.id(i))) <= 1e-12);
            CHECK(std::abs(q[i] - oq.at(g.id(i))) <= 1e-12);
        }
    }
}

TEST_CASE("scores stay in the unit interval and respect the base without neighbours") {
    std::mt19937_64 rng(9);
    std::uniform_real_distribution<double> u(0, 1);
    for (int k = 0; k < 2000; ++k) {
        const double b = u(rng);
        std::vector<double> att(k % 4), sup(k % 3);
        for (double& x : att) x = u(rng);
        for (double& x : sup) x = u(rng);
        for (double v : {dfquad_score(b, att, sup), qem_combine(b, att, sup)}) {
            CHECK(v >= 0.0);
            CHECK(v <= 1.0);
        }
        CHECK(dfquad_score(b, {}, {}) == b);
        CHECK(qem_combine(b, {}, {}) == b);
    }
}
