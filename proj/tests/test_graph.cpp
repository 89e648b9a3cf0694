#include "doctest.h"
#include "oracles.hpp"
#include "sgeval/graph.hpp"
#include "support.hpp"

using namespace sgeval;

namespace {

Statement st(const std::string& id, std::vector<Literal> prem, const std::string& claim) {
    return make_statement(id, std::move(prem), make_literal(claim));
}

ModelErrorKind build_error(std::vector<std::pair<Statement, double>> weighted) {
    try {
        StatementGraph::build(std::move(weighted));
    } catch (const ModelError& e) {
        return e.kind();
    }
    FAIL("graph built");
    return ModelErrorKind::UnknownId;
}

}  // namespace

TEST_CASE("construction errors") {
    const Literal a = make_literal("a"), b = make_literal("b");
    CHECK(build_error({{st("x", {b}, "a"), 1.0}, {st("y", {a}, "b"), 1.0}}) == ModelErrorKind::CyclicGraph);
    CHECK(build_error({{st("x", {b}, "a"), 1.0}, {st("x", {a}, "c"), 1.0}}) == ModelErrorKind::DuplicateId);
    CHECK(build_error({{st("x", {b}, "a"), 1.0}, {st("y", {b}, "a"), 0.5}}) == ModelErrorKind::DuplicateStatement);
    CHECK(build_error({{st("x", {b}, "a"), 1.5}}) == ModelErrorKind::WeightOutOfRange);
    CHECK(build_error({{st("x", {b}, "a"), -0.1}}) == ModelErrorKind::WeightOutOfRange);
    CHECK_THROWS_AS(StatementGraph::build({st("x", {b}, "a")}, {}), ModelError);
}

TEST_CASE("cycle errors list the offending statements") {
    try {
        testing::sg("x: b => a @ 1\ny: a => c @ 1\nz: c => ~b @ 1\n");
        FAIL("parsed a cyclic graph");
    } catch (const std::invalid_argument&) {
    }
    const Literal a = make_literal("a"), b = make_literal("b"), c = make_literal("c");
    try {
        StatementGraph::build({{st("x", {b}, "a"), 1.0}, {st("y", {a}, "c"), 1.0},
                               {make_statement("z", {c}, negate(b)), 1.0}});
        FAIL("built a cyclic graph");
    } catch (const ModelError& e) {
        REQUIRE(e.kind() == ModelErrorKind::CyclicGraph);
        REQUIRE(e.cycle().size() == 4);
        CHECK(e.cycle().front() == e.cycle().back());
    }
}

TEST_CASE("neighbour lists on the running example") {
    const auto g = testing::sg(testing::kFig1);
    const Index a1 = g.index_of("a1");
    CHECK(g.attackers(a1) == std::vector<Index>{g.index_of("a4")});
    CHECK(g.supporters(a1) == std::vector<Index>{g.index_of("a2"), g.index_of("a3")});
    CHECK(g.attacks(g.index_of("a4"), a1));
    CHECK_FALSE(g.supports(g.index_of("a4"), a1));
    CHECK(g.weight_map().at("a4") == 0.7);
    CHECK_THROWS_AS(g.index_of("zz"), ModelError);
}

TEST_CASE("paths") {
    const auto g = testing::sg("a: T => x @ 1\nb: x => y @ 1\nc: y => ~z @ 1\nd: z => w @ 1\n");
    CHECK(exists_path(g, "a", "c", PathRelation::SupportsOnly));
    CHECK_FALSE(exists_path(g, "a", "d", PathRelation::SupportsOnly));
    CHECK(exists_path(g, "a", "d", PathRelation::AttacksAndSupports));
    CHECK_FALSE(exists_path(g, "d", "a", PathRelation::AttacksAndSupports));
    CHECK_FALSE(exists_path(g, "a", "a", PathRelation::AttacksAndSupports));
}

TEST_CASE("topological order puts neighbours first") {
    for (std::uint64_t k = 0; k < 200; ++k) {
        const auto g = testing::seeded_graph(5, k);
        std::vector<std::size_t> pos(g.size());
        REQUIRE(g.topological_order().size() == g.size());
        for (std::size_t p = 0; p < g.size(); ++p) pos[g.topological_order()[p]] = p;
        for (const auto& [from, to] : g.attack_edges()) CHECK(pos[from] < pos[to]);
        for (const auto& [from, to] : g.support_edges()) CHECK(pos[from] < pos[to]);
    }
}

TEST_CASE("derived edge sets agree with the oracle") {
    for (std::uint64_t k = 0; k < 200; ++k) {
        const auto g = testing::seeded_graph(6, k);
        for (Index i = 0; i < g.size(); ++i)
            for (Index j = 0; j < g.size(); ++j) {
                CHECK(g.attacks(i, j) == oracle::attacks(g.statement(i), g.statement(j)));
                CHECK(g.supports(i, j) == oracle::supports(g.statement(i), g.statement(j)));
            }
    }
}

TEST_CASE("copy-with edits") {
    const auto g = testing::sg(testing::kFig1);
    const auto g2 = g.with_weight("a4", 0.2);
    CHECK(g2.weight(g2.index_of("a4")) == 0.2);
    CHECK(g.weight(g.index_of("a4")) == 0.7);
    const auto g3 = g.with_statement(make_statement("a5", {top_literal()}, make_literal("d")), 0.5);
    CHECK(g3.size() == 5);
    CHECK(g3.supporters(g3.index_of("a4")) == std::vector<Index>{g3.index_of("a5")});
    CHECK(g3.without("a5") == g);
    CHECK_THROWS_AS(g.with_weight("a1", 2.0), ModelError);
}
