#include <random>

#include "doctest.h"
#include "json.hpp"
#include "sgeval/parser.hpp"
#include "malformed_cases.hpp"
#include "support.hpp"

using namespace sgeval;

TEST_CASE("grammar basics") {
    const ParseResult r = parse_sg("%version 1\n# comment\n\na1: a & ~b => c @ .5   # trailing\nf : T => a @ 1\n");
    REQUIRE(r.ok());
    const auto& g = *r.graph;
    REQUIRE(g.size() == 2);
    CHECK(g.statement(0).premise.str() == "a & ~b");
    CHECK(g.weight(0) == 0.5);
    CHECK(g.statement(1).premise.is_top());
}

TEST_CASE("empty input is an empty graph") {
    const ParseResult r = parse_sg("");
    REQUIRE(r.ok());
    CHECK(r.graph->empty());
    CHECK(serialize_sg(*r.graph).empty());
}

TEST_CASE("malformed inputs report kind and position") {
    for (const auto& e : testing::kMalformed) {
        CAPTURE(e.text);
        const ParseResult r = parse_sg(e.text);
        CHECK_FALSE(r.ok());
        REQUIRE(r.errors.size() >= 1);
        CHECK(r.errors[0].kind == e.kind);
        CHECK(r.errors[0].span.line == e.line);
        CHECK(r.errors[0].span.column == e.column);
    }
}

TEST_CASE("all errors are collected, not only the first") {
    const ParseResult r = parse_sg("a1: a => b @ 2\nbad line\na3: c => ~c2 @ 0.5\na4 => x\n");
    CHECK(r.errors.size() == 3);
    CHECK(format_errors(r.errors, "f.sg").find("f.sg:1:") == 0);
}

TEST_CASE("cycles surface after parsing") {
    const ParseResult r = parse_sg("x: b => a @ 1\ny: a => b @ 1\n");
    CHECK_FALSE(r.ok());
    CHECK(r.errors.empty());
    REQUIRE(r.cycle);
    CHECK(r.cycle->cycle.size() == 3);
}

TEST_CASE("weights format to the shortest exact text") {
    CHECK(format_weight(0.5) == "0.5");
    CHECK(format_weight(1.0) == "1.0");
    CHECK(format_weight(0.0) == "0.0");
    CHECK(format_weight(0.1) == "0.1");
    CHECK(format_weight(1e-7) == "0.0000001");
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(0, 1);
    for (int k = 0; k < 2000; ++k) {
        const double v = u(rng);
        CHECK(std::stod(format_weight(v)) == v);
    }
}

TEST_CASE("serialize then parse is the identity") {
    for (std::uint64_t k = 0; k < 500; ++k) {
        const auto g = testing::seeded_graph(8, k);
        const std::string text = serialize_sg(g);
        const ParseResult r = parse_sg(text);
        REQUIRE(r.ok());
        CHECK(*r.graph == g);
        CHECK(serialize_sg(*r.graph) == text);
    }
}

TEST_CASE("json export") {
    const auto g = testing::sg(testing::kFig1);
    const auto j = nlohmann::json::parse(export_json(g));
    REQUIRE(j["statements"].size() == 4);
    CHECK(j["statements"][0]["id"] == "a1");
    CHECK(j["statements"][0]["weight"] == 0.8);
    CHECK(j["attacks"].size() == 1);
    CHECK(j["supports"].size() == 2);
    const auto annotated = nlohmann::json::parse(export_json(g, Strengths{0.1, 0.2, 0.3, 0.4}));
    CHECK(annotated["statements"][3]["strength"] == 0.4);
    CHECK_THROWS_AS(export_json(g, Strengths{0.1}), std::invalid_argument);
}

TEST_CASE("dot export") {
    const auto g = testing::sg(testing::kFig1);
    const std::string dot = export_dot(g);
    CHECK(dot.rfind("digraph SG {", 0) == 0);
    CHECK(dot.find("a4 -> a1") != std::string::npos);
    CHECK(dot.find("a2 -> a1") != std::string::npos);
    CHECK(export_dot(StatementGraph{}) == "digraph SG {\n  node [shape=box];\n}\n");
}
