#pragma once

#include <string>
#include <vector>

#include "sgeval/properties.hpp"

namespace sgeval {

struct ExpectedStrength {
    std::string id;
    bool in_after = false;  // value refers to the second graph
    double value = 0.0;
    double tol = 5e-3;
};

struct Fixture {
    std::string name;  // "<semantics>/<property>/<case>"
    PropertyId pid;
    std::string semantics;
    Scenario scenario;
    VerdictStatus expected;
    std::vector<ExpectedStrength> strengths;
    std::string note;
};

// Counterexamples and worked examples with their expected verdicts and strengths.
const std::vector<Fixture>& fixture_suite();

// Parses DSL text into a graph; throws std::invalid_argument on any diagnostic.
StatementGraph graph_from_text(const std::string& text);

struct FixtureOutcome {
    const Fixture* fixture = nullptr;
    PropertyVerdict verdict;
    bool verdict_ok = false;
    std::vector<std::string> mismatches;  // one line per strength outside tolerance
    bool ok() const { return verdict_ok && mismatches.empty(); }
};

FixtureOutcome run_fixture(const Fixture& f, double tol = kDefaultTolerance);

}  // namespace sgeval
