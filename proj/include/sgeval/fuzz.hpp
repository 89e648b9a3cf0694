#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "sgeval/properties.hpp"

namespace sgeval {

struct GeneratorConfig {
    std::size_t max_statements = 8;
    std::size_t max_premise = 3;
    std::size_t atom_pool = 5;
    double grid_share = 0.6;  // weights from {0, 0.1, ..., 1}; the rest uniform in [0,1]
    double fact_share = 0.35;  // share of statements with premise T
    double negation_share = 0.3;
};

std::uint64_t splitmix64(std::uint64_t x);
// Seed of trial k of a run seeded with `seed`.
std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t k);

// Random acyclic graph; atoms are layered so claims only reach premises of higher layers.
StatementGraph random_graph(const GeneratorConfig& cfg, std::mt19937_64& rng);

// Throws ScenarioError when the antecedent could not be planted within the bounds.
Scenario random_scenario(PropertyId pid, const GeneratorConfig& cfg, std::uint64_t seed);

struct FuzzReport {
    PropertyId pid;
    std::string semantics;
    bool applicable = true;
    std::size_t trials = 0;
    std::size_t effective = 0;   // trials with at least one instance
    std::size_t violations = 0;
    std::size_t skipped = 0;     // scenario could not be generated or evaluated
    std::optional<std::size_t> first_violation;  // trial index
    std::optional<Witness> witness;              // minimized
    double elapsed_ms = 0.0;
};

struct FuzzOptions {
    std::size_t trials = 10000;
    std::uint64_t seed = 42;
    double tol = kDefaultTolerance;
    unsigned threads = 0;  // 0: hardware concurrency
    bool minimize = true;
};

FuzzReport fuzz(PropertyId pid, const Semantics& sem, const GeneratorConfig& cfg, const FuzzOptions& opts);

// Greedily drops statements while the scenario still violates the property.
Scenario minimize_witness(PropertyId pid, const Semantics& sem, Scenario sc, double tol = kDefaultTolerance);

enum class CellStatus { NotApplicable, ViolatedByFixture, ViolatedByFuzz, NoCounterexampleFound };

const char* to_string(CellStatus s);

struct MatrixCell {
    CellStatus status = CellStatus::NotApplicable;
    std::string evidence;  // fixture name, or fuzz seed and trial
    std::size_t trials = 0;
    std::size_t effective = 0;
    std::size_t violations = 0;
    std::optional<Witness> witness;
};

struct MatrixReport {
    std::vector<std::string> semantics;     // names
    std::vector<std::string> labels;        // short column labels
    std::vector<PropertyId> properties;
    std::vector<std::vector<MatrixCell>> cells;  // [semantics][property]
    double elapsed_ms = 0.0;

    const MatrixCell& at(std::string_view semantics, PropertyId pid) const;
};

MatrixReport satisfaction_matrix(const std::vector<Semantics>& semantics, const std::vector<PropertyId>& pids,
                                 const GeneratorConfig& cfg, const FuzzOptions& opts);

// One row per property, one column per semantics: check, cross or dash.
std::string render_matrix_text(const MatrixReport& m);
std::string render_matrix_json(const MatrixReport& m);
std::string render_witness(const Witness& w);

// "check", "cross" or "dash" symbol of a cell.
const char* cell_symbol(CellStatus s);

}  // namespace sgeval
