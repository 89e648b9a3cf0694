#pragma once

#include <random>
#include <stdexcept>
#include <string>

#include "sgeval/fuzz.hpp"
#include "sgeval/parser.hpp"

namespace testing {

inline sgeval::StatementGraph sg(const std::string& text) {
    sgeval::ParseResult r = sgeval::parse_sg(text);
    if (!r.ok()) throw std::invalid_argument("test graph does not parse:\n" + text);
    return *r.graph;
}

inline constexpr const char* kFig1 =
    "a1: a & b => c @ 0.8\n"
    "a2: T => a @ 0.9\n"
    "a3: T => b @ 0.6\n"
    "a4: d => ~a @ 0.7\n";

// Graph number k of a seeded family; size and shape vary with k.
inline sgeval::StatementGraph seeded_graph(std::uint64_t seed, std::uint64_t k, std::size_t max_statements = 8,
                                           std::size_t max_premise = 3) {
    std::mt19937_64 rng(sgeval::trial_seed(seed, k));
    sgeval::GeneratorConfig cfg;
    cfg.max_statements = max_statements;
    cfg.max_premise = max_premise;
    cfg.atom_pool = 3 + k % 4;
    cfg.fact_share = 0.2 + 0.1 * static_cast<double>(k % 4);
    return sgeval::random_graph(cfg, rng);
}

}  // namespace testing
