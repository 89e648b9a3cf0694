#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "sgeval/cst.hpp"

namespace sgeval {

struct DeMorganTriple {
    std::string name;
    std::function<double(double, double)> tnorm;
    std::function<double(double, double)> tconorm;
    std::function<double(double)> negation;
};

DeMorganTriple product_triple();  // product, probabilistic sum, 1 - x
DeMorganTriple minimum_triple();  // min, max, 1 - x
std::vector<DeMorganTriple> builtin_triples();

// First violated law on a sample grid (De Morgan both ways, commutativity, associativity), or nullopt.
std::optional<std::string> validate_triple(const DeMorganTriple& t, double tol = 1e-12);

struct TnormTrace {
    Strengths strengths;
    std::vector<std::vector<Cst>> trees;       // per statement
    std::vector<std::vector<double>> intrinsic;  // I(T), parallel to trees
    std::vector<std::vector<double>> outcome;    // O(T), parallel to trees
};

TnormTrace eval_tnorm_traced(const StatementGraph& g, const DeMorganTriple& t, const CstOptions& opts = {});
Strengths eval_tnorm(const StatementGraph& g, const DeMorganTriple& t, const CstOptions& opts = {});

}  // namespace sgeval
