#pragma once

#include <functional>
#include <string>
#include <vector>

#include "sgeval/abstract.hpp"

namespace sgeval {

// One-level graph around a focus statement: its premise literals plus its direct neighbours.
struct PremiseGraph {
    Index focus = 0;
    std::vector<Literal> literals;   // bipolar nodes [0, literals.size())
    std::vector<Index> neighbours;   // statement indices, bipolar nodes after the literals
    BipolarEvalGraph bipolar;
};

std::string literal_node_id(const Literal& l);  // "[a]", "[~a]"

// weight^(1/n) as exp(ln(weight)/n); 0 stays 0. Throws std::invalid_argument for n == 0.
double nth_root(double weight, std::size_t n);

// strengths is indexed like g; entries for A(focus) and S(focus) must be set (NaN means missing).
// Throws std::invalid_argument on an empty premise or a missing neighbour strength.
PremiseGraph build_premise_graph(const StatementGraph& g, Index focus, const Strengths& strengths);

struct PremiseAggregator {
    std::string name;
    std::function<double(const std::vector<double>&)> fold;
};

PremiseAggregator product_aggregator();
PremiseAggregator min_aggregator();
PremiseAggregator constant_aggregator();  // always 1
// Disjunction sketch; experimental, not one of the shipped semantics.
PremiseAggregator probabilistic_sum_aggregator();

struct ModularTrace {
    Strengths strengths;
    // Per statement, literal scores in premise order (empty for facts).
    std::vector<std::vector<double>> literal_scores;
};

ModularTrace eval_modular_traced(const StatementGraph& g, const AbstractSemantics& sem, const PremiseAggregator& agg);
Strengths eval_modular(const StatementGraph& g, const AbstractSemantics& sem, const PremiseAggregator& agg);
Strengths eval_dc(const StatementGraph& g, const AbstractSemantics& sem);

}  // namespace sgeval
