#include "sgeval/modular.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace sgeval {

std::string literal_node_id(const Literal& l) { return "[" + l.str() + "]"; }

double nth_root(double weight, std::size_t n) {
    if (n == 0) throw std::invalid_argument("nth_root needs n >= 1");
    if (weight == 0.0) return 0.0;
    if (n == 1) return weight;
    return std::exp(std::log(weight) / static_cast<double>(n));
}

PremiseGraph build_premise_graph(const StatementGraph& g, Index focus, const Strengths& strengths) {
    const Statement& s = g.statement(focus);
    if (s.premise.is_top()) throw std::invalid_argument("premise graph of " + s.id + ": premise is T");
    if (strengths.size() != g.size()) throw std::invalid_argument("strength vector does not match graph");

    PremiseGraph pg;
    pg.focus = focus;
    pg.literals = s.premise.literals();
    std::merge(g.attackers(focus).begin(), g.attackers(focus).end(), g.supporters(focus).begin(),
               g.supporters(focus).end(), std::back_inserter(pg.neighbours));

    const std::size_t n_lit = pg.literals.size();
    std::vector<std::string> nodes;
    std::vector<double> base;
    const double lit_base = nth_root(g.weight(focus), n_lit);
    for (const Literal& l : pg.literals) {
        nodes.push_back(literal_node_id(l));
        base.push_back(lit_base);
    }
    std::vector<Edge> attacks, supports;
    for (std::size_t k = 0; k < pg.neighbours.size(); ++k) {
        Index j = pg.neighbours[k];
        double v = strengths[j];
        if (std::isnan(v)) throw std::invalid_argument("missing strength for neighbour " + g.id(j));
        nodes.push_back(g.id(j));
        base.push_back(v);
        const Literal& c = g.statement(j).claim;
        Index node = n_lit + k;
        for (std::size_t x = 0; x < n_lit; ++x) {
            if (pg.literals[x] == c) supports.emplace_back(node, x);
            else if (pg.literals[x] == negate(c)) attacks.emplace_back(node, x);
        }
    }
    pg.bipolar = BipolarEvalGraph::build(std::move(nodes), std::move(base), attacks, supports);
    return pg;
}

PremiseAggregator product_aggregator() {
    return {"product", [](const std::vector<double>& v) {
                double acc = 1.0;
                for (double x : v) acc *= x;
                return acc;
            }};
}

PremiseAggregator min_aggregator() {
    return {"min", [](const std::vector<double>& v) {
                double acc = 1.0;
                for (double x : v) acc = std::min(acc, x);
                return acc;
            }};
}

PremiseAggregator constant_aggregator() {
    return {"constant", [](const std::vector<double>&) { return 1.0; }};
}

PremiseAggregator probabilistic_sum_aggregator() {
    return {"probabilistic-sum", [](const std::vector<double>& v) {
                double acc = 0.0;
                for (double x : v) acc = acc + x - acc * x;
                return v.empty() ? 1.0 : acc;
            }};
}

ModularTrace eval_modular_traced(const StatementGraph& g, const AbstractSemantics& sem, const PremiseAggregator& agg) {
    ModularTrace tr;
    tr.strengths.assign(g.size(), std::numeric_limits<double>::quiet_NaN());
    tr.literal_scores.assign(g.size(), {});
    for (Index i : g.topological_order()) {
        if (g.statement(i).premise.is_top()) {
            tr.strengths[i] = g.weight(i);
            continue;
        }
        PremiseGraph pg = build_premise_graph(g, i, tr.strengths);
        std::vector<double> scores = eval_abstract(pg.bipolar, sem);
        scores.resize(pg.literals.size());
        tr.strengths[i] = agg.fold(scores);
        tr.literal_scores[i] = std::move(scores);
    }
    return tr;
}

Strengths eval_modular(const StatementGraph& g, const AbstractSemantics& sem, const PremiseAggregator& agg) {
    return eval_modular_traced(g, sem, agg).strengths;
}

Strengths eval_dc(const StatementGraph& g, const AbstractSemantics& sem) {
    return eval_modular(g, sem, product_aggregator());
}

}  // namespace sgeval
