#pragma once

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "sgeval/graph.hpp"

namespace sgeval {

class BipolarGraphError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Weighted bipolar DAG over abstract nodes. Scores are indexed like nodes().
class BipolarEvalGraph {
public:
    // Throws BipolarGraphError on duplicate ids, bad bases, bad/overlapping edges or a cycle.
    static BipolarEvalGraph build(std::vector<std::string> nodes, std::vector<double> base,
                                  const std::vector<Edge>& attacks, const std::vector<Edge>& supports);

    std::size_t size() const { return nodes_.size(); }
    const std::vector<std::string>& nodes() const { return nodes_; }
    const std::string& id(Index i) const { return nodes_[i]; }
    double base(Index i) const { return base_[i]; }
    const std::vector<double>& bases() const { return base_; }
    // Incoming neighbours ordered by node id.
    const std::vector<Index>& attackers(Index i) const { return attackers_[i]; }
    const std::vector<Index>& supporters(Index i) const { return supporters_[i]; }
    const std::vector<Index>& topological_order() const { return topo_; }
    Index index_of(std::string_view id) const;

private:
    std::vector<std::string> nodes_;
    std::vector<double> base_;
    std::vector<std::vector<Index>> attackers_, supporters_;
    std::vector<Index> topo_;
};

struct AbstractSemantics {
    std::string name;
    // (base score, attacker scores, supporter scores) -> score in [0,1]
    std::function<double(double, const std::vector<double>&, const std::vector<double>&)> combine;
};

// Iterated probabilistic sum; empty sequence gives 0.
double dfquad_aggregate(const std::vector<double>& scores);
double dfquad_combine(double base, double attack, double support);
double dfquad_score(double base, const std::vector<double>& attackers, const std::vector<double>& supporters);

double qem_h(double v);
double qem_combine(double base, const std::vector<double>& attackers, const std::vector<double>& supporters);

AbstractSemantics dfquad();
AbstractSemantics qem();

std::vector<double> eval_abstract(const BipolarEvalGraph& bg, const AbstractSemantics& sem);

// Statements as atomic nodes with base = weight.
BipolarEvalGraph to_bipolar(const StatementGraph& g);
Strengths apply_abstract_to_sg(const StatementGraph& g, const AbstractSemantics& sem);

}  // namespace sgeval
