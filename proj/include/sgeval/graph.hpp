#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sgeval/model.hpp"

namespace sgeval {

// Per-statement values indexed like the owning graph (statements sorted by id).
using Strengths = std::vector<double>;

class StatementGraph {
public:
    StatementGraph() = default;

    // Validates ids, structural keys, weights and acyclicity; throws ModelError.
    static StatementGraph build(std::vector<Statement> statements,
                                const std::map<std::string, double>& weights);
    static StatementGraph build(std::vector<std::pair<Statement, double>> weighted);

    std::size_t size() const { return statements_.size(); }
    bool empty() const { return statements_.empty(); }

    const Statement& statement(Index i) const { return statements_[i]; }
    const std::vector<Statement>& statements() const { return statements_; }
    const std::string& id(Index i) const { return statements_[i].id; }
    double weight(Index i) const { return weights_[i]; }
    const std::vector<double>& weights() const { return weights_; }

    std::optional<Index> find(std::string_view id) const;
    Index index_of(std::string_view id) const;  // throws UnknownId

    // A(alpha) and S(alpha), ascending index order.
    const std::vector<Index>& attackers(Index i) const { return attackers_[i]; }
    const std::vector<Index>& supporters(Index i) const { return supporters_[i]; }
    // Outgoing edges: statements that i attacks / supports.
    const std::vector<Index>& attacked_by(Index i) const { return attack_targets_[i]; }
    const std::vector<Index>& supported_by(Index i) const { return support_targets_[i]; }
    bool attacks(Index from, Index to) const;
    bool supports(Index from, Index to) const;

    const std::vector<Edge>& attack_edges() const { return attack_edges_; }
    const std::vector<Edge>& support_edges() const { return support_edges_; }

    // Every statement appears after all of its attackers and supporters.
    const std::vector<Index>& topological_order() const { return topo_; }

    StatementGraph with_weights(const std::vector<double>& weights) const;
    StatementGraph with_weight(std::string_view id, double weight) const;
    StatementGraph with_statement(const Statement& s, double weight) const;
    StatementGraph without(std::string_view id) const;

    std::map<std::string, double> weight_map() const;

    bool operator==(const StatementGraph& other) const {
        return statements_ == other.statements_ && weights_ == other.weights_;
    }

private:
    std::vector<Statement> statements_;
    std::vector<double> weights_;
    std::vector<std::vector<Index>> attackers_, supporters_;
    std::vector<std::vector<Index>> attack_targets_, support_targets_;
    std::vector<Edge> attack_edges_, support_edges_;
    std::vector<Index> topo_;
};

std::map<std::string, double> by_id(const StatementGraph& g, const Strengths& values);

enum class PathRelation { SupportsOnly, AttacksAndSupports };

// Non-empty directed path from -> to.
bool exists_path(const StatementGraph& g, Index from, Index to, PathRelation via);
bool exists_path(const StatementGraph& g, std::string_view from, std::string_view to, PathRelation via);

}  // namespace sgeval
