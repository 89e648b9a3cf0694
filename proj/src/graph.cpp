#include "sgeval/graph.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace sgeval {

namespace {

void check_weight(const std::string& id, double w) {
    if (!(w >= 0.0 && w <= 1.0))
        throw ModelError(ModelErrorKind::WeightOutOfRange,
                         "weight of " + id + " must lie in [0,1], got " + std::to_string(w));
}

// Reports one cycle among the nodes left over by Kahn's algorithm.
std::vector<std::string> find_cycle(const std::vector<Statement>& st,
                                    const std::vector<std::vector<Index>>& out,
                                    const std::vector<int>& indegree) {
    const std::size_t n = st.size();
    std::vector<int> state(n, 0);  // 0 new, 1 on stack, 2 done
    std::vector<Index> stack;
    std::vector<std::string> cycle;
    std::function<bool(Index)> dfs = [&](Index u) {
        state[u] = 1;
        stack.push_back(u);
        for (Index v : out[u]) {
            if (state[v] == 1) {
                auto it = std::find(stack.begin(), stack.end(), v);
                for (; it != stack.end(); ++it) cycle.push_back(st[*it].id);
                cycle.push_back(st[v].id);
                return true;
            }
            if (state[v] == 0 && dfs(v)) return true;
        }
        stack.pop_back();
        state[u] = 2;
        return false;
    };
    for (Index u = 0; u < n; ++u)
        if (indegree[u] > 0 && state[u] == 0 && dfs(u)) break;
    return cycle;
}

}  // namespace

StatementGraph StatementGraph::build(std::vector<Statement> statements,
                                     const std::map<std::string, double>& weights) {
    std::sort(statements.begin(), statements.end(),
              [](const Statement& a, const Statement& b) { return a.id < b.id; });
    StatementGraph g;
    const std::size_t n = statements.size();
    std::set<std::pair<Premise, Literal>> keys;
    for (std::size_t i = 0; i < n; ++i) {
        const Statement& s = statements[i];
        if (s.id.empty()) throw ModelError(ModelErrorKind::EmptyId, "statement id must be non-empty");
        if (s.claim.is_top()) throw ModelError(ModelErrorKind::TopClaim, "statement " + s.id + ": T cannot be a claim");
        if (i > 0 && statements[i - 1].id == s.id)
            throw ModelError(ModelErrorKind::DuplicateId, "duplicate statement id " + s.id);
        if (!keys.emplace(s.premise, s.claim).second)
            throw ModelError(ModelErrorKind::DuplicateStatement,
                             "statement " + s.id + " repeats premise and claim of another statement");
        auto w = weights.find(s.id);
        if (w == weights.end())
            throw ModelError(ModelErrorKind::MissingWeight, "no weight given for " + s.id);
        check_weight(s.id, w->second);
        g.weights_.push_back(w->second);
    }
    g.statements_ = std::move(statements);

    // Statements indexed by the literals in their premises.
    std::map<Literal, std::vector<Index>> by_premise;
    for (Index i = 0; i < n; ++i)
        for (const Literal& l : g.statements_[i].premise.literals()) by_premise[l].push_back(i);

    g.attackers_.assign(n, {});
    g.supporters_.assign(n, {});
    g.attack_targets_.assign(n, {});
    g.support_targets_.assign(n, {});
    for (Index i = 0; i < n; ++i) {
        const Literal& c = g.statements_[i].claim;
        if (auto it = by_premise.find(c); it != by_premise.end())
            for (Index j : it->second) {
                g.support_targets_[i].push_back(j);
                g.supporters_[j].push_back(i);
                g.support_edges_.emplace_back(i, j);
            }
        if (auto it = by_premise.find(negate(c)); it != by_premise.end())
            for (Index j : it->second) {
                g.attack_targets_[i].push_back(j);
                g.attackers_[j].push_back(i);
                g.attack_edges_.emplace_back(i, j);
            }
    }
    std::sort(g.attack_edges_.begin(), g.attack_edges_.end());
    std::sort(g.support_edges_.begin(), g.support_edges_.end());

    std::vector<std::vector<Index>> out(n);
    std::vector<int> indegree(n, 0);
    for (Index i = 0; i < n; ++i) {
        std::merge(g.attack_targets_[i].begin(), g.attack_targets_[i].end(),
                   g.support_targets_[i].begin(), g.support_targets_[i].end(), std::back_inserter(out[i]));
        for (Index j : out[i]) ++indegree[j];
    }
    std::vector<int> remaining = indegree;
    std::vector<Index> ready;
    for (Index i = 0; i < n; ++i)
        if (remaining[i] == 0) ready.push_back(i);
    // Smallest ready index first keeps the order deterministic.
    std::make_heap(ready.begin(), ready.end(), std::greater<>());
    while (!ready.empty()) {
        std::pop_heap(ready.begin(), ready.end(), std::greater<>());
        Index u = ready.back();
        ready.pop_back();
        g.topo_.push_back(u);
        for (Index v : out[u])
            if (--remaining[v] == 0) {
                ready.push_back(v);
                std::push_heap(ready.begin(), ready.end(), std::greater<>());
            }
    }
    if (g.topo_.size() != n) {
        auto cycle = find_cycle(g.statements_, out, remaining);
        std::string msg = "statement graph is cyclic:";
        for (std::size_t k = 0; k < cycle.size(); ++k) msg += (k ? " -> " : " ") + cycle[k];
        throw ModelError(ModelErrorKind::CyclicGraph, msg, cycle);
    }
    return g;
}

StatementGraph StatementGraph::build(std::vector<std::pair<Statement, double>> weighted) {
    std::vector<Statement> statements;
    std::map<std::string, double> weights;
    for (auto& [s, w] : weighted) {
        if (weights.count(s.id))
            throw ModelError(ModelErrorKind::DuplicateId, "duplicate statement id " + s.id);
        weights[s.id] = w;
        statements.push_back(std::move(s));
    }
    return build(std::move(statements), weights);
}

std::optional<Index> StatementGraph::find(std::string_view id) const {
    auto it = std::lower_bound(statements_.begin(), statements_.end(), id,
                               [](const Statement& s, std::string_view key) { return s.id < key; });
    if (it == statements_.end() || it->id != id) return std::nullopt;
    return static_cast<Index>(it - statements_.begin());
}

Index StatementGraph::index_of(std::string_view id) const {
    if (auto i = find(id)) return *i;
    throw ModelError(ModelErrorKind::UnknownId, "unknown statement id " + std::string(id));
}

bool StatementGraph::attacks(Index from, Index to) const {
    const auto& a = attackers_[to];
    return std::binary_search(a.begin(), a.end(), from);
}

bool StatementGraph::supports(Index from, Index to) const {
    const auto& s = supporters_[to];
    return std::binary_search(s.begin(), s.end(), from);
}

StatementGraph StatementGraph::with_weights(const std::vector<double>& weights) const {
    if (weights.size() != size())
        throw ModelError(ModelErrorKind::MissingWeight, "weight vector size does not match graph");
    for (Index i = 0; i < size(); ++i) check_weight(id(i), weights[i]);
    StatementGraph g = *this;
    g.weights_ = weights;
    return g;
}

StatementGraph StatementGraph::with_weight(std::string_view sid, double weight) const {
    std::vector<double> w = weights_;
    w[index_of(sid)] = weight;
    return with_weights(w);
}

StatementGraph StatementGraph::with_statement(const Statement& s, double weight) const {
    std::vector<Statement> st = statements_;
    st.push_back(s);
    auto w = weight_map();
    if (w.count(s.id)) throw ModelError(ModelErrorKind::DuplicateId, "duplicate statement id " + s.id);
    w[s.id] = weight;
    return build(std::move(st), w);
}

StatementGraph StatementGraph::without(std::string_view sid) const {
    Index k = index_of(sid);
    std::vector<Statement> st;
    std::map<std::string, double> w;
    for (Index i = 0; i < size(); ++i) {
        if (i == k) continue;
        st.push_back(statements_[i]);
        w[id(i)] = weights_[i];
    }
    return build(std::move(st), w);
}

std::map<std::string, double> StatementGraph::weight_map() const { return by_id(*this, weights_); }

std::map<std::string, double> by_id(const StatementGraph& g, const Strengths& values) {
    std::map<std::string, double> out;
    for (Index i = 0; i < g.size(); ++i) out[g.id(i)] = values.at(i);
    return out;
}

bool exists_path(const StatementGraph& g, Index from, Index to, PathRelation via) {
    std::vector<char> seen(g.size(), 0);
    std::vector<Index> todo;
    auto push_successors = [&](Index u) {
        for (Index v : g.supported_by(u))
            if (!seen[v]) { seen[v] = 1; todo.push_back(v); }
        if (via == PathRelation::AttacksAndSupports)
            for (Index v : g.attacked_by(u))
                if (!seen[v]) { seen[v] = 1; todo.push_back(v); }
    };
    push_successors(from);
    while (!todo.empty()) {
        Index u = todo.back();
        todo.pop_back();
        if (u == to) return true;
        push_successors(u);
    }
    return false;
}

bool exists_path(const StatementGraph& g, std::string_view from, std::string_view to, PathRelation via) {
    return exists_path(g, g.index_of(from), g.index_of(to), via);
}

}  // namespace sgeval
