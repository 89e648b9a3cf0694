#include "sgeval/abstract.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <set>

namespace sgeval {

BipolarEvalGraph BipolarEvalGraph::build(std::vector<std::string> nodes, std::vector<double> base,
                                         const std::vector<Edge>& attacks, const std::vector<Edge>& supports) {
    const std::size_t n = nodes.size();
    if (base.size() != n) throw BipolarGraphError("base score count does not match node count");
    std::set<std::string> distinct(nodes.begin(), nodes.end());
    if (distinct.size() != n) throw BipolarGraphError("duplicate node id");
    for (Index i = 0; i < n; ++i)
        if (!(base[i] >= 0.0 && base[i] <= 1.0))
            throw BipolarGraphError("base score of " + nodes[i] + " outside [0,1]");

    BipolarEvalGraph bg;
    bg.nodes_ = std::move(nodes);
    bg.base_ = std::move(base);
    bg.attackers_.assign(n, {});
    bg.supporters_.assign(n, {});
    std::set<Edge> att(attacks.begin(), attacks.end());
    for (auto [from, to] : supports)
        if (att.count({from, to})) throw BipolarGraphError("edge is both attack and support");
    std::vector<std::vector<Index>> out(n);
    auto add = [&](const std::vector<Edge>& edges, std::vector<std::vector<Index>>& in) {
        for (auto [from, to] : edges) {
            if (from >= n || to >= n) throw BipolarGraphError("edge endpoint out of range");
            in[to].push_back(from);
            out[from].push_back(to);
        }
    };
    add(attacks, bg.attackers_);
    add(supports, bg.supporters_);
    auto by_id = [&](Index a, Index b) { return bg.nodes_[a] < bg.nodes_[b]; };
    for (Index i = 0; i < n; ++i) {
        for (auto* v : {&bg.attackers_[i], &bg.supporters_[i]}) {
            std::sort(v->begin(), v->end(), by_id);
            if (std::adjacent_find(v->begin(), v->end()) != v->end()) throw BipolarGraphError("duplicate edge");
        }
    }

    std::vector<int> indeg(n, 0);
    for (Index i = 0; i < n; ++i)
        for (Index j : out[i]) ++indeg[j];
    std::vector<Index> ready;
    for (Index i = 0; i < n; ++i)
        if (indeg[i] == 0) ready.push_back(i);
    std::make_heap(ready.begin(), ready.end(), std::greater<>());
    while (!ready.empty()) {
        std::pop_heap(ready.begin(), ready.end(), std::greater<>());
        Index u = ready.back();
        ready.pop_back();
        bg.topo_.push_back(u);
        for (Index v : out[u])
            if (--indeg[v] == 0) {
                ready.push_back(v);
                std::push_heap(ready.begin(), ready.end(), std::greater<>());
            }
    }
    if (bg.topo_.size() != n) throw BipolarGraphError("bipolar graph is cyclic");
    return bg;
}

Index BipolarEvalGraph::index_of(std::string_view id) const {
    auto it = std::find(nodes_.begin(), nodes_.end(), id);
    if (it == nodes_.end()) throw BipolarGraphError("unknown node " + std::string(id));
    return static_cast<Index>(it - nodes_.begin());
}

double dfquad_aggregate(const std::vector<double>& scores) {
    double acc = 0.0;
    for (double v : scores) acc = acc + v - acc * v;
    return acc;
}

double dfquad_combine(double base, double attack, double support) {
    double gap = std::abs(support - attack);
    if (attack >= support) return base - base * gap;
    return base + (1.0 - base) * gap;
}

double dfquad_score(double base, const std::vector<double>& attackers, const std::vector<double>& supporters) {
    return dfquad_combine(base, dfquad_aggregate(attackers), dfquad_aggregate(supporters));
}

double qem_h(double v) {
    double p = std::max(v, 0.0);
    return p * p / (1.0 + p * p);
}

double qem_combine(double base, const std::vector<double>& attackers, const std::vector<double>& supporters) {
    double energy = 0.0;
    for (double v : supporters) energy += v;
    for (double v : attackers) energy -= v;
    return base + (1.0 - base) * qem_h(energy) - base * qem_h(-energy);
}

AbstractSemantics dfquad() { return {"dfquad", dfquad_score}; }
AbstractSemantics qem() { return {"qem", qem_combine}; }

std::vector<double> eval_abstract(const BipolarEvalGraph& bg, const AbstractSemantics& sem) {
    std::vector<double> score(bg.size(), 0.0);
    std::vector<double> att, sup;
    for (Index i : bg.topological_order()) {
        att.clear();
        sup.clear();
        for (Index a : bg.attackers(i)) att.push_back(score[a]);
        for (Index s : bg.supporters(i)) sup.push_back(score[s]);
        score[i] = sem.combine(bg.base(i), att, sup);
    }
    return score;
}

BipolarEvalGraph to_bipolar(const StatementGraph& g) {
    std::vector<std::string> ids;
    for (Index i = 0; i < g.size(); ++i) ids.push_back(g.id(i));
    return BipolarEvalGraph::build(std::move(ids), g.weights(), g.attack_edges(), g.support_edges());
}

Strengths apply_abstract_to_sg(const StatementGraph& g, const AbstractSemantics& sem) {
    return eval_abstract(to_bipolar(g), sem);
}

}  // namespace sgeval
