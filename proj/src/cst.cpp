#include "sgeval/cst.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace sgeval {

namespace {

// providers[i][k]: statements claiming the k-th premise literal of statement i.
std::vector<std::vector<std::vector<Index>>> premise_providers(const StatementGraph& g) {
    std::map<Literal, std::vector<Index>> by_claim;
    for (Index i = 0; i < g.size(); ++i) by_claim[g.statement(i).claim].push_back(i);
    std::vector<std::vector<std::vector<Index>>> out(g.size());
    for (Index i = 0; i < g.size(); ++i)
        for (const Literal& l : g.statement(i).premise.literals()) {
            auto it = by_claim.find(l);
            out[i].push_back(it == by_claim.end() ? std::vector<Index>{} : it->second);
        }
    return out;
}

class Enumerator {
public:
    Enumerator(const StatementGraph& g, const std::vector<std::vector<std::vector<Index>>>& providers,
               const CstOptions& opts)
        : g_(g), providers_(providers), opts_(opts), in_(g.size(), 0) {}

    std::vector<Cst> run(Index root) {
        members_ = {root};
        in_[root] = 1;
        found_.clear();
        generated_ = 0;
        dfs();
        in_[root] = 0;

        std::vector<std::vector<Index>> cands(found_.begin(), found_.end());
        std::stable_sort(cands.begin(), cands.end(),
                         [](const auto& a, const auto& b) { return a.size() < b.size(); });
        std::vector<std::vector<Index>> minimal;
        for (const auto& c : cands) {
            bool dominated = std::any_of(minimal.begin(), minimal.end(), [&](const auto& m) {
                return m.size() < c.size() && std::includes(c.begin(), c.end(), m.begin(), m.end());
            });
            if (!dominated) minimal.push_back(c);
        }
        std::vector<Cst> out;
        for (auto& m : minimal) out.push_back(Cst{root, std::move(m)});
        std::sort(out.begin(), out.end());
        return out;
    }

private:
    bool conflicts(Index s) const {
        for (Index m : members_)
            if (g_.attacks(s, m) || g_.attacks(m, s)) return true;
        return false;
    }

    void dfs() {
        // First member (ascending) with a premise literal nobody in the set claims.
        for (Index m : members_) {
            const auto& lits = providers_[m];
            for (const auto& provs : lits) {
                bool satisfied = std::any_of(provs.begin(), provs.end(), [&](Index p) { return in_[p]; });
                if (satisfied) continue;
                for (Index p : provs) {
                    if (conflicts(p)) continue;
                    members_.insert(std::lower_bound(members_.begin(), members_.end(), p), p);
                    in_[p] = 1;
                    dfs();
                    in_[p] = 0;
                    members_.erase(std::lower_bound(members_.begin(), members_.end(), p));
                }
                return;
            }
        }
        if (++generated_ > opts_.max_trees)
            throw ResourceLimitError("CST enumeration exceeded " + std::to_string(opts_.max_trees) + " trees");
        found_.insert(members_);
    }

    const StatementGraph& g_;
    const std::vector<std::vector<std::vector<Index>>>& providers_;
    const CstOptions& opts_;
    std::vector<char> in_;
    std::vector<Index> members_;
    std::set<std::vector<Index>> found_;
    std::size_t generated_ = 0;
};

}  // namespace

std::vector<Cst> enumerate_csts(const StatementGraph& g, Index root, const CstOptions& opts) {
    if (root >= g.size()) throw ModelError(ModelErrorKind::UnknownId, "statement index out of range");
    auto providers = premise_providers(g);
    return Enumerator(g, providers, opts).run(root);
}

std::vector<Cst> enumerate_csts(const StatementGraph& g, std::string_view root, const CstOptions& opts) {
    return enumerate_csts(g, g.index_of(root), opts);
}

std::vector<std::vector<Cst>> all_csts(const StatementGraph& g, const CstOptions& opts) {
    auto providers = premise_providers(g);
    Enumerator e(g, providers, opts);
    std::vector<std::vector<Cst>> out;
    out.reserve(g.size());
    for (Index i = 0; i < g.size(); ++i) out.push_back(e.run(i));
    return out;
}

bool is_closed_conflict_free(const StatementGraph& g, Index root, const std::vector<Index>& members) {
    if (!std::binary_search(members.begin(), members.end(), root)) return false;
    for (Index m : members)
        for (const Literal& l : g.statement(m).premise.literals()) {
            bool claimed = std::any_of(members.begin(), members.end(),
                                       [&](Index k) { return g.statement(k).claim == l; });
            if (!claimed) return false;
        }
    for (Index a : members)
        for (Index b : members)
            if (g.attacks(a, b)) return false;
    return true;
}

bool is_cst(const StatementGraph& g, const Cst& t) {
    if (t.root >= g.size() || !std::is_sorted(t.members.begin(), t.members.end())) return false;
    if (!is_closed_conflict_free(g, t.root, t.members)) return false;
    auto trees = enumerate_csts(g, t.root);
    return std::binary_search(trees.begin(), trees.end(), t);
}

bool root_attacks_tree(const StatementGraph& g, Index attacker_root, const Cst& target) {
    for (Index m : g.attacked_by(attacker_root))
        if (std::binary_search(target.members.begin(), target.members.end(), m)) return true;
    return false;
}

bool cst_attacks(const StatementGraph& g, const Cst& attacker, const Cst& target) {
    if (!is_cst(g, attacker) || !is_cst(g, target)) throw std::invalid_argument("cst_attacks expects two CSTs");
    return root_attacks_tree(g, attacker.root, target);
}

const char* to_string(Completeness c) {
    switch (c) {
        case Completeness::Complete: return "complete";
        case Completeness::PartiallyComplete: return "partially-complete";
        case Completeness::Incomplete: return "incomplete";
    }
    return "unknown";
}

namespace {

Completeness classify_with(const StatementGraph& g, Index i, const std::vector<char>& has_tree) {
    if (!has_tree[i]) return Completeness::Incomplete;
    for (Index j = 0; j < g.size(); ++j)
        if (!has_tree[j] && exists_path(g, j, i, PathRelation::SupportsOnly)) return Completeness::PartiallyComplete;
    return Completeness::Complete;
}

}  // namespace

std::vector<Completeness> classify_all(const StatementGraph& g, const CstOptions& opts) {
    auto trees = all_csts(g, opts);
    std::vector<char> has_tree(g.size());
    for (Index i = 0; i < g.size(); ++i) has_tree[i] = !trees[i].empty();
    std::vector<Completeness> out;
    for (Index i = 0; i < g.size(); ++i) out.push_back(classify_with(g, i, has_tree));
    return out;
}

Completeness classify_completeness(const StatementGraph& g, Index i, const CstOptions& opts) {
    if (i >= g.size()) throw ModelError(ModelErrorKind::UnknownId, "statement index out of range");
    return classify_all(g, opts)[i];
}

Completeness classify_completeness(const StatementGraph& g, std::string_view id, const CstOptions& opts) {
    return classify_completeness(g, g.index_of(id), opts);
}

std::vector<std::string> member_ids(const StatementGraph& g, const Cst& t) {
    std::vector<std::string> out;
    for (Index m : t.members) out.push_back(g.id(m));
    return out;
}

}  // namespace sgeval
