#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "sgeval/graph.hpp"

namespace sgeval {

// A complete support tree: members sorted ascending, root among them.
struct Cst {
    Index root = 0;
    std::vector<Index> members;

    auto operator<=>(const Cst&) const = default;
    bool operator==(const Cst&) const = default;
};

struct CstOptions {
    // Upper bound on closed candidate sets generated per root before giving up.
    std::size_t max_trees = 1'000'000;
};

class ResourceLimitError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// All CSTs of one statement, sorted. Throws ResourceLimitError past opts.max_trees.
std::vector<Cst> enumerate_csts(const StatementGraph& g, Index root, const CstOptions& opts = {});
std::vector<Cst> enumerate_csts(const StatementGraph& g, std::string_view root, const CstOptions& opts = {});

// CSTs of every statement, indexed like the graph.
std::vector<std::vector<Cst>> all_csts(const StatementGraph& g, const CstOptions& opts = {});

// Closed under premise support, conflict-free and containing the root (minimality not checked).
bool is_closed_conflict_free(const StatementGraph& g, Index root, const std::vector<Index>& members);
bool is_cst(const StatementGraph& g, const Cst& t);

// True iff the attacker's root attacks some member of target. Throws std::invalid_argument on non-CSTs.
bool cst_attacks(const StatementGraph& g, const Cst& attacker, const Cst& target);
// Unchecked variant for callers holding enumerated trees.
bool root_attacks_tree(const StatementGraph& g, Index attacker_root, const Cst& target);

enum class Completeness { Complete, PartiallyComplete, Incomplete };

const char* to_string(Completeness c);  // "complete", "partially-complete", "incomplete"

Completeness classify_completeness(const StatementGraph& g, Index i, const CstOptions& opts = {});
Completeness classify_completeness(const StatementGraph& g, std::string_view id, const CstOptions& opts = {});
std::vector<Completeness> classify_all(const StatementGraph& g, const CstOptions& opts = {});

std::vector<std::string> member_ids(const StatementGraph& g, const Cst& t);

}  // namespace sgeval
