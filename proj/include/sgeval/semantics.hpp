#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sgeval/graph.hpp"

namespace sgeval {

// A named gradual semantics over whole statement graphs.
struct Semantics {
    std::string name;   // CLI name, e.g. "dc-dfquad"
    std::string label;  // short column label for reports
    bool structured = true;
    std::function<Strengths(const StatementGraph&)> eval;
};

// tnorm-p, tnorm-m, dc-dfquad, dc-qem, dfquad, qem (report column order).
const std::vector<Semantics>& all_semantics();
std::optional<Semantics> find_semantics(std::string_view name);
std::vector<std::string> semantics_names();

}  // namespace sgeval
