#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "sgeval/graph.hpp"
#include "sgeval/semantics.hpp"

namespace sgeval {

enum class PropertyId {
    Directionality,
    Rewriting,
    Provability,
    WeakProvability,
    Stability,
    Neutrality,
    AttackedPremise,
    SupportedPremise,
    WeakenedPremise,
    StrengthenedPremise,
    BottomStrengthPremise,
    TopStrengthPremises,
    Mirroring,
    AttackReinforcement,
    SupportReinforcement,
    AttackMonotonicity,
    SupportMonotonicity,
};

enum class ScenarioKind { SingleGraph, GraphPair };

struct PropertyInfo {
    PropertyId id;
    int number;          // numbering used in reports (1-13, 17-20)
    const char* key;     // CLI name, e.g. "weak-provability"
    const char* title;
    bool structured_only;
    ScenarioKind kind;
};

const std::vector<PropertyInfo>& all_properties();
const PropertyInfo& property_info(PropertyId id);
std::optional<PropertyId> find_property(std::string_view key);

class ScenarioError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Scenario {
    ScenarioKind kind = ScenarioKind::SingleGraph;
    StatementGraph before;
    std::optional<StatementGraph> after;
    // Restricts the property's main quantified statement(s); empty means all of them.
    // Rewriting takes (alpha1, alpha2, alpha3), Mirroring a pair.
    std::vector<std::string> focus;
    std::string transformation;  // e.g. "add a6", "a5: 0.5 -> 0.6"
};

Scenario single_scenario(StatementGraph g, std::vector<std::string> focus = {});
Scenario pair_scenario(StatementGraph before, StatementGraph after, std::vector<std::string> focus = {});

enum class VerdictStatus { Holds, Violated, NotApplicable };

const char* to_string(VerdictStatus s);

struct Witness {
    Scenario scenario;
    std::vector<std::string> bindings;  // ids bound to the quantified variables, in property order
    std::string clause;                 // the consequent that failed
    std::map<std::string, double> before;
    std::map<std::string, double> after;  // empty for single-graph properties
};

struct PropertyVerdict {
    VerdictStatus status = VerdictStatus::Holds;
    std::optional<Witness> witness;
    // Number of variable bindings whose antecedent held.
    std::size_t instances = 0;
};

constexpr double kDefaultTolerance = 1e-9;

// Throws ScenarioError when the scenario does not fit the property's shape
// (wrong kind, G' not G plus one statement, changed weights where none may change).
void validate_scenario(PropertyId pid, const Scenario& sc);

PropertyVerdict check_property(PropertyId pid, const Semantics& sem, const Scenario& sc,
                               double tol = kDefaultTolerance);

// Id of the single statement present in `after` but not in `before`; throws ScenarioError otherwise.
std::string added_statement(const StatementGraph& before, const StatementGraph& after);

}  // namespace sgeval
