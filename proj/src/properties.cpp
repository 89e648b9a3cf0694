#include "sgeval/properties.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "sgeval/cst.hpp"

namespace sgeval {

namespace {

using P = PropertyId;
using K = ScenarioKind;

const std::vector<PropertyInfo> kProperties = {
    {P::Directionality, 1, "directionality", "Directionality", false, K::GraphPair},
    {P::Rewriting, 2, "rewriting", "Rewriting", true, K::SingleGraph},
    {P::Provability, 3, "provability", "Provability", true, K::SingleGraph},
    {P::WeakProvability, 4, "weak-provability", "Weak Provability", true, K::SingleGraph},
    {P::Stability, 5, "stability", "Stability", false, K::SingleGraph},
    {P::Neutrality, 6, "neutrality", "Neutrality", false, K::GraphPair},
    {P::AttackedPremise, 7, "attacked-premise", "Attacked Premise", false, K::GraphPair},
    {P::SupportedPremise, 8, "supported-premise", "Supported Premise", false, K::GraphPair},
    {P::WeakenedPremise, 9, "weakened-premise", "Weakened Premise", false, K::GraphPair},
    {P::StrengthenedPremise, 10, "strengthened-premise", "Strengthened Premise", false, K::GraphPair},
    {P::BottomStrengthPremise, 11, "bottom-strength-premise", "Bottom-Strength Premise", true, K::SingleGraph},
    {P::TopStrengthPremises, 12, "top-strength-premises", "Top-Strength Premises", true, K::SingleGraph},
    {P::Mirroring, 13, "mirroring", "Mirroring", true, K::SingleGraph},
    {P::AttackReinforcement, 17, "attack-reinforcement", "Attack Reinforcement", true, K::GraphPair},
    {P::SupportReinforcement, 18, "support-reinforcement", "Support Reinforcement", true, K::GraphPair},
    {P::AttackMonotonicity, 19, "attack-monotonicity", "Attack Monotonicity", true, K::GraphPair},
    {P::SupportMonotonicity, 20, "support-monotonicity", "Support Monotonicity", true, K::GraphPair},
};

bool near(double a, double b, double tol) { return std::abs(a - b) <= tol; }

std::set<std::string> ids_of(const StatementGraph& g, const std::vector<Index>& idx) {
    std::set<std::string> out;
    for (Index i : idx) out.insert(g.id(i));
    return out;
}

std::set<std::string> neighbour_ids(const StatementGraph& g, Index i) {
    std::set<std::string> out = ids_of(g, g.attackers(i));
    for (Index j : g.supporters(i)) out.insert(g.id(j));
    return out;
}

bool in_focus(const Scenario& sc, const std::string& id) {
    return sc.focus.empty() || std::find(sc.focus.begin(), sc.focus.end(), id) != sc.focus.end();
}

bool mentions_atom(const Statement& s, const std::string& atom) {
    if (s.claim.atom == atom) return true;
    for (const Literal& l : s.premise.literals())
        if (l.atom == atom) return true;
    return false;
}

bool tree_contains(const Cst& t, Index i) { return std::binary_search(t.members.begin(), t.members.end(), i); }

// Checker state shared by the per-property routines.
struct Run {
    PropertyId pid;
    const Semantics& sem;
    const Scenario& sc;
    double tol;
    Strengths s;
    Strengths s2;
    PropertyVerdict verdict;

    const StatementGraph& g() const { return sc.before; }
    const StatementGraph& g2() const { return *sc.after; }

    // Records a violation once; later failures keep the first witness.
    void fail(std::vector<std::string> bindings, std::string clause) {
        if (verdict.status == VerdictStatus::Violated) return;
        verdict.status = VerdictStatus::Violated;
        Witness w;
        w.scenario = sc;
        w.bindings = std::move(bindings);
        w.clause = std::move(clause);
        w.before = by_id(g(), s);
        if (sc.after) w.after = by_id(g2(), s2);
        verdict.witness = std::move(w);
    }

    double after_of(const std::string& id) const { return s2[g2().index_of(id)]; }
};

std::string sig(const std::string& id) { return "sigma(" + id + ")"; }
std::string sig2(const std::string& id) { return "sigma'(" + id + ")"; }

void check_directionality(Run& r) {
    const std::string a1 = added_statement(r.g(), r.g2());
    const Index n1 = r.g2().index_of(a1);
    for (Index i = 0; i < r.g().size(); ++i) {
        const std::string& a2 = r.g().id(i);
        if (!in_focus(r.sc, a2)) continue;
        if (exists_path(r.g2(), n1, r.g2().index_of(a2), PathRelation::AttacksAndSupports)) continue;
        ++r.verdict.instances;
        if (!near(r.after_of(a2), r.s[i], r.tol)) r.fail({a1, a2}, sig2(a2) + " = " + sig(a2));
    }
}

void check_rewriting(Run& r) {
    const StatementGraph& g = r.g();
    const std::size_t n = g.size();
    auto fresh = [&](const std::string& atom, Index a2, Index a3) {
        for (Index k = 0; k < n; ++k)
            if (k != a2 && k != a3 && mentions_atom(g.statement(k), atom)) return false;
        return true;
    };
    for (Index a2 = 0; a2 < n; ++a2) {
        const Statement& s2 = g.statement(a2);
        if (s2.premise.is_top()) continue;
        const Literal& xp = s2.claim;
        for (Index a3 = 0; a3 < n; ++a3) {
            if (a3 == a2) continue;
            const Statement& s3 = g.statement(a3);
            if (!s3.premise.contains(xp)) continue;
            std::vector<Literal> rest;
            for (const Literal& l : s3.premise.literals())
                if (l != xp) rest.push_back(l);
            if (rest.size() > 1) continue;
            if (!rest.empty() && s2.premise.contains(rest[0])) continue;
            std::vector<Literal> p1 = s2.premise.literals();
            p1.insert(p1.end(), rest.begin(), rest.end());
            std::sort(p1.begin(), p1.end());
            if (!fresh(xp.atom, a2, a3)) continue;
            for (Index a1 = 0; a1 < n; ++a1) {
                if (a1 == a2 || a1 == a3) continue;
                const Statement& s1 = g.statement(a1);
                if (s1.claim != s3.claim || s1.premise.literals() != p1) continue;
                if (!r.sc.focus.empty() && r.sc.focus != std::vector<std::string>{s1.id, s2.id, s3.id}) continue;
                if (!near(g.weight(a1), g.weight(a3), r.tol) || !near(g.weight(a2), 1.0, r.tol)) continue;
                ++r.verdict.instances;
                if (!near(r.s[a1], r.s[a3], r.tol)) r.fail({s1.id, s2.id, s3.id}, sig(s1.id) + " = " + sig(s3.id));
            }
        }
    }
}

// Some premise literal of i has no supporter claiming it.
bool has_unsupported_literal(const StatementGraph& g, Index i) {
    for (const Literal& x : g.statement(i).premise.literals()) {
        bool supported = false;
        for (Index j : g.supporters(i))
            if (g.statement(j).claim == x) supported = true;
        if (!supported) return true;
    }
    return false;
}

void check_provability(Run& r, bool weak) {
    for (Index i = 0; i < r.g().size(); ++i) {
        const std::string& a = r.g().id(i);
        if (!in_focus(r.sc, a)) continue;
        if (weak && r.g().weight(i) != 0.0) continue;
        if (!has_unsupported_literal(r.g(), i)) continue;
        ++r.verdict.instances;
        if (!near(r.s[i], 0.0, r.tol)) r.fail({a}, sig(a) + " = 0");
    }
}

void check_stability(Run& r) {
    for (Index i = 0; i < r.g().size(); ++i) {
        const std::string& a = r.g().id(i);
        if (!in_focus(r.sc, a)) continue;
        if (!r.g().attackers(i).empty() || !r.g().supporters(i).empty()) continue;
        ++r.verdict.instances;
        if (!near(r.s[i], r.g().weight(i), r.tol)) r.fail({a}, sig(a) + " = tau(" + a + ")");
    }
}

enum class Added { Neutral, Attacker, Supporter };

void check_added(Run& r, Added mode) {
    const StatementGraph& g = r.g();
    const StatementGraph& g2 = r.g2();
    const std::string a1 = added_statement(g, g2);
    if (mode == Added::Neutral && !near(r.after_of(a1), 0.0, r.tol)) return;
    for (Index i = 0; i < g.size(); ++i) {
        const std::string& a2 = g.id(i);
        if (!in_focus(r.sc, a2)) continue;
        const Index i2 = g2.index_of(a2);
        std::set<std::string> att = ids_of(g, g.attackers(i)), sup = ids_of(g, g.supporters(i));
        std::set<std::string> att2 = ids_of(g2, g2.attackers(i2)), sup2 = ids_of(g2, g2.supporters(i2));
        switch (mode) {
            case Added::Neutral: {
                std::set<std::string> both = neighbour_ids(g, i);
                both.insert(a1);
                if (neighbour_ids(g2, i2) != both) continue;
                break;
            }
            case Added::Attacker:
                att.insert(a1);
                if (att2 != att || sup2 != sup) continue;
                break;
            case Added::Supporter:
                sup.insert(a1);
                if (att2 != att || sup2 != sup) continue;
                break;
        }
        bool unchanged = near(g2.weight(i2), g.weight(i), r.tol);
        for (const std::string& a3 : neighbour_ids(g, i))
            if (!near(r.after_of(a3), r.s[g.index_of(a3)], r.tol)) unchanged = false;
        if (!unchanged) continue;
        ++r.verdict.instances;
        const double before = r.s[i], after = r.s2[i2];
        switch (mode) {
            case Added::Neutral:
                if (!near(after, before, r.tol)) r.fail({a1, a2}, sig2(a2) + " = " + sig(a2));
                break;
            case Added::Attacker:
                if (after > before + r.tol) r.fail({a1, a2}, sig2(a2) + " <= " + sig(a2));
                break;
            case Added::Supporter:
                if (after < before - r.tol) r.fail({a1, a2}, sig2(a2) + " >= " + sig(a2));
                break;
        }
    }
}

void check_changed_neighbour(Run& r, bool weakened) {
    const StatementGraph& g = r.g();
    const StatementGraph& g2 = r.g2();
    for (Index i = 0; i < g.size(); ++i) {
        const std::string& a1 = g.id(i);
        if (!in_focus(r.sc, a1)) continue;
        auto found = g2.find(a1);
        if (!found || g2.statement(*found) != g.statement(i)) continue;
        const Index i2 = *found;
        if (ids_of(g2, g2.attackers(i2)) != ids_of(g, g.attackers(i))) continue;
        if (ids_of(g2, g2.supporters(i2)) != ids_of(g, g.supporters(i))) continue;
        if (!near(g2.weight(i2), g.weight(i), r.tol)) continue;
        std::vector<std::string> changed;
        bool increased = false;
        for (const std::string& a : neighbour_ids(g, i)) {
            double d = r.after_of(a) - r.s[g.index_of(a)];
            if (std::abs(d) > r.tol) {
                changed.push_back(a);
                increased = d > r.tol;
            }
        }
        if (changed.size() != 1 || !increased) continue;
        const Index a3 = g.index_of(changed[0]);
        const auto& side = weakened ? g.attackers(i) : g.supporters(i);
        if (std::find(side.begin(), side.end(), a3) == side.end()) continue;
        ++r.verdict.instances;
        const double before = r.s[i], after = r.s2[i2];
        if (weakened && after > before + r.tol) r.fail({a1, changed[0]}, sig2(a1) + " <= " + sig(a1));
        if (!weakened && after < before - r.tol) r.fail({a1, changed[0]}, sig2(a1) + " >= " + sig(a1));
    }
}

void check_bottom_strength(Run& r) {
    const StatementGraph& g = r.g();
    for (Index i = 0; i < g.size(); ++i) {
        const std::string& a1 = g.id(i);
        if (!in_focus(r.sc, a1)) continue;
        std::optional<std::string> defeater;
        for (const Literal& x : g.statement(i).premise.literals()) {
            std::optional<std::string> top_attacker;
            for (Index j : g.attackers(i))
                if (g.statement(j).claim == negate(x) && r.s[j] >= 1.0 - r.tol) top_attacker = g.id(j);
            bool live_support = false;
            for (Index j : g.supporters(i))
                if (g.statement(j).claim == x && r.s[j] > r.tol) live_support = true;
            if (top_attacker && !live_support) {
                defeater = top_attacker;
                break;
            }
        }
        if (!defeater) continue;
        ++r.verdict.instances;
        if (!near(r.s[i], 0.0, r.tol)) r.fail({a1, *defeater}, sig(a1) + " = 0");
    }
}

void check_top_strength(Run& r) {
    const StatementGraph& g = r.g();
    for (Index i = 0; i < g.size(); ++i) {
        const std::string& a1 = g.id(i);
        if (!in_focus(r.sc, a1) || g.statement(i).premise.is_top()) continue;
        bool all_top = true;
        for (const Literal& x : g.statement(i).premise.literals()) {
            bool live_attack = false, top_support = false;
            for (Index j : g.attackers(i))
                if (g.statement(j).claim == negate(x) && r.s[j] > r.tol) live_attack = true;
            for (Index j : g.supporters(i))
                if (g.statement(j).claim == x && r.s[j] >= 1.0 - r.tol) top_support = true;
            if (live_attack || !top_support) all_top = false;
        }
        if (!all_top) continue;
        ++r.verdict.instances;
        if (!near(r.s[i], 1.0, r.tol)) r.fail({a1}, sig(a1) + " = 1");
    }
}

void check_mirroring(Run& r) {
    const StatementGraph& g = r.g();
    for (Index i = 0; i < g.size(); ++i)
        for (Index j = i + 1; j < g.size(); ++j) {
            const Premise& p = g.statement(i).premise;
            const Premise& q = g.statement(j).premise;
            if (p.size() != 1 || q.size() != 1 || p.literals()[0] != negate(q.literals()[0])) continue;
            if (!near(g.weight(i), 0.5, r.tol) || !near(g.weight(j), 0.5, r.tol)) continue;
            if (!r.sc.focus.empty() && !(in_focus(r.sc, g.id(i)) && in_focus(r.sc, g.id(j)))) continue;
            ++r.verdict.instances;
            if (!near(r.s[i], 1.0 - r.s[j], r.tol))
                r.fail({g.id(i), g.id(j)}, sig(g.id(i)) + " = 1 - " + sig(g.id(j)));
        }
}

// True iff a tree rooted at one of `candidates` contains `member` and attacks a tree of `target`.
// Candidates include `member` itself: its own trees contain it.
bool attacked_through(const StatementGraph& g, const std::vector<std::vector<Cst>>& trees, Index member,
                      Index target, const std::vector<Index>& candidates) {
    for (Index other : candidates) {
        bool holds_member = false;
        for (const Cst& t : trees[other])
            if (tree_contains(t, member)) holds_member = true;
        if (!holds_member) continue;
        for (const Cst& t : trees[target])
            if (root_attacks_tree(g, other, t)) return true;
    }
    return false;
}

void check_reinforcement(Run& r, bool attack) {
    const StatementGraph& g = r.g();
    const StatementGraph& g2 = r.g2();
    std::vector<Index> raised;
    for (Index i = 0; i < g.size(); ++i)
        if (g2.weight(i) != g.weight(i)) raised.push_back(i);
    std::vector<Index> candidates = raised;
    if (raised.empty())
        for (Index i = 0; i < g.size(); ++i) candidates.push_back(i);

    const auto trees = all_csts(g);
    for (Index a2 = 0; a2 < g.size(); ++a2) {
        if (!in_focus(r.sc, g.id(a2))) continue;
        for (Index a1 : candidates) {
            bool contains = false;
            for (const Cst& t : trees[a2])
                if (tree_contains(t, a1)) contains = true;
            std::vector<Index> others;
            for (Index k = 0; k < g.size(); ++k)
                if (k != a2) others.push_back(k);
            if (attack ? contains : !contains) continue;
            const bool attacked = attacked_through(g, trees, a1, a2, others);
            if (attack ? !attacked : attacked) continue;
            ++r.verdict.instances;
            const double before = r.s[a2], after = r.s2[a2];
            if (attack && after > before + r.tol) r.fail({g.id(a1), g.id(a2)}, sig2(g.id(a2)) + " <= " + sig(g.id(a2)));
            if (!attack && after < before - r.tol)
                r.fail({g.id(a1), g.id(a2)}, sig2(g.id(a2)) + " >= " + sig(g.id(a2)));
        }
    }
}

void check_monotonicity(Run& r, bool attack) {
    const StatementGraph& g = r.g();
    const StatementGraph& g2 = r.g2();
    const std::string a1 = added_statement(g, g2);
    const Index n1 = g2.index_of(a1);
    const auto trees = all_csts(g2);
    for (Index i = 0; i < g.size(); ++i) {
        const std::string& a5 = g.id(i);
        if (!in_focus(r.sc, a5)) continue;
        const Index i2 = g2.index_of(a5);
        bool contains = false;
        for (const Cst& t : trees[i2])
            if (tree_contains(t, n1)) contains = true;
        if (attack ? contains : !contains) continue;
        std::vector<Index> others;
        for (Index k = 0; k < g2.size(); ++k)
            if (k != i2) others.push_back(k);
        const bool attacked = attacked_through(g2, trees, n1, i2, others);
        if (attack ? !attacked : attacked) continue;
        ++r.verdict.instances;
        const double before = r.s[i], after = r.s2[i2];
        if (attack && after > before + r.tol) r.fail({a1, a5}, sig2(a5) + " <= " + sig(a5));
        if (!attack && after < before - r.tol) r.fail({a1, a5}, sig2(a5) + " >= " + sig(a5));
    }
}

void require_same_weights_on_old(const StatementGraph& g, const StatementGraph& g2) {
    for (Index i = 0; i < g.size(); ++i)
        if (g2.weight(g2.index_of(g.id(i))) != g.weight(i))
            throw ScenarioError("weight of " + g.id(i) + " differs between the two graphs");
}

}  // namespace

const std::vector<PropertyInfo>& all_properties() { return kProperties; }

const PropertyInfo& property_info(PropertyId id) {
    for (const PropertyInfo& p : kProperties)
        if (p.id == id) return p;
    throw std::invalid_argument("unknown property id");
}

std::optional<PropertyId> find_property(std::string_view key) {
    for (const PropertyInfo& p : kProperties)
        if (key == p.key) return p.id;
    return std::nullopt;
}

const char* to_string(VerdictStatus s) {
    switch (s) {
        case VerdictStatus::Holds: return "holds";
        case VerdictStatus::Violated: return "violated";
        case VerdictStatus::NotApplicable: return "not-applicable";
    }
    return "?";
}

Scenario single_scenario(StatementGraph g, std::vector<std::string> focus) {
    Scenario sc;
    sc.kind = ScenarioKind::SingleGraph;
    sc.before = std::move(g);
    sc.focus = std::move(focus);
    return sc;
}

Scenario pair_scenario(StatementGraph before, StatementGraph after, std::vector<std::string> focus) {
    Scenario sc;
    sc.kind = ScenarioKind::GraphPair;
    sc.before = std::move(before);
    sc.after = std::move(after);
    sc.focus = std::move(focus);
    return sc;
}

std::string added_statement(const StatementGraph& before, const StatementGraph& after) {
    if (after.size() != before.size() + 1)
        throw ScenarioError("second graph must add exactly one statement");
    for (Index i = 0; i < before.size(); ++i) {
        auto j = after.find(before.id(i));
        if (!j || after.statement(*j) != before.statement(i))
            throw ScenarioError("statement " + before.id(i) + " missing or changed in the second graph");
    }
    for (Index j = 0; j < after.size(); ++j)
        if (!before.find(after.id(j))) return after.id(j);
    throw ScenarioError("second graph adds no statement");
}

void validate_scenario(PropertyId pid, const Scenario& sc) {
    const PropertyInfo& info = property_info(pid);
    if (sc.kind != info.kind)
        throw ScenarioError(std::string(info.key) + " needs a " +
                            (info.kind == ScenarioKind::GraphPair ? "graph pair" : "single graph"));
    if (sc.kind == ScenarioKind::GraphPair && !sc.after) throw ScenarioError("graph pair without second graph");
    if (sc.kind == ScenarioKind::SingleGraph && sc.after) throw ScenarioError("single-graph scenario with a second graph");
    if (pid == PropertyId::Rewriting && !sc.focus.empty() && sc.focus.size() != 3)
        throw ScenarioError("rewriting focus binds exactly three statements");
    if (pid == PropertyId::Mirroring && !sc.focus.empty() && sc.focus.size() != 2)
        throw ScenarioError("mirroring focus binds exactly two statements");
    for (const std::string& id : sc.focus)
        if (!sc.before.find(id)) throw ScenarioError("focus id " + id + " not in the graph");

    switch (pid) {
        case PropertyId::Directionality:
        case PropertyId::AttackMonotonicity:
        case PropertyId::SupportMonotonicity:
            added_statement(sc.before, *sc.after);
            require_same_weights_on_old(sc.before, *sc.after);
            break;
        case PropertyId::Neutrality:
        case PropertyId::AttackedPremise:
        case PropertyId::SupportedPremise:
            added_statement(sc.before, *sc.after);
            break;
        case PropertyId::AttackReinforcement:
        case PropertyId::SupportReinforcement: {
            const StatementGraph& g = sc.before;
            const StatementGraph& g2 = *sc.after;
            if (g.statements() != g2.statements()) throw ScenarioError("reinforcement keeps the statements fixed");
            int changed = 0;
            for (Index i = 0; i < g.size(); ++i) {
                if (g2.weight(i) == g.weight(i)) continue;
                if (g2.weight(i) < g.weight(i)) throw ScenarioError("weight of " + g.id(i) + " decreases");
                ++changed;
            }
            if (changed > 1) throw ScenarioError("reinforcement raises at most one weight");
            break;
        }
        default:
            break;
    }
}

PropertyVerdict check_property(PropertyId pid, const Semantics& sem, const Scenario& sc, double tol) {
    if (property_info(pid).structured_only && !sem.structured) {
        PropertyVerdict v;
        v.status = VerdictStatus::NotApplicable;
        return v;
    }
    validate_scenario(pid, sc);
    Run r{pid, sem, sc, tol, sem.eval(sc.before), {}, {}};
    if (sc.after) r.s2 = sem.eval(*sc.after);

    switch (pid) {
        case P::Directionality: check_directionality(r); break;
        case P::Rewriting: check_rewriting(r); break;
        case P::Provability: check_provability(r, false); break;
        case P::WeakProvability: check_provability(r, true); break;
        case P::Stability: check_stability(r); break;
        case P::Neutrality: check_added(r, Added::Neutral); break;
        case P::AttackedPremise: check_added(r, Added::Attacker); break;
        case P::SupportedPremise: check_added(r, Added::Supporter); break;
        case P::WeakenedPremise: check_changed_neighbour(r, true); break;
        case P::StrengthenedPremise: check_changed_neighbour(r, false); break;
        case P::BottomStrengthPremise: check_bottom_strength(r); break;
        case P::TopStrengthPremises: check_top_strength(r); break;
        case P::Mirroring: check_mirroring(r); break;
        case P::AttackReinforcement: check_reinforcement(r, true); break;
        case P::SupportReinforcement: check_reinforcement(r, false); break;
        case P::AttackMonotonicity: check_monotonicity(r, true); break;
        case P::SupportMonotonicity: check_monotonicity(r, false); break;
    }
    return r.verdict;
}

}  // namespace sgeval
