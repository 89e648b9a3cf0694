#include "sgeval/fuzz.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <numeric>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "sgeval/cst.hpp"
#include "sgeval/fixtures.hpp"
#include "sgeval/parser.hpp"

namespace sgeval {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t k) { return splitmix64(splitmix64(seed) + k); }

namespace {

constexpr int kPlantAttempts = 64;

std::string atom_name(std::size_t k) {
    if (k < 26) return std::string(1, static_cast<char>('a' + k));
    return "p" + std::to_string(k);
}

double draw_weight(const GeneratorConfig& cfg, std::mt19937_64& rng) {
    std::bernoulli_distribution grid(cfg.grid_share);
    if (grid(rng)) return std::uniform_int_distribution<int>(0, 10)(rng) / 10.0;
    return std::uniform_real_distribution<double>(0.0, 1.0)(rng);
}

bool coin(std::mt19937_64& rng, double p) { return std::bernoulli_distribution(p)(rng); }

template <class T>
const T& pick(const std::vector<T>& v, std::mt19937_64& rng) {
    return v[std::uniform_int_distribution<std::size_t>(0, v.size() - 1)(rng)];
}

Literal random_literal(const GeneratorConfig& cfg, std::mt19937_64& rng, const std::string& atom) {
    return make_literal(atom, coin(rng, cfg.negation_share));
}

std::vector<std::string> pool(const GeneratorConfig& cfg) {
    std::vector<std::string> atoms;
    for (std::size_t k = 0; k < std::max<std::size_t>(cfg.atom_pool, 1); ++k) atoms.push_back(atom_name(k));
    return atoms;
}

// Premise of 1..max literals over distinct atoms drawn from `atoms`, skipping `avoid`.
std::vector<Literal> random_premise(const GeneratorConfig& cfg, std::mt19937_64& rng, std::vector<std::string> atoms,
                                    const std::string& avoid) {
    std::erase(atoms, avoid);
    std::shuffle(atoms.begin(), atoms.end(), rng);
    const std::size_t cap = std::min(std::max<std::size_t>(cfg.max_premise, 1), atoms.size());
    const std::size_t k = std::uniform_int_distribution<std::size_t>(1, cap)(rng);
    std::vector<Literal> out;
    for (std::size_t i = 0; i < k; ++i) out.push_back(random_literal(cfg, rng, atoms[i]));
    return out;
}

std::string fresh_id(const StatementGraph& g) {
    for (std::size_t k = g.size() + 1;; ++k) {
        std::string id = "a" + std::to_string(k);
        if (!g.find(id)) return id;
    }
}

std::optional<StatementGraph> try_add(const StatementGraph& g, const Statement& s, double w) {
    try {
        return g.with_statement(s, w);
    } catch (const ModelError&) {
        return std::nullopt;
    }
}

std::vector<std::pair<Index, Literal>> premise_literals(const StatementGraph& g) {
    std::vector<std::pair<Index, Literal>> out;
    for (Index i = 0; i < g.size(); ++i)
        for (const Literal& l : g.statement(i).premise.literals()) out.emplace_back(i, l);
    return out;
}

std::vector<Index> rules(const StatementGraph& g) {
    std::vector<Index> out;
    for (Index i = 0; i < g.size(); ++i)
        if (!g.statement(i).premise.is_top()) out.push_back(i);
    return out;
}

enum class ClaimBias { Any, Support, Attack, Either, Unsupported };

// Adds one random statement; its claim is steered onto an existing premise literal.
std::optional<StatementGraph> add_random(const StatementGraph& g, const GeneratorConfig& cfg, std::mt19937_64& rng,
                                         ClaimBias bias, std::optional<double> weight, std::string* added_id) {
    const auto atoms = pool(cfg);
    const auto targets = premise_literals(g);
    std::vector<std::pair<Index, Literal>> open;
    for (const auto& [i, l] : targets) {
        const auto& sup = g.supporters(i);
        if (std::none_of(sup.begin(), sup.end(), [&](Index j) { return g.statement(j).claim == l; }))
            open.emplace_back(i, l);
    }
    for (int attempt = 0; attempt < kPlantAttempts; ++attempt) {
        Literal claim = random_literal(cfg, rng, pick(atoms, rng));
        if (bias == ClaimBias::Unsupported && !open.empty() && coin(rng, 0.7)) {
            claim = pick(open, rng).second;
            Statement s = make_statement(fresh_id(g), {top_literal()}, claim);
            if (auto out = try_add(g, s, weight ? *weight : draw_weight(cfg, rng))) {
                if (added_id) *added_id = s.id;
                return out;
            }
            continue;
        }
        bool steer = bias != ClaimBias::Any && !targets.empty() && (bias != ClaimBias::Either || coin(rng, 0.8));
        if (bias == ClaimBias::Any && !targets.empty() && coin(rng, 0.6)) steer = true;
        if (steer) {
            claim = pick(targets, rng).second;
            bool neg = bias == ClaimBias::Attack || ((bias == ClaimBias::Either || bias == ClaimBias::Any) && coin(rng, 0.5));
            if (neg) claim = negate(claim);
        }
        std::vector<Literal> prem = {top_literal()};
        if (!coin(rng, 0.5)) prem = random_premise(cfg, rng, atoms, claim.atom);
        Statement s = make_statement(fresh_id(g), prem, claim);
        auto out = try_add(g, s, weight ? *weight : draw_weight(cfg, rng));
        if (out) {
            if (added_id) *added_id = s.id;
            return out;
        }
    }
    return std::nullopt;
}

Scenario pair_of(StatementGraph g, StatementGraph g2, std::string transformation) {
    Scenario sc = pair_scenario(std::move(g), std::move(g2));
    sc.transformation = std::move(transformation);
    return sc;
}

[[noreturn]] void give_up(PropertyId pid) {
    throw ScenarioError(std::string("could not instantiate ") + property_info(pid).key + " within the bounds");
}

Scenario plant_rewriting(const GeneratorConfig& cfg, std::mt19937_64& rng) {
    const auto atoms = pool(cfg);
    GeneratorConfig small = cfg;
    small.max_statements = cfg.max_statements > 3 ? cfg.max_statements - 3 : 1;
    for (int attempt = 0; attempt < kPlantAttempts; ++attempt) {
        StatementGraph g = random_graph(small, rng);
        std::string fresh = "x0";
        for (int k = 0; std::any_of(atoms.begin(), atoms.end(), [&](auto& a) { return a == fresh; }); ++k)
            fresh = "x" + std::to_string(k + 1);
        const Literal xp = make_literal(fresh, coin(rng, cfg.negation_share));

        GeneratorConfig inner = cfg;
        inner.max_premise = std::max<std::size_t>(cfg.max_premise, 2) - 1;
        std::vector<Literal> p2 = random_premise(inner, rng, atoms, "");
        std::vector<std::string> free;
        for (const auto& a : atoms)
            if (std::none_of(p2.begin(), p2.end(), [&](const Literal& l) { return l.atom == a; })) free.push_back(a);
        std::vector<Literal> rest;
        if (!free.empty() && coin(rng, 0.6)) {
            rest.push_back(random_literal(cfg, rng, pick(free, rng)));
            std::erase(free, rest[0].atom);
        }
        if (free.empty()) continue;
        const Literal x = random_literal(cfg, rng, pick(free, rng));

        std::vector<Literal> p1 = p2;
        p1.insert(p1.end(), rest.begin(), rest.end());
        std::vector<Literal> p3 = rest;
        p3.push_back(xp);
        const double w = draw_weight(cfg, rng);

        std::optional<StatementGraph> cur = g;
        Statement s1 = make_statement(fresh_id(*cur), p1, x);
        cur = try_add(*cur, s1, w);
        if (!cur) continue;
        Statement s2 = make_statement(fresh_id(*cur), p2, xp);
        cur = try_add(*cur, s2, 1.0);
        if (!cur) continue;
        Statement s3 = make_statement(fresh_id(*cur), p3, x);
        cur = try_add(*cur, s3, w);
        if (!cur) continue;
        for (const Literal& l : p1) {
            if (!coin(rng, 0.6)) continue;
            Statement f = make_statement(fresh_id(*cur), {top_literal()}, l);
            if (auto next = try_add(*cur, f, coin(rng, 0.5) ? 1.0 : draw_weight(cfg, rng))) cur = std::move(next);
        }
        return single_scenario(std::move(*cur), {s1.id, s2.id, s3.id});
    }
    give_up(PropertyId::Rewriting);
}

// Adds a statement over atoms outside the pool, so it has no attackers or supporters.
Scenario plant_stability(const GeneratorConfig& cfg, std::mt19937_64& rng) {
    GeneratorConfig small = cfg;
    small.max_statements = cfg.max_statements > 1 ? cfg.max_statements - 1 : 1;
    const StatementGraph g = random_graph(small, rng);
    std::vector<Literal> premise{make_literal("u0")};
    if (cfg.max_premise > 1 && coin(rng, 0.3)) premise.push_back(make_literal("u1", coin(rng, 0.5)));
    const Statement s = make_statement(fresh_id(g), std::move(premise), make_literal("u2"));
    double w = draw_weight(cfg, rng);
    if (w == 0.0) w = 1.0;
    return single_scenario(g.with_statement(s, w));
}

Scenario plant_mirroring(const GeneratorConfig& cfg, std::mt19937_64& rng) {
    const auto atoms = pool(cfg);
    GeneratorConfig small = cfg;
    small.max_statements = cfg.max_statements > 2 ? cfg.max_statements - 2 : 1;
    for (int attempt = 0; attempt < kPlantAttempts; ++attempt) {
        StatementGraph g = random_graph(small, rng);
        const Literal x = random_literal(cfg, rng, pick(atoms, rng));
        std::vector<std::string> others = atoms;
        std::erase(others, x.atom);
        if (others.empty()) give_up(PropertyId::Mirroring);
        std::optional<StatementGraph> cur = g;
        Statement s1 = make_statement(fresh_id(*cur), {x}, random_literal(cfg, rng, pick(others, rng)));
        cur = try_add(*cur, s1, 0.5);
        if (!cur) continue;
        Statement s2 = make_statement(fresh_id(*cur), {negate(x)}, random_literal(cfg, rng, pick(others, rng)));
        cur = try_add(*cur, s2, 0.5);
        if (!cur) continue;
        for (const Literal& l : {x, negate(x)}) {
            if (!coin(rng, 0.5)) continue;
            Statement f = make_statement(fresh_id(*cur), {top_literal()}, l);
            if (auto next = try_add(*cur, f, draw_weight(cfg, rng))) cur = std::move(next);
        }
        return single_scenario(std::move(*cur), {s1.id, s2.id});
    }
    give_up(PropertyId::Mirroring);
}

// Adds facts around the premise of one rule: an attacking fact (bottom) or supporting facts (top).
Scenario plant_extreme(PropertyId pid, const GeneratorConfig& cfg, std::mt19937_64& rng) {
    for (int attempt = 0; attempt < kPlantAttempts; ++attempt) {
        StatementGraph g = random_graph(cfg, rng);
        auto candidates = rules(g);
        if (candidates.empty()) continue;
        const Index focus = pick(candidates, rng);
        const auto lits = g.statement(focus).premise.literals();
        std::vector<Literal> planted;
        if (pid == PropertyId::BottomStrengthPremise)
            planted.push_back(negate(pick(lits, rng)));
        else
            planted = lits;
        StatementGraph cur = g;
        for (const Literal& l : planted) {
            Statement f = make_statement(fresh_id(cur), {top_literal()}, l);
            if (auto next = try_add(cur, f, 1.0)) cur = std::move(*next);
        }
        return single_scenario(std::move(cur));
    }
    give_up(pid);
}

}  // namespace

StatementGraph random_graph(const GeneratorConfig& cfg, std::mt19937_64& rng) {
    const auto atoms = pool(cfg);
    std::vector<std::size_t> layer(atoms.size());
    std::iota(layer.begin(), layer.end(), 0);
    std::shuffle(layer.begin(), layer.end(), rng);

    const std::size_t n = std::uniform_int_distribution<std::size_t>(1, std::max<std::size_t>(cfg.max_statements, 1))(rng);
    std::vector<std::pair<Statement, double>> out;
    auto duplicate = [&](const Statement& s) {
        return std::any_of(out.begin(), out.end(), [&](const auto& p) {
            return p.first.premise == s.premise && p.first.claim == s.claim;
        });
    };
    for (std::size_t attempt = 0; out.size() < n && attempt < 20 * n; ++attempt) {
        const std::size_t c = std::uniform_int_distribution<std::size_t>(0, atoms.size() - 1)(rng);
        std::vector<std::string> below;
        for (std::size_t k = 0; k < atoms.size(); ++k)
            if (layer[k] < layer[c]) below.push_back(atoms[k]);
        std::vector<Literal> prem = {top_literal()};
        if (!below.empty() && !coin(rng, cfg.fact_share)) prem = random_premise(cfg, rng, below, "");
        Statement s = make_statement("a" + std::to_string(out.size() + 1), prem, random_literal(cfg, rng, atoms[c]));
        if (duplicate(s)) continue;
        out.emplace_back(std::move(s), draw_weight(cfg, rng));
    }
    return StatementGraph::build(std::move(out));
}

Scenario random_scenario(PropertyId pid, const GeneratorConfig& cfg, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    switch (pid) {
        case PropertyId::Rewriting: return plant_rewriting(cfg, rng);
        case PropertyId::Mirroring: return plant_mirroring(cfg, rng);
        case PropertyId::BottomStrengthPremise:
        case PropertyId::TopStrengthPremises: return plant_extreme(pid, cfg, rng);
        case PropertyId::Provability: return single_scenario(random_graph(cfg, rng));
        case PropertyId::Stability: return plant_stability(cfg, rng);
        case PropertyId::WeakProvability: {
            StatementGraph g = random_graph(cfg, rng);
            for (Index i : rules(g))
                if (coin(rng, 0.5)) g = g.with_weight(g.id(i), 0.0);
            return single_scenario(std::move(g));
        }
        case PropertyId::WeakenedPremise:
        case PropertyId::StrengthenedPremise: {
            StatementGraph g = random_graph(cfg, rng);
            StatementGraph g2 = g;
            std::string what;
            const int changes = coin(rng, 0.7) ? 1 : 2;
            for (int k = 0; k < changes; ++k) {
                const Index i = std::uniform_int_distribution<Index>(0, g.size() - 1)(rng);
                const double w = draw_weight(cfg, rng);
                what += (what.empty() ? "" : ", ") + g.id(i) + ": " + format_weight(g2.weight(i)) + " -> " +
                        format_weight(w);
                g2 = g2.with_weight(g.id(i), w);
            }
            return pair_of(std::move(g), std::move(g2), what);
        }
        case PropertyId::AttackReinforcement:
        case PropertyId::SupportReinforcement: {
            StatementGraph g = random_graph(cfg, rng);
            Index i = std::uniform_int_distribution<Index>(0, g.size() - 1)(rng);
            if (pid == PropertyId::AttackReinforcement && coin(rng, 0.7)) {
                const auto trees = all_csts(g);
                std::vector<Index> members;
                for (Index j = 0; j < g.size(); ++j)
                    for (const Cst& t : trees[j]) {
                        if (g.attacked_by(j).empty()) continue;
                        for (Index m : t.members)
                            if (m != j) members.push_back(m);
                    }
                if (!members.empty()) i = pick(members, rng);
            }
            const double lo = g.weight(i);
            double w = std::uniform_real_distribution<double>(lo, 1.0)(rng);
            if (coin(rng, cfg.grid_share)) {
                const int first = static_cast<int>(std::ceil(lo * 10.0 - 1e-9));
                w = std::uniform_int_distribution<int>(first, 10)(rng) / 10.0;
                if (w < lo) w = lo;
            }
            StatementGraph g2 = g.with_weight(g.id(i), w);
            return pair_of(std::move(g), std::move(g2), g.id(i) + ": " + format_weight(lo) + " -> " + format_weight(w));
        }
        case PropertyId::Directionality:
        case PropertyId::Neutrality:
        case PropertyId::AttackedPremise:
        case PropertyId::SupportedPremise:
        case PropertyId::AttackMonotonicity:
        case PropertyId::SupportMonotonicity: {
            ClaimBias bias = ClaimBias::Any;
            if (pid == PropertyId::AttackedPremise) bias = ClaimBias::Attack;
            if (pid == PropertyId::SupportedPremise) bias = ClaimBias::Support;
            if (pid == PropertyId::Neutrality) bias = ClaimBias::Either;
            if (pid == PropertyId::AttackMonotonicity || pid == PropertyId::SupportMonotonicity)
                bias = ClaimBias::Unsupported;
            for (int attempt = 0; attempt < kPlantAttempts; ++attempt) {
                StatementGraph g = random_graph(cfg, rng);
                std::optional<double> weight;
                if (pid == PropertyId::Neutrality && coin(rng, 0.5)) weight = 0.0;
                std::string id;
                auto g2 = add_random(g, cfg, rng, bias, weight, &id);
                if (!g2) continue;
                return pair_of(std::move(g), std::move(*g2), "add " + id);
            }
            give_up(pid);
        }
    }
    give_up(pid);
}

namespace {

bool violates(PropertyId pid, const Semantics& sem, const Scenario& sc, double tol) {
    try {
        return check_property(pid, sem, sc, tol).status == VerdictStatus::Violated;
    } catch (const ScenarioError&) {
        return false;
    } catch (const ResourceLimitError&) {
        return false;
    }
}

std::optional<Scenario> drop_statement(PropertyId pid, const Scenario& sc, const std::string& id) {
    const bool pinned = pid == PropertyId::Rewriting || pid == PropertyId::Mirroring;
    const bool in_focus = std::find(sc.focus.begin(), sc.focus.end(), id) != sc.focus.end();
    if (in_focus && (pinned || sc.focus.size() == 1)) return std::nullopt;
    Scenario out = sc;
    out.before = sc.before.without(id);
    if (sc.after && sc.after->find(id)) out.after = sc.after->without(id);
    std::erase(out.focus, id);
    return out;
}

}  // namespace

Scenario minimize_witness(PropertyId pid, const Semantics& sem, Scenario sc, double tol) {
    bool shrunk = true;
    while (shrunk) {
        shrunk = false;
        for (Index i = 0; i < sc.before.size(); ++i) {
            auto smaller = drop_statement(pid, sc, sc.before.id(i));
            if (smaller && violates(pid, sem, *smaller, tol)) {
                sc = std::move(*smaller);
                shrunk = true;
                break;
            }
        }
    }
    return sc;
}

FuzzReport fuzz(PropertyId pid, const Semantics& sem, const GeneratorConfig& cfg, const FuzzOptions& opts) {
    const auto start = std::chrono::steady_clock::now();
    FuzzReport rep;
    rep.pid = pid;
    rep.semantics = sem.name;
    if (property_info(pid).structured_only && !sem.structured) {
        rep.applicable = false;
        return rep;
    }
    rep.trials = opts.trials;

    enum : std::uint8_t { kSkipped, kVacuous, kHolds, kViolated };
    std::vector<std::uint8_t> outcome(opts.trials, kSkipped);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t k = next++; k < opts.trials; k = next++) {
            try {
                Scenario sc = random_scenario(pid, cfg, trial_seed(opts.seed, k));
                PropertyVerdict v = check_property(pid, sem, sc, opts.tol);
                if (v.status == VerdictStatus::Violated) outcome[k] = kViolated;
                else outcome[k] = v.instances > 0 ? kHolds : kVacuous;
            } catch (const ScenarioError&) {
                outcome[k] = kSkipped;
            } catch (const ResourceLimitError&) {
                outcome[k] = kSkipped;
            }
        }
    };
    unsigned threads = opts.threads ? opts.threads : std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(opts.trials, 1)));
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();

    for (std::size_t k = 0; k < opts.trials; ++k) {
        switch (outcome[k]) {
            case kSkipped: ++rep.skipped; break;
            case kVacuous: break;
            case kHolds: ++rep.effective; break;
            case kViolated:
                ++rep.effective;
                ++rep.violations;
                if (!rep.first_violation) rep.first_violation = k;
                break;
        }
    }
    if (rep.first_violation) {
        Scenario sc = random_scenario(pid, cfg, trial_seed(opts.seed, *rep.first_violation));
        if (opts.minimize) sc = minimize_witness(pid, sem, std::move(sc), opts.tol);
        rep.witness = check_property(pid, sem, sc, opts.tol).witness;
    }
    rep.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return rep;
}

const char* to_string(CellStatus s) {
    switch (s) {
        case CellStatus::NotApplicable: return "not-applicable";
        case CellStatus::ViolatedByFixture: return "violated-by-fixture";
        case CellStatus::ViolatedByFuzz: return "violated-by-fuzz";
        case CellStatus::NoCounterexampleFound: return "no-counterexample-found";
    }
    return "?";
}

const char* cell_symbol(CellStatus s) {
    switch (s) {
        case CellStatus::NotApplicable: return "−";
        case CellStatus::ViolatedByFixture:
        case CellStatus::ViolatedByFuzz: return "×";
        case CellStatus::NoCounterexampleFound: return "✓";
    }
    return "?";
}

const MatrixCell& MatrixReport::at(std::string_view name, PropertyId pid) const {
    auto s = std::find(semantics.begin(), semantics.end(), name);
    auto p = std::find(properties.begin(), properties.end(), pid);
    if (s == semantics.end() || p == properties.end()) throw std::out_of_range("no such matrix cell");
    return cells[s - semantics.begin()][p - properties.begin()];
}

MatrixReport satisfaction_matrix(const std::vector<Semantics>& semantics, const std::vector<PropertyId>& pids,
                                 const GeneratorConfig& cfg, const FuzzOptions& opts) {
    const auto start = std::chrono::steady_clock::now();
    MatrixReport m;
    m.properties = pids;
    for (const Semantics& sem : semantics) {
        m.semantics.push_back(sem.name);
        m.labels.push_back(sem.label);
        std::vector<MatrixCell> row;
        for (PropertyId pid : pids) {
            MatrixCell cell;
            if (property_info(pid).structured_only && !sem.structured) {
                row.push_back(cell);
                continue;
            }
            for (const Fixture& f : fixture_suite()) {
                if (f.pid != pid || f.semantics != sem.name) continue;
                PropertyVerdict v = check_property(pid, sem, f.scenario, opts.tol);
                if (v.status == VerdictStatus::Violated) {
                    cell.status = CellStatus::ViolatedByFixture;
                    cell.evidence = "fixture " + f.name;
                    cell.witness = v.witness;
                    break;
                }
            }
            if (cell.status != CellStatus::ViolatedByFixture) {
                FuzzReport rep = fuzz(pid, sem, cfg, opts);
                cell.trials = rep.trials;
                cell.effective = rep.effective;
                cell.violations = rep.violations;
                if (rep.violations > 0) {
                    cell.status = CellStatus::ViolatedByFuzz;
                    cell.evidence = "fuzz seed " + std::to_string(opts.seed) + " trial " +
                                    std::to_string(*rep.first_violation);
                    cell.witness = rep.witness;
                } else {
                    cell.status = CellStatus::NoCounterexampleFound;
                    cell.evidence = "fuzz seed " + std::to_string(opts.seed) + ", " + std::to_string(rep.trials) +
                                    " trials, " + std::to_string(rep.effective) + " effective";
                }
            }
            row.push_back(std::move(cell));
        }
        m.cells.push_back(std::move(row));
    }
    m.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return m;
}

std::string render_matrix_text(const MatrixReport& m) {
    std::ostringstream out;
    std::size_t width = 8;
    for (PropertyId pid : m.properties) width = std::max(width, std::string(property_info(pid).title).size() + 4);
    auto pad = [](std::string s, std::size_t w) {
        if (s.size() < w) s.append(w - s.size(), ' ');
        return s;
    };
    out << pad("property", width);
    for (const std::string& l : m.labels) out << pad(l, 7);
    out << '\n';
    for (std::size_t p = 0; p < m.properties.size(); ++p) {
        const PropertyInfo& info = property_info(m.properties[p]);
        out << pad(std::to_string(info.number) + ". " + info.title, width);
        for (std::size_t s = 0; s < m.semantics.size(); ++s) {
            const MatrixCell& c = m.cells[s][p];
            std::string mark = cell_symbol(c.status);
            if (c.status == CellStatus::ViolatedByFuzz) mark += "z";
            // Symbols are multi-byte; pad by visible width.
            out << mark << std::string(7 - (c.status == CellStatus::ViolatedByFuzz ? 2 : 1), ' ');
        }
        out << '\n';
    }
    return out.str();
}

std::string render_matrix_json(const MatrixReport& m) {
    nlohmann::ordered_json j;
    j["semantics"] = m.semantics;
    std::vector<std::string> keys;
    for (PropertyId pid : m.properties) keys.push_back(property_info(pid).key);
    j["properties"] = keys;
    nlohmann::ordered_json rows = nlohmann::ordered_json::object();
    for (std::size_t s = 0; s < m.semantics.size(); ++s) {
        nlohmann::ordered_json row = nlohmann::ordered_json::object();
        for (std::size_t p = 0; p < m.properties.size(); ++p) {
            const MatrixCell& c = m.cells[s][p];
            nlohmann::ordered_json cell;
            cell["status"] = to_string(c.status);
            cell["symbol"] = cell_symbol(c.status);
            cell["evidence"] = c.evidence;
            cell["trials"] = c.trials;
            cell["effective"] = c.effective;
            cell["violations"] = c.violations;
            row[keys[p]] = std::move(cell);
        }
        rows[m.semantics[s]] = std::move(row);
    }
    j["rows"] = std::move(rows);
    return j.dump(2) + "\n";
}

std::string render_witness(const Witness& w) {
    std::ostringstream out;
    out << "clause: " << w.clause << '\n';
    out << "bindings:";
    for (const auto& b : w.bindings) out << ' ' << b;
    out << '\n';
    out << "graph:\n" << serialize_sg(w.scenario.before);
    out << "strengths:";
    for (const auto& [id, v] : w.before) out << ' ' << id << '=' << format_weight(v);
    out << '\n';
    if (w.scenario.after) {
        if (!w.scenario.transformation.empty()) out << "change: " << w.scenario.transformation << '\n';
        out << "second graph:\n" << serialize_sg(*w.scenario.after);
        out << "strengths:";
        for (const auto& [id, v] : w.after) out << ' ' << id << '=' << format_weight(v);
        out << '\n';
    }
    return out.str();
}

}  // namespace sgeval
