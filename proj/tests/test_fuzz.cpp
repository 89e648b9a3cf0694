#include <set>

#include "doctest.h"
#include "json.hpp"
#include "sgeval/fuzz.hpp"
#include "support.hpp"

using namespace sgeval;

TEST_CASE("trial seeds are distinct and stable") {
    std::set<std::uint64_t> seen;
    for (std::uint64_t k = 0; k < 10000; ++k) seen.insert(trial_seed(42, k));
    CHECK(seen.size() == 10000);
    CHECK(trial_seed(42, 3) == trial_seed(42, 3));
    CHECK(trial_seed(42, 3) != trial_seed(43, 3));
}

TEST_CASE("random graphs are reproducible and within bounds") {
    GeneratorConfig cfg;
    cfg.max_statements = 6;
    cfg.max_premise = 2;
    for (std::uint64_t k = 0; k < 300; ++k) {
        std::mt19937_64 a(k), b(k);
        const auto g = random_graph(cfg, a);
        CHECK(g == random_graph(cfg, b));
        CHECK(g.size() >= 1);
        CHECK(g.size() <= 6);
        for (const auto& s : g.statements()) CHECK(s.premise.size() <= 2);
    }
}

TEST_CASE("scenarios are deterministic in the seed") {
    for (const auto& p : all_properties()) {
        const Scenario a = random_scenario(p.id, GeneratorConfig{}, 1234);
        const Scenario b = random_scenario(p.id, GeneratorConfig{}, 1234);
        CHECK(a.before == b.before);
        CHECK(a.after.has_value() == b.after.has_value());
        if (a.after) CHECK(*a.after == *b.after);
        CHECK(a.focus == b.focus);
    }
}

TEST_CASE("one stability trial finds a one-statement T-norm witness") {
    FuzzOptions o;
    o.trials = 1;
    const auto r = fuzz(PropertyId::Stability, *find_semantics("tnorm-p"), GeneratorConfig{}, o);
    CHECK(r.violations == 1);
    REQUIRE(r.witness);
    CHECK(r.witness->scenario.before.size() == 1);
    CHECK(render_witness(*r.witness).find("clause:") != std::string::npos);
}

TEST_CASE("clean runs report no witness") {
    FuzzOptions o;
    o.trials = 2000;
    const auto r = fuzz(PropertyId::Stability, *find_semantics("dc-dfquad"), GeneratorConfig{}, o);
    CHECK(r.violations == 0);
    CHECK(r.effective == 2000);
    CHECK_FALSE(r.witness);
    const auto na = fuzz(PropertyId::Rewriting, *find_semantics("qem"), GeneratorConfig{}, o);
    CHECK_FALSE(na.applicable);
}

TEST_CASE("aggregation does not depend on the thread count") {
    FuzzOptions one, four;
    one.trials = four.trials = 600;
    one.threads = 1;
    four.threads = 4;
    for (PropertyId pid : {PropertyId::Stability, PropertyId::Neutrality, PropertyId::SupportReinforcement}) {
        const auto a = fuzz(pid, *find_semantics("tnorm-m"), GeneratorConfig{}, one);
        const auto b = fuzz(pid, *find_semantics("tnorm-m"), GeneratorConfig{}, four);
        CHECK(a.violations == b.violations);
        CHECK(a.effective == b.effective);
        CHECK(a.first_violation == b.first_violation);
        CHECK(a.witness.has_value() == b.witness.has_value());
        if (a.witness) CHECK(a.witness->scenario.before == b.witness->scenario.before);
    }
}

TEST_CASE("minimized witnesses still violate and are no larger") {
    FuzzOptions o;
    o.trials = 200;
    o.minimize = false;
    const auto r = fuzz(PropertyId::Provability, *find_semantics("dc-dfquad"), GeneratorConfig{}, o);
    REQUIRE(r.witness);
    const Scenario small = minimize_witness(PropertyId::Provability, *find_semantics("dc-dfquad"), r.witness->scenario);
    CHECK(small.before.size() <= r.witness->scenario.before.size());
    CHECK(check_property(PropertyId::Provability, *find_semantics("dc-dfquad"), small).status ==
          VerdictStatus::Violated);
}

TEST_CASE("matrix shape and rendering") {
    FuzzOptions o;
    o.trials = 50;
    const auto empty = satisfaction_matrix({}, {}, GeneratorConfig{}, o);
    CHECK(empty.cells.empty());
    const std::vector<Semantics> sems = {*find_semantics("dc-qem"), *find_semantics("qem")};
    const std::vector<PropertyId> pids = {PropertyId::Stability, PropertyId::BottomStrengthPremise};
    const auto m = satisfaction_matrix(sems, pids, GeneratorConfig{}, o);
    CHECK(m.at("qem", PropertyId::BottomStrengthPremise).status == CellStatus::NotApplicable);
    CHECK(m.at("dc-qem", PropertyId::BottomStrengthPremise).status == CellStatus::ViolatedByFixture);
    CHECK(m.at("dc-qem", PropertyId::Stability).status == CellStatus::NoCounterexampleFound);
    const auto j = nlohmann::json::parse(render_matrix_json(m));
    CHECK(j["rows"]["dc-qem"]["stability"]["status"] == "no-counterexample-found");
    CHECK(j["rows"]["qem"]["bottom-strength-premise"]["symbol"] == "−");
    CHECK(render_matrix_text(m).find("Stability") != std::string::npos);
}
