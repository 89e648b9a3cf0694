#include "sgeval/fixtures.hpp"

#include <cmath>
#include <stdexcept>

#include "sgeval/parser.hpp"

namespace sgeval {

StatementGraph graph_from_text(const std::string& text) {
    ParseResult r = parse_sg(text);
    if (!r.errors.empty()) throw std::invalid_argument(format_errors(r.errors, "<fixture>"));
    if (r.cycle) throw std::invalid_argument(r.cycle->message);
    return *r.graph;
}

namespace {

using P = PropertyId;
using V = VerdictStatus;

// Running example, with the attacker weight of the earlier worked examples.
const char* kRunning07 =
    "a1: a & b => c @ 0.8\n"
    "a2: T => a @ 0.9\n"
    "a3: T => b @ 0.6\n"
    "a4: d => ~a @ 0.7\n";

// Same graph with the attacker weight used from the stability example on.
const char* kRunning08 =
    "a1: a & b => c @ 0.8\n"
    "a2: T => a @ 0.9\n"
    "a3: T => b @ 0.6\n"
    "a4: d => ~a @ 0.8\n";

const char* kWeakenedTp =
    "a1: a & b => c @ 0.5\n"
    "a2: T => a @ 0.5\n"
    "a3: T => b @ 0.5\n"
    "a4: d => e @ 0.5\n"
    "a5: e => ~b @ 0.5\n"
    "a6: T => d @ 0.5\n"
    "a7: f => ~d @ 0.9\n"
    "a8: T => f @ 1\n";

const char* kAttackReinforcement =
    "a1: b => a @ 0.5\n"
    "a2: T => b @ 0\n"
    "a3: c & d => b @ 0.5\n"
    "a4: c => ~b @ 1\n"
    "a5: T => c @ 0.5\n";

const char* kSupportReinforcement =
    "a1: b => a @ 0.5\n"
    "a2: c => b @ 1\n"
    "a3: c & d => ~b @ 0.5\n"
    "a4: T => c @ 0.5\n";

const char* kMirroring =
    "a1: a => b @ 0.5\n"
    "a2: T => a @ 0.5\n"
    "a3: ~a => c @ 0.5\n"
    "a4: d => ~a @ 0.5\n"
    "a5: T => d @ 0.5\n";

// An attacker that is already defeated gains a stronger tree through the added supporter.
const char* kSupportedPremise =
    "a2: x & z => y @ 1\n"
    "ap: x & w => ~z @ 1\n"
    "b1: T => x @ 0.5\n"
    "v1: T => v @ 1\n"
    "w1: T => w @ 1\n"
    "w2: T => ~w @ 1\n"
    "z1: T => z @ 1\n";

struct Builder {
    std::vector<Fixture> out;

    Fixture& single(std::string name, P pid, std::string sem, const std::string& text, V expected,
                    std::vector<std::string> focus = {}) {
        Fixture f{std::move(name), pid, std::move(sem), single_scenario(graph_from_text(text), std::move(focus)),
                  expected, {}, {}};
        out.push_back(std::move(f));
        return out.back();
    }

    Fixture& pair(std::string name, P pid, std::string sem, const std::string& before, const std::string& after,
                  V expected, std::string transformation, std::vector<std::string> focus = {}) {
        Scenario sc = pair_scenario(graph_from_text(before), graph_from_text(after), std::move(focus));
        sc.transformation = std::move(transformation);
        Fixture f{std::move(name), pid, std::move(sem), std::move(sc), expected, {}, {}};
        out.push_back(std::move(f));
        return out.back();
    }
};

Fixture& expect(Fixture& f, std::string id, double value, double tol = 5e-3, bool in_after = false) {
    f.strengths.push_back({std::move(id), in_after, value, tol});
    return f;
}

Fixture& expect_after(Fixture& f, std::string id, double value, double tol = 5e-3) {
    return expect(f, std::move(id), value, tol, true);
}

std::string replace_weight(std::string text, const std::string& id, const std::string& weight) {
    const std::string head = id + ":";
    std::size_t at = text.find(head);
    if (at == std::string::npos || (at != 0 && text[at - 1] != '\n')) throw std::logic_error("no statement " + id);
    std::size_t w = text.find('@', at);
    std::size_t eol = text.find('\n', w);
    return text.replace(w + 1, eol - w - 1, " " + weight);
}

std::string reweigh(std::string text, std::initializer_list<std::pair<const char*, const char*>> weights) {
    for (auto [id, w] : weights) text = replace_weight(std::move(text), id, w);
    return text;
}

std::vector<Fixture> build() {
    Builder b;
    const char* dc[] = {"dc-dfquad", "dc-qem"};
    const char* tn[] = {"tnorm-p", "tnorm-m"};
    const std::string one_rule = "a1: b => a @ 1\n";
    const std::string half_rule = "a1: b => a @ 0.5\n";

    // Stability
    for (const char* s : tn)
        expect(b.single(std::string(s) + "/stability/unsupported-rule", P::Stability, s, one_rule, V::Violated), "a1",
               0.0, 1e-9)
            .note = "isolated rule without a support tree is bottom-strength";
    for (const char* s : {"dc-dfquad", "dc-qem", "dfquad", "qem"})
        expect(b.single(std::string(s) + "/stability/unsupported-rule", P::Stability, s, one_rule, V::Holds), "a1",
               1.0, 1e-9);
    {
        Fixture& f = b.single("dc-dfquad/stability/running-example", P::Stability, "dc-dfquad", kRunning07, V::Holds);
        expect(f, "a1", 0.877, 2e-3);
        f.note = "premise literal scores 0.916 and 0.957";
        Fixture& t = b.single("tnorm-p/stability/running-example", P::Stability, "tnorm-p", kRunning07, V::Violated);
        expect(t, "a1", 0.432, 1e-9);
        expect(t, "a4", 0.0, 1e-9);
        expect(b.single("dc-dfquad/stability/unsupported-attacker", P::Stability, "dc-dfquad", kRunning08, V::Holds),
               "a4", 0.8, 1e-9);
    }

    // Rewriting
    const std::string rewrite =
        "a1: b & c => a @ 0.5\n"
        "a2: b => d @ 1\n"
        "a3: c & d => a @ 0.5\n";
    {
        Fixture& d = b.single("dc-dfquad/rewriting/chain", P::Rewriting, "dc-dfquad", rewrite, V::Violated,
                              {"a1", "a2", "a3"});
        expect(d, "a1", 0.5);
        expect(d, "a2", 1.0);
        expect(d, "a3", 0.71);
        Fixture& q = b.single("dc-qem/rewriting/chain", P::Rewriting, "dc-qem", rewrite, V::Violated,
                              {"a1", "a2", "a3"});
        expect(q, "a3", 0.6);
        for (const char* s : tn) b.single(std::string(s) + "/rewriting/chain", P::Rewriting, s, rewrite, V::Holds);
    }
    {
        const std::string ex = std::string(kRunning07) +
                               "a5: a => e @ 1\n"
                               "a6: e & b => c @ 0.8\n";
        Fixture& t = b.single("tnorm-p/rewriting/running-example", P::Rewriting, "tnorm-p", ex, V::Holds,
                              {"a1", "a5", "a6"});
        expect(t, "a1", 0.432, 1e-9);
        expect(t, "a6", 0.432, 1e-9);
        Fixture& d = b.single("dc-dfquad/rewriting/running-example", P::Rewriting, "dc-dfquad", ex, V::Violated,
                              {"a1", "a5", "a6"});
        expect(d, "a1", 0.877);
        expect(d, "a6", 0.957);
    }

    // Provability and weak provability
    for (const char* s : dc)
        expect(b.single(std::string(s) + "/provability/unsupported-rule", P::Provability, s, half_rule, V::Violated),
               "a1", 0.5);
    for (const char* s : tn)
        expect(b.single(std::string(s) + "/provability/unsupported-rule", P::Provability, s, half_rule, V::Holds), "a1",
               0.0, 1e-9);
    for (const char* s : {"tnorm-p", "tnorm-m", "dc-dfquad", "dc-qem"})
        expect(b.single(std::string(s) + "/weak-provability/zero-weight", P::WeakProvability, s, "a1: b => a @ 0\n",
                        V::Holds),
               "a1", 0.0, 1e-9);
    b.single("dfquad/provability/unsupported-rule", P::Provability, "dfquad", half_rule, V::NotApplicable);

    // Neutrality
    {
        const std::string before =
            "a1: a => b @ 1\n"
            "a2: T => a @ 1\n"
            "a3: T => c @ 1\n"
            "a4: d => ~c @ 1\n"
            "a5: T => d @ 1\n";
        const std::string after = before + "a6: c => ~a @ 0.5\n";
        Fixture& p = b.pair("tnorm-p/neutrality/defeated-attacker", P::Neutrality, "tnorm-p", before, after,
                            V::Violated, "add a6");
        expect(p, "a1", 1.0);
        expect_after(p, "a6", 0.0);
        expect_after(p, "a1", 0.5);
        Fixture& m = b.pair("tnorm-m/neutrality/defeated-attacker", P::Neutrality, "tnorm-m", before, after,
                            V::Violated, "add a6");
        expect(m, "a1", 1.0);
        expect_after(m, "a6", 0.0);
        expect_after(m, "a1", 0.0);
        for (const char* s : {"dc-dfquad", "dc-qem", "dfquad", "qem"})
            b.pair(std::string(s) + "/neutrality/defeated-attacker", P::Neutrality, s, before, after, V::Holds,
                   "add a6");
    }
    {
        Fixture& f = b.pair("dc-dfquad/neutrality/zero-weight-fact", P::Neutrality, "dc-dfquad", kRunning08,
                            std::string(kRunning08) + "a7: T => d @ 0\n", V::Holds, "add a7");
        expect_after(f, "a7", 0.0, 1e-9);
        expect_after(f, "a4", 0.8, 1e-9);
    }

    // Directionality
    for (const char* s : {"tnorm-p", "tnorm-m", "dc-dfquad", "dc-qem", "dfquad", "qem"})
        b.pair(std::string(s) + "/directionality/zero-weight-fact", P::Directionality, s, kRunning08,
               std::string(kRunning08) + "a7: T => d @ 0\n", V::Holds, "add a7");

    // Attacked and supported premise
    for (const char* s : {"tnorm-p", "tnorm-m", "dc-dfquad", "dc-qem", "dfquad", "qem"})
        b.pair(std::string(s) + "/attacked-premise/new-attacker", P::AttackedPremise, s, kRunning08,
               std::string(kRunning08) + "a9: T => ~b @ 0.5\n", V::Holds, "add a9");
    for (const char* s : tn) {
        Fixture& f = b.pair(std::string(s) + "/supported-premise/defeated-attacker-regains", P::SupportedPremise, s,
                            kSupportedPremise, std::string(kSupportedPremise) + "a1: v => x @ 1\n", V::Violated,
                            "add a1", {"a2"});
        f.note = "the new supporter also completes a second support tree of the defeated attacker ap";
    }
    for (const char* s : {"dc-dfquad", "dc-qem", "dfquad", "qem"})
        b.pair(std::string(s) + "/supported-premise/defeated-attacker-regains", P::SupportedPremise, s,
               kSupportedPremise, std::string(kSupportedPremise) + "a1: v => x @ 1\n", V::Holds, "add a1", {"a2"});

    // Weakened and strengthened premise
    {
        const std::string after = reweigh(kWeakenedTp, {{"a4", "0.4"}, {"a7", "0.5"}});
        Fixture& f = b.pair("tnorm-p/weakened-premise/attacker-gains", P::WeakenedPremise, "tnorm-p", kWeakenedTp,
                            after, V::Violated, "a4: 0.5 -> 0.4, a7: 0.9 -> 0.5", {"a1"});
        expect(f, "a1", 0.1093);
        expect(f, "a5", 0.0125);
        expect_after(f, "a1", 0.1125);
        expect_after(f, "a5", 0.05);

        const std::string before_m = reweigh(kWeakenedTp, {{"a7", "1"}});
        const std::string after_m =
            reweigh(kWeakenedTp, {{"a4", "0.4"}, {"a5", "0.4"}, {"a6", "0.4"}, {"a7", "0.1"}, {"a8", "0.1"}});
        Fixture& m = b.pair("tnorm-m/weakened-premise/attacker-gains", P::WeakenedPremise, "tnorm-m", before_m, after_m,
                            V::Violated, "a4-a6: 0.5 -> 0.4, a7 and a8: 1 -> 0.1", {"a1"});
        expect(m, "a1", 0.25);
        expect(m, "a5", 0.0);
        expect_after(m, "a1", 0.3);
        expect_after(m, "a5", 0.36);

        const std::string ones = reweigh(kWeakenedTp, {{"a1", "1"}, {"a2", "1"}, {"a3", "1"}, {"a4", "1"},
                                                        {"a5", "1"}, {"a6", "1"}, {"a7", "0.9"}});
        const std::string ones_after = reweigh(ones, {{"a4", "0.5"}, {"a7", "0.1"}});
        for (const char* s : tn) {
            Fixture& r = b.pair(std::string(s) + "/weakened-premise/attacker-released", P::WeakenedPremise, s, ones,
                                ones_after, V::Violated, "a4: 1 -> 0.5, a7: 0.9 -> 0.1", {"a1"});
            r.note = "the attacker a5 rises once its own attacker a7 weakens";
        }
        for (const char* s : {"dc-dfquad", "dc-qem", "dfquad", "qem"}) {
            b.pair(std::string(s) + "/weakened-premise/attacker-gains", P::WeakenedPremise, s, kWeakenedTp, after,
                   V::Holds, "a4: 0.5 -> 0.4, a7: 0.9 -> 0.5");
            b.pair(std::string(s) + "/weakened-premise/attacker-released", P::WeakenedPremise, s, ones, ones_after,
                   V::Holds, "a4: 1 -> 0.5, a7: 0.9 -> 0.1");
        }
    }
    for (const char* s : {"tnorm-p", "tnorm-m", "dc-dfquad", "dc-qem", "dfquad", "qem"})
        b.pair(std::string(s) + "/strengthened-premise/supporter-gains", P::StrengthenedPremise, s,
               kSupportReinforcement, reweigh(kSupportReinforcement, {{"a4", "0.6"}}), V::Holds, "a4: 0.5 -> 0.6");

    {
        // a3 rises and be stays defeated, but be's tree shares ph, so its unattacked strength rises too.
        const std::string before =
            "a1: x => y @ 1\n"
            "a3: z => x @ 1\n"
            "ph: T => z @ 0.6\n"
            "be: z & w => ~x @ 1\n"
            "om: T => w @ 1\n"
            "ka: T => ~w @ 1\n";
        const std::string after = reweigh(before, {{"ph", "0.9"}});
        const double tp[] = {0.24, 0.09};
        const double tm[] = {0.4, 0.1};
        for (const char* s : tn) {
            Fixture& f = b.pair(std::string(s) + "/strengthened-premise/rival-tree-revived", P::StrengthenedPremise,
                                s, before, after, V::Violated, "ph: 0.6 -> 0.9", {"a1"});
            const double* v = std::string(s) == "tnorm-p" ? tp : tm;
            expect(f, "a3", 0.6);
            expect_after(f, "a3", 0.9);
            expect(f, "a1", v[0]);
            expect_after(f, "a1", v[1]);
        }
    }

    // Bottom-strength premise
    const std::string bottom =
        "a1: b => a @ 0.5\n"
        "a2: T => ~b @ 1\n";
    expect(b.single("dc-qem/bottom-strength-premise/fact-attacker", P::BottomStrengthPremise, "dc-qem", bottom,
                    V::Violated),
           "a1", 0.25);
    for (const char* s : {"tnorm-p", "tnorm-m", "dc-dfquad"})
        expect(b.single(std::string(s) + "/bottom-strength-premise/fact-attacker", P::BottomStrengthPremise, s, bottom,
                        V::Holds),
               "a1", 0.0, 1e-9);
    expect(b.single("dc-dfquad/bottom-strength-premise/contradicted-literal", P::BottomStrengthPremise, "dc-dfquad",
                    "a8: e & f => ~b @ 0.5\n"
                    "a9: T => ~f @ 1\n",
                    V::Holds),
           "a8", 0.0, 1e-9);

    // Top-strength premises
    const std::string top_rule =
        "a1: a => b @ 0.8\n"
        "a2: T => a @ 1\n";
    for (const char* s : tn) {
        Fixture& f = b.single(std::string(s) + "/top-strength-premises/fact-supporter", P::TopStrengthPremises, s,
                              top_rule, V::Violated);
        expect(f, "a2", 1.0, 1e-9);
        expect(f, "a1", 0.8, 1e-9);
    }
    expect(b.single("dc-dfquad/top-strength-premises/fact-supporter", P::TopStrengthPremises, "dc-dfquad", top_rule,
                    V::Holds),
           "a1", 1.0, 1e-9);
    const std::string top_half =
        "a1: b => a @ 0.5\n"
        "a2: T => b @ 1\n";
    expect(b.single("dc-qem/top-strength-premises/fact-supporter", P::TopStrengthPremises, "dc-qem", top_half,
                    V::Violated),
           "a1", 0.75);
    expect(b.single("dc-dfquad/top-strength-premises/half-weight-rule", P::TopStrengthPremises, "dc-dfquad", top_half,
                    V::Holds),
           "a1", 1.0, 1e-9);

    // Mirroring
    {
        Fixture& p = b.single("tnorm-p/mirroring/opposed-rules", P::Mirroring, "tnorm-p", kMirroring, V::Violated,
                              {"a1", "a3"});
        expect(p, "a1", 0.1875);
        expect(p, "a3", 0.0625);
        Fixture& m = b.single("tnorm-m/mirroring/opposed-rules", P::Mirroring, "tnorm-m", kMirroring, V::Violated,
                              {"a1", "a3"});
        expect(m, "a1", 0.25);
        expect(m, "a3", 0.25);
        for (const char* s : dc)
            b.single(std::string(s) + "/mirroring/opposed-rules", P::Mirroring, s, kMirroring, V::Holds, {"a1", "a3"});
        const std::string bare =
            "a1: a => b @ 0.5\n"
            "a2: ~a => c @ 0.5\n";
        for (const char* s : tn) {
            Fixture& f = b.single(std::string(s) + "/mirroring/unsupported-pair", P::Mirroring, s, bare, V::Violated);
            expect(f, "a1", 0.0, 1e-9);
            expect(f, "a2", 0.0, 1e-9);
        }
        for (const char* s : dc) {
            Fixture& f = b.single(std::string(s) + "/mirroring/unsupported-pair", P::Mirroring, s, bare, V::Holds);
            expect(f, "a1", 0.5, 1e-9);
            expect(f, "a2", 0.5, 1e-9);
        }
        const std::string ex = std::string(kRunning08) +
                               "a5: a => e @ 0.5\n"
                               "a10: ~a => ~e @ 0.5\n";
        Fixture& d = b.single("dc-dfquad/mirroring/running-example", P::Mirroring, "dc-dfquad", ex, V::Holds,
                              {"a10", "a5"});
        expect(d, "a5", 0.55);
        expect(d, "a10", 0.45);
    }

    // Attack and support reinforcement
    {
        const std::string ar2 = reweigh(kAttackReinforcement, {{"a5", "0.6"}});
        const std::string sr2 = reweigh(kSupportReinforcement, {{"a4", "0.6"}});
        const double ar[2][2] = {{0.3, 0.31}, {0.41, 0.42}};
        const double sr[2][2] = {{0.7, 0.69}, {0.59, 0.58}};
        for (int k = 0; k < 2; ++k) {
            Fixture& a = b.pair(std::string(dc[k]) + "/attack-reinforcement/attacking-tree", P::AttackReinforcement,
                                dc[k], kAttackReinforcement, ar2, V::Violated, "a5: 0.5 -> 0.6", {"a1"});
            expect(a, "a1", ar[k][0]);
            expect_after(a, "a1", ar[k][1]);
            Fixture& s = b.pair(std::string(dc[k]) + "/support-reinforcement/supporting-tree", P::SupportReinforcement,
                                dc[k], kSupportReinforcement, sr2, V::Violated, "a4: 0.5 -> 0.6", {"a1"});
            expect(s, "a1", sr[k][0]);
            expect_after(s, "a1", sr[k][1]);
        }
        for (const char* s : tn) {
            b.pair(std::string(s) + "/attack-reinforcement/attacking-tree", P::AttackReinforcement, s,
                   kAttackReinforcement, ar2, V::Holds, "a5: 0.5 -> 0.6");
            b.pair(std::string(s) + "/support-reinforcement/supporting-tree", P::SupportReinforcement, s,
                   kSupportReinforcement, sr2, V::Holds, "a4: 0.5 -> 0.6");
        }
    }

    // Attack and support monotonicity
    {
        const std::string am_before = kAttackReinforcement;
        const std::string am_x = am_before.substr(0, am_before.find("a5:"));
        const std::string sm_before = kSupportReinforcement;
        const std::string sm_x = sm_before.substr(0, sm_before.find("a4:"));
        const double am[2][2] = {{0.25, 0.3}, {0.4, 0.41}};
        const double sm[2][2] = {{0.75, 0.7}, {0.6, 0.59}};
        for (int k = 0; k < 2; ++k) {
            Fixture& a = b.pair(std::string(dc[k]) + "/attack-monotonicity/attacking-tree", P::AttackMonotonicity,
                                dc[k], am_x, am_before, V::Violated, "add a5", {"a1"});
            expect(a, "a1", am[k][0]);
            expect_after(a, "a1", am[k][1]);
            Fixture& s = b.pair(std::string(dc[k]) + "/support-monotonicity/supporting-tree", P::SupportMonotonicity,
                                dc[k], sm_x, sm_before, V::Violated, "add a4", {"a1"});
            expect(s, "a1", sm[k][0]);
            expect_after(s, "a1", sm[k][1]);
        }
        for (const char* s : tn) {
            b.pair(std::string(s) + "/attack-monotonicity/attacking-tree", P::AttackMonotonicity, s, am_x, am_before,
                   V::Holds, "add a5");
            b.pair(std::string(s) + "/support-monotonicity/supporting-tree", P::SupportMonotonicity, s, sm_x,
                   sm_before, V::Holds, "add a4");
        }
    }
    return std::move(b.out);
}

}  // namespace

const std::vector<Fixture>& fixture_suite() {
    static const std::vector<Fixture> suite = build();
    return suite;
}

FixtureOutcome run_fixture(const Fixture& f, double tol) {
    FixtureOutcome out;
    out.fixture = &f;
    auto sem = find_semantics(f.semantics);
    if (!sem) throw std::invalid_argument("fixture " + f.name + ": unknown semantics " + f.semantics);
    out.verdict = check_property(f.pid, *sem, f.scenario, tol);
    out.verdict_ok = out.verdict.status == f.expected;
    if (f.strengths.empty()) return out;
    const Strengths before = sem->eval(f.scenario.before);
    Strengths after;
    if (f.scenario.after) after = sem->eval(*f.scenario.after);
    for (const ExpectedStrength& e : f.strengths) {
        const StatementGraph& g = e.in_after ? *f.scenario.after : f.scenario.before;
        const double got = (e.in_after ? after : before)[g.index_of(e.id)];
        if (std::abs(got - e.value) > e.tol) {
            out.mismatches.push_back((e.in_after ? "sigma'(" : "sigma(") + e.id + ") = " + std::to_string(got) +
                                     ", expected " + std::to_string(e.value) + " +- " + std::to_string(e.tol));
        }
    }
    return out;
}

}  // namespace sgeval
