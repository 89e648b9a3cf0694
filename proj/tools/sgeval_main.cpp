// sgeval: evaluate, classify and probe statement graphs from the command line.
//
// Exit codes:
//   0   success
//   1   parse error in the input
//   2   structural error (cycle, duplicate statement, bad weight, malformed scenario)
//   3   unknown property or semantics name
//   4   a checked property was violated, or a fixture disagreed with its expectation
//   64  usage error

#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "sgeval/cst.hpp"
#include "sgeval/fixtures.hpp"
#include "sgeval/fuzz.hpp"
#include "sgeval/parser.hpp"
#include "sgeval/properties.hpp"
#include "sgeval/semantics.hpp"

namespace {

using namespace sgeval;

enum Exit : int { kOk = 0, kParse = 1, kStructure = 2, kUnknownName = 3, kViolated = 4, kUsage = 64 };

struct Failure {
    int code;
};

std::string read_input(const std::string& path) {
    if (path.empty() || path == "-") {
        return std::string(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        std::cerr << "sgeval: cannot read " << path << "\n";
        throw Failure{kUsage};
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

StatementGraph load_graph(const std::string& path) {
    const std::string text = read_input(path);
    ParseResult r = parse_sg(text);
    const std::string name = path.empty() || path == "-" ? "<stdin>" : path;
    if (!r.errors.empty()) {
        std::cerr << format_errors(r.errors, name);
        throw Failure{kParse};
    }
    if (r.cycle) {
        std::cerr << name << ": " << r.cycle->message << "\n";
        throw Failure{kStructure};
    }
    return std::move(*r.graph);
}

Semantics semantics_or_fail(const std::string& name) {
    if (auto s = find_semantics(name)) return *s;
    std::cerr << "sgeval: unknown semantics '" << name << "'; expected one of";
    for (const auto& n : semantics_names()) std::cerr << " " << n;
    std::cerr << "\n";
    throw Failure{kUnknownName};
}

PropertyId property_or_fail(const std::string& key) {
    if (auto p = find_property(key)) return *p;
    std::cerr << "sgeval: unknown property '" << key << "'; expected one of";
    for (const auto& info : all_properties()) std::cerr << " " << info.key;
    std::cerr << "\n";
    throw Failure{kUnknownName};
}

std::string fmt(double v, int precision) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", precision, v);
    return buf;
}

struct Common {
    std::string input;
    std::string semantics = "dc-dfquad";
    std::string format = "text";
    int precision = 6;
};

int cmd_eval(const Common& c) {
    const Semantics sem = semantics_or_fail(c.semantics);
    const StatementGraph g = load_graph(c.input);
    const Strengths s = sem.eval(g);
    if (c.format == "json") {
        nlohmann::ordered_json j = nlohmann::ordered_json::object();
        for (Index i = 0; i < g.size(); ++i) j[g.id(i)] = s[i];
        std::cout << j.dump(2) << "\n";
        return kOk;
    }
    for (Index i = 0; i < g.size(); ++i) std::cout << g.id(i) << " " << fmt(s[i], c.precision) << "\n";
    return kOk;
}

int cmd_classify(const Common& c) {
    const StatementGraph g = load_graph(c.input);
    const std::vector<Completeness> cls = classify_all(g);
    if (c.format == "json") {
        nlohmann::ordered_json j = nlohmann::ordered_json::object();
        for (Index i = 0; i < g.size(); ++i) j[g.id(i)] = to_string(cls[i]);
        std::cout << j.dump(2) << "\n";
        return kOk;
    }
    for (Index i = 0; i < g.size(); ++i) std::cout << g.id(i) << " " << to_string(cls[i]) << "\n";
    return kOk;
}

int cmd_export(const Common& c, bool annotate) {
    const StatementGraph g = load_graph(c.input);
    std::optional<Strengths> s;
    if (annotate) s = semantics_or_fail(c.semantics).eval(g);
    if (c.format == "dot") std::cout << export_dot(g, s);
    else if (c.format == "json") std::cout << export_json(g, s);
    else std::cout << serialize_sg(g);
    return kOk;
}

struct PropsArgs {
    bool fixtures = false;
    std::string property;
    std::string after;
    std::vector<std::string> focus;
    double tol = kDefaultTolerance;
    bool verbose = false;
};

int run_fixtures(const Common& c, const PropsArgs& a) {
    std::size_t bad = 0;
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const Fixture& f : fixture_suite()) {
        if (a.property.size() && property_info(f.pid).key != a.property) continue;
        const FixtureOutcome out = run_fixture(f, a.tol);
        if (!out.ok()) ++bad;
        if (c.format == "json") {
            rows.push_back({{"name", f.name},
                            {"expected", to_string(f.expected)},
                            {"verdict", to_string(out.verdict.status)},
                            {"ok", out.ok()},
                            {"mismatches", out.mismatches}});
            continue;
        }
        if (out.ok() && !a.verbose) continue;
        std::cout << (out.ok() ? "ok   " : "FAIL ") << f.name << " (expected " << to_string(f.expected)
                  << ", got " << to_string(out.verdict.status) << ")\n";
        for (const std::string& m : out.mismatches) std::cout << "     " << m << "\n";
    }
    if (c.format == "json") std::cout << rows.dump(2) << "\n";
    else std::cout << fixture_suite().size() << " fixtures, " << bad << " failing\n";
    return bad ? kViolated : kOk;
}

int cmd_props(const Common& c, const PropsArgs& a) {
    if (a.fixtures) {
        if (a.property.size()) property_or_fail(a.property);
        return run_fixtures(c, a);
    }
    if (a.property.empty()) {
        std::cerr << "sgeval props: --property is required unless --fixtures is given\n";
        return kUsage;
    }
    const PropertyId pid = property_or_fail(a.property);
    const Semantics sem = semantics_or_fail(c.semantics);
    StatementGraph before = load_graph(c.input);
    Scenario sc = a.after.empty() ? single_scenario(std::move(before), a.focus)
                                  : pair_scenario(std::move(before), load_graph(a.after), a.focus);
    PropertyVerdict v;
    try {
        v = check_property(pid, sem, sc, a.tol);
    } catch (const ScenarioError& e) {
        std::cerr << "sgeval props: " << e.what() << "\n";
        return kStructure;
    }
    if (c.format == "json") {
        nlohmann::ordered_json j = {{"property", a.property},
                                    {"semantics", sem.name},
                                    {"status", to_string(v.status)},
                                    {"instances", v.instances}};
        if (v.witness) j["witness"] = render_witness(*v.witness);
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << a.property << " " << sem.name << " " << to_string(v.status) << " (" << v.instances
                  << " instances)\n";
        if (v.witness) std::cout << render_witness(*v.witness);
    }
    return v.status == VerdictStatus::Violated ? kViolated : kOk;
}

struct FuzzArgs {
    std::string property;
    std::vector<std::string> properties;
    std::vector<std::string> semantics;
    std::size_t trials = 10000;
    std::uint64_t seed = 42;
    double tol = kDefaultTolerance;
    unsigned threads = 0;
    bool no_minimize = false;
    GeneratorConfig cfg;
};

int cmd_fuzz(const Common& c, const FuzzArgs& a) {
    const PropertyId pid = property_or_fail(a.property);
    const Semantics sem = semantics_or_fail(c.semantics);
    FuzzOptions o;
    o.trials = a.trials;
    o.seed = a.seed;
    o.tol = a.tol;
    o.threads = a.threads;
    o.minimize = !a.no_minimize;
    const FuzzReport r = fuzz(pid, sem, a.cfg, o);
    if (c.format == "json") {
        nlohmann::ordered_json j = {{"property", a.property}, {"semantics", sem.name}, {"applicable", r.applicable},
                                    {"trials", r.trials},     {"effective", r.effective}, {"violations", r.violations},
                                    {"skipped", r.skipped}};
        if (r.first_violation) j["first_violation"] = *r.first_violation;
        if (r.witness) j["witness"] = render_witness(*r.witness);
        std::cout << j.dump(2) << "\n";
        return kOk;
    }
    if (!r.applicable) {
        std::cout << a.property << " " << sem.name << " not-applicable\n";
        return kOk;
    }
    std::cout << a.property << " " << sem.name << ": " << r.violations << " violations in " << r.trials
              << " trials (" << r.effective << " effective, " << r.skipped << " skipped)\n";
    if (r.first_violation) std::cout << "first violation at trial " << *r.first_violation << "\n";
    if (r.witness) std::cout << render_witness(*r.witness);
    return kOk;
}

int cmd_matrix(const Common& c, const FuzzArgs& a) {
    std::vector<Semantics> sems;
    if (a.semantics.empty()) sems = all_semantics();
    for (const std::string& n : a.semantics) sems.push_back(semantics_or_fail(n));
    std::vector<PropertyId> pids;
    if (a.properties.empty())
        for (const auto& info : all_properties()) pids.push_back(info.id);
    for (const std::string& k : a.properties) pids.push_back(property_or_fail(k));
    FuzzOptions o;
    o.trials = a.trials;
    o.seed = a.seed;
    o.tol = a.tol;
    o.threads = a.threads;
    o.minimize = !a.no_minimize;
    const MatrixReport m = satisfaction_matrix(sems, pids, a.cfg, o);
    std::cout << (c.format == "json" ? render_matrix_json(m) : render_matrix_text(m));
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Gradual semantics for statement graphs"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all");

    Common common;
    PropsArgs props;
    FuzzArgs fz;
    bool annotate = false;

    auto add_semantics = [&](CLI::App* sub) {
        sub->add_option("-s,--semantics", common.semantics, "tnorm-p, tnorm-m, dc-dfquad, dc-qem, dfquad or qem");
    };
    auto add_input = [&](CLI::App* sub) { sub->add_option("input", common.input, "statement graph file (- for stdin)"); };
    auto add_fuzz_opts = [&](CLI::App* sub) {
        sub->add_option("--trials", fz.trials)->check(CLI::PositiveNumber);
        sub->add_option("--seed", fz.seed);
        sub->add_option("--tolerance", fz.tol)->check(CLI::NonNegativeNumber);
        sub->add_option("--threads", fz.threads, "worker threads, 0 for all cores");
        sub->add_option("--max-statements", fz.cfg.max_statements)->check(CLI::Range(1, 64));
        sub->add_option("--max-premise", fz.cfg.max_premise)->check(CLI::Range(1, 8));
        sub->add_option("--atoms", fz.cfg.atom_pool)->check(CLI::Range(2, 26));
        sub->add_flag("--no-minimize", fz.no_minimize);
    };

    CLI::App* eval = app.add_subcommand("eval", "print the strength of every statement");
    add_semantics(eval);
    add_input(eval);
    eval->add_option("-f,--format", common.format)->check(CLI::IsMember({"text", "json"}));
    eval->add_option("--precision", common.precision)->check(CLI::Range(1, 17));

    CLI::App* classify = app.add_subcommand("classify", "completeness of every statement");
    add_input(classify);
    classify->add_option("-f,--format", common.format)->check(CLI::IsMember({"text", "json"}));

    CLI::App* pr = app.add_subcommand("props", "check a property on a scenario, or run the fixture suite");
    add_semantics(pr);
    add_input(pr);
    pr->add_flag("--fixtures", props.fixtures, "run the built-in fixture suite");
    pr->add_option("-p,--property", props.property);
    pr->add_option("--after", props.after, "second graph of a pair scenario");
    pr->add_option("--focus", props.focus, "statement ids the property is restricted to")->delimiter(',');
    pr->add_option("--tolerance", props.tol)->check(CLI::NonNegativeNumber);
    pr->add_flag("-v,--verbose", props.verbose, "list passing fixtures too");
    pr->add_option("-f,--format", common.format)->check(CLI::IsMember({"text", "json"}));

    CLI::App* fuzz_cmd = app.add_subcommand("fuzz", "search random scenarios for a violation");
    add_semantics(fuzz_cmd);
    fuzz_cmd->add_option("-p,--property", fz.property)->required();
    add_fuzz_opts(fuzz_cmd);
    fuzz_cmd->add_option("-f,--format", common.format)->check(CLI::IsMember({"text", "json"}));

    CLI::App* matrix = app.add_subcommand("matrix", "satisfaction matrix of semantics against properties");
    matrix->add_option("--semantics", fz.semantics)->delimiter(',');
    matrix->add_option("--properties", fz.properties)->delimiter(',');
    add_fuzz_opts(matrix);
    matrix->add_option("-f,--format", common.format)->check(CLI::IsMember({"text", "json"}));

    CLI::App* exp = app.add_subcommand("export", "write the graph as DOT, JSON or canonical text");
    add_input(exp);
    exp->add_option("-f,--format", common.format)->check(CLI::IsMember({"text", "json", "dot"}));
    exp->add_option("-s,--semantics", common.semantics, "annotate nodes with strengths")
        ->each([&](const std::string&) { annotate = true; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (*eval) return cmd_eval(common);
        if (*classify) return cmd_classify(common);
        if (*pr) return cmd_props(common, props);
        if (*fuzz_cmd) return cmd_fuzz(common, fz);
        if (*matrix) return cmd_matrix(common, fz);
        if (*exp) return cmd_export(common, annotate);
    } catch (const Failure& f) {
        return f.code;
    } catch (const ModelError& e) {
        std::cerr << "sgeval: " << to_string(e.kind()) << ": " << e.what() << "\n";
        return kStructure;
    } catch (const ResourceLimitError& e) {
        std::cerr << "sgeval: " << e.what() << "\n";
        return kStructure;
    }
    return kUsage;
}
