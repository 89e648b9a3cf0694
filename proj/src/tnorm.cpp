#include "sgeval/tnorm.hpp"

#include <algorithm>
#include <cmath>

namespace sgeval {

DeMorganTriple product_triple() {
    return {"tnorm-p", [](double a, double b) { return a * b; },
            [](double a, double b) { return a + b - a * b; }, [](double a) { return 1.0 - a; }};
}

DeMorganTriple minimum_triple() {
    return {"tnorm-m", [](double a, double b) { return std::min(a, b); },
            [](double a, double b) { return std::max(a, b); }, [](double a) { return 1.0 - a; }};
}

std::vector<DeMorganTriple> builtin_triples() { return {product_triple(), minimum_triple()}; }

std::optional<std::string> validate_triple(const DeMorganTriple& t, double tol) {
    std::vector<double> samples;
    for (int k = 0; k <= 20; ++k) samples.push_back(k / 20.0);
    for (double v : {0.013, 0.3333, 0.618, 0.9871}) samples.push_back(v);

    auto bad = [&](const char* law, double a, double b) {
        return std::optional<std::string>(t.name + ": " + law + " fails at (" + std::to_string(a) + ", " +
                                          std::to_string(b) + ")");
    };
    const auto& tn = t.tnorm;
    const auto& tc = t.tconorm;
    const auto& ng = t.negation;
    for (double a : samples)
        for (double b : samples) {
            if (std::abs(tn(a, b) - ng(tc(ng(a), ng(b)))) > tol) return bad("t-norm De Morgan law", a, b);
            if (std::abs(tc(a, b) - ng(tn(ng(a), ng(b)))) > tol) return bad("t-conorm De Morgan law", a, b);
            if (std::abs(tn(a, b) - tn(b, a)) > tol) return bad("t-norm commutativity", a, b);
            if (std::abs(tc(a, b) - tc(b, a)) > tol) return bad("t-conorm commutativity", a, b);
            for (double c : samples) {
                if (std::abs(tn(tn(a, b), c) - tn(a, tn(b, c))) > tol) return bad("t-norm associativity", a, b);
                if (std::abs(tc(tc(a, b), c) - tc(a, tc(b, c))) > tol) return bad("t-conorm associativity", a, b);
            }
        }
    return std::nullopt;
}

TnormTrace eval_tnorm_traced(const StatementGraph& g, const DeMorganTriple& t, const CstOptions& opts) {
    TnormTrace tr;
    tr.trees = all_csts(g, opts);
    const std::size_t n = g.size();
    tr.intrinsic.resize(n);
    tr.outcome.resize(n);
    tr.strengths.assign(n, 0.0);

    for (Index i = 0; i < n; ++i)
        for (const Cst& tree : tr.trees[i]) {
            double v = 1.0;
            for (Index m : tree.members) v = t.tnorm(v, g.weight(m));
            tr.intrinsic[i].push_back(v);
        }

    // Trees are sorted by (root, members) within each root, and roots are visited ascending.
    for (Index i = 0; i < n; ++i) {
        double sigma = 0.0;
        for (std::size_t k = 0; k < tr.trees[i].size(); ++k) {
            const Cst& tree = tr.trees[i][k];
            double attack = 0.0;
            for (Index j = 0; j < n; ++j) {
                if (tr.trees[j].empty() || !root_attacks_tree(g, j, tree)) continue;
                for (double v : tr.intrinsic[j]) attack = t.tconorm(attack, v);
            }
            double o = t.tnorm(tr.intrinsic[i][k], t.negation(attack));
            tr.outcome[i].push_back(o);
            sigma = t.tconorm(sigma, o);
        }
        tr.strengths[i] = sigma;
    }
    return tr;
}

Strengths eval_tnorm(const StatementGraph& g, const DeMorganTriple& t, const CstOptions& opts) {
    return eval_tnorm_traced(g, t, opts).strengths;
}

}  // namespace sgeval
