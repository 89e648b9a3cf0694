#pragma once

// Reference implementations written straight from the definitions.
// They read only statement contents and weights, never the library's derived edges or evaluators.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "sgeval/graph.hpp"

namespace oracle {

using sgeval::Literal;
using sgeval::Statement;
using sgeval::StatementGraph;

using IdSet = std::set<std::string>;

inline bool claims(const Statement& s, const Literal& x) { return s.claim == x; }

inline bool in_premise(const Statement& s, const Literal& x) {
    const auto& p = s.premise.literals();
    return std::find(p.begin(), p.end(), x) != p.end();
}

// s attacks t iff the negation of s's claim is a premise literal of t.
inline bool attacks(const Statement& s, const Statement& t) {
    Literal neg = s.claim;
    neg.negated = !neg.negated;
    return in_premise(t, neg);
}

inline bool supports(const Statement& s, const Statement& t) { return in_premise(t, s.claim); }

// Every CST per root id, found by testing every subset of the statements.
inline std::map<std::string, std::set<IdSet>> brute_force_csts(const StatementGraph& g) {
    const auto& st = g.statements();
    const std::size_t n = st.size();
    std::map<std::string, std::set<IdSet>> out;
    for (const auto& s : st) out[s.id];
    if (n > 20) return out;
    std::vector<std::uint32_t> valid;
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        bool ok = true;
        for (std::size_t i = 0; i < n && ok; ++i) {
            if (!(mask >> i & 1)) continue;
            for (const Literal& x : st[i].premise.literals()) {
                bool grounded = false;
                for (std::size_t j = 0; j < n; ++j)
                    if ((mask >> j & 1) && claims(st[j], x)) grounded = true;
                if (!grounded) ok = false;
            }
            for (std::size_t j = 0; j < n && ok; ++j)
                if ((mask >> j & 1) && attacks(st[i], st[j])) ok = false;
        }
        if (ok) valid.push_back(mask);
    }
    for (std::size_t r = 0; r < n; ++r) {
        std::vector<std::uint32_t> mine;
        for (std::uint32_t m : valid)
            if (m >> r & 1) mine.push_back(m);
        for (std::uint32_t m : mine) {
            bool minimal = true;
            for (std::uint32_t o : mine)
                if (o != m && (o & m) == o) minimal = false;
            if (!minimal) continue;
            IdSet ids;
            for (std::size_t i = 0; i < n; ++i)
                if (m >> i & 1) ids.insert(st[i].id);
            out[st[r].id].insert(ids);
        }
    }
    return out;
}

struct Triple {
    std::function<double(double, double)> tnorm, tconorm;
    std::function<double(double)> negation;
};

inline Triple product() {
    return {[](double a, double b) { return a * b; }, [](double a, double b) { return a + b - a * b; },
            [](double a) { return 1 - a; }};
}

inline Triple minimum() {
    return {[](double a, double b) { return std::min(a, b); }, [](double a, double b) { return std::max(a, b); },
            [](double a) { return 1 - a; }};
}

inline std::map<std::string, double> tnorm_semantics(const StatementGraph& g, const Triple& t) {
    const auto trees = brute_force_csts(g);
    std::map<std::string, const Statement*> by;
    std::map<std::string, double> w;
    for (std::size_t i = 0; i < g.size(); ++i) {
        by[g.id(i)] = &g.statement(i);
        w[g.id(i)] = g.weight(i);
    }
    auto intrinsic = [&](const IdSet& tree) {
        double v = 1.0;
        for (const auto& id : tree) v = t.tnorm(v, w[id]);
        return v;
    };
    std::map<std::string, double> out;
    for (const auto& [root, mine] : trees) {
        double total = 0.0;
        for (const IdSet& tree : mine) {
            double against = 0.0;
            for (const auto& [other, theirs] : trees) {
                bool hits = false;
                for (const auto& member : tree)
                    if (attacks(*by[other], *by[member])) hits = true;
                if (!hits) continue;
                for (const IdSet& tt : theirs) against = t.tconorm(against, intrinsic(tt));
            }
            total = t.tconorm(total, t.tnorm(intrinsic(tree), t.negation(against)));
        }
        out[root] = total;
    }
    return out;
}

enum class Gs { DfQuad, Qem };

inline double prob_sum(const std::vector<double>& v) {
    double acc = 0.0;
    for (double x : v) acc = acc + x - acc * x;
    return acc;
}

inline double h(double v) {
    const double m = std::max(v, 0.0);
    return m * m / (1 + m * m);
}

inline double combine(Gs gs, double base, const std::vector<double>& att, const std::vector<double>& sup) {
    if (gs == Gs::DfQuad) {
        const double vm = prob_sum(att), vp = prob_sum(sup);
        if (vm >= vp) return base - base * std::abs(vp - vm);
        return base + (1 - base) * std::abs(vp - vm);
    }
    double e = 0.0;
    for (double x : sup) e += x;
    for (double x : att) e -= x;
    return base + (1 - base) * h(e) - base * h(-e);
}

// Statements as plain nodes.
inline std::map<std::string, double> abstract_semantics(const StatementGraph& g, Gs gs) {
    std::map<std::string, double> memo;
    std::function<double(std::size_t)> eval = [&](std::size_t i) -> double {
        auto it = memo.find(g.id(i));
        if (it != memo.end()) return it->second;
        std::vector<double> att, sup;
        for (std::size_t j = 0; j < g.size(); ++j) {
            if (attacks(g.statement(j), g.statement(i))) att.push_back(eval(j));
            if (supports(g.statement(j), g.statement(i))) sup.push_back(eval(j));
        }
        return memo[g.id(i)] = combine(gs, g.weight(i), att, sup);
    };
    for (std::size_t i = 0; i < g.size(); ++i) eval(i);
    return memo;
}

struct DcResult {
    std::map<std::string, double> strength;
    std::map<std::string, std::vector<double>> literal_scores;  // premise order
};

// Dialectical conjunction: each premise literal scored with base weight^(1/n) against the
// strengths of statements claiming its negation and for it; literal scores multiplied.
inline DcResult dc_semantics(const StatementGraph& g, Gs gs) {
    DcResult r;
    std::function<double(std::size_t)> eval = [&](std::size_t i) -> double {
        const Statement& s = g.statement(i);
        auto it = r.strength.find(s.id);
        if (it != r.strength.end()) return it->second;
        const auto& prem = s.premise.literals();
        if (prem.empty()) return r.strength[s.id] = g.weight(i);
        const double base = std::pow(g.weight(i), 1.0 / static_cast<double>(prem.size()));
        double v = 1.0;
        std::vector<double> lits;
        for (const Literal& x : prem) {
            Literal nx = x;
            nx.negated = !nx.negated;
            std::vector<double> att, sup;
            for (std::size_t j = 0; j < g.size(); ++j) {
                if (claims(g.statement(j), nx)) att.push_back(eval(j));
                if (claims(g.statement(j), x)) sup.push_back(eval(j));
            }
            const double score = combine(gs, base, att, sup);
            lits.push_back(score);
            v *= score;
        }
        r.literal_scores[s.id] = lits;
        return r.strength[s.id] = v;
    };
    for (std::size_t i = 0; i < g.size(); ++i) eval(i);
    return r;
}

// The five antecedent conditions of rewriting for (a1, a2, a3), checked literally:
// Prem(a1) = Prem(a2) plus one more literal, claim(a2) = x' with Prem(a3) = {x', that literal},
// claim(a1) = claim(a3), no other statement mentions the atom of x', tau(a1) = tau(a3), tau(a2) = 1.
inline bool rewriting_antecedent(const StatementGraph& g, const std::string& a1, const std::string& a2,
                                 const std::string& a3, double tol = 1e-9) {
    auto i1 = g.find(a1), i2 = g.find(a2), i3 = g.find(a3);
    if (!i1 || !i2 || !i3) return false;
    const Statement &s1 = g.statement(*i1), &s2 = g.statement(*i2), &s3 = g.statement(*i3);
    if (s2.premise.is_top() || s1.claim != s3.claim) return false;
    const Literal xp = s2.claim;
    std::set<Literal> p1(s1.premise.literals().begin(), s1.premise.literals().end());
    std::set<Literal> p2(s2.premise.literals().begin(), s2.premise.literals().end());
    std::set<Literal> p3(s3.premise.literals().begin(), s3.premise.literals().end());
    if (!p3.count(xp)) return false;
    p3.erase(xp);
    if (p3.size() > 1) return false;
    std::set<Literal> expect = p2;
    for (const Literal& l : p3)
        if (!expect.insert(l).second) return false;
    if (p1 != expect) return false;
    for (std::size_t k = 0; k < g.size(); ++k) {
        const Statement& s = g.statement(k);
        if (s.id == a2 || s.id == a3) continue;
        if (s.claim.atom == xp.atom) return false;
        for (const Literal& l : s.premise.literals())
            if (l.atom == xp.atom) return false;
    }
    return std::abs(g.weight(*i1) - g.weight(*i3)) <= tol && std::abs(g.weight(*i2) - 1.0) <= tol;
}

}  // namespace oracle
