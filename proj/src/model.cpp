#include "sgeval/model.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace sgeval {

const char* to_string(ModelErrorKind kind) {
    switch (kind) {
        case ModelErrorKind::EmptyAtom: return "EmptyAtom";
        case ModelErrorKind::InvalidName: return "InvalidName";
        case ModelErrorKind::NegatedTop: return "NegatedTop";
        case ModelErrorKind::TopInConjunction: return "TopInConjunction";
        case ModelErrorKind::TopClaim: return "TopClaim";
        case ModelErrorKind::EmptyPremise: return "EmptyPremise";
        case ModelErrorKind::InconsistentPremise: return "InconsistentPremise";
        case ModelErrorKind::EmptyId: return "EmptyId";
        case ModelErrorKind::DuplicateId: return "DuplicateId";
        case ModelErrorKind::DuplicateStatement: return "DuplicateStatement";
        case ModelErrorKind::MissingWeight: return "MissingWeight";
        case ModelErrorKind::WeightOutOfRange: return "WeightOutOfRange";
        case ModelErrorKind::CyclicGraph: return "CyclicGraph";
        case ModelErrorKind::UnknownId: return "UnknownId";
    }
    return "Unknown";
}

bool is_identifier(std::string_view name) {
    if (name.empty() || !(std::isalpha(static_cast<unsigned char>(name[0])) || name[0] == '_')) return false;
    return std::all_of(name.begin(), name.end(),
                       [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

Literal make_literal(std::string atom, bool negated) {
    if (atom.empty())
        throw ModelError(ModelErrorKind::EmptyAtom, "literal atom must be non-empty");
    if (!is_identifier(atom))
        throw ModelError(ModelErrorKind::InvalidName, "atom '" + atom + "' is not an identifier");
    Literal l{std::move(atom), negated};
    if (l.is_top() && negated)
        throw ModelError(ModelErrorKind::NegatedTop, "T cannot be negated");
    return l;
}

Literal top_literal() { return Literal{std::string(kTopAtom), false}; }

Literal negate(const Literal& l) {
    if (l.is_top())
        throw ModelError(ModelErrorKind::NegatedTop, "T has no negation");
    return Literal{l.atom, !l.negated};
}

Premise Premise::conjunction(std::vector<Literal> literals) {
    if (literals.empty())
        throw ModelError(ModelErrorKind::EmptyPremise, "conjunction needs at least one literal");
    std::sort(literals.begin(), literals.end());
    literals.erase(std::unique(literals.begin(), literals.end()), literals.end());
    for (std::size_t i = 0; i < literals.size(); ++i) {
        const Literal& l = literals[i];
        if (l.atom.empty())
            throw ModelError(ModelErrorKind::EmptyAtom, "literal atom must be non-empty");
        if (l.is_top())
            throw ModelError(ModelErrorKind::TopInConjunction, "T may only appear as the whole premise");
        // Sorted by (atom, negated): a clash sits next to its partner.
        if (i + 1 < literals.size() && literals[i + 1].atom == l.atom)
            throw ModelError(ModelErrorKind::InconsistentPremise,
                             "premise contains both " + l.atom + " and ~" + l.atom);
    }
    Premise p;
    p.literals_ = std::move(literals);
    return p;
}

bool Premise::contains(const Literal& l) const {
    return std::binary_search(literals_.begin(), literals_.end(), l);
}

std::string Premise::str() const {
    if (is_top()) return std::string(kTopAtom);
    std::string out;
    for (std::size_t i = 0; i < literals_.size(); ++i) {
        if (i) out += " & ";
        out += literals_[i].str();
    }
    return out;
}

std::string Statement::str() const {
    return id + ": " + premise.str() + " => " + claim.str();
}

Statement make_statement(std::string id, std::vector<Literal> premise_literals, Literal claim) {
    if (id.empty())
        throw ModelError(ModelErrorKind::EmptyId, "statement id must be non-empty");
    if (!is_identifier(id))
        throw ModelError(ModelErrorKind::InvalidName, "statement id '" + id + "' is not an identifier");
    if (claim.atom.empty())
        throw ModelError(ModelErrorKind::EmptyAtom, "claim atom must be non-empty");
    if (!is_identifier(claim.atom))
        throw ModelError(ModelErrorKind::InvalidName, "atom '" + claim.atom + "' is not an identifier");
    for (const Literal& l : premise_literals)
        if (!l.atom.empty() && !is_identifier(l.atom))
            throw ModelError(ModelErrorKind::InvalidName, "atom '" + l.atom + "' is not an identifier");
    if (claim.is_top())
        throw ModelError(ModelErrorKind::TopClaim, "statement " + id + ": T cannot be a claim");
    bool has_top = std::any_of(premise_literals.begin(), premise_literals.end(),
                               [](const Literal& l) { return l.is_top(); });
    Premise premise;
    if (has_top) {
        if (premise_literals.size() != 1)
            throw ModelError(ModelErrorKind::TopInConjunction,
                             "statement " + id + ": T may only appear as the whole premise");
        if (premise_literals.front().negated)
            throw ModelError(ModelErrorKind::NegatedTop, "statement " + id + ": T cannot be negated");
        premise = Premise::top();
    } else {
        premise = Premise::conjunction(std::move(premise_literals));
    }
    return Statement{std::move(id), std::move(premise), std::move(claim)};
}

Relations derive_relations(const std::vector<Statement>& statements) {
    std::set<IdEdge> attacks;
    std::set<IdEdge> supports;
    for (const Statement& from : statements) {
        Literal opposite = negate(from.claim);
        for (const Statement& to : statements) {
            if (to.premise.contains(from.claim)) supports.emplace(from.id, to.id);
            if (to.premise.contains(opposite)) attacks.emplace(from.id, to.id);
        }
    }
    return Relations{{attacks.begin(), attacks.end()}, {supports.begin(), supports.end()}};
}

}  // namespace sgeval
