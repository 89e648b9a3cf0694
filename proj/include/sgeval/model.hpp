#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace sgeval {

// Reserved atom spelling for the always-true premise.
inline constexpr std::string_view kTopAtom = "T";

enum class ModelErrorKind {
    EmptyAtom,
    InvalidName,
    NegatedTop,
    TopInConjunction,
    TopClaim,
    EmptyPremise,
    InconsistentPremise,
    EmptyId,
    DuplicateId,
    DuplicateStatement,
    MissingWeight,
    WeightOutOfRange,
    CyclicGraph,
    UnknownId,
};

const char* to_string(ModelErrorKind kind);

class ModelError : public std::runtime_error {
public:
    ModelError(ModelErrorKind kind, const std::string& message, std::vector<std::string> cycle = {})
        : std::runtime_error(message), kind_(kind), cycle_(std::move(cycle)) {}

    ModelErrorKind kind() const { return kind_; }
    // Statement ids along the offending cycle (CyclicGraph only), first id repeated at the end.
    const std::vector<std::string>& cycle() const { return cycle_; }

private:
    ModelErrorKind kind_;
    std::vector<std::string> cycle_;
};

struct Literal {
    std::string atom;
    bool negated = false;

    bool is_top() const { return atom == kTopAtom; }
    std::string str() const { return negated ? "~" + atom : atom; }

    auto operator<=>(const Literal&) const = default;
    bool operator==(const Literal&) const = default;
};

// Atoms and ids are identifiers: a letter or '_' followed by letters, digits or '_'.
bool is_identifier(std::string_view name);

Literal make_literal(std::string atom, bool negated = false);
Literal top_literal();
Literal negate(const Literal& l);

class Premise {
public:
    static Premise top() { return Premise{}; }
    // Sorted, deduplicated, consistency-checked conjunction; must be non-empty.
    static Premise conjunction(std::vector<Literal> literals);

    bool is_top() const { return literals_.empty(); }
    // Prem(alpha): empty for the top premise.
    const std::vector<Literal>& literals() const { return literals_; }
    std::size_t size() const { return literals_.size(); }
    bool contains(const Literal& l) const;
    std::string str() const;

    auto operator<=>(const Premise&) const = default;
    bool operator==(const Premise&) const = default;

private:
    std::vector<Literal> literals_;
};

struct Statement {
    std::string id;
    Premise premise;
    Literal claim;

    std::string str() const;
    bool operator==(const Statement&) const = default;
};

// premise_literals is either {T} alone or a non-empty consistent literal list.
Statement make_statement(std::string id, std::vector<Literal> premise_literals, Literal claim);

using Index = std::size_t;
using Edge = std::pair<Index, Index>;
using IdEdge = std::pair<std::string, std::string>;

struct Relations {
    std::vector<IdEdge> attacks;
    std::vector<IdEdge> supports;
};

// Support iff claim(s1) in Prem(s2); attack iff negate(claim(s1)) in Prem(s2). Sorted by id.
Relations derive_relations(const std::vector<Statement>& statements);

}  // namespace sgeval
