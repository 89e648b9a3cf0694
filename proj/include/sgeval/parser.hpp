#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sgeval/graph.hpp"

namespace sgeval {

struct SourceSpan {
    int line = 1;    // 1-based
    int column = 1;  // 1-based
    int length = 1;

    bool operator==(const SourceSpan&) const = default;
};

enum class ParseErrorKind {
    Syntax,
    DuplicateId,
    InconsistentPremise,
    WeightOutOfRange,
    DuplicateStatement,
    UnknownDirective,
};

const char* to_string(ParseErrorKind kind);

struct ParseError {
    SourceSpan span;
    ParseErrorKind kind;
    std::string message;
};

// Post-parse structural failure: the statements parsed but form a cycle.
struct CycleError {
    std::vector<std::string> cycle;
    std::string message;
};

struct ParseResult {
    std::optional<StatementGraph> graph;
    std::vector<ParseError> errors;
    std::optional<CycleError> cycle;

    bool ok() const { return graph.has_value(); }
};

// Grammar, one statement per line:
//   <id> : <premise> => <claim> @ <weight>
//   premise := T | lit (& lit)*      lit := atom | ~atom
// '#' starts a comment; blank lines are ignored; "%version 1" is the only directive.
ParseResult parse_sg(std::string_view text);

// Canonical DSL text: sorted by id, canonical literal order, shortest round-trip weights.
std::string serialize_sg(const StatementGraph& g);

// Shortest decimal text that reads back to exactly v (no exponent).
std::string format_weight(double v);

// Both throw std::invalid_argument when strengths do not cover every statement.
std::string export_json(const StatementGraph& g, const std::optional<Strengths>& strengths = std::nullopt);
std::string export_dot(const StatementGraph& g, const std::optional<Strengths>& strengths = std::nullopt);

std::string format_errors(const std::vector<ParseError>& errors, std::string_view source_name);

}  // namespace sgeval
