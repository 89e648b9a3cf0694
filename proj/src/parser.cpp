#include "sgeval/parser.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <set>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace sgeval {

const char* to_string(ParseErrorKind kind) {
    switch (kind) {
        case ParseErrorKind::Syntax: return "Syntax";
        case ParseErrorKind::DuplicateId: return "DuplicateId";
        case ParseErrorKind::InconsistentPremise: return "InconsistentPremise";
        case ParseErrorKind::WeightOutOfRange: return "WeightOutOfRange";
        case ParseErrorKind::DuplicateStatement: return "DuplicateStatement";
        case ParseErrorKind::UnknownDirective: return "UnknownDirective";
    }
    return "Unknown";
}

namespace {

enum class Tok { Ident, Colon, Arrow, At, Amp, Tilde, Number, Percent, Bad, End };

struct Token {
    Tok kind;
    std::string_view text;
    int column;  // 1-based
};

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }
bool digit(char c) { return c >= '0' && c <= '9'; }

std::vector<Token> tokenize(std::string_view line) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
        char c = line[i];
        int col = static_cast<int>(i) + 1;
        if (c == ' ' || c == '\t' || c == '\r') { ++i; continue; }
        if (ident_start(c)) {
            std::size_t j = i + 1;
            while (j < line.size() && ident_char(line[j])) ++j;
            out.push_back({Tok::Ident, line.substr(i, j - i), col});
            i = j;
        } else if (digit(c) || (c == '.' && i + 1 < line.size() && digit(line[i + 1]))) {
            std::size_t j = i;
            while (j < line.size() && digit(line[j])) ++j;
            if (j < line.size() && line[j] == '.') {
                ++j;
                while (j < line.size() && digit(line[j])) ++j;
            }
            // Glued trailing identifier characters make the whole run malformed.
            std::size_t k = j;
            while (k < line.size() && (ident_char(line[k]) || line[k] == '.')) ++k;
            out.push_back({k == j ? Tok::Number : Tok::Bad, line.substr(i, k - i), col});
            i = k;
        } else if (c == '=' && i + 1 < line.size() && line[i + 1] == '>') {
            out.push_back({Tok::Arrow, line.substr(i, 2), col});
            i += 2;
        } else {
            Tok k = Tok::Bad;
            switch (c) {
                case ':': k = Tok::Colon; break;
                case '@': k = Tok::At; break;
                case '&': k = Tok::Amp; break;
                case '~': k = Tok::Tilde; break;
                case '%': k = Tok::Percent; break;
                default: break;
            }
            out.push_back({k, line.substr(i, 1), col});
            ++i;
        }
    }
    out.push_back({Tok::End, {}, static_cast<int>(line.size()) + 1});
    return out;
}

std::string describe(const Token& t) {
    if (t.kind == Tok::End) return "end of line";
    return "'" + std::string(t.text) + "'";
}

struct ParsedLine {
    Statement statement;
    double weight;
    SourceSpan id_span;
};

class LineParser {
public:
    LineParser(std::string_view line, int line_no, std::vector<ParseError>& errors)
        : toks_(tokenize(line)), line_no_(line_no), errors_(errors) {}

    std::optional<ParsedLine> parse() {
        const Token& first = toks_[0];
        if (first.kind == Tok::Percent) {
            directive();
            return std::nullopt;
        }
        if (first.kind != Tok::Ident) return fail(first, "expected statement id");
        Token id = take();
        if (!expect(Tok::Colon, "':' after statement id")) return std::nullopt;

        // Premise.
        std::vector<std::pair<Literal, Token>> lits;
        const Token premise_start = peek();
        bool top = false;
        if (peek().kind == Tok::Ident && peek().text == kTopAtom) {
            take();
            top = true;
        } else {
            auto l = literal("premise literal");
            if (!l) return std::nullopt;
            lits.push_back(*l);
            while (peek().kind == Tok::Amp) {
                take();
                if (peek().kind == Tok::Ident && peek().text == kTopAtom)
                    return fail(peek(), "T may only appear as the whole premise");
                auto next = literal("literal after '&'");
                if (!next) return std::nullopt;
                lits.push_back(*next);
            }
        }
        if (top && peek().kind == Tok::Amp) return fail(peek(), "T may only appear as the whole premise");
        const Token premise_end = toks_[pos_ - 1];
        if (!expect(Tok::Arrow, "'=>' after premise")) return std::nullopt;

        if (peek().kind == Tok::Ident && peek().text == kTopAtom) return fail(peek(), "T cannot be a claim");
        auto claim = literal("claim literal");
        if (!claim) return std::nullopt;
        if (!expect(Tok::At, "'@' before weight")) return std::nullopt;
        if (peek().kind != Tok::Number) return fail(peek(), "expected weight in [0,1]");
        Token num = take();
        if (peek().kind != Tok::End) return fail(peek(), "unexpected " + describe(peek()) + " after weight");

        double w = 0.0;
        auto res = std::from_chars(num.text.data(), num.text.data() + num.text.size(), w);
        if (res.ec != std::errc() || res.ptr != num.text.data() + num.text.size())
            return fail(num, "malformed weight " + describe(num));
        if (!(w >= 0.0 && w <= 1.0)) {
            errors_.push_back({span(num), ParseErrorKind::WeightOutOfRange,
                               "weight " + std::string(num.text) + " is outside [0,1]"});
            return std::nullopt;
        }

        Premise premise;
        if (!top) {
            std::set<std::string> pos, neg;
            for (auto& [l, t] : lits) (l.negated ? neg : pos).insert(l.atom);
            for (auto& [l, t] : lits)
                if (!l.negated && neg.count(l.atom)) {
                    int col = premise_start.column;
                    int len = premise_end.column + static_cast<int>(premise_end.text.size()) - col;
                    errors_.push_back({{line_no_, col, std::max(1, len)}, ParseErrorKind::InconsistentPremise,
                                       "premise contains both " + l.atom + " and ~" + l.atom});
                    return std::nullopt;
                }
            std::vector<Literal> ls;
            for (auto& [l, t] : lits) ls.push_back(l);
            premise = Premise::conjunction(std::move(ls));
        }
        return ParsedLine{Statement{std::string(id.text), premise, claim->first}, w, span(id)};
    }

private:
    const Token& peek() const { return toks_[pos_]; }
    Token take() { return toks_[pos_ == toks_.size() - 1 ? pos_ : pos_++]; }

    SourceSpan span(const Token& t) const {
        return {line_no_, t.column, std::max<int>(1, static_cast<int>(t.text.size()))};
    }

    std::nullopt_t fail(const Token& t, const std::string& what) {
        std::string msg = what;
        if (t.kind == Tok::Bad) msg += ", found invalid token " + describe(t);
        else if (what.rfind("expected", 0) == 0) msg += ", found " + describe(t);
        errors_.push_back({span(t), ParseErrorKind::Syntax, msg});
        return std::nullopt;
    }

    bool expect(Tok k, const std::string& what) {
        if (peek().kind != k) {
            fail(peek(), "expected " + what);
            return false;
        }
        take();
        return true;
    }

    std::optional<std::pair<Literal, Token>> literal(const std::string& what) {
        Token start = peek();
        bool negated = false;
        if (peek().kind == Tok::Tilde) {
            take();
            negated = true;
        }
        if (peek().kind != Tok::Ident) {
            fail(peek(), "expected " + what);
            return std::nullopt;
        }
        if (peek().text == kTopAtom) {
            fail(peek(), negated ? "T cannot be negated" : "T may only appear as the whole premise");
            return std::nullopt;
        }
        Token atom = take();
        return std::make_pair(Literal{std::string(atom.text), negated}, start);
    }

    void directive() {
        take();
        const Token& name = peek();
        if (name.kind != Tok::Ident) {
            fail(name, "expected directive name after '%'");
            return;
        }
        if (name.text != "version") {
            errors_.push_back({span(name), ParseErrorKind::UnknownDirective,
                               "unknown directive %" + std::string(name.text)});
            return;
        }
        take();
        if (peek().kind != Tok::Number || peek().text != "1") {
            fail(peek(), "expected version number 1");
            return;
        }
        take();
        if (peek().kind != Tok::End) fail(peek(), "unexpected " + describe(peek()) + " after directive");
    }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
    int line_no_;
    std::vector<ParseError>& errors_;
};

}  // namespace

ParseResult parse_sg(std::string_view text) {
    ParseResult result;
    std::vector<ParsedLine> parsed;
    std::map<std::string, SourceSpan> seen_ids;
    std::map<std::pair<Premise, Literal>, std::string> seen_keys;

    int line_no = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t nl = text.find('\n', start);
        std::string_view line = text.substr(start, nl == std::string_view::npos ? std::string_view::npos : nl - start);
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        bool blank = std::all_of(line.begin(), line.end(),
                                 [](char c) { return c == ' ' || c == '\t' || c == '\r'; });
        if (!blank) {
            LineParser lp(line, line_no, result.errors);
            if (auto pl = lp.parse()) {
                const std::string& id = pl->statement.id;
                auto key = std::make_pair(pl->statement.premise, pl->statement.claim);
                if (auto it = seen_ids.find(id); it != seen_ids.end()) {
                    result.errors.push_back({pl->id_span, ParseErrorKind::DuplicateId,
                                             "statement id " + id + " already defined on line " +
                                                 std::to_string(it->second.line)});
                } else if (auto kt = seen_keys.find(key); kt != seen_keys.end()) {
                    result.errors.push_back({pl->id_span, ParseErrorKind::DuplicateStatement,
                                             "statement " + id + " repeats premise and claim of " + kt->second});
                    seen_ids.emplace(id, pl->id_span);
                } else {
                    seen_ids.emplace(id, pl->id_span);
                    seen_keys.emplace(key, id);
                    parsed.push_back(std::move(*pl));
                }
            }
        }
        if (nl == std::string_view::npos) break;
        start = nl + 1;
    }
    if (!result.errors.empty()) return result;

    std::vector<std::pair<Statement, double>> weighted;
    for (auto& pl : parsed) weighted.emplace_back(std::move(pl.statement), pl.weight);
    try {
        result.graph = StatementGraph::build(std::move(weighted));
    } catch (const ModelError& e) {
        if (e.kind() != ModelErrorKind::CyclicGraph) throw;
        result.cycle = CycleError{e.cycle(), e.what()};
    }
    return result;
}

std::string format_weight(double v) {
    char buf[512];
    auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::fixed);
    std::string s(buf, res.ptr);
    if (s.find('.') == std::string::npos) s += ".0";
    return s;
}

std::string serialize_sg(const StatementGraph& g) {
    std::string out;
    for (Index i = 0; i < g.size(); ++i) {
        const Statement& s = g.statement(i);
        out += s.id + ": " + s.premise.str() + " => " + s.claim.str() + " @ " + format_weight(g.weight(i)) + "\n";
    }
    return out;
}

namespace {

void check_strengths(const StatementGraph& g, const std::optional<Strengths>& strengths) {
    if (strengths && strengths->size() != g.size())
        throw std::invalid_argument("strength map does not cover every statement");
}

}  // namespace

std::string export_json(const StatementGraph& g, const std::optional<Strengths>& strengths) {
    check_strengths(g, strengths);
    using nlohmann::ordered_json;
    ordered_json doc;
    ordered_json statements = ordered_json::array();
    for (Index i = 0; i < g.size(); ++i) {
        const Statement& s = g.statement(i);
        ordered_json st;
        st["id"] = s.id;
        if (s.premise.is_top()) {
            st["premise"] = "top";
        } else {
            ordered_json lits = ordered_json::array();
            for (const Literal& l : s.premise.literals()) lits.push_back(l.str());
            st["premise"] = lits;
        }
        st["claim"] = s.claim.str();
        st["weight"] = g.weight(i);
        if (strengths) st["strength"] = (*strengths)[i];
        statements.push_back(st);
    }
    auto edges = [&](const std::vector<Edge>& es) {
        ordered_json arr = ordered_json::array();
        for (auto [from, to] : es) arr.push_back(ordered_json{{"from", g.id(from)}, {"to", g.id(to)}});
        return arr;
    };
    doc["statements"] = statements;
    doc["attacks"] = edges(g.attack_edges());
    doc["supports"] = edges(g.support_edges());
    return doc.dump(2) + "\n";
}

std::string export_dot(const StatementGraph& g, const std::optional<Strengths>& strengths) {
    check_strengths(g, strengths);
    std::ostringstream out;
    out << "digraph SG {\n";
    out << "  node [shape=box];\n";
    for (Index i = 0; i < g.size(); ++i) {
        const Statement& s = g.statement(i);
        out << "  " << s.id << " [label=\"" << s.id << "\\n" << s.premise.str() << " => " << s.claim.str()
            << "\\nw=" << format_weight(g.weight(i));
        if (strengths) out << "\\ns=" << format_weight((*strengths)[i]);
        out << "\"];\n";
    }
    for (auto [from, to] : g.support_edges())
        out << "  " << g.id(from) << " -> " << g.id(to) << " [label=\"+\", color=green, fontcolor=green];\n";
    for (auto [from, to] : g.attack_edges())
        out << "  " << g.id(from) << " -> " << g.id(to) << " [label=\"-\", color=red, fontcolor=red];\n";
    out << "}\n";
    return out.str();
}

std::string format_errors(const std::vector<ParseError>& errors, std::string_view source_name) {
    std::string out;
    for (const ParseError& e : errors) {
        out += std::string(source_name) + ":" + std::to_string(e.span.line) + ":" + std::to_string(e.span.column) +
               ": " + to_string(e.kind) + ": " + e.message + "\n";
    }
    return out;
}

}  // namespace sgeval
