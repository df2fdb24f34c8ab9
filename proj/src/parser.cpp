#include "seforget/parser.hpp"

#include <cctype>
#include <optional>

namespace seforget {

namespace {

enum class Tok { atom, kw_not, dot, if_, semicolon, comma, end };

struct Token {
    Tok kind;
    std::string_view text;
    SourceSpan span;
};

const char* describe(Tok t) {
    switch (t) {
    case Tok::atom: return "atom";
    case Tok::kw_not: return "'not'";
    case Tok::dot: return "'.'";
    case Tok::if_: return "':-'";
    case Tok::semicolon: return "';'";
    case Tok::comma: return "','";
    case Tok::end: return "end of input";
    }
    return "?";
}

bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

class Lexer {
public:
    explicit Lexer(std::string_view text) : text_(text) {}

    Token next() {
        skip_blank();
        const SourceSpan start{line_, column_, 1};
        if (pos_ >= text_.size())
            return {Tok::end, {}, {line_, column_, 0}};
        const char c = text_[pos_];
        if (c >= 'a' && c <= 'z') {
            std::size_t end = pos_ + 1;
            while (end < text_.size() && ident_char(text_[end]))
                ++end;
            auto word = text_.substr(pos_, end - pos_);
            advance(end - pos_);
            SourceSpan span = start;
            span.length = word.size();
            return {word == "not" ? Tok::kw_not : Tok::atom, word, span};
        }
        if (c == ':' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '-') {
            advance(2);
            return {Tok::if_, ":-", {start.line, start.column, 2}};
        }
        switch (c) {
        case '.': advance(1); return {Tok::dot, ".", start};
        case ';': advance(1); return {Tok::semicolon, ";", start};
        case ',': advance(1); return {Tok::comma, ",", start};
        default: break;
        }
        throw SyntaxError(std::string("unexpected character '") + c + "'", start);
    }

private:
    void advance(std::size_t n) {
        for (std::size_t i = 0; i < n; ++i, ++pos_) {
            if (text_[pos_] == '\n') {
                ++line_;
                column_ = 1;
            } else {
                ++column_;
            }
        }
    }

    void skip_blank() {
        while (pos_ < text_.size()) {
            const char c = text_[pos_];
            if (c == '%') {
                while (pos_ < text_.size() && text_[pos_] != '\n')
                    advance(1);
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                advance(1);
            } else {
                break;
            }
        }
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    std::size_t line_ = 1;
    std::size_t column_ = 1;
};

class RuleParser {
public:
    explicit RuleParser(std::string_view text) : lexer_(text) { shift(); }

    bool at_end() const { return cur_.kind == Tok::end; }

    Rule rule() {
        const SourceSpan start = cur_.span;
        RawRule raw;
        if (cur_.kind == Tok::atom) {
            raw.head.push_back(atom());
            while (cur_.kind == Tok::semicolon) {
                shift();
                raw.head.push_back(expect_atom());
            }
        }
        if (cur_.kind == Tok::if_) {
            shift();
            literal(raw);
            while (cur_.kind == Tok::comma) {
                shift();
                literal(raw);
            }
        } else if (raw.head.empty() && cur_.kind == Tok::dot) {
            throw EmptyRule(start);
        } else if (raw.head.empty()) {
            unexpected("atom or ':-'");
        }
        if (cur_.kind != Tok::dot)
            unexpected(raw.head.empty() && raw.pos.empty() && raw.neg.empty() ? "atom" : "'.'");
        shift();
        return canonicalize_rule(raw);
    }

private:
    void shift() { cur_ = lexer_.next(); }

    [[noreturn]] void unexpected(const std::string& wanted) {
        throw SyntaxError("expected " + wanted + ", found " + describe(cur_.kind), cur_.span);
    }

    Atom atom() {
        Atom a{std::string(cur_.text)};
        shift();
        return a;
    }

    Atom expect_atom() {
        if (cur_.kind != Tok::atom)
            unexpected("atom");
        return atom();
    }

    void literal(RawRule& raw) {
        if (cur_.kind == Tok::kw_not) {
            shift();
            raw.neg.push_back(expect_atom());
        } else {
            raw.pos.push_back(expect_atom());
        }
    }

    Lexer lexer_;
    Token cur_{Tok::end, {}, {}};
};

void append_joined(std::string& out, const AtomSet& atoms, std::string_view sep, std::string_view prefix = {}) {
    bool first = true;
    for (const auto& a : atoms) {
        if (!first)
            out += sep;
        out += prefix;
        out += a.name();
        first = false;
    }
}

} // namespace

Program parse_program(std::string_view text) {
    RuleParser p(text);
    std::vector<Rule> rules;
    while (!p.at_end())
        rules.push_back(p.rule());
    return Program(std::move(rules));
}

Rule parse_rule(std::string_view text) {
    RuleParser p(text);
    if (p.at_end())
        throw SyntaxError("expected a rule, found end of input", {});
    Rule r = p.rule();
    if (!p.at_end())
        throw SyntaxError("expected a single rule", {});
    return r;
}

ClauseSet parse_clauses(std::string_view text) {
    std::vector<Clause> clauses;
    std::size_t line_no = 0;
    std::size_t begin = 0;
    while (begin <= text.size()) {
        std::size_t end = text.find('\n', begin);
        if (end == std::string_view::npos)
            end = text.size();
        ++line_no;
        std::string_view line = text.substr(begin, end - begin);
        if (auto pct = line.find('%'); pct != std::string_view::npos)
            line = line.substr(0, pct);

        std::size_t i = 0;
        auto skip = [&] {
            while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i])))
                ++i;
        };
        auto fail = [&](const std::string& what) {
            throw SyntaxError(what, {line_no, i + 1, 1});
        };
        skip();
        if (i < line.size()) {
            if (line.substr(i, 2) == "[]") {
                i += 2;
                skip();
                if (i != line.size())
                    fail("unexpected text after empty clause");
                clauses.push_back({});
            } else {
                std::vector<Atom> pos, neg;
                while (true) {
                    skip();
                    bool negative = false;
                    if (i < line.size() && line[i] == '-') {
                        negative = true;
                        ++i;
                        skip();
                    }
                    const std::size_t start = i;
                    if (i < line.size() && line[i] >= 'a' && line[i] <= 'z')
                        while (i < line.size() && ident_char(line[i]))
                            ++i;
                    if (start == i) {
                        i = start;
                        fail("expected atom");
                    }
                    Atom a{std::string(line.substr(start, i - start))};
                    (negative ? neg : pos).push_back(std::move(a));
                    skip();
                    if (i == line.size())
                        break;
                    if (line[i] != '|')
                        fail("expected '|'");
                    ++i;
                }
                clauses.push_back({AtomSet(std::move(pos)), AtomSet(std::move(neg))});
            }
        }
        if (end == text.size())
            break;
        begin = end + 1;
    }
    return ClauseSet(std::move(clauses));
}

std::string format_rule(const Rule& rule) {
    std::string out;
    append_joined(out, rule.head(), " ; ");
    if (!rule.pos().empty() || !rule.neg().empty()) {
        out += rule.head().empty() ? ":- " : " :- ";
        append_joined(out, rule.pos(), ", ");
        if (!rule.pos().empty() && !rule.neg().empty())
            out += ", ";
        append_joined(out, rule.neg(), ", ", "not ");
    }
    out += '.';
    return out;
}

std::string format_program(const Program& program) {
    std::string out;
    for (const auto& r : program) {
        if (!out.empty())
            out += '\n';
        out += format_rule(r);
    }
    return out;
}

std::string format_clause(const Clause& clause) {
    if (clause.empty())
        return "[]";
    std::string out;
    append_joined(out, clause.pos, " | ");
    if (!clause.pos.empty() && !clause.neg.empty())
        out += " | ";
    append_joined(out, clause.neg, " | ", "-");
    return out;
}

std::string format_clauses(const ClauseSet& clauses) {
    std::string out;
    for (const auto& c : clauses) {
        if (!out.empty())
            out += '\n';
        out += format_clause(c);
    }
    return out;
}

std::string format_atom_set(const AtomSet& atoms) {
    std::string out = "{";
    append_joined(out, atoms, ",");
    out += '}';
    return out;
}

std::string format_models(const SEModelSet& models) {
    std::string out;
    for (const auto& [x, y] : models.masks()) {
        if (!out.empty())
            out += ' ';
        const AtomSet xs = models.atoms_of(x);
        out += '(';
        out += xs.empty() ? "∅" : format_atom_set(xs);
        out += ',';
        out += y == 0 ? "∅" : format_atom_set(models.atoms_of(y));
        out += ')';
    }
    return out;
}

std::string format_answer_sets(const std::vector<AtomSet>& answer_sets) {
    std::string out;
    for (const auto& s : answer_sets) {
        if (!out.empty())
            out += ' ';
        out += format_atom_set(s);
    }
    return out;
}

} // namespace seforget
