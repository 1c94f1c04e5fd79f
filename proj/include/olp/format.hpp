#pragma once

// Surface syntax: named modules of rules plus order assertions.
//
//   Name { head :- body.  head.  :- body. }
//   A < B < C            % every A-rule is more preferred than any B-rule
//   A.2 < B.1            % single-rule references, 1-based
//
// Literals are `a` / `-a`, naf is `not a`, ordered disjunction `a * b * c`,
// cr rules use `+:-`, comments run from `%` to end of line.

#include <cctype>
#include <optional>
#include <string>
#include <vector>

#include "olp/core.hpp"

namespace olp::olps {

enum class Dialect { olp, lpod, cr, repair };

inline const char* to_string(Dialect d) {
    switch (d) {
        case Dialect::olp: return "olp";
        case Dialect::lpod: return "lpod";
        case Dialect::cr: return "cr";
        case Dialect::repair: return "repair";
    }
    return "?";
}

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, std::size_t column, const std::string& expected)
        : std::runtime_error("parse error at " + std::to_string(line) + ":" +
                             std::to_string(column) + ": expected " + expected),
          line_(line),
          column_(column) {}
    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

private:
    std::size_t line_, column_;
};

struct SourceRule {
    std::vector<ExtLiteral> head;  // in source order
    std::vector<ExtLiteral> body;
    HeadKind head_kind = HeadKind::plain;
};

struct SourceModule {
    std::string name;
    std::vector<SourceRule> rules;
};

// One module reference inside an order assertion; rule == nullopt addresses
// the whole module.
struct ModuleRef {
    std::string module;
    std::optional<std::size_t> rule;  // 1-based

    std::string to_string() const {
        return rule ? module + "." + std::to_string(*rule) : module;
    }
};

struct OrderAssertion {
    std::vector<ModuleRef> chain;  // m0 < m1 < ... < mn
};

struct SourceDocument {
    std::vector<SourceModule> modules;
    std::vector<OrderAssertion> order_assertions;
    Dialect dialect = Dialect::olp;

    const SourceModule* find(const std::string& name) const {
        for (const SourceModule& m : modules)
            if (m.name == name) return &m;
        return nullptr;
    }
};

// ---------------------------------------------------------------------------
// Parser
// ---------------------------------------------------------------------------

namespace detail {

class Scanner {
public:
    explicit Scanner(std::string_view text) : text_(text) {}

    void skip_space() {
        while (pos_ < text_.size()) {
            char c = text_[pos_];
            if (c == '%') {
                while (pos_ < text_.size() && text_[pos_] != '\n') advance();
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                advance();
            } else {
                break;
            }
        }
    }

    bool eof() {
        skip_space();
        return pos_ >= text_.size();
    }

    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

    bool try_punct(std::string_view p) {
        skip_space();
        if (text_.substr(pos_, p.size()) != p) return false;
        for (std::size_t i = 0; i < p.size(); ++i) advance();
        return true;
    }

    void expect_punct(std::string_view p, const char* what) {
        if (!try_punct(p)) fail(what);
    }

    std::optional<std::string> try_name() {
        skip_space();
        if (pos_ >= text_.size()) return std::nullopt;
        char c = text_[pos_];
        if (!std::isalpha(static_cast<unsigned char>(c)) && c != '_') return std::nullopt;
        std::string out;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
            out.push_back(text_[pos_]);
            advance();
        }
        return out;
    }

    std::optional<std::size_t> try_integer() {
        skip_space();
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
            return std::nullopt;
        std::size_t v = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            v = v * 10 + static_cast<std::size_t>(text_[pos_] - '0');
            advance();
        }
        return v;
    }

    [[noreturn]] void fail(const std::string& expected) {
        skip_space();
        throw ParseError(line_, col_, expected);
    }

private:
    void advance() {
        if (text_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    std::size_t line_ = 1;
    std::size_t col_ = 1;
};

inline ExtLiteral parse_ext_literal(Scanner& sc) {
    bool is_naf = false;
    auto save = sc;
    if (auto n = sc.try_name()) {
        if (*n == "not") {
            is_naf = true;
        } else {
            return ExtLiteral{pos(*n), false};
        }
    } else {
        sc = save;
    }
    bool negative = sc.try_punct("-");
    auto name = sc.try_name();
    if (!name || *name == "not") sc.fail("a literal");
    Literal l{Symbols::intern(*name), !negative};
    return ExtLiteral{l, is_naf};
}

inline SourceRule parse_rule(Scanner& sc, Dialect dialect) {
    SourceRule r;
    bool has_head = !(sc.peek() == ':');
    if (has_head) {
        r.head.push_back(parse_ext_literal(sc));
        while (sc.try_punct("*")) {
            r.head_kind = HeadKind::ordered_disjunctive;
            r.head.push_back(parse_ext_literal(sc));
        }
        if (r.head_kind == HeadKind::ordered_disjunctive && dialect != Dialect::lpod)
            sc.fail("ordered disjunction only in the lpod dialect");
    }
    bool has_body = false;
    if (sc.try_punct("+:-")) {
        if (dialect != Dialect::cr) sc.fail("cr rules only in the cr dialect");
        if (!has_head) sc.fail("cr rule needs a head");
        r.head_kind = HeadKind::cr;
        has_body = true;
    } else if (sc.try_punct(":-")) {
        has_body = true;
    }
    if (has_body && !sc.try_punct(".")) {
        r.body.push_back(parse_ext_literal(sc));
        while (sc.try_punct(",")) r.body.push_back(parse_ext_literal(sc));
        sc.expect_punct(".", "'.'");
    } else if (!has_body) {
        sc.expect_punct(".", "'.'");
    }
    return r;
}

inline ModuleRef parse_ref(Scanner& sc) {
    auto name = sc.try_name();
    if (!name) sc.fail("a module name");
    ModuleRef ref{*name, std::nullopt};
    if (sc.try_punct(".")) {
        auto ix = sc.try_integer();
        if (!ix || *ix == 0) sc.fail("a 1-based rule index");
        ref.rule = *ix;
    }
    return ref;
}

}  // namespace detail

inline SourceDocument parse(std::string_view text, Dialect dialect = Dialect::olp) {
    detail::Scanner sc(text);
    SourceDocument doc;
    doc.dialect = dialect;
    while (!sc.eof()) {
        auto name = sc.try_name();
        if (!name) sc.fail("a module name");
        if (sc.try_punct("{")) {
            if (doc.find(*name)) sc.fail("a unique module name ('" + *name + "' is declared twice)");
            SourceModule m;
            m.name = *name;
            while (!sc.try_punct("}")) {
                if (sc.eof()) sc.fail("'}'");
                m.rules.push_back(detail::parse_rule(sc, dialect));
            }
            doc.modules.push_back(std::move(m));
        } else {
            OrderAssertion a;
            ModuleRef first{*name, std::nullopt};
            if (sc.try_punct(".")) {
                auto ix = sc.try_integer();
                if (!ix || *ix == 0) sc.fail("a 1-based rule index");
                first.rule = *ix;
            }
            a.chain.push_back(first);
            sc.expect_punct("<", "'<' or '{'");
            a.chain.push_back(detail::parse_ref(sc));
            while (sc.try_punct("<")) a.chain.push_back(detail::parse_ref(sc));
            doc.order_assertions.push_back(std::move(a));
        }
    }
    return doc;
}

// ---------------------------------------------------------------------------
// Printer (canonical form; parse . print is stable)
// ---------------------------------------------------------------------------

inline std::string print(const SourceRule& r) {
    std::string s;
    const char* sep = "";
    for (const ExtLiteral& h : r.head) {
        s += sep;
        s += h.to_string();
        sep = " * ";
    }
    const char* arrow = r.head_kind == HeadKind::cr ? "+:-" : ":-";
    if (!r.body.empty() || r.head.empty()) {
        if (!r.head.empty()) s += " ";
        s += arrow;
        sep = " ";
        for (const ExtLiteral& b : r.body) {
            s += sep;
            s += b.to_string();
            sep = ", ";
        }
    }
    return s + ".";
}

// ---------------------------------------------------------------------------
// Database and constraint files (repair dialect)
// ---------------------------------------------------------------------------

// One literal per line, `-` prefix for classical negation.
inline LiteralSet parse_database(std::string_view text) {
    detail::Scanner sc(text);
    LiteralSet out;
    while (!sc.eof()) {
        bool negative = sc.try_punct("-");
        auto name = sc.try_name();
        if (!name) sc.fail("a literal");
        out.insert(Literal{Symbols::intern(*name), !negative});
    }
    return out;
}

// One disjunctive constraint per line, disjuncts separated by `;`.
inline std::vector<std::vector<Literal>> parse_constraints(std::string_view text) {
    std::vector<std::vector<Literal>> out;
    std::size_t line_start = 0;
    std::size_t lineno = 0;
    while (line_start <= text.size()) {
        std::size_t nl = text.find('\n', line_start);
        std::string_view line = text.substr(
            line_start, nl == std::string_view::npos ? std::string_view::npos : nl - line_start);
        ++lineno;
        if (auto cut = line.find('%'); cut != std::string_view::npos) line = line.substr(0, cut);
        bool blank = line.find_first_not_of(" \t\r") == std::string_view::npos;
        if (!blank) {
            detail::Scanner sc(line);
            std::vector<Literal> clause;
            while (true) {
                bool negative = sc.try_punct("-");
                auto name = sc.try_name();
                if (!name) throw ParseError(lineno, 1, "a literal");
                clause.push_back(Literal{Symbols::intern(*name), !negative});
                if (!sc.try_punct(";")) break;
            }
            if (!sc.eof()) throw ParseError(lineno, 1, "';' or end of line");
            out.push_back(std::move(clause));
        }
        if (nl == std::string_view::npos) break;
        line_start = nl + 1;
    }
    return out;
}

inline std::string print(const SourceDocument& doc) {
    std::string out;
    for (const SourceModule& m : doc.modules) {
        out += m.name + " {\n";
        for (const SourceRule& r : m.rules) out += "    " + print(r) + "\n";
        out += "}\n";
    }
    for (const OrderAssertion& a : doc.order_assertions) {
        const char* sep = "";
        for (const ModuleRef& ref : a.chain) {
            out += sep;
            out += ref.to_string();
            sep = " < ";
        }
        out += "\n";
    }
    return out;
}

}  // namespace olp::olps
