#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <deque>
#include <map>
#include <mutex>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "olp/bits.hpp"

namespace olp {

using AtomId = std::uint32_t;
using RuleIdx = std::size_t;
using LabelSet = std::set<RuleIdx>;

// ---------------------------------------------------------------------------
// Symbols
// ---------------------------------------------------------------------------

// Process-wide atom interner. Ids and name references are stable for the
// lifetime of the process; the table only grows.
class Symbols {
public:
    static AtomId intern(std::string_view name) {
        if (name.empty()) throw std::invalid_argument("atom name must be nonempty");
        auto& t = table();
        std::lock_guard lock(t.mutex);
        auto it = t.ids.find(name);
        if (it != t.ids.end()) return it->second;
        AtomId id = static_cast<AtomId>(t.names.size());
        t.names.emplace_back(name);  // deque: earlier references stay valid
        t.ids.emplace(t.names.back(), id);
        return id;
    }

    static const std::string& name(AtomId id) {
        auto& t = table();
        std::lock_guard lock(t.mutex);
        return t.names.at(id);
    }

private:
    struct Table {
        std::mutex mutex;
        std::deque<std::string> names;
        std::map<std::string, AtomId, std::less<>> ids;
    };
    static Table& table() {
        static Table t;
        return t;
    }
};

struct Atom {
    AtomId id;

    static Atom named(std::string_view n) { return Atom{Symbols::intern(n)}; }
    const std::string& name() const { return Symbols::name(id); }
    auto operator<=>(const Atom&) const = default;
};

// A classical literal: an atom or its classical negation.
struct Literal {
    AtomId atom;
    bool positive = true;

    Literal negated() const { return Literal{atom, !positive}; }
    std::string to_string() const { return (positive ? "" : "-") + Symbols::name(atom); }
    auto operator<=>(const Literal&) const = default;
};

inline Literal pos(std::string_view a) { return Literal{Symbols::intern(a), true}; }
inline Literal neg(std::string_view a) { return Literal{Symbols::intern(a), false}; }

// A literal or a naf-literal `not l`. At most one naf wrapper;
// underlying() strips it.
struct ExtLiteral {
    Literal lit;
    bool naf = false;

    Literal underlying() const { return lit; }
    // The ordinary literal an extended literal stands against: `not l`
    // behaves as the complement of l.
    Literal forced_literal() const { return naf ? lit.negated() : lit; }
    std::string to_string() const { return (naf ? "not " : "") + lit.to_string(); }
    auto operator<=>(const ExtLiteral&) const = default;
};

inline ExtLiteral plain(Literal l) { return ExtLiteral{l, false}; }
inline ExtLiteral naf(Literal l) { return ExtLiteral{l, true}; }

using LiteralSet = std::set<Literal>;

inline bool consistent(const LiteralSet& ls) {
    for (const Literal& l : ls)
        if (ls.count(l.negated())) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Rules and programs
// ---------------------------------------------------------------------------

enum class HeadKind { plain, disjunctive, ordered_disjunctive, cr };

struct Rule {
    std::string label;
    std::vector<ExtLiteral> head;  // empty = constraint; ordered for ordered_disjunctive
    std::vector<ExtLiteral> body;
    HeadKind head_kind = HeadKind::plain;

    bool is_constraint() const { return head.empty(); }
    bool has_naf() const {
        auto any_naf = [](const std::vector<ExtLiteral>& v) {
            return std::any_of(v.begin(), v.end(), [](const ExtLiteral& e) { return e.naf; });
        };
        return any_naf(head) || any_naf(body);
    }

    std::string to_string() const {
        std::string s;
        const char* sep = "";
        const char* head_sep = head_kind == HeadKind::ordered_disjunctive ? " * " : " | ";
        for (const auto& h : head) {
            s += sep;
            s += h.to_string();
            sep = head_sep;
        }
        if (!body.empty() || head.empty()) {
            s += head.empty() ? ":- " : " :- ";
            sep = "";
            for (const auto& b : body) {
                s += sep;
                s += b.to_string();
                sep = ", ";
            }
        }
        return s + ".";
    }
};

inline Rule make_rule(std::string label, std::vector<ExtLiteral> head, std::vector<ExtLiteral> body,
                      HeadKind kind = HeadKind::plain) {
    if (kind != HeadKind::ordered_disjunctive) {
        std::sort(head.begin(), head.end());
        head.erase(std::unique(head.begin(), head.end()), head.end());
    }
    std::sort(body.begin(), body.end());
    body.erase(std::unique(body.begin(), body.end()), body.end());
    return Rule{std::move(label), std::move(head), std::move(body), kind};
}

enum class ProgramKind { slp, elp, dlp, lpod, cr };

class Program {
public:
    Program() = default;
    Program(ProgramKind kind, std::vector<Rule> rules) : kind_(kind), rules_(std::move(rules)) {
        validate();
    }

    ProgramKind kind() const { return kind_; }
    const std::vector<Rule>& rules() const { return rules_; }
    const Rule& operator[](RuleIdx i) const { return rules_.at(i); }
    std::size_t size() const { return rules_.size(); }

    bool has_naf() const {
        return std::any_of(rules_.begin(), rules_.end(), [](const Rule& r) { return r.has_naf(); });
    }

    RuleIdx index_of(std::string_view label) const {
        for (RuleIdx i = 0; i < rules_.size(); ++i)
            if (rules_[i].label == label) return i;
        throw std::out_of_range("no rule labeled '" + std::string(label) + "'");
    }

private:
    void validate() const {
        std::set<std::string_view> labels;
        for (const Rule& r : rules_) {
            if (r.label.empty()) throw std::invalid_argument("rule label must be nonempty");
            if (!labels.insert(r.label).second)
                throw std::invalid_argument("duplicate rule label '" + r.label + "'");
            switch (kind_) {
                case ProgramKind::slp:
                    if (r.has_naf()) throw std::invalid_argument("naf in simple program: " + r.to_string());
                    [[fallthrough]];
                case ProgramKind::elp:
                    if (r.head.size() > 1 || r.head_kind != HeadKind::plain)
                        throw std::invalid_argument("non-singleton head: " + r.to_string());
                    break;
                case ProgramKind::dlp:
                    if (r.head_kind == HeadKind::ordered_disjunctive || r.head_kind == HeadKind::cr)
                        throw std::invalid_argument("bad head kind in disjunctive program");
                    for (const auto& h : r.head)
                        if (h.naf) throw std::invalid_argument("naf head in disjunctive program");
                    break;
                case ProgramKind::lpod:
                    if (r.head_kind == HeadKind::ordered_disjunctive) {
                        if (r.head.empty()) throw std::invalid_argument("empty ordered disjunction");
                        std::set<Literal> opts;
                        for (const auto& h : r.head) {
                            if (h.naf) throw std::invalid_argument("naf option in ordered disjunction");
                            if (!opts.insert(h.lit).second)
                                throw std::invalid_argument("duplicate option in ordered disjunction");
                        }
                    } else if (r.head.size() > 1) {
                        throw std::invalid_argument("plain rule with several head literals");
                    }
                    break;
                case ProgramKind::cr:
                    if (r.head.size() > 1)
                        throw std::invalid_argument("non-singleton head: " + r.to_string());
                    if (r.head_kind == HeadKind::cr && r.head.empty())
                        throw std::invalid_argument("cr rule needs a nonempty head");
                    break;
            }
        }
    }

    ProgramKind kind_ = ProgramKind::slp;
    std::vector<Rule> rules_;
};

// ---------------------------------------------------------------------------
// Interpretations
// ---------------------------------------------------------------------------

// A consistent set of classical literals. Construction rejects sets that
// contain an atom together with its negation.
class Interpretation {
public:
    Interpretation() = default;
    explicit Interpretation(LiteralSet lits) : lits_(std::move(lits)) {
        if (!olp::consistent(lits_)) throw std::invalid_argument("inconsistent interpretation");
    }
    Interpretation(std::initializer_list<Literal> ls) : Interpretation(LiteralSet(ls)) {}

    const LiteralSet& literals() const { return lits_; }
    bool contains(Literal l) const { return lits_.count(l) != 0; }
    std::size_t size() const { return lits_.size(); }

    std::string to_string() const {
        std::string s = "{";
        const char* sep = " ";
        for (const Literal& l : lits_) {
            s += sep;
            s += l.to_string();
            sep = ", ";
        }
        return s + " }";
    }

    auto operator<=>(const Interpretation&) const = default;

private:
    LiteralSet lits_;
};

// Result of the least-model closure: the derived literal set plus a flag
// recording whether some constraint body became derivable.
struct StarResult {
    LiteralSet literals;
    bool bottom = false;

    bool consistent() const { return !bottom && olp::consistent(literals); }
};

// ---------------------------------------------------------------------------
// Herbrand base and truth
// ---------------------------------------------------------------------------

inline std::set<AtomId> herbrand_base(const Program& p) {
    std::set<AtomId> atoms;
    for (const Rule& r : p.rules()) {
        for (const auto& e : r.head) atoms.insert(e.lit.atom);
        for (const auto& e : r.body) atoms.insert(e.lit.atom);
    }
    return atoms;
}

inline bool holds(const Interpretation& i, const ExtLiteral& e) {
    return e.naf ? !i.contains(e.lit) : i.contains(e.lit);
}

inline bool holds_all(const Interpretation& i, const std::vector<ExtLiteral>& es) {
    return std::all_of(es.begin(), es.end(), [&](const ExtLiteral& e) { return holds(i, e); });
}

inline bool applicable(const Interpretation& i, const Rule& r) { return holds_all(i, r.body); }

inline bool applied(const Interpretation& i, const Rule& r) {
    if (!applicable(i, r)) return false;
    return std::any_of(r.head.begin(), r.head.end(), [&](const ExtLiteral& h) { return holds(i, h); });
}

// A rule is satisfied when, if applicable, it is applied. A constraint is
// satisfied exactly when it is not applicable.
inline bool satisfies(const Interpretation& i, const Rule& r) {
    if (!applicable(i, r)) return true;
    return std::any_of(r.head.begin(), r.head.end(), [&](const ExtLiteral& h) { return holds(i, h); });
}

// Labels of the rules of p satisfied by i.
inline LabelSet reduct(const Program& p, const Interpretation& i) {
    LabelSet out;
    for (RuleIdx k = 0; k < p.size(); ++k)
        if (satisfies(i, p[k])) out.insert(k);
    return out;
}

// Whether two head literals compete: accepting one enforces rejecting the
// other ({a, -a}, {a, not a}, {-a, not -a}, {not a, not -a}).
inline bool heads_compete(const ExtLiteral& a, const ExtLiteral& b) {
    return a.forced_literal() == b.forced_literal().negated();
}

// A rule with nonempty head is defeated when some applied rule carries a
// competing head. Constraints are never defeated.
inline bool defeated(const Rule& r, const Interpretation& i, const Program& p) {
    if (r.is_constraint()) return false;
    if (r.head.size() != 1)
        throw std::invalid_argument("defeat is defined for single-headed rules only");
    const ExtLiteral& h = r.head.front();
    for (const Rule& other : p.rules()) {
        if (other.head.size() != 1) continue;
        if (heads_compete(h, other.head.front()) && applied(i, other)) return true;
    }
    return false;
}

// ---------------------------------------------------------------------------
// Star closure
// ---------------------------------------------------------------------------

// Least fixpoint of the naf-free rules, with classical negations treated as
// fresh atoms and constraints firing the bottom flag.
inline StarResult star_closure(std::span<const Rule> rules) {
    for (const Rule& r : rules) {
        if (r.has_naf()) throw std::invalid_argument("star closure requires naf-free rules");
        if (r.head.size() > 1)
            throw std::invalid_argument("star closure requires single-headed rules");
    }
    StarResult out;
    bool changed = true;
    while (changed) {
        changed = false;
        for (const Rule& r : rules) {
            bool body_true = std::all_of(r.body.begin(), r.body.end(), [&](const ExtLiteral& e) {
                return out.literals.count(e.lit) != 0;
            });
            if (!body_true) continue;
            if (r.is_constraint()) {
                if (!out.bottom) {
                    out.bottom = true;
                    changed = true;
                }
            } else if (out.literals.insert(r.head.front().lit).second) {
                changed = true;
            }
        }
    }
    return out;
}

inline StarResult star_closure(const Program& p, const LabelSet& labels) {
    std::vector<Rule> rules;
    rules.reserve(labels.size());
    for (RuleIdx k : labels) rules.push_back(p[k]);
    return star_closure(rules);
}

inline StarResult star_closure(const Program& p) {
    return star_closure(std::span<const Rule>(p.rules()));
}

// ---------------------------------------------------------------------------
// Strict partial orders on rules
// ---------------------------------------------------------------------------

class CycleError : public std::invalid_argument {
public:
    explicit CycleError(std::vector<RuleIdx> cycle)
        : std::invalid_argument("order relation contains a cycle"), cycle_(std::move(cycle)) {}
    const std::vector<RuleIdx>& cycle() const { return cycle_; }

private:
    std::vector<RuleIdx> cycle_;
};

// A finite strict partial order over rule indices 0..n-1, stored transitively
// closed. lower <-> more preferred.
class StrictOrder {
public:
    StrictOrder() = default;
    explicit StrictOrder(std::size_t domain)
        : n_(domain), below_(domain, detail::Bits(domain)), above_(domain, detail::Bits(domain)) {}

    // Builds the transitive closure of the given edges (less, greater) and
    // rejects cyclic input.
    static StrictOrder from_edges(std::size_t domain,
                                  const std::vector<std::pair<RuleIdx, RuleIdx>>& edges) {
        StrictOrder o(domain);
        std::vector<std::vector<RuleIdx>> succ(domain);
        for (auto [less, greater] : edges) {
            if (less >= domain || greater >= domain)
                throw std::invalid_argument("order edge outside domain");
            succ[less].push_back(greater);
        }
        // DFS from each node; grey-node revisit exposes a cycle.
        std::vector<int> color(domain, 0);
        std::vector<RuleIdx> stack;
        auto dfs = [&](auto&& self, RuleIdx u) -> void {
            color[u] = 1;
            stack.push_back(u);
            for (RuleIdx v : succ[u]) {
                if (color[v] == 1) {
                    auto it = std::find(stack.begin(), stack.end(), v);
                    throw CycleError(std::vector<RuleIdx>(it, stack.end()));
                }
                if (color[v] == 0) self(self, v);
                o.above_[u].set(v);
                o.above_[u] |= o.above_[v];
            }
            color[u] = 2;
            stack.pop_back();
        };
        for (RuleIdx u = 0; u < domain; ++u)
            if (color[u] == 0) dfs(dfs, u);
        for (RuleIdx u = 0; u < domain; ++u)
            o.above_[u].for_each([&](std::size_t v) { o.below_[v].set(u); });
        return o;
    }

    std::size_t domain() const { return n_; }
    bool less(RuleIdx a, RuleIdx b) const { return above_[a].test(b); }
    const detail::Bits& below(RuleIdx x) const { return below_[x]; }
    const detail::Bits& above(RuleIdx x) const { return above_[x]; }

    bool is_minimal(RuleIdx x) const { return below_[x].none(); }

    std::size_t edge_count() const {
        std::size_t n = 0;
        for (const auto& b : above_) n += b.count();
        return n;
    }

private:
    std::size_t n_ = 0;
    std::vector<detail::Bits> below_;  // below_[x] = { u | u < x }
    std::vector<detail::Bits> above_;  // above_[x] = { v | x < v }
};

// { u | exists x in xs with u < x }
inline LabelSet down_closure(const LabelSet& xs, const StrictOrder& o) {
    LabelSet out;
    for (RuleIdx x : xs) {
        if (x >= o.domain()) throw std::invalid_argument("label outside order domain");
        o.below(x).for_each([&](std::size_t u) { out.insert(u); });
    }
    return out;
}

struct OrderedProgram {
    Program program;
    StrictOrder order;

    OrderedProgram() = default;
    OrderedProgram(Program p, StrictOrder o) : program(std::move(p)), order(std::move(o)) {
        if (order.domain() != program.size())
            throw std::invalid_argument("order domain must match the rule set");
    }
};

// Seminegative fragment: all literals range over atoms, naf in bodies only.
inline void require_seminegative(const Program& p, bool allow_disjunction) {
    for (const Rule& r : p.rules()) {
        if (!allow_disjunction && r.head.size() > 1)
            throw std::invalid_argument("disjunctive head in seminegative normal program");
        for (const ExtLiteral& e : r.head)
            if (e.naf || !e.lit.positive)
                throw std::invalid_argument("seminegative programs range over atoms");
        for (const ExtLiteral& e : r.body)
            if (!e.lit.positive) throw std::invalid_argument("seminegative programs range over atoms");
    }
}

}  // namespace olp
