#pragma once

// Brute-force reference implementations for differential testing. Everything
// here is written directly from the definitions over plain literal sets and
// stays independent of the compiled solver machinery.

#include <map>
#include <optional>
#include <vector>

#include "olp/core.hpp"
#include "olp/semantics.hpp"

namespace olp::oracle {

using semantics::SizeLimitError;

namespace detail {

inline std::vector<AtomId> sorted_base(const Program& p) {
    std::set<AtomId> base = herbrand_base(p);
    std::vector<AtomId> atoms(base.begin(), base.end());
    std::sort(atoms.begin(), atoms.end(),
              [](AtomId a, AtomId b) { return Symbols::name(a) < Symbols::name(b); });
    return atoms;
}

inline void guard_atoms(const Program& p, std::size_t limit, const char* who) {
    std::size_t n = herbrand_base(p).size();
    if (n > limit)
        throw SizeLimitError(std::string(who) + " limited to " + std::to_string(limit) +
                             " atoms, got " + std::to_string(n));
}

inline bool lit_true(const LiteralSet& s, const ExtLiteral& e) {
    return e.naf ? !s.count(e.lit) : s.count(e.lit) != 0;
}
inline bool body_true(const LiteralSet& s, const Rule& r) {
    return std::all_of(r.body.begin(), r.body.end(),
                       [&](const ExtLiteral& e) { return lit_true(s, e); });
}
inline bool head_true(const LiteralSet& s, const Rule& r) {
    return std::any_of(r.head.begin(), r.head.end(),
                       [&](const ExtLiteral& e) { return lit_true(s, e); });
}
inline bool rule_satisfied(const LiteralSet& s, const Rule& r) {
    return !body_true(s, r) || head_true(s, r);
}

// GL transform followed by the least-model computation, literals as atoms.
// Returns nothing when a kept constraint fires.
inline std::optional<LiteralSet> gl_least_model(const std::vector<Rule>& rules,
                                                const LiteralSet& s) {
    struct Simple {
        std::optional<Literal> head;
        std::vector<Literal> body;
    };
    std::vector<Simple> kept;
    for (const Rule& r : rules) {
        bool keep = true;
        Simple k;
        for (const ExtLiteral& e : r.body) {
            if (e.naf && s.count(e.lit)) keep = false;
            if (!e.naf) k.body.push_back(e.lit);
        }
        for (const ExtLiteral& e : r.head) {
            if (e.naf && !s.count(e.lit)) keep = false;
            if (!e.naf) k.head = e.lit;
        }
        if (keep) kept.push_back(std::move(k));
    }
    LiteralSet least;
    bool changed = true;
    while (changed) {
        changed = false;
        for (const Simple& k : kept) {
            bool fire = std::all_of(k.body.begin(), k.body.end(),
                                    [&](const Literal& l) { return least.count(l) != 0; });
            if (!fire) continue;
            if (!k.head) return std::nullopt;
            if (least.insert(*k.head).second) changed = true;
        }
    }
    return least;
}

inline bool is_answer_set(const std::vector<Rule>& rules, const LiteralSet& s) {
    auto least = gl_least_model(rules, s);
    return least && *least == s;
}

// Enumerates consistent literal sets over the base, calling f on each.
template <typename F>
void each_candidate(const std::vector<AtomId>& atoms, F&& f) {
    LiteralSet s;
    auto rec = [&](auto&& self, std::size_t i) -> void {
        if (i == atoms.size()) {
            f(s);
            return;
        }
        self(self, i + 1);
        s.insert(Literal{atoms[i], true});
        self(self, i + 1);
        s.erase(Literal{atoms[i], true});
        s.insert(Literal{atoms[i], false});
        self(self, i + 1);
        s.erase(Literal{atoms[i], false});
    };
    rec(rec, 0);
}

template <typename F>
void each_atom_subset(const std::vector<AtomId>& atoms, F&& f) {
    LiteralSet s;
    auto rec = [&](auto&& self, std::size_t i) -> void {
        if (i == atoms.size()) {
            f(s);
            return;
        }
        self(self, i + 1);
        s.insert(Literal{atoms[i], true});
        self(self, i + 1);
        s.erase(Literal{atoms[i], true});
    };
    rec(rec, 0);
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Stable and minimal model references
// ---------------------------------------------------------------------------

inline std::vector<LiteralSet> stable_models(const Program& p, std::size_t max_atoms = 12) {
    require_seminegative(p, false);
    detail::guard_atoms(p, max_atoms, "stable model enumeration");
    std::vector<LiteralSet> out;
    detail::each_atom_subset(detail::sorted_base(p), [&](const LiteralSet& s) {
        if (detail::is_answer_set(p.rules(), s)) out.push_back(s);
    });
    return out;
}

inline bool is_closed_model(const Program& p, const LiteralSet& s) {
    return std::all_of(p.rules().begin(), p.rules().end(),
                       [&](const Rule& r) { return detail::rule_satisfied(s, r); });
}

inline std::vector<LiteralSet> minimal_models(const Program& p, std::size_t max_atoms = 12) {
    require_seminegative(p, true);
    for (const Rule& r : p.rules())
        for (const ExtLiteral& e : r.body)
            if (e.naf) throw std::invalid_argument("minimal models require a positive program");
    detail::guard_atoms(p, max_atoms, "minimal model enumeration");
    std::vector<LiteralSet> models;
    detail::each_atom_subset(detail::sorted_base(p), [&](const LiteralSet& s) {
        if (is_closed_model(p, s)) models.push_back(s);
    });
    std::vector<LiteralSet> out;
    for (const LiteralSet& m : models) {
        bool minimal = std::none_of(models.begin(), models.end(), [&](const LiteralSet& o) {
            return o != m && std::includes(m.begin(), m.end(), o.begin(), o.end());
        });
        if (minimal) out.push_back(m);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Split programs and possible models
// ---------------------------------------------------------------------------

// Applies f to every split program (each disjunctive head replaced by a
// nonempty subset of its options).
template <typename F>
void each_split_program(const Program& p, F&& f) {
    std::vector<Rule> split;
    auto rec = [&](auto&& self, std::size_t i) -> void {
        if (i == p.size()) {
            f(split);
            return;
        }
        const Rule& r = p[i];
        if (r.head.size() <= 1) {
            split.push_back(r);
            self(self, i + 1);
            split.pop_back();
            return;
        }
        std::size_t n = r.head.size();
        for (std::size_t mask = 1; mask < (std::size_t(1) << n); ++mask) {
            std::size_t added = 0;
            for (std::size_t j = 0; j < n; ++j) {
                if (!(mask >> j & 1)) continue;
                split.push_back(make_rule(r.label + "/" + std::to_string(j), {r.head[j]}, r.body));
                ++added;
            }
            self(self, i + 1);
            while (added--) split.pop_back();
        }
    };
    rec(rec, 0);
}

inline std::vector<LiteralSet> possible_models(const Program& p, std::size_t max_atoms = 12) {
    require_seminegative(p, true);
    detail::guard_atoms(p, max_atoms, "possible model enumeration");
    std::set<LiteralSet> found;
    const std::vector<AtomId> atoms = detail::sorted_base(p);
    each_split_program(p, [&](const std::vector<Rule>& split) {
        detail::each_atom_subset(atoms, [&](const LiteralSet& s) {
            if (detail::is_answer_set(split, s)) found.insert(s);
        });
    });
    return {found.begin(), found.end()};
}

inline std::vector<LiteralSet> minimal_sets(const std::vector<LiteralSet>& sets) {
    std::vector<LiteralSet> out;
    for (const LiteralSet& m : sets) {
        bool minimal = std::none_of(sets.begin(), sets.end(), [&](const LiteralSet& o) {
            return o != m && std::includes(m.begin(), m.end(), o.begin(), o.end());
        });
        if (minimal) out.push_back(m);
    }
    return out;
}

// Classical answer sets of a seminegative disjunctive program: minimal models
// of the GL reduct.
inline std::vector<LiteralSet> dlp_answer_sets(const Program& p, std::size_t max_atoms = 12) {
    require_seminegative(p, true);
    detail::guard_atoms(p, max_atoms, "disjunctive answer set enumeration");
    const std::vector<AtomId> atoms = detail::sorted_base(p);
    std::vector<LiteralSet> out;
    detail::each_atom_subset(atoms, [&](const LiteralSet& s) {
        std::vector<Rule> kept;
        for (const Rule& r : p.rules()) {
            bool keep = true;
            std::vector<ExtLiteral> body;
            for (const ExtLiteral& e : r.body) {
                if (e.naf && s.count(e.lit)) keep = false;
                if (!e.naf) body.push_back(e);
            }
            if (keep) kept.push_back(make_rule(r.label, r.head, std::move(body), r.head_kind));
        }
        Program reduct(ProgramKind::dlp, std::move(kept));
        if (!is_closed_model(reduct, s)) return;
        bool minimal = true;
        detail::each_atom_subset(atoms, [&](const LiteralSet& t) {
            if (minimal && t != s && std::includes(s.begin(), s.end(), t.begin(), t.end()) &&
                is_closed_model(reduct, t))
                minimal = false;
        });
        if (minimal) out.push_back(s);
    });
    return out;
}

// ---------------------------------------------------------------------------
// Ordered disjunction
// ---------------------------------------------------------------------------

// Degree to which an answer set satisfies an ordered-disjunctive rule:
// 1 when the body is false, otherwise the rank of the first option present.
inline std::size_t lpod_degree(const LiteralSet& s, const Rule& r) {
    if (!detail::body_true(s, r)) return 1;
    for (std::size_t i = 0; i < r.head.size(); ++i)
        if (s.count(r.head[i].lit)) return i + 1;
    throw std::logic_error("degree undefined: applicable rule with no option present");
}

struct DegreeProfile {
    std::vector<std::size_t> degree;  // per rule, aligned with program order

    static DegreeProfile of(const LiteralSet& s, const Program& lpod) {
        DegreeProfile d;
        for (const Rule& r : lpod.rules()) d.degree.push_back(lpod_degree(s, r));
        return d;
    }
};

// s1 strictly better than s2: at the first level where their satisfaction
// sets differ, s1 satisfies a strict superset of rules.
inline bool lpod_prefer(const DegreeProfile& d1, const DegreeProfile& d2, const Program& lpod) {
    std::size_t max_deg = 1;
    for (const Rule& r : lpod.rules()) max_deg = std::max(max_deg, r.head.size());
    for (std::size_t k = 1; k <= max_deg; ++k) {
        std::set<std::size_t> s1k, s2k;
        for (std::size_t i = 0; i < lpod.size(); ++i) {
            if (d1.degree[i] == k) s1k.insert(i);
            if (d2.degree[i] == k) s2k.insert(i);
        }
        if (s1k == s2k) continue;
        return s2k != s1k && std::includes(s1k.begin(), s1k.end(), s2k.begin(), s2k.end());
    }
    return false;
}

// Each ordered-disjunctive rule is replaced by one of its options
// a_k <- body, not a_1, ..., not a_{k-1}; answer sets of the resulting
// programs are the LPOD answer sets.
inline std::vector<LiteralSet> lpod_answer_sets(const Program& lpod, std::size_t max_atoms = 10) {
    detail::guard_atoms(lpod, max_atoms, "ordered disjunction enumeration");
    std::set<LiteralSet> found;
    std::vector<Rule> option;
    auto rec = [&](auto&& self, std::size_t i) -> void {
        if (i == lpod.size()) {
            detail::each_candidate(detail::sorted_base(lpod), [&](const LiteralSet& s) {
                if (olp::consistent(s) && detail::is_answer_set(option, s)) found.insert(s);
            });
            return;
        }
        const Rule& r = lpod[i];
        if (r.head_kind != HeadKind::ordered_disjunctive) {
            option.push_back(r);
            self(self, i + 1);
            option.pop_back();
            return;
        }
        for (std::size_t k = 0; k < r.head.size(); ++k) {
            std::vector<ExtLiteral> body = r.body;
            for (std::size_t j = 0; j < k; ++j) body.push_back(naf(r.head[j].lit));
            option.push_back(make_rule(r.label + "^" + std::to_string(k + 1), {r.head[k]}, body));
            self(self, i + 1);
            option.pop_back();
        }
    };
    rec(rec, 0);
    return {found.begin(), found.end()};
}

inline std::vector<LiteralSet> lpod_preferred(const Program& lpod, std::size_t max_atoms = 10) {
    std::vector<LiteralSet> all = lpod_answer_sets(lpod, max_atoms);
    std::vector<DegreeProfile> profiles;
    for (const LiteralSet& s : all) profiles.push_back(DegreeProfile::of(s, lpod));
    std::vector<LiteralSet> out;
    for (std::size_t a = 0; a < all.size(); ++a) {
        bool minimal = true;
        for (std::size_t b = 0; b < all.size() && minimal; ++b)
            if (b != a && lpod_prefer(profiles[b], profiles[a], lpod)) minimal = false;
        if (minimal) out.push_back(all[a]);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Preferred answer sets by exhaustion
// ---------------------------------------------------------------------------

namespace detail {

inline Literal forced(const ExtLiteral& e) { return e.naf ? e.lit.negated() : e.lit; }

inline bool rule_defeated(const LiteralSet& s, const Rule& r, const Program& p) {
    if (r.head.empty()) return false;
    for (const Rule& o : p.rules()) {
        if (o.head.empty()) continue;
        if (forced(o.head.front()) != forced(r.head.front()).negated()) continue;
        if (body_true(s, o) && lit_true(s, o.head.front())) return true;
    }
    return false;
}

inline bool brute_extended(const LiteralSet& s, const Program& p) {
    std::vector<Rule> reduct;
    for (const Rule& r : p.rules()) {
        if (rule_satisfied(s, r))
            reduct.push_back(r);
        else if (!rule_defeated(s, r, p))
            return false;
    }
    return is_answer_set(reduct, s);
}

inline bool brute_preceq(const LabelSet& r1, const LabelSet& r2, const StrictOrder& o) {
    for (RuleIdx x : r2) {
        if (r1.count(x)) continue;
        bool countered = false;
        for (RuleIdx y : r1)
            if (!r2.count(y) && o.less(y, x)) countered = true;
        if (!countered) return false;
    }
    return true;
}

}  // namespace detail

inline std::vector<Interpretation> brute_force_extended(const Program& p,
                                                        std::size_t max_atoms = 10) {
    detail::guard_atoms(p, max_atoms, "extended answer set exhaustion");
    std::vector<Interpretation> out;
    detail::each_candidate(detail::sorted_base(p), [&](const LiteralSet& s) {
        if (detail::brute_extended(s, p)) out.push_back(Interpretation(s));
    });
    std::sort(out.begin(), out.end());
    return out;
}

// All consistent literal sets, filtered to extended answer sets, then the
// preference-minimal ones kept. With naf present, answer sets with equal
// reducts are incomparable.
inline std::vector<Interpretation> brute_force_preferred(const OrderedProgram& op,
                                                         std::size_t max_atoms = 10) {
    std::vector<Interpretation> eas = brute_force_extended(op.program, max_atoms);
    std::vector<LabelSet> reducts;
    for (const Interpretation& i : eas) {
        LabelSet red;
        for (RuleIdx k = 0; k < op.program.size(); ++k)
            if (detail::rule_satisfied(i.literals(), op.program[k])) red.insert(k);
        reducts.push_back(std::move(red));
    }
    const bool eolp = op.program.has_naf();
    std::vector<Interpretation> out;
    for (std::size_t a = 0; a < eas.size(); ++a) {
        bool minimal = true;
        for (std::size_t b = 0; b < eas.size() && minimal; ++b) {
            if (a == b) continue;
            if (eolp && reducts[a] == reducts[b]) continue;
            if (detail::brute_preceq(reducts[b], reducts[a], op.order) &&
                !detail::brute_preceq(reducts[a], reducts[b], op.order))
                minimal = false;
        }
        if (minimal) out.push_back(eas[a]);
    }
    return out;
}

inline std::vector<Interpretation> brute_force_proper_preferred(const OrderedProgram& op,
                                                                std::size_t max_atoms = 10) {
    std::vector<Interpretation> out;
    for (const Interpretation& m : brute_force_preferred(op, max_atoms)) {
        bool proper = true;
        for (RuleIdx k = 0; k < op.program.size() && proper; ++k)
            if (op.order.is_minimal(k) && !detail::rule_satisfied(m.literals(), op.program[k]))
                proper = false;
        if (proper) out.push_back(m);
    }
    return out;
}

}  // namespace olp::oracle
