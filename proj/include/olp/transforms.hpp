#pragma once

#include <string>
#include <vector>

#include "olp/core.hpp"
#include "olp/prefsolve.hpp"
#include "olp/semantics.hpp"

namespace olp::transforms {

// ---------------------------------------------------------------------------
// Fresh atoms
// ---------------------------------------------------------------------------
// Generated names carry a quote character, which the surface syntax never
// produces, so they cannot collide with user atoms. The encoding is
// deterministic and reversible.

inline Literal fresh_prime(const Literal& l) {
    return pos(Symbols::name(l.atom) + (l.positive ? "'p" : "'n"));
}
inline Literal fresh_not(const Literal& l) {
    return pos(Symbols::name(l.atom) + (l.positive ? "'o" : "'on"));
}
inline Literal phi(const ExtLiteral& e) { return e.naf ? fresh_not(e.lit) : fresh_prime(e.lit); }

inline LiteralSet project(const LiteralSet& lits, const std::set<AtomId>& base) {
    LiteralSet out;
    for (const Literal& l : lits)
        if (base.count(l.atom)) out.insert(l);
    return out;
}

inline std::vector<ExtLiteral> phi_all(const std::vector<ExtLiteral>& es) {
    std::vector<ExtLiteral> out;
    out.reserve(es.size());
    for (const ExtLiteral& e : es) out.push_back(plain(phi(e)));
    return out;
}

// ---------------------------------------------------------------------------
// Simple programs to extended programs
// ---------------------------------------------------------------------------

// Guards every head rule with `not -a`, so a defeated rule simply becomes
// inapplicable; constraints pass through.
inline Program slp_to_elp(const Program& p) {
    if (p.has_naf()) throw std::invalid_argument("input must be a simple program");
    std::vector<Rule> rules;
    for (const Rule& r : p.rules()) {
        if (r.head.size() > 1) throw std::invalid_argument("input must be a simple program");
        std::vector<ExtLiteral> body = r.body;
        if (!r.is_constraint()) body.push_back(naf(r.head.front().lit.negated()));
        rules.push_back(make_rule(r.label, r.head, std::move(body)));
    }
    return Program(ProgramKind::elp, std::move(rules));
}

// Removes naf from rule heads: a head literal gains `not -a, not a°` guards,
// a head `not a` becomes a fresh a° derived under `not a`.
inline Program elp_remove_naf_heads(const Program& p) {
    std::vector<Rule> rules;
    for (const Rule& r : p.rules()) {
        if (r.head.size() > 1) throw std::invalid_argument("input must be an extended program");
        if (r.is_constraint()) {
            rules.push_back(r);
            continue;
        }
        const ExtLiteral& h = r.head.front();
        std::vector<ExtLiteral> body = r.body;
        if (!h.naf) {
            body.push_back(naf(h.lit.negated()));
            body.push_back(naf(fresh_not(h.lit)));
            rules.push_back(make_rule(r.label, {h}, std::move(body)));
        } else {
            body.push_back(naf(h.lit));
            rules.push_back(make_rule(r.label, {plain(fresh_not(h.lit))}, std::move(body)));
        }
    }
    return Program(ProgramKind::elp, std::move(rules));
}

// ---------------------------------------------------------------------------
// Negation as failure via order
// ---------------------------------------------------------------------------

namespace detail {

inline void layer_edges(std::vector<std::pair<RuleIdx, RuleIdx>>& edges,
                        const std::vector<RuleIdx>& lower, const std::vector<RuleIdx>& upper) {
    for (RuleIdx a : lower)
        for (RuleIdx b : upper) edges.emplace_back(a, b);
}

inline std::vector<AtomId> name_sorted(const std::set<AtomId>& base) {
    std::vector<AtomId> atoms(base.begin(), base.end());
    std::sort(atoms.begin(), atoms.end(),
              [](AtomId a, AtomId b) { return Symbols::name(a) < Symbols::name(b); });
    return atoms;
}

}  // namespace detail

// Seminegative normal program: naf becomes classical negation, with a layer of
// negative defaults above the translated rules.
inline OrderedProgram naf_sim(const Program& p) {
    require_seminegative(p, false);
    std::vector<Rule> rules;
    std::vector<RuleIdx> translated, defaults;
    for (const Rule& r : p.rules()) {
        std::vector<ExtLiteral> body;
        for (const ExtLiteral& e : r.body) body.push_back(plain(e.naf ? e.lit.negated() : e.lit));
        translated.push_back(rules.size());
        rules.push_back(make_rule(r.label, r.head, std::move(body)));
    }
    for (AtomId a : detail::name_sorted(herbrand_base(p))) {
        defaults.push_back(rules.size());
        rules.push_back(make_rule("~" + Symbols::name(a), {plain(Literal{a, false})}, {}));
    }
    std::vector<std::pair<RuleIdx, RuleIdx>> edges;
    detail::layer_edges(edges, translated, defaults);
    return OrderedProgram(Program(ProgramKind::slp, std::move(rules)),
                          StrictOrder::from_edges(rules.size(), edges));
}

// Positive disjunctive program: totality guess above, shifted rules with
// classical negation below.
inline OrderedProgram disj_sim(const Program& p) {
    require_seminegative(p, true);
    for (const Rule& r : p.rules()) {
        if (r.is_constraint()) throw std::invalid_argument("input must be constraint-free");
        for (const ExtLiteral& e : r.body)
            if (e.naf) throw std::invalid_argument("input must be a positive program");
    }
    std::vector<Rule> rules;
    std::vector<RuleIdx> shifted, negative, positive;
    for (const Rule& r : p.rules()) {
        for (const ExtLiteral& opt : r.head) {
            std::vector<ExtLiteral> body = r.body;
            for (const ExtLiteral& other : r.head)
                if (other.lit != opt.lit) body.push_back(plain(other.lit.negated()));
            shifted.push_back(rules.size());
            rules.push_back(
                make_rule(r.label + "/" + opt.lit.to_string(), {plain(opt.lit)}, std::move(body)));
        }
    }
    for (AtomId a : detail::name_sorted(herbrand_base(p))) {
        negative.push_back(rules.size());
        rules.push_back(make_rule("-" + Symbols::name(a), {plain(Literal{a, false})}, {}));
    }
    for (AtomId a : detail::name_sorted(herbrand_base(p))) {
        positive.push_back(rules.size());
        rules.push_back(make_rule("+" + Symbols::name(a), {plain(Literal{a, true})}, {}));
    }
    std::vector<std::pair<RuleIdx, RuleIdx>> edges;
    detail::layer_edges(edges, shifted, negative);
    detail::layer_edges(edges, negative, positive);
    return OrderedProgram(Program(ProgramKind::slp, std::move(rules)),
                          StrictOrder::from_edges(rules.size(), edges));
}

// Seminegative disjunctive program: a choice layer applies disjunctive rules,
// a negative layer minimizes, a shifted layer enforces modelhood.
inline OrderedProgram disj_naf_sim(const Program& p) {
    require_seminegative(p, true);
    for (const Rule& r : p.rules())
        if (r.is_constraint()) throw std::invalid_argument("input must be constraint-free");
    auto classical_body = [](const Rule& r) {
        std::vector<ExtLiteral> body;
        for (const ExtLiteral& e : r.body) body.push_back(plain(e.naf ? e.lit.negated() : e.lit));
        return body;
    };
    std::vector<Rule> rules;
    std::vector<RuleIdx> shifted, negative, choice;
    for (const Rule& r : p.rules()) {
        for (const ExtLiteral& opt : r.head) {
            std::vector<ExtLiteral> body = classical_body(r);
            for (const ExtLiteral& other : r.head)
                if (other.lit != opt.lit) body.push_back(plain(other.lit.negated()));
            shifted.push_back(rules.size());
            rules.push_back(
                make_rule(r.label + "/" + opt.lit.to_string(), {plain(opt.lit)}, std::move(body)));
        }
    }
    for (AtomId a : detail::name_sorted(herbrand_base(p))) {
        negative.push_back(rules.size());
        rules.push_back(make_rule("-" + Symbols::name(a), {plain(Literal{a, false})}, {}));
    }
    for (const Rule& r : p.rules()) {
        for (const ExtLiteral& opt : r.head) {
            choice.push_back(rules.size());
            rules.push_back(make_rule(r.label + "!" + opt.lit.to_string(), {plain(opt.lit)},
                                      classical_body(r)));
        }
    }
    std::vector<std::pair<RuleIdx, RuleIdx>> edges;
    detail::layer_edges(edges, shifted, negative);
    detail::layer_edges(edges, negative, choice);
    return OrderedProgram(Program(ProgramKind::slp, std::move(rules)),
                          StrictOrder::from_edges(rules.size(), edges));
}

// ---------------------------------------------------------------------------
// Extended ordered programs to ordered programs
// ---------------------------------------------------------------------------

// Every extended literal maps to an independent fresh atom; applying a
// translated rule also derives the negations of its head's rivals, which is
// what makes indirect defeat work. A most preferred layer restores
// consistency and translates back, a least preferred layer provides naf
// defaults.
inline OrderedProgram eolp_to_olp(const OrderedProgram& op) {
    const Program& p = op.program;
    std::vector<Rule> rules;
    std::vector<RuleIdx> r_c, r_n;
    // images of the non-constraint rules; the original order carries over on
    // these only, while constraints always join the most preferred layer
    std::vector<std::vector<RuleIdx>> images(p.size());

    std::vector<Literal> base_lits;
    for (AtomId a : detail::name_sorted(herbrand_base(p))) {
        base_lits.push_back(Literal{a, true});
        base_lits.push_back(Literal{a, false});
    }

    // R_c: translated constraints, consistency checks, back-translations.
    for (RuleIdx k = 0; k < p.size(); ++k) {
        const Rule& r = p[k];
        if (!r.is_constraint()) continue;
        r_c.push_back(rules.size());
        rules.push_back(make_rule(r.label, {}, phi_all(r.body)));
    }
    for (const Literal& l : base_lits) {
        r_c.push_back(rules.size());
        rules.push_back(make_rule("chk!" + l.to_string(), {},
                                  {plain(fresh_prime(l)), plain(fresh_not(l))}));
        if (l.positive) {
            r_c.push_back(rules.size());
            rules.push_back(make_rule("chk-" + l.to_string(), {},
                                      {plain(fresh_prime(l)), plain(fresh_prime(l.negated()))}));
        }
        r_c.push_back(rules.size());
        rules.push_back(make_rule("out!" + l.to_string(), {plain(l)}, {plain(fresh_prime(l))}));
    }

    // R': translated rules with their defeat enablers.
    for (RuleIdx k = 0; k < p.size(); ++k) {
        const Rule& r = p[k];
        if (r.is_constraint()) continue;
        const ExtLiteral& h = r.head.front();
        std::vector<ExtLiteral> body = phi_all(r.body);
        std::vector<ExtLiteral> applied_body = body;
        applied_body.push_back(plain(phi(h)));
        images[k].push_back(rules.size());
        rules.push_back(make_rule(r.label, {plain(phi(h))}, body));
        if (!h.naf) {
            images[k].push_back(rules.size());
            rules.push_back(make_rule(r.label + "@1",
                                      {plain(fresh_prime(h.lit.negated()).negated())},
                                      applied_body));
            images[k].push_back(rules.size());
            rules.push_back(
                make_rule(r.label + "@2", {plain(fresh_not(h.lit).negated())}, applied_body));
        } else {
            images[k].push_back(rules.size());
            rules.push_back(
                make_rule(r.label + "@1", {plain(fresh_prime(h.lit).negated())}, applied_body));
        }
    }

    // R_n: naf defaults.
    for (const Literal& l : base_lits) {
        r_n.push_back(rules.size());
        rules.push_back(make_rule("dflt!" + l.to_string(), {plain(fresh_not(l))}, {}));
    }

    std::vector<std::pair<RuleIdx, RuleIdx>> edges;
    std::vector<RuleIdx> r_prime;
    for (const auto& img : images)
        for (RuleIdx i : img) r_prime.push_back(i);
    detail::layer_edges(edges, r_c, r_prime);
    detail::layer_edges(edges, r_prime, r_n);
    for (RuleIdx a = 0; a < p.size(); ++a)
        for (RuleIdx b = 0; b < p.size(); ++b)
            if (op.order.less(a, b))
                for (RuleIdx ia : images[a])
                    for (RuleIdx ib : images[b]) edges.emplace_back(ia, ib);

    return OrderedProgram(Program(ProgramKind::slp, std::move(rules)),
                          StrictOrder::from_edges(rules.size(), edges));
}

// ---------------------------------------------------------------------------
// Ordered disjunction
// ---------------------------------------------------------------------------

inline Literal nap_atom(const Rule& r) { return pos("nap'" + r.label); }

// Ordered disjunctions become preference layers: option k lives in layer k,
// a most preferred layer keeps every rule satisfied, and a least preferred
// layer of naf defaults allows better options to defeat worse ones.
inline OrderedProgram lpod_translate(const Program& p) {
    if (p.kind() != ProgramKind::lpod) throw std::invalid_argument("input must be an LPOD");
    std::size_t n = 1;
    for (const Rule& r : p.rules())
        if (r.head_kind == HeadKind::ordered_disjunctive) n = std::max(n, r.head.size());

    std::vector<Rule> rules;
    std::vector<RuleIdx> p_r, p_d;
    std::vector<std::vector<RuleIdx>> p_k(n);
    for (const Rule& r : p.rules()) {
        if (r.head_kind != HeadKind::ordered_disjunctive) {
            p_r.push_back(rules.size());
            rules.push_back(r);
            continue;
        }
        const std::size_t m = r.head.size();
        for (std::size_t i = 0; i < m; ++i) {
            std::vector<ExtLiteral> body = r.body;
            for (std::size_t j = 0; j < m; ++j)
                if (j != i) body.push_back(naf(r.head[j].lit));
            p_r.push_back(rules.size());
            rules.push_back(make_rule(r.label + "@r" + std::to_string(i + 1),
                                      {plain(r.head[i].lit)}, std::move(body)));
        }
        for (const ExtLiteral& e : r.body) {
            p_r.push_back(rules.size());
            rules.push_back(make_rule(r.label + "@nap!" + e.to_string(), {plain(nap_atom(r))},
                                      {e.naf ? plain(e.lit) : naf(e.lit)}));
        }
        for (std::size_t k = 0; k < m; ++k) {
            std::vector<ExtLiteral> body = r.body;
            for (std::size_t j = 0; j < k; ++j) body.push_back(naf(r.head[j].lit));
            p_k[k].push_back(rules.size());
            rules.push_back(make_rule(r.label + "@" + std::to_string(k + 1),
                                      {plain(r.head[k].lit)}, std::move(body)));
        }
        p_d.push_back(rules.size());
        rules.push_back(make_rule(r.label + "@d0", {naf(nap_atom(r))}, {}));
        for (std::size_t i = 0; i < m; ++i) {
            std::vector<ExtLiteral> body = r.body;
            for (std::size_t j = 0; j < i; ++j) body.push_back(naf(r.head[j].lit));
            p_d.push_back(rules.size());
            rules.push_back(make_rule(r.label + "@d" + std::to_string(i + 1),
                                      {naf(r.head[i].lit)}, std::move(body)));
        }
    }

    std::vector<std::pair<RuleIdx, RuleIdx>> edges;
    const std::vector<RuleIdx>* prev = &p_r;
    for (std::size_t k = 0; k < n; ++k) {
        detail::layer_edges(edges, *prev, p_k[k]);
        prev = &p_k[k];
    }
    detail::layer_edges(edges, *prev, p_d);
    return OrderedProgram(Program(ProgramKind::elp, std::move(rules)),
                          StrictOrder::from_edges(rules.size(), edges));
}

// ---------------------------------------------------------------------------
// Consistency-restoring rules
// ---------------------------------------------------------------------------

struct CrProgram {
    std::vector<Rule> regular;            // always-on rules, naf allowed
    std::vector<Rule> cr;                 // last-resort rules, nonempty heads
    StrictOrder cr_pref;                  // over cr indices; lower = apply first
};

inline const char* kInconsistentAtom = "inconsistent";

// The regular rules keep their force; when they alone admit no answer set, a
// most preferred `inconsistent` fact opens the cr layer, and one defeat
// enabler per cr rule (ordered opposite to the cr preference) lets the search
// apply as few and as preferred cr rules as possible.
inline OrderedProgram cr_translate(const CrProgram& p, std::size_t max_atoms = 16) {
    const Literal inc = pos(kInconsistentAtom);
    for (const Rule& r : p.cr) {
        if (r.head.size() != 1 || r.head.front().naf)
            throw std::invalid_argument("cr rules need a single ordinary head literal");
        if (r.head.front().lit.atom == inc.atom)
            throw std::invalid_argument("cr rule head uses the reserved atom");
    }
    if (p.cr_pref.domain() != p.cr.size())
        throw std::invalid_argument("cr preference domain must match the cr rules");

    Program regular(ProgramKind::elp, p.regular);
    std::size_t base_atoms = herbrand_base(regular).size();
    if (base_atoms > max_atoms)
        throw semantics::SizeLimitError("cr translation consistency check limited to " +
                                        std::to_string(max_atoms) + " atoms");
    bool consistent_regular = false;
    for (const Interpretation& i : semantics::extended_answer_sets(regular, max_atoms))
        if (semantics::is_classical_answer_set(i, regular)) consistent_regular = true;

    std::vector<Rule> rules;
    std::vector<RuleIdx> reg_layer, blk_layer, cr_layer;
    for (const Rule& r : p.regular) {
        reg_layer.push_back(rules.size());
        rules.push_back(r);
    }
    if (!consistent_regular) {
        reg_layer.push_back(rules.size());
        rules.push_back(make_rule(kInconsistentAtom, {plain(inc)}, {}));
    }
    std::vector<RuleIdx> blk_of(p.cr.size());
    for (std::size_t k = 0; k < p.cr.size(); ++k) {
        blk_of[k] = rules.size();
        blk_layer.push_back(rules.size());
        rules.push_back(
            make_rule("blk:" + p.cr[k].label, {naf(p.cr[k].head.front().lit)}, {plain(inc)}));
    }
    for (const Rule& r : p.cr) {
        std::vector<ExtLiteral> body = r.body;
        body.push_back(plain(inc));
        cr_layer.push_back(rules.size());
        rules.push_back(make_rule(r.label, r.head, std::move(body)));
    }

    std::vector<std::pair<RuleIdx, RuleIdx>> edges;
    detail::layer_edges(edges, reg_layer, blk_layer);
    detail::layer_edges(edges, blk_layer, cr_layer);
    for (std::size_t a = 0; a < p.cr.size(); ++a)
        for (std::size_t b = 0; b < p.cr.size(); ++b)
            if (p.cr_pref.less(a, b)) edges.emplace_back(blk_of[b], blk_of[a]);
    return OrderedProgram(Program(ProgramKind::elp, std::move(rules)),
                          StrictOrder::from_edges(rules.size(), edges));
}

// ---------------------------------------------------------------------------
// Database repair
// ---------------------------------------------------------------------------

struct Database {
    LiteralSet facts;

    explicit Database(LiteralSet f) : facts(std::move(f)) {
        if (!olp::consistent(facts)) throw std::invalid_argument("database must be consistent");
    }

    std::set<AtomId> base() const {
        std::set<AtomId> out;
        for (const Literal& l : facts) out.insert(l.atom);
        return out;
    }
};

struct ConstraintClause {
    std::vector<Literal> disjuncts;

    explicit ConstraintClause(std::vector<Literal> ds) : disjuncts(std::move(ds)) {
        if (disjuncts.empty()) throw std::invalid_argument("constraint clause must be nonempty");
        std::sort(disjuncts.begin(), disjuncts.end());
        disjuncts.erase(std::unique(disjuncts.begin(), disjuncts.end()), disjuncts.end());
    }
};

struct RepairDelta {
    LiteralSet added;  // literals of the repair that are not in the database

    auto operator<=>(const RepairDelta&) const = default;
};

inline bool db_satisfies(const LiteralSet& db, const std::vector<ConstraintClause>& cs) {
    return std::all_of(cs.begin(), cs.end(), [&](const ConstraintClause& c) {
        return std::any_of(c.disjuncts.begin(), c.disjuncts.end(),
                           [&](const Literal& l) { return db.count(l) != 0; });
    });
}

namespace detail {

inline bool constraints_consistent(const std::vector<ConstraintClause>& cs) {
    std::set<AtomId> atoms;
    for (const ConstraintClause& c : cs)
        for (const Literal& l : c.disjuncts) atoms.insert(l.atom);
    std::vector<AtomId> list(atoms.begin(), atoms.end());
    if (list.size() > 20)
        throw semantics::SizeLimitError("constraint satisfiability check limited to 20 atoms");
    for (std::size_t mask = 0; mask < (std::size_t(1) << list.size()); ++mask) {
        LiteralSet db;
        for (std::size_t i = 0; i < list.size(); ++i)
            db.insert(Literal{list[i], (mask >> i & 1) != 0});
        if (db_satisfies(db, cs)) return true;
    }
    return cs.empty();
}

}  // namespace detail

// The ordered version of a database under constraints: constraint rules below
// the database facts, which sit below their negations.
inline OrderedProgram db_repair_program(const Database& d,
                                        const std::vector<ConstraintClause>& c) {
    std::set<AtomId> base = d.base();
    for (const ConstraintClause& cl : c)
        for (const Literal& l : cl.disjuncts)
            if (!base.count(l.atom))
                throw std::invalid_argument("constraint atom '" + Symbols::name(l.atom) +
                                            "' outside the database base");
    if (!detail::constraints_consistent(c))
        throw std::invalid_argument("constraints are unsatisfiable");

    std::vector<Rule> rules;
    std::vector<RuleIdx> c_layer, d_layer, n_layer;
    for (std::size_t j = 0; j < c.size(); ++j) {
        for (const Literal& a : c[j].disjuncts) {
            std::vector<ExtLiteral> body;
            for (const Literal& b : c[j].disjuncts)
                if (b != a) body.push_back(plain(b.negated()));
            c_layer.push_back(rules.size());
            rules.push_back(make_rule("c" + std::to_string(j + 1) + ":" + a.to_string(),
                                      {plain(a)}, std::move(body)));
        }
    }
    for (const Literal& a : d.facts) {
        d_layer.push_back(rules.size());
        rules.push_back(make_rule("d:" + a.to_string(), {plain(a)}, {}));
    }
    for (const Literal& a : d.facts) {
        n_layer.push_back(rules.size());
        rules.push_back(make_rule("n:" + a.to_string(), {plain(a.negated())}, {}));
    }
    std::vector<std::pair<RuleIdx, RuleIdx>> edges;
    detail::layer_edges(edges, c_layer, d_layer);
    detail::layer_edges(edges, d_layer, n_layer);
    return OrderedProgram(Program(ProgramKind::slp, std::move(rules)),
                          StrictOrder::from_edges(rules.size(), edges));
}

// Minimal repairs, as deltas against the database, via the preferred answer
// sets of the repair program.
inline std::vector<RepairDelta> repairs(const Database& d, const std::vector<ConstraintClause>& c,
                                        prefsolve::SolveOptions opts = {}) {
    OrderedProgram p = db_repair_program(d, c);
    std::vector<RepairDelta> out;
    for (const auto& report : prefsolve::preferred_answer_sets(p, false, opts)) {
        LiteralSet delta;
        for (const Literal& l : report.interpretation.literals())
            if (!d.facts.count(l)) delta.insert(l);
        out.push_back(RepairDelta{std::move(delta)});
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace olp::transforms
