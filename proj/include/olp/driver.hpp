#pragma once

#include <optional>
#include <string>
#include <vector>

#include "olp/format.hpp"
#include "olp/oracle.hpp"
#include "olp/prefsolve.hpp"
#include "olp/transforms.hpp"

namespace olp::driver {

enum class Mode { extended, preferred, proper };

inline const char* to_string(Mode m) {
    switch (m) {
        case Mode::extended: return "extended";
        case Mode::preferred: return "preferred";
        case Mode::proper: return "proper";
    }
    return "?";
}

// A document turned into the ordered program that actually gets solved,
// together with the projection that recovers user-level answer sets.
struct Elaboration {
    olps::Dialect dialect = olps::Dialect::olp;
    OrderedProgram ordered;
    std::set<AtomId> base;       // atoms user-level answers range over
    bool project = false;        // answers are projected onto base
    bool proper_translation = false;  // correspondence goes through proper answer sets
};

namespace detail {

inline Program build_program(const olps::SourceDocument& doc, ProgramKind kind) {
    std::vector<Rule> rules;
    for (const olps::SourceModule& m : doc.modules)
        for (std::size_t i = 0; i < m.rules.size(); ++i) {
            const olps::SourceRule& sr = m.rules[i];
            rules.push_back(make_rule(m.name + "." + std::to_string(i + 1), sr.head, sr.body,
                                      sr.head_kind));
        }
    return Program(kind, std::move(rules));
}

// Rule indices addressed by a module reference.
inline std::vector<RuleIdx> resolve_ref(const olps::SourceDocument& doc, const Program& p,
                                        const olps::ModuleRef& ref) {
    const olps::SourceModule* m = doc.find(ref.module);
    if (!m) throw std::invalid_argument("order assertion names undeclared module '" + ref.module + "'");
    if (ref.rule) {
        if (*ref.rule > m->rules.size())
            throw std::invalid_argument("rule index " + std::to_string(*ref.rule) +
                                        " out of range in module '" + ref.module + "'");
        return {p.index_of(ref.module + "." + std::to_string(*ref.rule))};
    }
    std::vector<RuleIdx> out;
    for (std::size_t i = 0; i < m->rules.size(); ++i)
        out.push_back(p.index_of(ref.module + "." + std::to_string(i + 1)));
    return out;
}

inline std::vector<std::pair<RuleIdx, RuleIdx>> assertion_edges(const olps::SourceDocument& doc,
                                                                const Program& p) {
    std::vector<std::pair<RuleIdx, RuleIdx>> edges;
    for (const olps::OrderAssertion& a : doc.order_assertions) {
        for (std::size_t i = 0; i + 1 < a.chain.size(); ++i) {
            for (RuleIdx lo : resolve_ref(doc, p, a.chain[i]))
                for (RuleIdx hi : resolve_ref(doc, p, a.chain[i + 1])) edges.emplace_back(lo, hi);
        }
    }
    return edges;
}

}  // namespace detail

inline Elaboration elaborate(const olps::SourceDocument& doc) {
    Elaboration e;
    e.dialect = doc.dialect;
    switch (doc.dialect) {
        case olps::Dialect::olp: {
            bool has_naf = false;
            for (const auto& m : doc.modules)
                for (const auto& r : m.rules) {
                    auto isnaf = [](const ExtLiteral& x) { return x.naf; };
                    has_naf = has_naf || std::any_of(r.head.begin(), r.head.end(), isnaf) ||
                              std::any_of(r.body.begin(), r.body.end(), isnaf);
                }
            Program p = detail::build_program(doc, has_naf ? ProgramKind::elp : ProgramKind::slp);
            StrictOrder o = StrictOrder::from_edges(p.size(), detail::assertion_edges(doc, p));
            e.base = herbrand_base(p);
            e.ordered = OrderedProgram(std::move(p), std::move(o));
            return e;
        }
        case olps::Dialect::lpod: {
            if (!doc.order_assertions.empty())
                throw std::invalid_argument("ordered-disjunction programs carry no order assertions");
            Program p = detail::build_program(doc, ProgramKind::lpod);
            e.base = herbrand_base(p);
            e.ordered = transforms::lpod_translate(p);
            e.project = true;
            e.proper_translation = true;
            return e;
        }
        case olps::Dialect::cr: {
            Program all = detail::build_program(doc, ProgramKind::cr);
            transforms::CrProgram cp;
            std::map<std::string, std::size_t> cr_index;
            for (const Rule& r : all.rules()) {
                if (r.head_kind == HeadKind::cr) {
                    cr_index[r.label] = cp.cr.size();
                    cp.cr.push_back(make_rule(r.label, r.head, r.body));
                } else {
                    cp.regular.push_back(r);
                }
            }
            std::vector<std::pair<RuleIdx, RuleIdx>> edges;
            for (auto [lo, hi] : detail::assertion_edges(doc, all)) {
                auto a = cr_index.find(all[lo].label);
                auto b = cr_index.find(all[hi].label);
                if (a == cr_index.end() || b == cr_index.end())
                    throw std::invalid_argument("cr preferences relate cr rules only");
                edges.emplace_back(a->second, b->second);
            }
            cp.cr_pref = StrictOrder::from_edges(cp.cr.size(), edges);
            e.base = herbrand_base(all);
            e.base.insert(Symbols::intern(transforms::kInconsistentAtom));
            e.ordered = transforms::cr_translate(cp);
            e.project = true;
            return e;
        }
        case olps::Dialect::repair:
            throw std::invalid_argument("repair input uses database and constraint files");
    }
    throw std::logic_error("unhandled dialect");
}

inline Elaboration elaborate_repair(const transforms::Database& d,
                                    const std::vector<transforms::ConstraintClause>& c) {
    Elaboration e;
    e.dialect = olps::Dialect::repair;
    e.ordered = transforms::db_repair_program(d, c);
    e.base = d.base();
    return e;
}

// One reported answer set: the user-level literals plus bookkeeping against
// the solved ordered program.
struct Answer {
    LiteralSet shown;
    Interpretation full;
    LabelSet reduct;
    LabelSet defeated;
};

struct SolveOptions {
    bool use_oracle = false;
    prefsolve::SolveOptions search;
    std::size_t enumeration_guard = 16;
};

namespace detail {

inline Answer to_answer(const Interpretation& i, const Elaboration& e) {
    Answer a;
    a.full = i;
    a.shown = e.project ? transforms::project(i.literals(), e.base) : i.literals();
    a.reduct = reduct(e.ordered.program, i);
    for (RuleIdx k = 0; k < e.ordered.program.size(); ++k)
        if (!a.reduct.count(k)) a.defeated.insert(k);
    return a;
}

inline std::vector<Interpretation> eolp_preferred(const Elaboration& e, const SolveOptions& opts) {
    const OrderedProgram& op = e.ordered;
    if (herbrand_base(op.program).size() <= opts.enumeration_guard) {
        std::vector<Interpretation> eas =
            semantics::extended_answer_sets(op.program, opts.enumeration_guard);
        return semantics::minimize_preferred(std::move(eas), op);
    }
    // Past the enumeration guard the naf-free translation carries the search;
    // the translated programs are large and branch-heavy, so the search runs
    // with pruning (answers unchanged, equivalence covered by the tests).
    OrderedProgram olp = transforms::eolp_to_olp(op);
    prefsolve::SolveOptions search = opts.search;
    search.prune = true;
    std::set<AtomId> base = herbrand_base(op.program);
    std::vector<Interpretation> out;
    for (const auto& rep : prefsolve::preferred_answer_sets(olp, true, search))
        out.push_back(Interpretation(transforms::project(rep.interpretation.literals(), base)));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace detail

inline std::vector<Answer> solve(const Elaboration& e, Mode mode, SolveOptions opts = {}) {
    const OrderedProgram& op = e.ordered;
    std::vector<Interpretation> found;

    if (mode == Mode::extended) {
        found = opts.use_oracle ? oracle::brute_force_extended(op.program)
                                : semantics::extended_answer_sets(op.program, opts.enumeration_guard);
        if (e.proper_translation) {
            std::erase_if(found,
                          [&](const Interpretation& i) { return !semantics::is_proper(i, op); });
        }
    } else {
        const bool want_proper = mode == Mode::proper || e.proper_translation;
        if (opts.use_oracle) {
            found = want_proper ? oracle::brute_force_proper_preferred(op)
                                : oracle::brute_force_preferred(op);
        } else if (!op.program.has_naf()) {
            for (const auto& rep : prefsolve::preferred_answer_sets(op, want_proper, opts.search))
                found.push_back(rep.interpretation);
        } else {
            found = detail::eolp_preferred(e, opts);
            if (want_proper)
                std::erase_if(found,
                              [&](const Interpretation& i) { return !semantics::is_proper(i, op); });
        }
    }

    std::vector<Answer> out;
    std::set<LiteralSet> seen;
    for (const Interpretation& i : found) {
        Answer a = detail::to_answer(i, e);
        if (seen.insert(a.shown).second) out.push_back(std::move(a));
    }
    // order records by their rendered literal lists, so output is stable
    // under interning order
    auto name_key = [](const LiteralSet& ls) {
        std::vector<std::string> key;
        for (const Literal& l : ls) key.push_back(l.to_string());
        std::sort(key.begin(), key.end(), [](const std::string& a, const std::string& b) {
            std::string_view na = a, nb = b;
            bool sa = na.starts_with('-'), sb = nb.starts_with('-');
            std::string_view base_a = sa ? na.substr(1) : na;
            std::string_view base_b = sb ? nb.substr(1) : nb;
            return base_a != base_b ? base_a < base_b : sa < sb;
        });
        return key;
    };
    std::sort(out.begin(), out.end(), [&](const Answer& x, const Answer& y) {
        return name_key(x.shown) < name_key(y.shown);
    });
    return out;
}

}  // namespace olp::driver
