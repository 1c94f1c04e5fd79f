#pragma once

#include <vector>

#include "olp/compiled.hpp"
#include "olp/core.hpp"
#include "olp/semantics.hpp"

namespace olp::prefsolve {

// Rule sets a conforming answer set must satisfy (r_in) and must leave
// unsatisfied (r_out); their union stays downward closed under the program
// order.
struct Specification {
    LabelSet r_in;
    LabelSet r_out;
};

inline bool valid_specification(const Specification& s, const OrderedProgram& op) {
    for (RuleIdx k : s.r_in)
        if (s.r_out.count(k)) return false;
    LabelSet both = s.r_in;
    both.insert(s.r_out.begin(), s.r_out.end());
    LabelSet down = down_closure(both, op.order);
    return std::includes(both.begin(), both.end(), down.begin(), down.end());
}

// A disjunction of conjunctions over rules: a satisfying set must include
// some clause entirely.
struct SearchConstraint {
    std::vector<LabelSet> clauses;

    static SearchConstraint unconstrained() { return SearchConstraint{{LabelSet{}}}; }
};

inline bool constraint_satisfied(const LabelSet& r, const SearchConstraint& c) {
    return std::any_of(c.clauses.begin(), c.clauses.end(), [&](const LabelSet& cl) {
        return std::includes(r.begin(), r.end(), cl.begin(), cl.end());
    });
}

inline bool spec_consistent_with(const Specification& s, const SearchConstraint& c) {
    return std::any_of(c.clauses.begin(), c.clauses.end(), [&](const LabelSet& cl) {
        return std::none_of(cl.begin(), cl.end(), [&](RuleIdx k) { return s.r_out.count(k) != 0; });
    });
}

// R satisfies <r_in, r_out> when its closure is an extended answer set that
// includes r_in, avoids r_out, and leaves every r_out rule unsatisfied.
inline bool spec_satisfied(const LabelSet& r, const Specification& s, const OrderedProgram& op) {
    if (!std::includes(r.begin(), r.end(), s.r_in.begin(), s.r_in.end())) return false;
    for (RuleIdx k : s.r_out)
        if (r.count(k)) return false;
    StarResult st = star_closure(op.program, r);
    if (!st.consistent()) return false;
    Interpretation i(st.literals);
    if (!semantics::is_extended_answer_set(i, op.program)) return false;
    return std::none_of(s.r_out.begin(), s.r_out.end(),
                        [&](RuleIdx k) { return satisfies(i, op.program[k]); });
}

// W(T): one member per rule r outside T, pairing r with the part of T below it.
struct WitnessFamily {
    std::vector<LabelSet> sets;
};

inline WitnessFamily witnesses(const LabelSet& t, const OrderedProgram& op) {
    WitnessFamily w;
    for (RuleIdx r = 0; r < op.program.size(); ++r) {
        if (t.count(r)) continue;
        LabelSet x{r};
        op.order.below(r).for_each([&](std::size_t u) {
            if (t.count(u)) x.insert(u);
        });
        w.sets.push_back(std::move(x));
    }
    return w;
}

inline bool has_witness(const LabelSet& r, const LabelSet& t, const OrderedProgram& op) {
    WitnessFamily w = witnesses(t, op);
    return std::any_of(w.sets.begin(), w.sets.end(), [&](const LabelSet& x) {
        return std::includes(r.begin(), r.end(), x.begin(), x.end());
    });
}

struct SolveOptions {
    // Cuts branches whose outcome is already forced (inconsistent closure of
    // r_in, or an r_out rule that can no longer end up unsatisfied-but-
    // defeated). Off by default; output is unchanged either way.
    bool prune = false;
};

namespace detail {

using olp::detail::Bits;
using olp::detail::CompiledProgram;

struct Solver {
    const OrderedProgram& op;
    const CompiledProgram cp;
    const std::size_t n;
    const bool prune;

    Solver(const OrderedProgram& program, bool do_prune)
        : op(program), cp(program.program), n(program.program.size()), prune(do_prune) {}

    static void reduce_clauses(std::vector<Bits>& cs) {
        std::sort(cs.begin(), cs.end(), [](const Bits& a, const Bits& b) {
            auto ca = a.count(), cb = b.count();
            return ca != cb ? ca < cb : a < b;
        });
        cs.erase(std::unique(cs.begin(), cs.end()), cs.end());
        std::vector<Bits> kept;
        for (const Bits& c : cs) {
            bool subsumed = std::any_of(kept.begin(), kept.end(),
                                        [&](const Bits& k) { return k.subset_of(c); });
            if (!subsumed) kept.push_back(c);
        }
        cs = std::move(kept);
    }

    bool consistent(const Bits& out, const std::vector<Bits>& clauses) const {
        return std::any_of(clauses.begin(), clauses.end(),
                           [&](const Bits& c) { return !c.intersects(out); });
    }

    // Witness sets against m for rules outside m, skipping those containing
    // the branch rule.
    std::vector<Bits> witness_sets(const Bits& m, RuleIdx skip) const {
        std::vector<Bits> out;
        for (RuleIdx r = 0; r < n; ++r) {
            if (m.test(r)) continue;
            Bits x(n);
            x.set(r);
            x |= op.order.below(r) & m;
            if (x.test(skip)) continue;
            out.push_back(std::move(x));
        }
        return out;
    }

    bool forced_empty(const Bits& out, const CompiledProgram::Star& star) const {
        if (star.bottom || !cp.bits_consistent(star.literals)) return true;
        bool dead = false;
        out.for_each([&](std::size_t k) {
            if (dead) return;
            const auto& c = cp.rule(k);
            if (c.head_slot == CompiledProgram::kNoHead) {
                dead = true;  // a constraint can never be left unsatisfied
            } else if (star.literals.test(static_cast<std::size_t>(c.head_slot))) {
                dead = true;  // head already derivable: the rule stays satisfied
            } else if (!cp.has_competitor(k)) {
                dead = true;  // unsatisfied and structurally undefeatable
            }
        });
        return dead;
    }

    std::vector<Bits> run(const Bits& in, const Bits& out, std::vector<Bits> clauses,
                          const CompiledProgram::Star& star) {
        if (!consistent(out, clauses)) return {};
        if (prune && forced_empty(out, star)) return {};

        Bits assigned = in | out;
        if (assigned.count() == n) {
            if (star.bottom || !cp.bits_consistent(star.literals) ||
                !cp.is_extended_answer_set(star.literals))
                return {};
            // conformance of the excluded rules: each must end up unsatisfied
            bool conforms = true;
            out.for_each([&](std::size_t k) {
                if (cp.satisfied(k, star.literals)) conforms = false;
            });
            return conforms ? std::vector<Bits>{in} : std::vector<Bits>{};
        }

        // smallest-index rule that is order-minimal among the unassigned ones
        RuleIdx r = n;
        for (RuleIdx k = 0; k < n; ++k) {
            if (assigned.test(k)) continue;
            if (op.order.below(k).subset_of(assigned)) {
                r = k;
                break;
            }
        }

        Bits in2 = in;
        in2.set(r);
        CompiledProgram::Star star2 = star;
        cp.star_add(star2, in2, r);
        std::vector<Bits> m = run(in2, out, clauses, star2);

        std::vector<Bits> updated = clauses;
        for (const Bits& mi : m) {
            std::vector<Bits> next;
            std::vector<Bits> wit = witness_sets(mi, r);
            for (const Bits& c : updated)
                for (const Bits& x : wit) next.push_back(c | x);
            reduce_clauses(next);
            updated = std::move(next);
            if (updated.empty()) break;
        }
        if (updated.empty()) return m;  // every witness family forces r

        Bits out2 = out;
        out2.set(r);
        std::vector<Bits> rest = run(in, out2, std::move(updated), star);
        m.insert(m.end(), rest.begin(), rest.end());
        return m;
    }
};

}  // namespace detail

// The recursive search: returns the preference-minimal rule sets whose
// closures are extended answer sets conforming to the specification and the
// constraint family.
inline std::vector<LabelSet> aset(const Specification& s, const SearchConstraint& c,
                                  const OrderedProgram& op, SolveOptions opts = {}) {
    if (op.program.has_naf())
        throw std::invalid_argument("the search runs on naf-free ordered programs");
    if (c.clauses.empty())
        throw std::invalid_argument("top-level constraint family must be nonempty");
    if (!valid_specification(s, op)) throw std::invalid_argument("invalid specification");

    detail::Solver solver(op, opts.prune);
    const std::size_t nr = op.program.size();
    detail::Bits in(nr), out(nr);
    for (RuleIdx k : s.r_in) in.set(k);
    for (RuleIdx k : s.r_out) out.set(k);
    std::vector<detail::Bits> clauses;
    for (const LabelSet& cl : c.clauses) {
        detail::Bits b(nr);
        for (RuleIdx k : cl) b.set(k);
        clauses.push_back(std::move(b));
    }
    detail::Solver::reduce_clauses(clauses);

    auto star = solver.cp.star(in);
    std::vector<detail::Bits> found = solver.run(in, out, std::move(clauses), star);

    std::vector<LabelSet> result;
    for (const detail::Bits& b : found) {
        LabelSet ls;
        b.for_each([&](std::size_t k) { ls.insert(k); });
        result.push_back(std::move(ls));
    }
    std::sort(result.begin(), result.end());
    return result;
}

// Preferred answer sets of a naf-free ordered program, as closures of the
// unconstrained search; optionally filtered to the proper ones.
inline std::vector<semantics::AnswerSetReport> preferred_answer_sets(const OrderedProgram& op,
                                                                     bool proper_only = false,
                                                                     SolveOptions opts = {}) {
    std::vector<semantics::AnswerSetReport> out;
    for (const LabelSet& r : aset(Specification{}, SearchConstraint::unconstrained(), op, opts)) {
        StarResult st = star_closure(op.program, r);
        Interpretation i(st.literals);
        if (proper_only && !semantics::is_proper(i, op)) continue;
        out.push_back(semantics::report_for(
            i, op,
            proper_only ? semantics::AnswerSetKind::proper_preferred
                        : semantics::AnswerSetKind::preferred));
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        return a.interpretation < b.interpretation;
    });
    return out;
}

}  // namespace olp::prefsolve
