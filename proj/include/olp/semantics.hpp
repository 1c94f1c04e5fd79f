#pragma once

#include <optional>
#include <vector>

#include "olp/compiled.hpp"
#include "olp/core.hpp"

namespace olp::semantics {

class SizeLimitError : public std::runtime_error {
public:
    explicit SizeLimitError(const std::string& what) : std::runtime_error(what) {}
};

// ---------------------------------------------------------------------------
// Gelfond-Lifschitz transformation and classical answer sets
// ---------------------------------------------------------------------------

// Keeps the rules whose body nafs are all true and whose head nafs are all
// false w.r.t. i, stripping the naf parts. A rule whose naf head is wiped out
// becomes a constraint.
inline Program gl_reduct(const Program& p, const Interpretation& i) {
    std::vector<Rule> kept;
    for (const Rule& r : p.rules()) {
        bool keep = true;
        std::vector<ExtLiteral> head, body;
        for (const ExtLiteral& e : r.body) {
            if (!e.naf)
                body.push_back(e);
            else if (i.contains(e.lit))
                keep = false;
        }
        for (const ExtLiteral& e : r.head) {
            if (!e.naf)
                head.push_back(e);
            else if (!i.contains(e.lit))
                keep = false;
        }
        if (keep) kept.push_back(make_rule(r.label, std::move(head), std::move(body), r.head_kind));
    }
    return Program(ProgramKind::slp, std::move(kept));
}

// i is a classical answer set when it is the least model of its GL reduct and
// no reduct constraint fires.
inline bool is_classical_answer_set(const Interpretation& i, const Program& p) {
    StarResult st = star_closure(gl_reduct(p, i));
    return !st.bottom && st.literals == i.literals();
}

// ---------------------------------------------------------------------------
// Extended answer sets
// ---------------------------------------------------------------------------

inline bool is_founded(const Interpretation& i, const Program& p) {
    StarResult st = star_closure(p, reduct(p, i));
    return !st.bottom && st.literals == i.literals();
}

// Every rule satisfied or defeated, and i self-supporting on its reduct. For
// naf-free programs the reduct condition is foundedness; with naf it is the
// classical answer set condition on the reduct.
inline bool is_extended_answer_set(const Interpretation& i, const Program& p) {
    for (const Rule& r : p.rules())
        if (!satisfies(i, r) && !defeated(r, i, p)) return false;
    if (!p.has_naf()) return is_founded(i, p);
    std::vector<Rule> rules;
    for (RuleIdx k : reduct(p, i)) rules.push_back(p[k]);
    return is_classical_answer_set(i, Program(ProgramKind::elp, std::move(rules)));
}

// All extended answer sets, by assignment enumeration over the Herbrand base
// restricted to derivable polarities. Candidates are pruned on decided
// constraints and on decided rules that no rule could ever defeat.
inline std::vector<Interpretation> extended_answer_sets(const Program& p,
                                                        std::size_t max_atoms = 16) {
    detail::CompiledProgram cp(p);
    const std::size_t n = cp.natoms();
    if (n > max_atoms)
        throw SizeLimitError("extended answer set enumeration limited to " +
                             std::to_string(max_atoms) + " atoms, got " + std::to_string(n));

    // A literal can only be founded if some rule carries it as an ordinary head.
    detail::Bits derivable(cp.nlits());
    for (RuleIdx k = 0; k < cp.nrules(); ++k) {
        const auto& c = cp.rule(k);
        if (c.head_slot != detail::CompiledProgram::kNoHead && !c.head_naf)
            derivable.set(static_cast<std::size_t>(c.head_slot));
    }

    std::vector<std::vector<RuleIdx>> decided_at(n + 1);
    for (RuleIdx k = 0; k < cp.nrules(); ++k) decided_at[cp.rule(k).max_atom].push_back(k);

    std::vector<Interpretation> out;
    detail::Bits i(cp.nlits());
    auto rec = [&](auto&& self, std::size_t atom) -> void {
        for (RuleIdx k : decided_at[atom]) {
            if (cp.satisfied(k, i)) continue;
            if (cp.rule(k).head_slot == detail::CompiledProgram::kNoHead) return;  // constraint
            if (!cp.has_competitor(k)) return;
        }
        if (atom == n) {
            if (cp.is_extended_answer_set(i)) out.push_back(Interpretation(cp.to_literals(i)));
            return;
        }
        self(self, atom + 1);
        if (derivable.test(2 * atom)) {
            i.set(2 * atom);
            self(self, atom + 1);
            i.reset(2 * atom);
        }
        if (derivable.test(2 * atom + 1)) {
            i.set(2 * atom + 1);
            self(self, atom + 1);
            i.reset(2 * atom + 1);
        }
    };
    rec(rec, 0);
    std::sort(out.begin(), out.end());
    return out;
}

// Universality construction for constraint-free simple programs: grow an
// interpretation one underivable-yet-uncontradicted head at a time, scanning
// rules in program order, until a fixpoint is reached.
inline Interpretation construct_extended_answer_set(const Program& p) {
    if (p.has_naf()) throw std::invalid_argument("construction requires a naf-free program");
    for (const Rule& r : p.rules())
        if (r.is_constraint())
            throw std::invalid_argument("construction requires a constraint-free program");
    LiteralSet lits;
    bool grew = true;
    while (grew) {
        grew = false;
        for (const Rule& r : p.rules()) {
            const Literal h = r.head.front().lit;
            if (lits.count(h) || lits.count(h.negated())) continue;
            bool body_true = std::all_of(r.body.begin(), r.body.end(),
                                         [&](const ExtLiteral& e) { return lits.count(e.lit); });
            if (body_true) {
                lits.insert(h);
                grew = true;
                break;
            }
        }
    }
    return Interpretation(std::move(lits));
}

// ---------------------------------------------------------------------------
// Preference between reducts and answer sets
// ---------------------------------------------------------------------------

// r1 preceq r2 iff every rule in r2\r1 is countered by a strictly more
// preferred rule in r1\r2.
inline bool reduct_preceq(const LabelSet& r1, const LabelSet& r2, const StrictOrder& o) {
    for (RuleIdx x : r2) {
        if (r1.count(x)) continue;
        if (x >= o.domain()) throw std::invalid_argument("label outside order domain");
        bool countered = false;
        for (RuleIdx y : r1)
            if (!r2.count(y) && o.less(y, x)) {
                countered = true;
                break;
            }
        if (!countered) return false;
    }
    return true;
}

enum class Preference { less, greater, equal, incomparable };

// Four-valued comparison of two extended answer sets of op. Ordered programs
// compare reducts; with naf present, equal reducts of distinct answer sets
// are incomparable.
inline Preference prefer(const Interpretation& m1, const Interpretation& m2,
                         const OrderedProgram& op) {
    LabelSet rm1 = reduct(op.program, m1);
    LabelSet rm2 = reduct(op.program, m2);
    if (rm1 == rm2) {
        if (op.program.has_naf() && m1 != m2) return Preference::incomparable;
        return Preference::equal;
    }
    bool le = reduct_preceq(rm1, rm2, op.order);
    bool ge = reduct_preceq(rm2, rm1, op.order);
    if (le && ge) return Preference::equal;  // unreachable: preceq is antisymmetric
    if (le) return Preference::less;
    if (ge) return Preference::greater;
    return Preference::incomparable;
}

// Satisfies every rule that is minimal under the program order.
inline bool is_proper(const Interpretation& m, const OrderedProgram& op) {
    for (RuleIdx k = 0; k < op.program.size(); ++k)
        if (op.order.is_minimal(k) && !satisfies(m, op.program[k])) return false;
    return true;
}

enum class AnswerSetKind { classical, extended, preferred, proper_preferred };

struct AnswerSetReport {
    Interpretation interpretation;
    LabelSet reduct_labels;
    AnswerSetKind kind = AnswerSetKind::extended;
};

inline AnswerSetReport report_for(const Interpretation& i, const OrderedProgram& op,
                                  AnswerSetKind kind) {
    return AnswerSetReport{i, reduct(op.program, i), kind};
}

// Keeps the preference-minimal elements of the given extended answer sets.
inline std::vector<Interpretation> minimize_preferred(std::vector<Interpretation> eas,
                                                      const OrderedProgram& op) {
    std::vector<Interpretation> out;
    for (std::size_t a = 0; a < eas.size(); ++a) {
        bool minimal = true;
        for (std::size_t b = 0; b < eas.size() && minimal; ++b) {
            if (a == b) continue;
            if (prefer(eas[b], eas[a], op) == Preference::less) minimal = false;
        }
        if (minimal) out.push_back(eas[a]);
    }
    return out;
}

}  // namespace olp::semantics
