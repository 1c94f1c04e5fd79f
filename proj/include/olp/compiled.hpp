#pragma once

#include <algorithm>
#include <limits>
#include <string>
#include <vector>

#include "olp/core.hpp"

namespace olp::detail {

// Bitmask view of a plain (single-headed) program: atoms are indexed by name
// order, literal slot = 2*atom + (0 for positive, 1 for negative).
class CompiledProgram {
public:
    static constexpr int kNoHead = -1;

    struct CRule {
        Bits body_pos;
        Bits body_naf;          // slots of underlying literals below naf
        int head_slot = kNoHead;
        bool head_naf = false;
        int forced_slot = kNoHead;  // slot of the head's forced literal
        std::size_t max_atom = 0;   // highest atom index mentioned + 1
    };

    explicit CompiledProgram(const Program& p) : p_(&p) {
        for (const Rule& r : p.rules())
            if (r.head.size() > 1 || r.head_kind == HeadKind::ordered_disjunctive)
                throw std::invalid_argument("compiled form requires single-headed rules");
        std::set<AtomId> base = herbrand_base(p);
        atoms_.assign(base.begin(), base.end());
        std::sort(atoms_.begin(), atoms_.end(),
                  [](AtomId a, AtomId b) { return Symbols::name(a) < Symbols::name(b); });
        for (std::size_t i = 0; i < atoms_.size(); ++i) index_[atoms_[i]] = i;
        nlits_ = 2 * atoms_.size();

        rules_.reserve(p.size());
        by_forced_.assign(nlits_, {});
        for (RuleIdx k = 0; k < p.size(); ++k) {
            const Rule& r = p[k];
            CRule c;
            c.body_pos = Bits(nlits_);
            c.body_naf = Bits(nlits_);
            for (const ExtLiteral& e : r.body) {
                (e.naf ? c.body_naf : c.body_pos).set(slot(e.lit));
                c.max_atom = std::max(c.max_atom, index_.at(e.lit.atom) + 1);
            }
            if (!r.head.empty()) {
                const ExtLiteral& h = r.head.front();
                c.head_slot = static_cast<int>(slot(h.lit));
                c.head_naf = h.naf;
                c.forced_slot = static_cast<int>(slot(h.forced_literal()));
                c.max_atom = std::max(c.max_atom, index_.at(h.lit.atom) + 1);
                by_forced_[c.forced_slot].push_back(k);
            }
            rules_.push_back(std::move(c));
        }
    }

    const Program& program() const { return *p_; }
    std::size_t natoms() const { return atoms_.size(); }
    std::size_t nlits() const { return nlits_; }
    std::size_t nrules() const { return rules_.size(); }
    const CRule& rule(RuleIdx k) const { return rules_[k]; }
    AtomId atom_at(std::size_t i) const { return atoms_[i]; }

    std::size_t slot(Literal l) const { return 2 * index_.at(l.atom) + (l.positive ? 0 : 1); }
    Literal literal_at(std::size_t s) const { return Literal{atoms_[s / 2], (s & 1) == 0}; }

    Bits to_bits(const LiteralSet& ls) const {
        Bits b(nlits_);
        for (const Literal& l : ls) b.set(slot(l));
        return b;
    }
    Bits to_bits(const Interpretation& i) const { return to_bits(i.literals()); }

    LiteralSet to_literals(const Bits& b) const {
        LiteralSet out;
        b.for_each([&](std::size_t s) { out.insert(literal_at(s)); });
        return out;
    }

    bool applicable(RuleIdx k, const Bits& i) const {
        const CRule& c = rules_[k];
        return c.body_pos.subset_of(i) && !c.body_naf.intersects(i);
    }
    bool head_true(RuleIdx k, const Bits& i) const {
        const CRule& c = rules_[k];
        if (c.head_slot == kNoHead) return false;
        bool in = i.test(static_cast<std::size_t>(c.head_slot));
        return c.head_naf ? !in : in;
    }
    bool applied(RuleIdx k, const Bits& i) const { return applicable(k, i) && head_true(k, i); }
    bool satisfied(RuleIdx k, const Bits& i) const { return !applicable(k, i) || head_true(k, i); }

    bool defeated(RuleIdx k, const Bits& i) const {
        const CRule& c = rules_[k];
        if (c.forced_slot == kNoHead) return false;
        for (RuleIdx j : by_forced_[static_cast<std::size_t>(c.forced_slot) ^ 1])
            if (applied(j, i)) return true;
        return false;
    }

    bool has_competitor(RuleIdx k) const {
        const CRule& c = rules_[k];
        if (c.forced_slot == kNoHead) return false;
        return !by_forced_[static_cast<std::size_t>(c.forced_slot) ^ 1].empty();
    }

    Bits satisfied_set(const Bits& i) const {
        Bits out(nrules());
        for (RuleIdx k = 0; k < nrules(); ++k)
            if (satisfied(k, i)) out.set(k);
        return out;
    }

    // Least model of the naf-free rules in the given subset; bottom when a
    // constraint body becomes derivable.
    struct Star {
        Bits literals;
        bool bottom = false;
    };

    Star star(const Bits& rule_set) const {
        Star st{Bits(nlits_), false};
        bool changed = true;
        while (changed && !st.bottom) {
            changed = false;
            rule_set.for_each([&](std::size_t k) {
                const CRule& c = rules_[k];
                if (c.body_naf.any())
                    throw std::invalid_argument("star closure requires naf-free rules");
                if (!c.body_pos.subset_of(st.literals)) return;
                if (c.head_slot == kNoHead) {
                    if (!st.bottom) {
                        st.bottom = true;
                        changed = true;
                    }
                } else if (!st.literals.test(static_cast<std::size_t>(c.head_slot))) {
                    st.literals.set(static_cast<std::size_t>(c.head_slot));
                    changed = true;
                }
            });
        }
        return st;
    }

    // Extends a memoized star state with one extra rule; used along the
    // solver's recursion path.
    void star_add(Star& st, const Bits& rule_set, RuleIdx added) const {
        if (st.bottom) return;
        const CRule& a = rules_[added];
        if (a.body_naf.any()) throw std::invalid_argument("star closure requires naf-free rules");
        if (!a.body_pos.subset_of(st.literals)) return;
        if (a.head_slot == kNoHead) {
            st.bottom = true;
            return;
        }
        if (st.literals.test(static_cast<std::size_t>(a.head_slot))) return;
        st.literals.set(static_cast<std::size_t>(a.head_slot));
        bool changed = true;
        while (changed && !st.bottom) {
            changed = false;
            rule_set.for_each([&](std::size_t k) {
                const CRule& c = rules_[k];
                if (!c.body_pos.subset_of(st.literals)) return;
                if (c.head_slot == kNoHead) {
                    if (!st.bottom) {
                        st.bottom = true;
                        changed = true;
                    }
                } else if (!st.literals.test(static_cast<std::size_t>(c.head_slot))) {
                    st.literals.set(static_cast<std::size_t>(c.head_slot));
                    changed = true;
                }
            });
        }
    }

    bool bits_consistent(const Bits& i) const {
        for (std::size_t a = 0; a < natoms(); ++a)
            if (i.test(2 * a) && i.test(2 * a + 1)) return false;
        return true;
    }

    // Extended answer set check: every rule satisfied or defeated, and i is
    // the answer set of the reduct (least model of its GL transform).
    bool is_extended_answer_set(const Bits& i) const {
        if (!bits_consistent(i)) return false;
        for (RuleIdx k = 0; k < nrules(); ++k)
            if (!satisfied(k, i) && !defeated(k, i)) return false;
        return reduct_answer_set(i);
    }

    // Whether i is the answer set of { r | satisfied(r, i) }.
    bool reduct_answer_set(const Bits& i) const {
        // GL keeps a satisfied rule when its body nafs are all true and, for a
        // naf head, the underlying literal is in i (the head then vanishes and
        // the rule acts as a constraint).
        Bits cur(nlits_);
        bool changed = true;
        while (changed) {
            changed = false;
            for (RuleIdx k = 0; k < nrules(); ++k) {
                const CRule& c = rules_[k];
                if (!satisfied(k, i)) continue;
                if (c.body_naf.intersects(i)) continue;
                if (c.head_naf && !i.test(static_cast<std::size_t>(c.head_slot))) continue;
                if (!c.body_pos.subset_of(cur)) continue;
                bool derives = c.head_slot != kNoHead && !c.head_naf;
                if (!derives) return false;  // constraint body derivable
                if (!cur.test(static_cast<std::size_t>(c.head_slot))) {
                    cur.set(static_cast<std::size_t>(c.head_slot));
                    changed = true;
                }
            }
        }
        return cur == i;
    }

private:
    const Program* p_;
    std::vector<AtomId> atoms_;
    std::map<AtomId, std::size_t> index_;
    std::size_t nlits_ = 0;
    std::vector<CRule> rules_;
    std::vector<std::vector<RuleIdx>> by_forced_;
};

// R1 preceq R2 iff every rule lost from R2 is countered by a strictly more
// preferred rule gained in R1.
inline bool preceq(const Bits& r1, const Bits& r2, const StrictOrder& o) {
    Bits gained = difference(r1, r2);
    bool ok = true;
    difference(r2, r1).for_each([&](std::size_t x) {
        if (ok && !gained.intersects(o.below(x))) ok = false;
    });
    return ok;
}

}  // namespace olp::detail
