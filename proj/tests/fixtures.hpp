#pragma once

// Hand-checked programs shared between the unit suites, the acceptance run
// and the CLI tests.

#include <string>
#include <vector>

#include "olp/core.hpp"
#include "olp/transforms.hpp"

namespace fixtures {

using namespace olp;

inline Rule rule(std::string label, std::vector<ExtLiteral> head, std::vector<ExtLiteral> body,
                 HeadKind kind = HeadKind::plain) {
    return make_rule(std::move(label), std::move(head), std::move(body), kind);
}

inline Interpretation interp(std::initializer_list<Literal> ls) {
    return Interpretation(LiteralSet(ls));
}

inline StrictOrder layers(std::size_t n, const std::vector<std::vector<RuleIdx>>& lower_to_upper) {
    std::vector<std::pair<RuleIdx, RuleIdx>> edges;
    for (std::size_t i = 0; i + 1 < lower_to_upper.size(); ++i)
        for (RuleIdx a : lower_to_upper[i])
            for (RuleIdx b : lower_to_upper[i + 1]) edges.emplace_back(a, b);
    return StrictOrder::from_edges(n, edges);
}

// Two defaults fighting two sign-flipping rules; three extended answer sets.
inline Program conflict_pair() {
    return Program(ProgramKind::slp, {
                                         rule("na", {plain(neg("a"))}, {}),
                                         rule("nb", {plain(neg("b"))}, {}),
                                         rule("a", {plain(pos("a"))}, {plain(neg("b"))}),
                                         rule("b", {plain(pos("b"))}, {plain(neg("a"))}),
                                     });
}

// Same rules, positive conclusions preferred over the defaults.
inline OrderedProgram conflict_pair_ordered() {
    return OrderedProgram(conflict_pair(), layers(4, {{2, 3}, {0, 1}}));
}

// Default flying overridden by a more specific exception.
inline OrderedProgram penguin() {
    Program p(ProgramKind::slp, {
                                    rule("fly", {plain(pos("f"))}, {plain(pos("b"))}),
                                    rule("nofly", {plain(neg("f"))}, {plain(pos("p"))}),
                                    rule("bird", {plain(pos("b"))}, {plain(pos("p"))}),
                                    rule("pen", {plain(pos("p"))}, {}),
                                });
    return OrderedProgram(std::move(p), layers(4, {{2, 3}, {1}, {0}}));
}

// Studying versus passing; only studying-and-passing survives as proper.
inline OrderedProgram study() {
    Program p(ProgramKind::slp,
              {
                  rule("r0", {plain(pos("pass"))}, {plain(neg("pass"))}),
                  rule("r1", {plain(neg("pass"))}, {plain(neg("study"))}),
                  rule("r2", {plain(neg("study"))}, {}),
                  rule("r3", {plain(pos("study"))}, {}),
                  rule("r4", {plain(pos("pass"))}, {plain(pos("study"))}),
              });
    return OrderedProgram(std::move(p), layers(5, {{0, 1}, {2}, {3, 4}}));
}

// Full-body exercise with two sport combinations; preferences on the
// negated facts form two independent chains.
inline OrderedProgram exercise() {
    Program p(ProgramKind::elp,
              {
                  rule("fbe1", {plain(pos("fbe"))}, {plain(pos("lw")), plain(pos("run"))}),
                  rule("fbe2", {plain(pos("fbe"))}, {plain(pos("sw")), plain(pos("pb"))}),
                  rule("need", {}, {naf(pos("fbe"))}),
                  rule("nolw", {plain(neg("lw"))}, {}),
                  rule("nosw", {plain(neg("sw"))}, {}),
                  rule("nopb", {plain(neg("pb"))}, {}),
                  rule("norun", {plain(neg("run"))}, {}),
                  rule("lw", {plain(pos("lw"))}, {}),
                  rule("pb", {plain(pos("pb"))}, {}),
                  rule("run", {plain(pos("run"))}, {}),
                  rule("sw", {plain(pos("sw"))}, {}),
              });
    std::vector<std::pair<RuleIdx, RuleIdx>> edges;
    for (RuleIdx top : {3, 4, 5, 6})
        for (RuleIdx bot : {0, 1, 2}) edges.emplace_back(bot, top);
    edges.emplace_back(3, 5);  // -lw before -pb
    edges.emplace_back(4, 6);  // -sw before -run
    for (RuleIdx mid : {3, 4, 5, 6})
        for (RuleIdx cr : {7, 8, 9, 10}) edges.emplace_back(mid, cr);
    return OrderedProgram(std::move(p), StrictOrder::from_edges(11, edges));
}

// A constraint that is neither satisfiable nor defeatable alongside a clash.
inline Program clash() {
    return Program(ProgramKind::slp, {
                                         rule("a", {plain(pos("a"))}, {}),
                                         rule("na", {plain(neg("a"))}, {}),
                                         rule("c", {}, {plain(pos("a"))}),
                                     });
}

// Founded-but-not-extended witness: the default -a stays undefeated.
inline Program unfounded_default() {
    return Program(ProgramKind::slp, {
                                         rule("na", {plain(neg("a"))}, {}),
                                         rule("b", {plain(pos("b"))}, {}),
                                         rule("nb", {plain(neg("b"))}, {plain(neg("a"))}),
                                     });
}

// Positive disjunction whose shifted version loses the minimal model.
inline Program disj_loop() {
    return Program(ProgramKind::dlp,
                   {
                       rule("ab", {plain(pos("a")), plain(pos("b"))}, {}, HeadKind::disjunctive),
                       rule("a", {plain(pos("a"))}, {plain(pos("b"))}),
                       rule("b", {plain(pos("b"))}, {plain(pos("a"))}),
                   });
}

// Seminegative disjunction without classical answer sets.
inline Program disj_naf() {
    return Program(ProgramKind::dlp,
                   {
                       rule("ab", {plain(pos("a")), plain(pos("b"))}, {}, HeadKind::disjunctive),
                       rule("ba", {plain(pos("b"))}, {plain(pos("a"))}),
                       rule("aa", {plain(pos("a"))}, {naf(pos("a"))}),
                   });
}

// Six-rule extended program with four extended answer sets.
inline Program six_rule_elp() {
    return Program(ProgramKind::elp, {
                                         rule("na", {plain(neg("a"))}, {}),
                                         rule("nb", {plain(neg("b"))}, {}),
                                         rule("c", {plain(pos("c"))}, {}),
                                         rule("a", {plain(pos("a"))}, {naf(pos("b"))}),
                                         rule("b", {plain(pos("b"))}, {naf(pos("a"))}),
                                         rule("nc", {naf(pos("c"))}, {plain(pos("a"))}),
                                     });
}

// Same rules under an order, making two of the four answer sets preferred.
inline OrderedProgram six_rule_eolp() {
    return OrderedProgram(six_rule_elp(), layers(6, {{3, 4, 2}, {0, 1, 5}}));
}

// Extended program with no extended answer set at all.
inline Program no_answer_elp() {
    return Program(ProgramKind::elp,
                   {
                       rule("a", {plain(pos("a"))}, {naf(pos("b"))}),
                       rule("b", {plain(pos("b"))}, {plain(pos("a")), naf(pos("c"))}),
                   });
}

// naf head used purely to defeat a fact, leaving the empty answer set.
inline OrderedProgram naf_head_chain() {
    Program p(ProgramKind::elp, {
                                    rule("c", {}, {plain(pos("a"))}),
                                    rule("f", {plain(pos("a"))}, {}),
                                    rule("d", {naf(pos("a"))}, {}),
                                });
    return OrderedProgram(std::move(p), layers(3, {{0}, {1}, {2}}));
}

// Three-rule ordered disjunction with five answer sets, two of them best.
inline Program lpod3() {
    return Program(
        ProgramKind::lpod,
        {
            rule("r", {plain(pos("b")), plain(pos("c")), plain(pos("d"))}, {},
                 HeadKind::ordered_disjunctive),
            rule("s", {plain(pos("c")), plain(pos("a")), plain(pos("d"))}, {},
                 HeadKind::ordered_disjunctive),
            rule("nc", {plain(neg("c"))}, {plain(pos("b"))}),
        });
}

// Ordered disjunction guarded by a body that an answer set may block.
inline Program lpod_blocked() {
    return Program(ProgramKind::lpod,
                   {
                       rule("cd", {plain(pos("c")), plain(pos("d"))}, {plain(pos("a"))},
                            HeadKind::ordered_disjunctive),
                       rule("a", {plain(pos("a"))}, {naf(pos("b"))}),
                       rule("b", {plain(pos("b"))}, {naf(pos("a"))}),
                   });
}

// Last-resort rules p/q with q preferred, over an s fact and optionally the
// constraint that makes the base program inconsistent.
inline transforms::CrProgram cr_pq(bool with_constraint) {
    transforms::CrProgram p;
    p.regular.push_back(rule("s", {plain(pos("s"))}, {}));
    if (with_constraint) p.regular.push_back(rule("c4", {}, {naf(pos("p")), naf(pos("q"))}));
    p.cr.push_back(rule("r1", {plain(pos("p"))}, {naf(pos("t"))}));
    p.cr.push_back(rule("r2", {plain(pos("q"))}, {naf(pos("t"))}));
    p.cr_pref = StrictOrder::from_edges(2, {{1, 0}});  // applying r2 preferred
    return p;
}

// The exercise problem stated with last-resort sport rules.
inline transforms::CrProgram cr_exercise() {
    transforms::CrProgram p;
    p.regular.push_back(rule("fbe1", {plain(pos("fbe"))}, {plain(pos("lw")), plain(pos("run"))}));
    p.regular.push_back(rule("fbe2", {plain(pos("fbe"))}, {plain(pos("sw")), plain(pos("pb"))}));
    p.regular.push_back(rule("need", {}, {naf(pos("fbe"))}));
    p.cr.push_back(rule("lw", {plain(pos("lw"))}, {}));
    p.cr.push_back(rule("pb", {plain(pos("pb"))}, {}));
    p.cr.push_back(rule("run", {plain(pos("run"))}, {}));
    p.cr.push_back(rule("sw", {plain(pos("sw"))}, {}));
    // running preferred to swimming, ball playing to weight lifting
    p.cr_pref = StrictOrder::from_edges(4, {{2, 3}, {1, 0}});
    return p;
}

// Three facts under pairwise-exclusive constraints; the only repair drops all.
inline transforms::Database db3() {
    return transforms::Database({pos("p"), pos("q"), pos("r")});
}

inline std::vector<transforms::ConstraintClause> db3_constraints() {
    using transforms::ConstraintClause;
    return {
        ConstraintClause({neg("p"), pos("q")}),  ConstraintClause({neg("p"), neg("q")}),
        ConstraintClause({neg("q"), pos("r")}),  ConstraintClause({neg("q"), neg("r")}),
        ConstraintClause({neg("r"), pos("p")}),  ConstraintClause({neg("r"), neg("p")}),
    };
}

// Negative database already satisfying its constraints.
inline transforms::Database db2() { return transforms::Database({neg("a"), neg("b")}); }

inline std::vector<transforms::ConstraintClause> db2_constraints() {
    using transforms::ConstraintClause;
    return {ConstraintClause({pos("a"), neg("b")}), ConstraintClause({neg("a"), pos("b")})};
}

// Guess layers on top of mutual implications; a single preferred answer set.
inline OrderedProgram nested_guess() {
    Program p(ProgramKind::slp, {
                                    rule("nbna", {plain(neg("b"))}, {plain(neg("a"))}),
                                    rule("nanb", {plain(neg("a"))}, {plain(neg("b"))}),
                                    rule("ab", {plain(pos("a"))}, {plain(pos("b"))}),
                                    rule("ba", {plain(pos("b"))}, {plain(pos("a"))}),
                                    rule("a", {plain(pos("a"))}, {}),
                                    rule("b", {plain(pos("b"))}, {}),
                                    rule("na", {plain(neg("a"))}, {}),
                                    rule("nb", {plain(neg("b"))}, {}),
                                });
    return OrderedProgram(std::move(p), layers(8, {{0, 1, 2, 3}, {4, 5}, {6, 7}}));
}

// No light, so the power must be out: contrapositive use of a strong rule.
inline OrderedProgram contrapositive_chain() {
    Program p(ProgramKind::slp, {
                                    rule("na", {plain(neg("a"))}, {}),
                                    rule("ab", {plain(pos("a"))}, {plain(pos("b"))}),
                                    rule("b", {plain(pos("b"))}, {}),
                                    rule("nb", {plain(neg("b"))}, {}),
                                });
    return OrderedProgram(std::move(p), layers(4, {{0}, {1}, {2}, {3}}));
}

// Chain where global comparison beats rule-local conflict resolution.
inline OrderedProgram local_global() {
    Program p(ProgramKind::slp, {
                                    rule("nbna", {plain(neg("b"))}, {plain(neg("a"))}),
                                    rule("b", {plain(pos("b"))}, {}),
                                    rule("na", {plain(neg("a"))}, {}),
                                    rule("a", {plain(pos("a"))}, {}),
                                });
    return OrderedProgram(std::move(p), layers(4, {{0}, {1}, {2}, {3}}));
}

// Diagnosis program: law and normal operation above fault assumptions, the
// observation unrelated to the chain.
inline OrderedProgram light(bool with_observation) {
    std::vector<Rule> rules = {
        rule("law", {plain(pos("light"))}, {plain(pos("power")), plain(pos("bulb"))}),
        rule("pw", {plain(pos("power"))}, {}),
        rule("bl", {plain(pos("bulb"))}, {}),
        rule("npw", {plain(neg("power"))}, {}),
        rule("nbl", {plain(neg("bulb"))}, {}),
    };
    if (with_observation) rules.push_back(rule("obs", {plain(neg("light"))}, {plain(pos("light"))}));
    std::size_t n = rules.size();
    std::vector<std::pair<RuleIdx, RuleIdx>> edges;
    for (RuleIdx mid : {1, 2}) {
        edges.emplace_back(0, mid);
        for (RuleIdx top : {3, 4}) edges.emplace_back(mid, top);
    }
    return OrderedProgram(Program(ProgramKind::slp, std::move(rules)),
                          StrictOrder::from_edges(n, edges));
}

inline std::string light_text() {
    return "FaultModel {\n"
           "    -power.\n"
           "    -bulb.\n"
           "}\n"
           "NormalOperation {\n"
           "    power.\n"
           "    bulb.\n"
           "}\n"
           "System {\n"
           "    light :- power, bulb.\n"
           "}\n"
           "System < NormalOperation < FaultModel\n"
           "Observations { -light :- light. }\n";
}

}  // namespace fixtures
