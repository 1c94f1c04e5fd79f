#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "olp/core.hpp"

#include "fixtures.hpp"
#include "generators.hpp"

using namespace olp;
using fixtures::interp;

TEST_CASE("atoms intern by name") {
    CHECK(Atom::named("alpha") == Atom::named("alpha"));
    CHECK(Atom::named("alpha") != Atom::named("beta"));
    CHECK(Atom::named("alpha").name() == "alpha");
    CHECK_THROWS_AS(Symbols::intern(""), std::invalid_argument);
}

TEST_CASE("negation is an involution") {
    gen::Rng rng(7);
    auto pool = gen::atoms(6);
    for (int i = 0; i < 100; ++i) {
        Literal l = gen::random_literal(rng, pool, true);
        CHECK(l.negated().negated() == l);
        CHECK(l.negated() != l);
    }
    CHECK(ExtLiteral{pos("a"), true}.underlying() == pos("a"));
    CHECK(naf(neg("a")).forced_literal() == pos("a"));
}

TEST_CASE("interpretations reject inconsistent literal sets") {
    CHECK_THROWS_AS(Interpretation({pos("a"), neg("a")}), std::invalid_argument);
    CHECK(interp({pos("a"), neg("b")}).contains(neg("b")));
}

TEST_CASE("herbrand base collects head and body atoms") {
    std::set<AtomId> base = herbrand_base(fixtures::conflict_pair());
    CHECK(base == std::set<AtomId>{Symbols::intern("a"), Symbols::intern("b")});

    CHECK(herbrand_base(Program(ProgramKind::slp, {})).empty());

    Program only_constraint(ProgramKind::elp,
                            {fixtures::rule("c", {}, {plain(pos("a")), naf(pos("b"))})});
    CHECK(herbrand_base(only_constraint) ==
          std::set<AtomId>{Symbols::intern("a"), Symbols::intern("b")});
}

TEST_CASE("star closure derives the inconsistent least model of the conflict program") {
    StarResult st = star_closure(fixtures::conflict_pair());
    CHECK(st.literals == LiteralSet{pos("a"), neg("a"), pos("b"), neg("b")});
    CHECK_FALSE(st.bottom);
    CHECK_FALSE(st.consistent());
}

TEST_CASE("star closure edge cases") {
    CHECK(star_closure(Program(ProgramKind::slp, {})).literals.empty());

    Program fires(ProgramKind::slp, {fixtures::rule("a", {plain(pos("a"))}, {}),
                                     fixtures::rule("c", {}, {plain(pos("a"))})});
    CHECK(star_closure(fires).bottom);

    Program nafful(ProgramKind::elp, {fixtures::rule("a", {plain(pos("a"))}, {naf(pos("b"))})});
    CHECK_THROWS_AS(star_closure(nafful), std::invalid_argument);

    Program disjunctive(ProgramKind::dlp,
                        {fixtures::rule("ab", {plain(pos("a")), plain(pos("b"))}, {},
                                        HeadKind::disjunctive)});
    CHECK_THROWS_AS(star_closure(disjunctive), std::invalid_argument);
}

TEST_CASE("star closure is monotone") {
    gen::Rng rng(11);
    for (int t = 0; t < 60; ++t) {
        Program p = gen::random_slp(rng, 5, 8);
        LabelSet all, some;
        for (RuleIdx k = 0; k < p.size(); ++k) {
            all.insert(k);
            if (rng.chance(0.5)) some.insert(k);
        }
        StarResult small = star_closure(p, some);
        StarResult big = star_closure(p, all);
        CHECK(std::includes(big.literals.begin(), big.literals.end(), small.literals.begin(),
                            small.literals.end()));
    }
}

TEST_CASE("satisfaction, application and defeat on the conflict program") {
    Program p = fixtures::conflict_pair();
    Interpretation i = interp({neg("a"), pos("b")});

    CHECK_FALSE(satisfies(i, p[p.index_of("nb")]));
    CHECK(satisfies(i, p[p.index_of("a")]));  // inapplicable
    CHECK(applied(i, p[p.index_of("b")]));
    CHECK(applied(i, p[p.index_of("na")]));
    CHECK_FALSE(applicable(i, p[p.index_of("a")]));

    CHECK(defeated(p[p.index_of("nb")], i, p));
    CHECK_FALSE(defeated(p[p.index_of("na")], i, p));
}

TEST_CASE("constraints: satisfied iff inapplicable, never applied, never defeated") {
    Program p = fixtures::clash();
    const Rule& c = p[p.index_of("c")];
    CHECK(satisfies(Interpretation{}, c));
    CHECK_FALSE(applied(Interpretation{}, c));
    CHECK_FALSE(satisfies(interp({pos("a")}), c));
    CHECK_FALSE(defeated(c, interp({pos("a")}), p));
}

TEST_CASE("defeat among extended heads follows the forced-literal clash") {
    Program p = fixtures::six_rule_elp();
    Interpretation i = interp({pos("a"), neg("b")});
    CHECK(defeated(p[p.index_of("c")], i, p));   // not c :- a is applied
    CHECK(defeated(p[p.index_of("na")], i, p));  // a :- not b is applied

    Program q = fixtures::unfounded_default();
    CHECK_FALSE(defeated(q[q.index_of("na")], interp({pos("b")}), q));
}

TEST_CASE("applied implies satisfied") {
    gen::Rng rng(23);
    for (int t = 0; t < 80; ++t) {
        Program p = gen::random_elp(rng, 5, 8);
        auto pool = gen::atoms(5);
        LiteralSet ls;
        for (AtomId a : pool) {
            int c = static_cast<int>(rng.below(3));
            if (c == 1) ls.insert(Literal{a, true});
            if (c == 2) ls.insert(Literal{a, false});
        }
        Interpretation i{LiteralSet(ls)};
        for (const Rule& r : p.rules())
            if (applied(i, r)) CHECK(satisfies(i, r));
    }
}

TEST_CASE("reduct keeps exactly the satisfied rules") {
    Program p = fixtures::conflict_pair();
    LabelSet red = reduct(p, interp({neg("a"), pos("b")}));
    CHECK(red == LabelSet{p.index_of("na"), p.index_of("a"), p.index_of("b")});

    CHECK(reduct(Program(ProgramKind::slp, {}), Interpretation{}).empty());
}

TEST_CASE("reduct equals the whole program iff every rule is satisfied") {
    gen::Rng rng(31);
    for (int t = 0; t < 50; ++t) {
        Program p = gen::random_slp(rng, 4, 6);
        LiteralSet ls;
        for (AtomId a : gen::atoms(4)) {
            int c = static_cast<int>(rng.below(3));
            if (c == 1) ls.insert(Literal{a, true});
            if (c == 2) ls.insert(Literal{a, false});
        }
        Interpretation i{LiteralSet(ls)};
        bool all = true;
        for (const Rule& r : p.rules()) all = all && satisfies(i, r);
        CHECK((reduct(p, i).size() == p.size()) == all);
    }
}

TEST_CASE("order construction: chain layers, empty order, cycles") {
    OrderedProgram light = fixtures::light(true);
    CHECK(light.order.edge_count() == 8);  // 2 + 4 + 2 transitive
    CHECK(light.order.less(0, 3));         // law before fault model, via closure
    CHECK_FALSE(light.order.less(5, 0));   // observation unrelated

    StrictOrder empty = StrictOrder::from_edges(3, {});
    CHECK(empty.edge_count() == 0);

    try {
        StrictOrder::from_edges(2, {{0, 1}, {1, 0}});
        FAIL("expected a cycle");
    } catch (const CycleError& e) {
        CHECK(e.cycle().size() == 2);
    }
    CHECK_THROWS_AS(StrictOrder::from_edges(1, {{0, 0}}), CycleError);
}

TEST_CASE("order closure is irreflexive, antisymmetric and transitive") {
    gen::Rng rng(41);
    for (int t = 0; t < 50; ++t) {
        StrictOrder o = gen::random_order(rng, 8, 0.3);
        for (RuleIdx a = 0; a < 8; ++a) {
            CHECK_FALSE(o.less(a, a));
            for (RuleIdx b = 0; b < 8; ++b) {
                if (o.less(a, b)) CHECK_FALSE(o.less(b, a));
                for (RuleIdx c = 0; c < 8; ++c)
                    if (o.less(a, b) && o.less(b, c)) CHECK(o.less(a, c));
            }
        }
    }
}

TEST_CASE("down closure") {
    StrictOrder chain = fixtures::layers(3, {{0}, {1}, {2}});
    CHECK(down_closure({2}, chain) == LabelSet{0, 1});
    CHECK(down_closure({}, chain).empty());

    gen::Rng rng(43);
    for (int t = 0; t < 50; ++t) {
        StrictOrder o = gen::random_order(rng, 7);
        LabelSet x = gen::random_label_set(rng, 7);
        LabelSet dc = down_closure(x, o);
        LabelSet united = dc;
        united.insert(x.begin(), x.end());
        LabelSet again = down_closure(united, o);
        for (RuleIdx u : again) CHECK(united.count(u));
    }
}

TEST_CASE("program validation") {
    CHECK_THROWS_AS(Program(ProgramKind::slp,
                            {fixtures::rule("r", {plain(pos("a"))}, {naf(pos("b"))})}),
                    std::invalid_argument);
    CHECK_THROWS_AS(Program(ProgramKind::slp, {fixtures::rule("r", {plain(pos("a"))}, {}),
                                               fixtures::rule("r", {plain(pos("b"))}, {})}),
                    std::invalid_argument);
    CHECK_THROWS_AS(Program(ProgramKind::elp, {fixtures::rule(
                                                  "r", {plain(pos("a")), plain(pos("b"))}, {})}),
                    std::invalid_argument);
    CHECK_THROWS_AS(OrderedProgram(fixtures::conflict_pair(), StrictOrder::from_edges(2, {})),
                    std::invalid_argument);
}
