#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "olp/oracle.hpp"

#include "fixtures.hpp"
#include "generators.hpp"

using namespace olp;
using fixtures::interp;
using fixtures::rule;

namespace {

std::vector<LiteralSet> sets(std::initializer_list<LiteralSet> ls) { return ls; }

}  // namespace

TEST_CASE("stable models") {
    Program even(ProgramKind::elp, {rule("a", {plain(pos("a"))}, {naf(pos("b"))}),
                                    rule("b", {plain(pos("b"))}, {naf(pos("a"))})});
    auto models = oracle::stable_models(even);
    CHECK(models.size() == 2);
    CHECK(std::count(models.begin(), models.end(), LiteralSet{pos("a")}) == 1);
    CHECK(std::count(models.begin(), models.end(), LiteralSet{pos("b")}) == 1);

    Program loop(ProgramKind::elp, {rule("a", {plain(pos("a"))}, {plain(pos("a"))})});
    CHECK(oracle::stable_models(loop) == sets({{}}));

    Program odd(ProgramKind::elp, {rule("a", {plain(pos("a"))}, {naf(pos("a"))})});
    CHECK(oracle::stable_models(odd).empty());

    CHECK_THROWS_AS(oracle::stable_models(fixtures::conflict_pair()), std::invalid_argument);
}

TEST_CASE("minimal models") {
    CHECK(oracle::minimal_models(fixtures::disj_loop()) == sets({{pos("a"), pos("b")}}));

    Program choice(ProgramKind::dlp, {rule("ab", {plain(pos("a")), plain(pos("b"))}, {},
                                           HeadKind::disjunctive)});
    auto mm = oracle::minimal_models(choice);
    CHECK(mm.size() == 2);
    CHECK(std::count(mm.begin(), mm.end(), LiteralSet{pos("a")}) == 1);
    CHECK(std::count(mm.begin(), mm.end(), LiteralSet{pos("b")}) == 1);

    CHECK(oracle::minimal_models(Program(ProgramKind::dlp, {})) == sets({{}}));
}

TEST_CASE("possible models") {
    Program choice(ProgramKind::dlp, {rule("ab", {plain(pos("a")), plain(pos("b"))}, {},
                                           HeadKind::disjunctive)});
    auto pm = oracle::possible_models(choice);
    CHECK(pm.size() == 3);  // the three nonempty head subsets
    CHECK(std::count(pm.begin(), pm.end(), LiteralSet{pos("a"), pos("b")}) == 1);

    auto minimal = oracle::minimal_sets(oracle::possible_models(fixtures::disj_naf()));
    CHECK(std::count(minimal.begin(), minimal.end(), LiteralSet{pos("a"), pos("b")}) == 1);
}

TEST_CASE("possible models of a non-disjunctive program are its stable models") {
    gen::Rng rng(17);
    for (int t = 0; t < 40; ++t) {
        Program p = gen::random_seminegative(rng, 4, 6);
        auto pm = oracle::possible_models(p);
        auto sm = oracle::stable_models(p);
        std::sort(pm.begin(), pm.end());
        std::sort(sm.begin(), sm.end());
        CHECK(pm == sm);
    }
}

TEST_CASE("ordered disjunction answer sets and preference") {
    Program p = fixtures::lpod3();
    auto all = oracle::lpod_answer_sets(p);
    LiteralSet s1{pos("a"), pos("b"), neg("c")};
    LiteralSet s2{pos("b"), neg("c"), pos("d")};
    LiteralSet s3{pos("c")};
    LiteralSet s4{pos("a"), pos("d")};
    LiteralSet s5{pos("d")};
    CHECK(all.size() == 5);
    for (const LiteralSet& s : {s1, s2, s3, s4, s5})
        CHECK(std::count(all.begin(), all.end(), s) == 1);

    // answer sets need not be subset minimal
    CHECK(std::includes(s4.begin(), s4.end(), s5.begin(), s5.end()));

    auto preferred = oracle::lpod_preferred(p);
    CHECK(preferred.size() == 2);
    CHECK(std::count(preferred.begin(), preferred.end(), s1) == 1);
    CHECK(std::count(preferred.begin(), preferred.end(), s3) == 1);

    // degrees on the first rule: s1 satisfies it to 1, s3 to 2, s5 to 3
    CHECK(oracle::lpod_degree(s1, p[0]) == 1);
    CHECK(oracle::lpod_degree(s3, p[0]) == 2);
    CHECK(oracle::lpod_degree(s5, p[0]) == 3);
    CHECK(oracle::lpod_degree(s3, p[2]) == 1);  // body false
}

TEST_CASE("single-rule ordered disjunction prefers its first option") {
    Program p(ProgramKind::lpod, {rule("bc", {plain(pos("b")), plain(pos("c"))}, {},
                                       HeadKind::ordered_disjunctive)});
    auto all = oracle::lpod_answer_sets(p);
    CHECK(all.size() == 2);
    CHECK(oracle::lpod_preferred(p) == sets({{pos("b")}}));
}

TEST_CASE("preferred answer sets output is an antichain") {
    gen::Rng rng(29);
    for (int t = 0; t < 25; ++t) {
        Program p = gen::random_lpod(rng, 3, 3);
        auto preferred = oracle::lpod_preferred(p);
        for (const LiteralSet& a : preferred)
            for (const LiteralSet& b : preferred) {
                if (a == b) continue;
                CHECK_FALSE(oracle::lpod_prefer(oracle::DegreeProfile::of(a, p),
                                                oracle::DegreeProfile::of(b, p), p));
            }
    }
}

TEST_CASE("brute force preferred answer sets") {
    OrderedProgram penguin = fixtures::penguin();
    CHECK(oracle::brute_force_preferred(penguin) ==
          std::vector<Interpretation>{interp({pos("p"), pos("b"), neg("f")})});

    OrderedProgram chain = fixtures::naf_head_chain();
    CHECK(oracle::brute_force_preferred(chain) == std::vector<Interpretation>{Interpretation{}});

    OrderedProgram light = fixtures::light(true);
    auto pp = oracle::brute_force_proper_preferred(light);
    std::vector<Interpretation> expected = {interp({neg("bulb"), pos("power")}),
                                            interp({pos("bulb"), neg("power")})};
    std::sort(expected.begin(), expected.end());
    CHECK(pp == expected);
}

TEST_CASE("brute force size guard") {
    std::vector<Rule> facts;
    for (AtomId a : gen::atoms(11))
        facts.push_back(rule("f" + Symbols::name(a), {plain(Literal{a, true})}, {}));
    Program p(ProgramKind::slp, std::move(facts));
    OrderedProgram op(p, StrictOrder::from_edges(p.size(), {}));
    CHECK_THROWS_AS(oracle::brute_force_preferred(op, 10), olp::oracle::SizeLimitError);
}

TEST_CASE("brute force extended agrees with the solver-side enumeration") {
    gen::Rng rng(37);
    for (int t = 0; t < 50; ++t) {
        std::size_t natoms = 3 + rng.below(4);  // up to 6
        Program p = rng.chance(0.5) ? gen::random_slp(rng, natoms, 8)
                                    : gen::random_elp(rng, natoms, 8);
        CHECK(oracle::brute_force_extended(p) == semantics::extended_answer_sets(p));
    }
}

TEST_CASE("disjunctive answer sets are possible models") {
    gen::Rng rng(41);
    for (int t = 0; t < 25; ++t) {
        Program p = gen::random_seminegative_dlp(rng, 3, 4);
        auto as = oracle::dlp_answer_sets(p);
        auto pm = oracle::possible_models(p);
        for (const LiteralSet& m : as)
            CHECK(std::count(pm.begin(), pm.end(), m) == 1);
    }
}
