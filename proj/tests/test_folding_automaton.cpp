#include "fpf/automaton.hpp"
#include "fpf/elimination.hpp"

#include <doctest.h>

using namespace fpf;

TEST_SUITE("folding_automaton") {

TEST_CASE("fixture shape") {
    Automaton a = stratum_automaton();
    CHECK(a.strands == 5);
    for (const char* n : {"enoki-l", "enoki-r", "camel-l", "camel-r"}) CHECK(a.node_id(n) >= 0);
    CHECK(a.node_id("nowhere") == -1);
    for (const auto& e : a.edges)
        if (e.dashed) CHECK(e.label.letters.empty());
}

TEST_CASE("parse errors") {
    CHECK_THROWS_AS(parse_automaton("name x\nstrands 5\narrow a b 1\n"), TrackParseError);
    CHECK_THROWS_AS(parse_automaton("name x\nstrands 5\nnode a kind whatever\n"), TrackParseError);
    CHECK_THROWS_AS(parse_automaton("name x\nstrands 5\nnode a kind\n"), TrackParseError);
    CHECK_THROWS_AS(parse_automaton("name x\nstrands 5\nnode a kind aux\nnode a kind aux\n"), TrackParseError);
    CHECK_THROWS_AS(parse_automaton("node a kind aux\ndashed a a 1\n"), TrackParseError);
}

TEST_CASE("loops and composed words") {
    Automaton a = stratum_automaton();
    CHECK(compose_loop(a, {}).letters.empty());
    int er = a.node_id("enoki-r");
    auto ls = loops(a, er, 3);
    REQUIRE_FALSE(ls.empty());
    bool saw_beta = false;
    for (const auto& l : ls)
        if (!l.passes_camel && braids_equal(l.word, beta_ab(1, 2))) saw_beta = true;
    CHECK(saw_beta);  // 4 3 2, -1, -1 -2 -3
}

TEST_CASE("camel-avoiding loops are beta(a,b) products") {
    Automaton a = stratum_automaton();
    for (const char* base : {"enoki-l", "enoki-r"}) {
        CAPTURE(base);
        auto dec = decompose_enoki_loops(a, a.node_id(base), 6);
        REQUIRE_FALSE(dec.empty());
        for (const auto& d : dec) CHECK(d.ok);
    }
}

TEST_CASE("beta(a,b) fixes a transported {2,4} curve") {
    for (int x = 0; x <= 3; ++x)
        for (int y = 0; y <= 3; ++y) {
            auto w = beta_ab_witness(x, y);
            REQUIRE(w);
            CHECK(w->split_fixes);
            CHECK(w->beta_fixes);
            CHECK(braids_equal(beta_ab_split(x, y), conjugate(beta_ab(x, y), w->conjugator)));
        }
}

TEST_CASE("reducibility witnesses") {
    auto id = reducibility_witness(BraidWord::identity(5));
    REQUIRE(id);
    CHECK(id->trivial);
    CHECK(reducibility_witness(beta_ab(2, 1)).has_value());
    CHECK(reducibility_witness(BraidWord(5, {1, 1})).has_value());
    for (int i = 1; i <= 3; ++i) CHECK_FALSE(reducibility_witness(beta_i(i)).has_value());
}

TEST_CASE("passage check") {
    auto rep = camel_passage_check(stratum_automaton(), 6);
    CHECK(rep.loops > 0);
    CHECK(rep.through_camel > 0);
    CHECK(rep.flagged.empty());
}

}
