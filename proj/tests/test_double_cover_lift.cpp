#include "fpf/lift.hpp"
#include "fpf/search.hpp"

#include <doctest.h>

using namespace fpf;

TEST_SUITE("double_cover_lift") {

TEST_CASE("stratum lifts") {
    CHECK(lift_stratum(Stratum::parse("(1;1^5;4)")).str() == "(2;∅;4^2)");
    CHECK(lift_stratum(Stratum::parse("(1;1^5;3^2)")).str() == "(2;∅;3^4)");
    CHECK(lift_stratum(Stratum::parse("(3;1^5;∅)")).str() == "(6;∅;∅)");
    CHECK(lift_stratum(Stratum::parse("(2;1^5;∅)")).str() == "(4;∅;∅)");
}

TEST_CASE("candidates: not FPF alone, FPF after the full twist") {
    auto t = std::make_shared<const Track>(named_track("camel-r"));
    for (int i = 1; i <= 3; ++i) {
        CAPTURE(i);
        TrackMap m = candidate_map(i, t);
        CHECK(trace_lemma_check(m).empty());
        LiftReport plain = fpf_verdict(m, false), twisted = fpf_verdict(m, true);
        CHECK_FALSE(plain.fpf);
        CHECK(twisted.fpf);
        CHECK(twisted.lifted_trace == 0);
        CHECK(plain.lifted_stratum.str() == "(2;∅;3^4)");
        auto sing = lifted_singularity_permutation(m, false);
        CHECK(sing.fixed.size() == 4);
        CHECK(lifted_singularity_permutation(m, true).fixed.empty());
    }
}

TEST_CASE("swap parity counts monogon letters") {
    Track t = named_track("camel-r");
    DecoratedPath p = parse_path(t, "r- b- d p- g o");
    CHECK(prefix_swap_parity(t, p, 0) == 0);
    CHECK(prefix_swap_parity(t, p, 1) == 1);
    CHECK(prefix_swap_parity(t, p, 2) == 0);
    CHECK(prefix_swap_parity(t, p, 3) == 0);
    CHECK(prefix_swap_parity(t, p, 4) == 1);
}

TEST_CASE("toggling flips every sheet shift") {
    auto t = std::make_shared<const Track>(named_track("camel-r"));
    TrackMap m = candidate_map(2, t);
    auto a = sheet_shifts(m, false), b = sheet_shifts(m, true);
    REQUIRE(a.size() == b.size());
    for (size_t i = 0; i < a.size(); ++i) CHECK(a[i] != b[i]);
}

}
