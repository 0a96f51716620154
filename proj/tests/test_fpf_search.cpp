#include "fpf/search.hpp"

#include <doctest.h>

using namespace fpf;

namespace {

SearchOutcome run(const std::string& track, int len, std::set<std::string> off = {}) {
    SearchConfig c;
    c.track = std::make_shared<const Track>(named_track(track));
    c.max_image_length = len;
    c.disabled_rules = std::move(off);
    c.jobs = 2;
    return run_search(c);
}

}  // namespace

TEST_SUITE("fpf_search") {

TEST_CASE("rotations") {
    CHECK(enumerate_rotations(named_track("camel-r")).size() == 13);
    CHECK(enumerate_rotations(named_track("jellyfish")).size() == 3);
    auto cases = bcd_cases(named_track("camel-r"));
    CHECK(cases.size() == 5);
    size_t total = 0;
    for (auto& [k, v] : cases) total += v.size();
    CHECK(total == 9);
}

TEST_CASE("jellyfish has no survivors") {
    auto o = run("jellyfish", 16);
    CHECK(o.survivors.empty());
    CHECK(o.exhausted);
}

TEST_CASE("camel has exactly the three candidates") {
    auto o = run("camel-r", 16);
    CHECK(o.exhausted);
    REQUIRE(o.survivors.size() == 3);
    auto names = match_candidates(o);
    std::set<std::string> got;
    for (auto& [k, v] : names) got.insert(v);
    CHECK(got == std::set<std::string>{"beta1", "beta2", "beta3"});
    for (const auto& s : o.survivors) {
        CHECK_FALSE(s.fpf_toggles[0]);
        CHECK(s.fpf_toggles[1]);
    }
}

TEST_CASE("restricted swapped cases are empty") {
    auto t = std::make_shared<const Track>(named_track("camel-r"));
    for (auto& [name, rots] : bcd_cases(*t)) {
        CAPTURE(name);
        SearchConfig c;
        c.track = t;
        c.rotation_cases = rots;
        auto o = run_search(c);
        CHECK(o.survivors.empty());
        CHECK(o.exhausted);
    }
}

TEST_CASE("a tiny bound is reported as non-exhausted") {
    auto o = run("camel-r", 6);
    CHECK_FALSE(o.exhausted);
    CHECK(o.pruned_counts["bound"] > 0);
}

TEST_CASE("cheap ablations keep the survivor set") {
    auto base = run("camel-r", 16);
    for (const char* rule : {"P2", "P6"}) {
        CAPTURE(rule);
        auto o = run("camel-r", 16, {rule});
        REQUIRE(o.survivors.size() == base.survivors.size());
        for (size_t k = 0; k < o.survivors.size(); ++k) CHECK(o.survivors[k].map == base.survivors[k].map);
    }
}

}
