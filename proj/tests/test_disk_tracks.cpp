#include "fpf/track.hpp"

#include <doctest.h>

#include <fstream>
#include <sstream>

using namespace fpf;

namespace {

std::string fixture_text(const std::string& name) {
    std::ifstream f(data_dir() + "/tracks/" + name + ".trk");
    std::stringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

std::string replace_line(std::string text, const std::string& from, const std::string& to) {
    auto p = text.find(from);
    REQUIRE(p != std::string::npos);
    return text.replace(p, from.size(), to);
}

}  // namespace

TEST_SUITE("disk_tracks") {

TEST_CASE("fixtures validate and carry their strata") {
    for (const auto& name : named_track_names()) {
        CAPTURE(name);
        Track t = named_track(name);
        CHECK(validate(t).empty());
        CHECK(is_standard(t));
        CHECK(is_jointless(t));
        REQUIRE(t.declared);
        CHECK(stratum_of(t) == *t.declared);
        CHECK(t.n_marked == 5);
    }
    CHECK(stratum_of(named_track("jellyfish")).str() == "(1;1^5;4)");
    CHECK(stratum_of(named_track("camel-r")).str() == "(1;1^5;3^2)");
    CHECK(stratum_of(named_track("enoki-l")).str() == "(1;1^5;3^2)");
}

TEST_CASE("print/parse roundtrip") {
    Track t = named_track("camel-r");
    Track u = parse_track(print_track(t));
    CHECK(print_track(u) == print_track(t));
    CHECK(u.real_edges().size() == 6);
    CHECK(u.polygon_faces().size() == 2);
}

TEST_CASE("mutated incidence is rejected") {
    std::string text = fixture_text("camel-r");
    // Swap two germs at a polygon vertex: the triangle no longer closes up.
    std::string bad = replace_line(text, "switch Vp p.t qp.h pg.t", "switch Vp p.t pg.t qp.h");
    bool rejected = false;
    try {
        rejected = !validate(parse_track(bad)).empty();
    } catch (const TrackParseError&) {
        rejected = true;
    }
    CHECK(rejected);
    CHECK_THROWS_AS(parse_track(replace_line(text, "edge y real", "edge y bogus")), TrackParseError);
    // A germ that no switch lists.
    Track missing = parse_track(replace_line(text, "switch My y.h ly.t ly.h", "switch My y.h ly.t"));
    CHECK_FALSE(validate(missing).empty());
}

TEST_CASE("stratum strings and Euler-Poincare") {
    Stratum s = Stratum::parse("(1;1^5;3^2)");
    CHECK(s.marked == std::vector<int>{1, 1, 1, 1, 1});
    CHECK(s.interior == std::vector<int>{3, 3});
    CHECK(s.str() == "(1;1^5;3^2)");
    CHECK(Stratum::parse("(6;∅;∅)").interior.empty());
    CHECK(s.euler_sum() == Stratum::parse("(1;1^5;4)").euler_sum());
}

TEST_CASE("strata of genus 2 with one boundary component") {
    auto all = enumerate_strata(2, 1, 0, even_boundary_prongs);
    std::vector<std::string> names;
    for (const auto& s : all) names.push_back(s.str());
    CHECK(names.size() == 8);
    for (const char* s : {"(6;∅;∅)", "(4;∅;4)", "(4;∅;3^2)", "(2;∅;4^2)", "(2;∅;3^4)"})
        CHECK(std::find(names.begin(), names.end(), s) != names.end());
    CHECK_FALSE(hyperelliptic_lift_compatible(Stratum::parse("(2;∅;5,3)")));
    CHECK(hyperelliptic_lift_compatible(Stratum::parse("(2;∅;3^4)")));
    CHECK(hyperelliptic_lift_compatible(Stratum::parse("(6;∅;∅)")));
}

}
