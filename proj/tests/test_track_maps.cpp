#include "fpf/search.hpp"
#include "fpf/trackmap.hpp"

#include <doctest.h>

using namespace fpf;

namespace {
std::shared_ptr<const Track> camel() { return std::make_shared<const Track>(named_track("camel-r")); }
}

TEST_SUITE("track_maps") {

TEST_CASE("path parse/print") {
    auto t = camel();
    DecoratedPath p = parse_path(*t, "r- b- d p- g o");
    CHECK(p.letters.size() == 5);  // "g o" is one terminal letter
    CHECK(path_str(*t, p) == "r- b- d p- g o");
    CHECK(path_str(*t, parse_path(*t, "~d b+")) == "~d b+");
    CHECK_THROWS(parse_path(*t, "r x o"));
}

TEST_CASE("candidate maps are legal, PF and unimodular") {
    auto t = camel();
    for (int i = 1; i <= 3; ++i) {
        CAPTURE(i);
        TrackMap m = candidate_map(i, t);
        CHECK(check_legal(m).empty());
        CHECK(realisable(m));
        CHECK(is_perron_frobenius(transition_matrix(m)));
        CHECK(weight_space_unimodular(m));
        CHECK(vertex_map(m).has_value());
        CHECK(parse_trackmap(t, m.str()) == m);
    }
}

TEST_CASE("shared images") {
    auto t = camel();
    TrackMap m = candidate_map(1, t);
    CHECK(path_str(*t, m.image(t->edge_id("p"))) == "y o");
    CHECK(path_str(*t, m.image(t->edge_id("d"))) == "r- b- d p- g o");
}

TEST_CASE("transition matrices multiply under composition") {
    auto t = camel();
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j) {
            TrackMap f = candidate_map(i, t), g = candidate_map(j, t);
            CHECK(transition_matrix(compose_maps(f, g)) == transition_matrix(g) * transition_matrix(f));
        }
}

TEST_CASE("reversal is an involution on open paths") {
    auto t = camel();
    int d = t->edge_id("d");
    DecoratedPath p = parse_path(*t, "r- b- d p- g+");
    CHECK(reversed_path(*t, d, reversed_path(*t, d, p)) == p);
}

TEST_CASE("illegal variants are reported") {
    auto t = camel();
    std::string shared = "p -> y o\nd -> r- b- d p- g o\n";
    // y and r both end at the marked point of b.
    auto twice = check_legal(parse_trackmap(t, "r -> b o\nb -> d p o\ng -> p+ ~d b+ r o\ny -> b o\n" + shared));
    CHECK_FALSE(twice.empty());
    // Flipping the loop around p in f(g) forces a crossing.
    auto flipped = check_legal(parse_trackmap(t, "r -> b o\nb -> d p o\ng -> p- ~d b+ r o\ny -> g o\n" + shared));
    CHECK_FALSE(flipped.empty());
}

TEST_CASE("matrix tools") {
    IntMatrix A = IntMatrix::from({{2, 1}, {1, 1}});
    CHECK(is_perron_frobenius(A));
    CHECK(dilatation(A).mid() == doctest::Approx((3 + std::sqrt(5.0)) / 2).epsilon(1e-8));
    CHECK(determinant(A) == 1);
    CHECK_FALSE(is_perron_frobenius(IntMatrix::from({{1, 1}, {0, 1}})));
    CHECK_FALSE(is_perron_frobenius(IntMatrix::from({{0, 1}, {1, 0}})));
    IntMatrix K = integer_kernel(IntMatrix::from({{1, -1, 0}}));
    CHECK(K.cols == 2);
}

}
