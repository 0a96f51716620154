#include "fpf/braid.hpp"

#include <doctest.h>

#include <random>

using namespace fpf;

TEST_SUITE("braid") {

TEST_CASE("parse forms") {
    CHECK(BraidWord::parse(5, "4 3 4 3 -2 -1 -2 -1").letters == std::vector<int>{4, 3, 4, 3, -2, -1, -2, -1});
    CHECK(BraidWord::parse(3, "(1 2)^2").letters == std::vector<int>{1, 2, 1, 2});
    CHECK(BraidWord::parse(3, "(1 2)^-1").letters == std::vector<int>{-2, -1});
    CHECK_THROWS_AS(BraidWord::parse(3, "1 5"), ParseError);
    CHECK_THROWS_AS(BraidWord::parse(3, "(1 2"), ParseError);
}

TEST_CASE("group relations") {
    for (int n = 3; n <= 6; ++n)
        for (int i = 1; i + 1 < n; ++i) {
            CHECK(braids_equal(BraidWord(n, {i, i + 1, i}), BraidWord(n, {i + 1, i, i + 1})));
            if (i + 2 < n) CHECK(braids_equal(BraidWord(n, {i, i + 2}), BraidWord(n, {i + 2, i})));
            CHECK_FALSE(braids_equal(BraidWord(n, {i}), BraidWord(n, {-i})));
        }
}

TEST_CASE("full twist is central and is the square of the half twist") {
    BraidWord D2 = BraidWord::full_twist(5), D = BraidWord::half_twist(5);
    CHECK(braids_equal(D2, compose(D, D)));
    for (int i = 1; i < 5; ++i)
        CHECK(braids_equal(compose(D2, BraidWord(5, {i})), compose(BraidWord(5, {i}), D2)));
    CHECK(D2.exponent_sum() == 20);
}

TEST_CASE("inverse, reduction, strand permutation") {
    BraidWord w(4, {1, 2, -2, 3, -1});
    CHECK(w.reduced().letters == std::vector<int>{1, 3, -1});
    CHECK(braids_equal(compose(w, w.inverse()), BraidWord::identity(4)));
    CHECK(closure_is_knot(BraidWord::parse(3, "(1 2)^5")));
    CHECK(cycle_count(strand_permutation(BraidWord::identity(4))) == 4);
}

TEST_CASE("dynnikov roundtrip on random words") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        int n = 3 + trial % 4;
        std::vector<int> l;
        for (int k = 0; k < 12; ++k) {
            int g = 1 + (int)(rng() % (n - 1));
            l.push_back(rng() % 2 ? g : -g);
        }
        BraidWord w(n, l);
        for (const auto& x : test_laminations(n, 2, rng())) {
            CHECK(dynnikov_valid(n, x));
            CHECK(dynnikov_apply(w.inverse(), dynnikov_apply(w, x)) == x);
        }
    }
}

TEST_CASE("round curves") {
    CHECK(dynnikov_apply(BraidWord(5, {2}), round_curve(5, 2)) == round_curve(5, 2));
    CHECK(dynnikov_apply(BraidWord(5, {2, 2, 2}), round_curve(5, 2)) == round_curve(5, 2));
    CHECK(dynnikov_apply(BraidWord(5, {1}), round_curve(5, 3)) == round_curve(5, 3));
    CHECK_FALSE(dynnikov_apply(BraidWord(5, {3}), round_curve(5, 2)) == round_curve(5, 2));
    CHECK(pair_curve(5, 2, 3) == round_curve(5, 2));
}

TEST_CASE("growth") {
    auto pa = dilatation_estimate(BraidWord(3, {1, -2}), 200);
    CHECK(pa.growing);
    CHECK(pa.rate == doctest::Approx((3 + std::sqrt(5.0)) / 2).epsilon(1e-6));
    CHECK_FALSE(dilatation_estimate(BraidWord::parse(3, "(1 2)^3"), 200).growing);
}

TEST_CASE("conjugator search") {
    BraidWord a(4, {1}), b(4, {2});
    auto w = find_conjugator(a, b, 2);
    REQUIRE(w);
    CHECK(braids_equal(a, conjugate(b, *w)));
}

}
