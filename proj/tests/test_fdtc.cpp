#include "fpf/elimination.hpp"
#include "fpf/fdtc.hpp"
#include "fpf/search.hpp"

#include <doctest.h>

using namespace fpf;

TEST_SUITE("fdtc") {

TEST_CASE("rotation fractions") {
    CHECK(rotation_fraction({0}) == Rational(0));
    CHECK(rotation_fraction({1, 2, 0}) == Rational(1, 3));
    CHECK(rotation_fraction({2, 0, 1}) == Rational(2, 3));
    CHECK_THROWS_AS(rotation_fraction({1, 0, 2}), std::invalid_argument);
}

TEST_CASE("composition law and cover relation") {
    Fdtc half = make_fdtc(1, 2);
    CHECK(fdtc_compose(half, 1, 1) == make_fdtc(3, 2));
    CHECK(fdtc_compose(half, 1, -1) == make_fdtc(1, 2));
    CHECK(fdtc_compose(half, -2, -1) == make_fdtc(-5, 2));
    CHECK(cover_relation(make_fdtc(1)) == make_fdtc(1, 2));
    CHECK(braid_level(cover_relation(make_fdtc(3, 7))) == make_fdtc(3, 7));
    CHECK(make_fdtc(-3, 6).str() == "-1/2");
    CHECK(make_fdtc(4, 2).str() == "2");
}

TEST_CASE("L-space admissibility") {
    CHECK(lspace_admissible(make_fdtc(1)).admissible());
    CHECK_FALSE(lspace_admissible(make_fdtc(0)).admissible());
    CHECK_FALSE(lspace_admissible(make_fdtc(2)).within_bound);
    CHECK(lspace_admissible(make_fdtc(-3, 2)).admissible());
    CHECK_FALSE(lspace_admissible(make_fdtc(-3, 2), 1).within_bound);
}

TEST_CASE("camel maps have one peripheral cusp") {
    auto t = std::make_shared<const Track>(named_track("camel-r"));
    for (int i = 1; i <= 3; ++i) CHECK(boundary_rotation(candidate_map(i, t)) == Rational(0));
}

TEST_CASE("twist families") {
    for (const auto& c : twist_family(beta_i(1), "beta_1", beta_i_base(), 2)) CHECK(c.c == make_fdtc(c.k));
    for (const auto& c : twist_family(beta_n(3), "beta_3", beta_n_base(), 2))
        CHECK(c.c == make_fdtc(2 * c.k + c.sign, 2));
    CHECK(twist_family(alpha_braid(), "alpha", alpha_base(), 1).size() == 6);
}

}
