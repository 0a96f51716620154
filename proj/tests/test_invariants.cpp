#include "fpf/invariants.hpp"

#include <doctest.h>

using namespace fpf;

TEST_SUITE("invariants") {

TEST_CASE("laurent arithmetic") {
    LaurentPoly t = LaurentPoly::t();
    LaurentPoly p = (t - 1) * (t + 1);
    CHECK(p == LaurentPoly::from_coeffs({-1, 0, 1}));
    CHECK(p.divided_by(t - 1) == t + 1);
    CHECK_THROWS(p.divided_by(t + 2));
    CHECK(p.shifted(-1).normalized_from_zero() == LaurentPoly::from_coeffs({1, 0, -1}).normalized_from_zero());
    CHECK(LaurentPoly::from_coeffs({1, -1, 1}).str() == "t^2 - t + 1");
}

TEST_CASE("trefoil and T(3,5)") {
    BraidWord trefoil = BraidWord::parse(2, "1 1 1");
    CHECK(alexander_of_closure(trefoil) == LaurentPoly::from_coeffs({1, -1, 1}));
    CHECK(determinant_of_closure(trefoil) == 3);
    CHECK(self_linking(trefoil) == 1);
    BraidWord t35 = BraidWord::parse(3, "(1 2)^5");
    CHECK(alexander_of_closure(t35) == LaurentPoly::from_coeffs({1, -1, 0, 1, -1, 1, 0, -1, 1}));
    CHECK(determinant_of_closure(t35) == 1);
    CHECK(self_linking(t35) == kMaxSelfLinkingT35);
}

TEST_CASE("alexander is a conjugacy and stabilisation invariant") {
    BraidWord b = BraidWord::parse(3, "1 1 1 -2 1 -2");
    REQUIRE(closure_is_knot(b));
    BraidWord c = conjugate(b, BraidWord(3, {2, 1}));
    CHECK(alexander_of_closure(b) == alexander_of_closure(c));
    BraidWord stab(4, {1, 1, 1, -2, 1, -2, 3});
    CHECK(alexander_of_closure(b) == alexander_of_closure(stab));
}

TEST_CASE("links") {
    BraidWord hopf = BraidWord::parse(2, "1 1");
    CHECK_THROWS_AS(alexander_of_closure(hopf), NotAKnot);
    CHECK(determinant_of_closure(hopf) == 2);
    CHECK(determinant_of_closure(BraidWord::parse(2, "1 1 1 1")) == 4);
}

TEST_CASE("double cover polynomial of T(3,5)") {
    auto p = double_cover_alexander(BraidWord::parse(5, "(1 2 3 4)^3"));
    CHECK(p == LaurentPoly::from_coeffs({1, -1, 1, -1, 1}));
    CHECK(lspace_coefficient_check(p));
    CHECK(is_irreducible_quartic(p));
    CHECK_FALSE(is_irreducible_quartic(LaurentPoly::from_coeffs({1, 0, 2, 0, 1})));
    CHECK_THROWS(double_cover_alexander(BraidWord::identity(4)));
}

TEST_CASE("burau is a representation") {
    BraidWord a(4, {1, 2, 1}), b(4, {2, 1, 2});
    CHECK(reduced_burau(a) == reduced_burau(b));
    CHECK(reduced_burau(compose(a, a.inverse())) == LaurentMatrix::identity(3));
}

}
