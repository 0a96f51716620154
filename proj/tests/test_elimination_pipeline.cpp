#include "fpf/elimination.hpp"
#include "fpf/invariants.hpp"

#include <doctest.h>

using namespace fpf;

TEST_SUITE("elimination_pipeline") {

TEST_CASE("T(3,5) reference data") {
    BraidWord t35 = BraidWord::parse(3, "(1 2)^5");
    CHECK(alexander_of_closure(t35) == alexander_T35());
    Verdict v = eliminate_T35(t35);
    CHECK(v.eliminated_by == Filter::None);
    CHECK(v.det == kDetT35);
}

TEST_CASE("positive control survives") {
    Verdict v = eliminate_T35(BraidWord::parse(4, "(1 2)^5 3"));
    CHECK(v.eliminated_by == Filter::None);
    CHECK(v.sl == kMaxSelfLinkingT35);
}

TEST_CASE("beta_n family") {
    for (int n = 0; n <= 10; ++n) {
        CAPTURE(n);
        CHECK(determinant_of_closure(beta_n(n)) == n + 7);
        CHECK(self_linking(compose(BraidWord::full_twist(5), beta_n(n))) == 25 + n);
    }
    CHECK_THROWS_AS(eliminate_T35(beta_n(1)), NotAKnot);
    CHECK(eliminate_T35(beta_n(1), kDefaultOrder, true).eliminated_by == Filter::Determinant);
}

TEST_CASE("alpha") {
    CHECK(determinant_of_closure(alpha_braid()) == 3);
    CHECK(eliminate_T35(alpha_braid()).eliminated_by == Filter::Determinant);
}

TEST_CASE("filter order decides the reported reason") {
    BraidWord b = compose(BraidWord::full_twist(5), beta_n(0));
    CHECK(eliminate_T35(b, kSelfLinkingFirst).eliminated_by == Filter::SelfLinking);
    CHECK(eliminate_T35(b, kDefaultOrder).eliminated_by == Filter::Determinant);
}

TEST_CASE("suites eliminate everything") {
    for (const char* name : {"2-34", "433", "6"}) {
        CAPTURE(name);
        auto s = run_theorem_suite(name);
        CHECK(s.ok());
        CHECK(s.admissible > 0);
        CHECK_FALSE(s.table().empty());
    }
    CHECK_THROWS(run_theorem_suite("7"));
}

TEST_CASE("bound widens the admissible set") {
    CHECK(run_theorem_suite("2-34", 3).admissible > run_theorem_suite("2-34", 2).admissible);
}

}
