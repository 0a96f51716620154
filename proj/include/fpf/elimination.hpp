#pragma once

#include "fpf/braid.hpp"
#include "fpf/fdtc.hpp"
#include "fpf/poly.hpp"

#include <optional>
#include <string>
#include <vector>

namespace fpf {

enum class Filter { Determinant, SelfLinking, Alexander, FdtcBound, None };
std::string filter_name(Filter f);

struct Verdict {
    BraidWord braid;
    std::string label;  // "D^2 beta_3^-1"
    Filter eliminated_by = Filter::None;
    int components = 1;
    BigInt det = 0;
    int sl = 0;
    std::optional<LaurentPoly> alexander;  // knots only
    std::optional<Fdtc> fdtc;
    bool fdtc_within_bound = true, fdtc_nonzero = true;
    std::string values() const;  // "det=5 sl=-5 c=1"
};

using FilterOrder = std::vector<Filter>;
inline const FilterOrder kDefaultOrder{Filter::Determinant, Filter::SelfLinking, Filter::Alexander};
// The T(2,n+7) and alpha families are argued self-linking first.
inline const FilterOrder kSelfLinkingFirst{Filter::SelfLinking, Filter::Determinant, Filter::Alexander};

LaurentPoly alexander_T35();
constexpr int kDetT35 = 1;

// Can the closure of b be T(3,5)?  First hit in `order`; every value is filled in.
// Multi-component closures throw NotAKnot unless allow_links (links are never T(3,5)
// but the determinant filter still applies to them).
Verdict eliminate_T35(const BraidWord& b, const FilterOrder& order = kDefaultOrder, bool allow_links = false);

BraidWord beta_i(int i);  // the three Camel braids, i = 1..3
BraidWord beta_n(int n);  // sigma_1^{n+2} sigma_2 sigma_3 sigma_4 sigma_1 sigma_2 sigma_3 sigma_4^2
BraidWord alpha_braid();  // sigma_1 sigma_2 sigma_3 sigma_4 sigma_1 sigma_2
inline Fdtc alpha_base() { return make_fdtc(1, 3); }

struct Candidate {
    BraidWord braid;
    std::string label;
    int k = 0, sign = 1;  // Delta^{2k} b^{sign}
    Fdtc c;
};
// Delta^{2k} base^{+-1} for |k| <= kmax with c = k +- c(base).
std::vector<Candidate> twist_family(const BraidWord& base, const std::string& name, const Fdtc& base_c, int kmax);

struct SuiteResult {
    std::string name;
    std::vector<Verdict> verdicts;
    long admissible = 0;  // passed the FDTC bound
    long survivors = 0;   // admissible and not eliminated
    bool ok() const { return survivors == 0; }
    std::string table() const;
};

// "433", "6" or "2-34".  Candidates outside |c| < fdtc_bound are eliminated by fdtc_bound.
SuiteResult run_theorem_suite(const std::string& name, long fdtc_bound = kDefaultFdtcBound);

}  // namespace fpf
