#pragma once

#include "fpf/braid.hpp"
#include "fpf/matrix.hpp"
#include "fpf/poly.hpp"

#include <vector>

namespace fpf {

struct LaurentMatrix {
    int n = 0;
    std::vector<LaurentPoly> a;
    explicit LaurentMatrix(int dim = 0) : n(dim), a((size_t)dim * dim) {}
    static LaurentMatrix identity(int dim);
    LaurentPoly& operator()(int i, int j) { return a[(size_t)i * n + j]; }
    const LaurentPoly& operator()(int i, int j) const { return a[(size_t)i * n + j]; }
    LaurentMatrix operator*(const LaurentMatrix& o) const;
    bool operator==(const LaurentMatrix& o) const { return n == o.n && a == o.a; }
    LaurentPoly det() const;
};

// Reduced Burau, generator blocks
//   sigma_i -> I_{i-1} (+) [[1,0,0],[t,-t,1],[0,0,1]] (+) I_{n-i-2}
// truncated at the ends (sigma_1 -> [[-t,1],[0,1]], sigma_{n-1} -> [[1,0],[t,-t]]).
LaurentMatrix reduced_burau(const BraidWord& b);

struct NotAKnot : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// det(I - B(b)) (1 - t)/(1 - t^n), normalised (lowest exponent 0, positive leading coefficient).
// Knots only (NotAKnot otherwise).
LaurentPoly alexander_of_closure(const BraidWord& b);
// |Delta(-1)|; the Burau formula gives the one-variable polynomial of links as well.
BigInt determinant_of_closure(const BraidWord& b);
int self_linking(const BraidWord& b);

// Characteristic polynomial of reduced_burau(b) at t = -1 (odd n only).
LaurentPoly double_cover_alexander(const BraidWord& b);
bool lspace_coefficient_check(const LaurentPoly& p);
bool is_irreducible_quartic(const LaurentPoly& p);

// External input: maximal self-linking number of T(3,5).
constexpr int kMaxSelfLinkingT35 = 7;

}  // namespace fpf
