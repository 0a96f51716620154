#pragma once

#include "fpf/poly.hpp"

#include <boost/rational.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace fpf {

using Rational = boost::rational<BigInt>;

struct IntMatrix {
    int rows = 0, cols = 0;
    std::vector<BigInt> a;

    IntMatrix() = default;
    IntMatrix(int r, int c) : rows(r), cols(c), a((size_t)r * c, 0) {}
    static IntMatrix identity(int n);
    static IntMatrix from(const std::vector<std::vector<long>>& v);

    BigInt& operator()(int i, int j) { return a[(size_t)i * cols + j]; }
    const BigInt& operator()(int i, int j) const { return a[(size_t)i * cols + j]; }
    bool square() const { return rows == cols; }
    IntMatrix operator*(const IntMatrix& o) const;
    bool operator==(const IntMatrix& o) const = default;
    IntMatrix transposed() const;
    IntMatrix permuted(const std::vector<int>& p) const;  // entry (i,j) -> (p[i],p[j])
    BigInt trace() const;
    std::string str() const;
};

// det(xI - A), coefficients low to high (Berkowitz, division free).
std::vector<BigInt> charpoly(const IntMatrix& A);
BigInt determinant(const IntMatrix& A);  // via charpoly constant term

// Primitivity: some power A^k, k <= (n-1)^2 + 1, is entrywise positive.
bool is_perron_frobenius(const IntMatrix& A);

struct Interval {
    double lo = 0, hi = 0;
    Rational lo_exact, hi_exact;
    double mid() const { return 0.5 * (lo + hi); }
};

// Largest real root of an integer polynomial (low to high), isolated with a Sturm
// sequence and bisected on dyadic rationals until hi - lo <= width.
Interval largest_real_root(const std::vector<BigInt>& p, double width = 1e-9);
// Spectral radius of a Perron-Frobenius matrix; throws std::domain_error otherwise.
Interval dilatation(const IntMatrix& A, double width = 1e-9);

// Basis (as columns) of the integer kernel {x in Z^n : A x = 0}.
IntMatrix integer_kernel(const IntMatrix& A);
// Column Hermite basis for the lattice spanned by the columns of G (drops dependencies).
IntMatrix lattice_basis(const IntMatrix& G);

}  // namespace fpf
