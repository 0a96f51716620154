#include "fpf/invariants.hpp"

#include <cmath>
#include <stdexcept>

namespace fpf {

LaurentMatrix LaurentMatrix::identity(int dim) {
    LaurentMatrix m(dim);
    for (int i = 0; i < dim; ++i) m(i, i) = 1;
    return m;
}

LaurentMatrix LaurentMatrix::operator*(const LaurentMatrix& o) const {
    if (n != o.n) throw std::invalid_argument("Burau matrix size mismatch");
    LaurentMatrix r(n);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            const LaurentPoly& x = (*this)(i, k);
            if (x.is_zero()) continue;
            for (int j = 0; j < n; ++j)
                if (!o(k, j).is_zero()) r(i, j) += x * o(k, j);
        }
    return r;
}

// Bareiss elimination; the divisions are exact in Z[t, 1/t].
LaurentPoly LaurentMatrix::det() const {
    if (n == 0) return 1;
    LaurentMatrix m = *this;
    LaurentPoly prev = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (m(k, k).is_zero()) {
            int p = k + 1;
            while (p < n && m(p, k).is_zero()) ++p;
            if (p == n) return LaurentPoly();
            for (int j = 0; j < n; ++j) std::swap(m(k, j), m(p, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)).divided_by(prev);
        prev = m(k, k);
    }
    return sign > 0 ? m(n - 1, n - 1) : -m(n - 1, n - 1);
}

namespace {

LaurentMatrix generator(int n, int i, bool inverse) {
    // i is 1-based; matrix is (n-1)x(n-1), row/col i-1 is the active one.
    const int d = n - 1;
    LaurentMatrix m = LaurentMatrix::identity(d);
    const int c = i - 1;
    const LaurentPoly t = LaurentPoly::t(), ti = LaurentPoly::monomial(1, -1);
    if (!inverse) {
        m(c, c) = -t;
        if (c > 0) m(c, c - 1) = t;
        if (c + 1 < d) m(c, c + 1) = 1;
    } else {
        m(c, c) = -ti;
        if (c > 0) m(c, c - 1) = 1;
        if (c + 1 < d) m(c, c + 1) = ti;
    }
    return m;
}

void require_knot(const BraidWord& b) {
    if (!closure_is_knot(b))
        throw NotAKnot("closure of " + b.str() + " has " + std::to_string(cycle_count(strand_permutation(b))) +
                       " components");
}

LaurentPoly closure_poly(const BraidWord& b) {
    LaurentMatrix B = reduced_burau(b);
    LaurentMatrix m = LaurentMatrix::identity(B.n);
    for (size_t k = 0; k < m.a.size(); ++k) m.a[k] -= B.a[k];
    LaurentPoly num = m.det();
    LaurentPoly geo;  // 1 + t + ... + t^{n-1}
    for (int k = 0; k < b.n; ++k) geo += LaurentPoly::monomial(1, k);
    return num.divided_by(geo).normalized_from_zero();
}

}  // namespace

LaurentMatrix reduced_burau(const BraidWord& b) {
    if (b.n < 2) throw std::invalid_argument("Burau needs at least 2 strands");
    LaurentMatrix m = LaurentMatrix::identity(b.n - 1);
    for (int l : b.letters) m = m * generator(b.n, std::abs(l), l < 0);
    return m;
}

LaurentPoly alexander_of_closure(const BraidWord& b) {
    require_knot(b);
    return closure_poly(b);
}

BigInt determinant_of_closure(const BraidWord& b) {
    BigInt v = closure_poly(b).eval(-1);
    return v < 0 ? BigInt(-v) : v;
}

int self_linking(const BraidWord& b) { return b.exponent_sum() - b.n; }

LaurentPoly double_cover_alexander(const BraidWord& b) {
    if (b.n % 2 == 0) throw std::invalid_argument("double cover with connected boundary needs an odd strand count");
    LaurentMatrix B = reduced_burau(b);
    const int d = B.n;
    IntMatrix A(d, d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) A(i, j) = B(i, j).eval(-1);
    auto c = charpoly(A);
    LaurentPoly p;
    for (int k = 0; k <= d; ++k) p.set(k, c[k]);
    return p;
}

bool lspace_coefficient_check(const LaurentPoly& p) {
    if (p.is_zero()) return false;
    LaurentPoly q = p.normalized_from_zero();
    const int top = q.max_exp();
    // Top two (and, for non-symmetric input, bottom two) coefficients must be nonzero.
    if (top >= 1 && (q.coeff(top - 1) == 0 || q.coeff(1) == 0)) return false;
    int last = 0;
    for (const auto& [e, c] : q.terms()) {
        if (c != 1 && c != -1) return false;
        int s = c > 0 ? 1 : -1;
        if (last != 0 && s == last) return false;
        last = s;
    }
    return true;
}

namespace {

std::vector<BigInt> divisors(BigInt v) {
    if (v < 0) v = -v;
    std::vector<BigInt> out;
    for (BigInt d = 1; d * d <= v; ++d)
        if (v % d == 0) {
            out.push_back(d);
            if (d * d != v) out.push_back(v / d);
        }
    return out;
}

}  // namespace

bool is_irreducible_quartic(const LaurentPoly& p) {
    if (p.is_zero() || p.min_exp() < 0 || p.max_exp() != 4)
        throw std::invalid_argument("expected an integer polynomial of degree 4");
    BigInt a[5];
    for (int k = 0; k <= 4; ++k) a[k] = p.coeff(k);
    if (a[0] == 0) return false;
    // rational roots r/s
    for (const BigInt& r : divisors(a[0]))
        for (const BigInt& s : divisors(a[4]))
            for (int sg : {1, -1}) {
                BigInt acc = 0, sp = 1;  // sum a_k r^k s^{4-k}
                for (int k = 4; k >= 0; --k) {
                    acc = acc * r * sg + a[k] * sp;
                    sp *= s;
                }
                if (acc == 0) return false;
            }
    // (A t^2 + B t + C)(D t^2 + E t + F); B bounded via Mignotte.
    BigInt norm2 = 0;
    for (auto& x : a) norm2 += x * x;
    BigInt bound = 16 * (BigInt(boost::multiprecision::sqrt(norm2)) + 1);
    for (const BigInt& A : divisors(a[4])) {
        BigInt D = a[4] / A;
        for (const BigInt& c0 : divisors(a[0]))
            for (int sg : {1, -1}) {
                BigInt C = c0 * sg, F = a[0] / C;
                for (BigInt B = -bound; B <= bound; ++B) {
                    BigInt rest = a[3] - B * D;
                    if (rest % A != 0) continue;
                    BigInt E = rest / A;
                    if (A * F + B * E + C * D == a[2] && B * F + C * E == a[1]) return false;
                }
            }
    }
    return true;
}

}  // namespace fpf
