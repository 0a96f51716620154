#include "fpf/matrix.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace fpf {

IntMatrix IntMatrix::identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from(const std::vector<std::vector<long>>& v) {
    IntMatrix m((int)v.size(), v.empty() ? 0 : (int)v[0].size());
    for (int i = 0; i < m.rows; ++i) {
        if ((int)v[i].size() != m.cols) throw std::invalid_argument("ragged matrix");
        for (int j = 0; j < m.cols; ++j) m(i, j) = v[i][j];
    }
    return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
    if (cols != o.rows) throw std::invalid_argument("matrix dimension mismatch");
    IntMatrix r(rows, o.cols);
    for (int i = 0; i < rows; ++i)
        for (int k = 0; k < cols; ++k) {
            const BigInt& x = (*this)(i, k);
            if (x == 0) continue;
            for (int j = 0; j < o.cols; ++j) r(i, j) += x * o(k, j);
        }
    return r;
}

IntMatrix IntMatrix::transposed() const {
    IntMatrix r(cols, rows);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) r(j, i) = (*this)(i, j);
    return r;
}

IntMatrix IntMatrix::permuted(const std::vector<int>& p) const {
    IntMatrix r(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) r(p[i], p[j]) = (*this)(i, j);
    return r;
}

BigInt IntMatrix::trace() const {
    BigInt s = 0;
    for (int i = 0; i < std::min(rows, cols); ++i) s += (*this)(i, i);
    return s;
}

std::string IntMatrix::str() const {
    std::ostringstream os;
    for (int i = 0; i < rows; ++i) {
        os << '[';
        for (int j = 0; j < cols; ++j) os << (j ? " " : "") << (*this)(i, j);
        os << "]\n";
    }
    return os.str();
}

// Faddeev-LeVerrier; every division is exact over Z.
std::vector<BigInt> charpoly(const IntMatrix& A) {
    if (!A.square()) throw std::invalid_argument("charpoly of non-square matrix");
    const int n = A.rows;
    std::vector<BigInt> c(n + 1, 0);
    c[n] = 1;
    IntMatrix M(n, n);
    for (int k = 1; k <= n; ++k) {
        M = A * M;
        for (int i = 0; i < n; ++i) M(i, i) += c[n - k + 1];
        BigInt tr = (A * M).trace();
        c[n - k] = -tr / k;
    }
    return c;
}

BigInt determinant(const IntMatrix& A) {
    auto c = charpoly(A);
    return (A.rows % 2 == 0) ? c[0] : BigInt(-c[0]);
}

bool is_perron_frobenius(const IntMatrix& A) {
    if (!A.square() || A.rows == 0) return false;
    const int n = A.rows;
    std::vector<char> B(n * n), P(n * n);
    for (int i = 0; i < n * n; ++i) {
        if (A.a[i] < 0) return false;
        B[i] = P[i] = A.a[i] > 0;
    }
    const int bound = (n - 1) * (n - 1) + 1;
    for (int k = 1; k < bound; ++k) {
        std::vector<char> Q(n * n, 0);
        for (int i = 0; i < n; ++i)
            for (int l = 0; l < n; ++l)
                if (P[i * n + l])
                    for (int j = 0; j < n; ++j) Q[i * n + j] |= B[l * n + j];
        P.swap(Q);
    }
    return std::all_of(P.begin(), P.end(), [](char x) { return x != 0; });
}

namespace {

using RPoly = std::vector<Rational>;  // low to high

// boost::rational<cpp_int> compared against plain ints recurses; go through the numerator.
int sgn(const Rational& r) { return r.numerator().sign(); }

void trim(RPoly& p) {
    while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

RPoly rem(RPoly a, const RPoly& b) {
    trim(a);
    while (a.size() >= b.size() && !a.empty()) {
        Rational q = a.back() / b.back();
        size_t shift = a.size() - b.size();
        for (size_t i = 0; i < b.size(); ++i) a[i + shift] -= q * b[i];
        a.pop_back();
        trim(a);
    }
    return a;
}

Rational eval(const RPoly& p, const Rational& x) {
    Rational s;
    for (auto it = p.rbegin(); it != p.rend(); ++it) s = s * x + *it;
    return s;
}

struct Sturm {
    std::vector<RPoly> seq;
    explicit Sturm(const std::vector<BigInt>& p) {
        RPoly a(p.begin(), p.end());
        trim(a);
        if (a.empty()) throw std::domain_error("zero polynomial");
        RPoly d;
        for (size_t i = 1; i < a.size(); ++i) d.push_back(a[i] * Rational(BigInt((long)i)));
        seq.push_back(a);
        if (!d.empty()) seq.push_back(d);
        while (seq.size() >= 2 && seq.back().size() > 1) {
            RPoly r = rem(seq[seq.size() - 2], seq.back());
            if (r.empty()) break;
            for (auto& x : r) x = -x;
            seq.push_back(r);
        }
    }
    int changes_at(const Rational& x) const {
        int ch = 0, last = 0;
        for (const auto& p : seq) {
            Rational v = eval(p, x);
            int s = sgn(v);
            if (s == 0) continue;
            if (last != 0 && s != last) ++ch;
            last = s;
        }
        return ch;
    }
    int changes_at_inf() const {
        int ch = 0, last = 0;
        for (const auto& p : seq) {
            int s = sgn(p.back());
            if (last != 0 && s != last) ++ch;
            last = s;
        }
        return ch;
    }
    int roots_above(const Rational& x) const { return changes_at(x) - changes_at_inf(); }
};

double to_double(const Rational& r) {
    return static_cast<double>(r.numerator().convert_to<long double>() / r.denominator().convert_to<long double>());
}

}  // namespace

Interval largest_real_root(const std::vector<BigInt>& p, double width) {
    std::vector<BigInt> q = p;
    while (!q.empty() && q.back() == 0) q.pop_back();
    if (q.size() < 2) throw std::domain_error("polynomial has no roots");
    Sturm st(q);
    // Cauchy bound
    Rational bound;
    for (size_t i = 0; i + 1 < q.size(); ++i) {
        Rational r(q[i] < 0 ? BigInt(-q[i]) : q[i], q.back() < 0 ? BigInt(-q.back()) : q.back());
        bound = std::max(bound, r);
    }
    bound += Rational(BigInt(1));
    Rational lo = -bound, hi = bound;
    if (st.roots_above(lo) == 0) throw std::domain_error("no real roots");
    const Rational w(BigInt(1), BigInt(1) << 34);  // 2^-34 < 1e-10
    Rational target = std::min(w, Rational(BigInt((long long)(width * 1e12)), BigInt(1000000000000LL)));
    if (sgn(target) <= 0) target = w;
    while (hi - lo > target) {
        Rational mid = (lo + hi) / Rational(BigInt(2));
        if (st.roots_above(mid) >= 1)
            lo = mid;
        else
            hi = mid;
    }
    return Interval{to_double(lo), to_double(hi), lo, hi};
}

Interval dilatation(const IntMatrix& A, double width) {
    if (!is_perron_frobenius(A)) throw std::domain_error("matrix is not Perron-Frobenius");
    Interval iv = largest_real_root(charpoly(A), width);
    if (iv.hi_exact <= Rational(BigInt(1))) throw std::domain_error("degenerate: spectral radius 1, no stretching");
    return iv;
}

namespace {

// Unimodular column operations bringing A into column echelon form; U tracks them.
int column_echelon(IntMatrix& A, IntMatrix& U) {
    const int m = A.rows, n = A.cols;
    int p = 0;
    for (int r = 0; r < m && p < n; ++r) {
        for (int j = p + 1; j < n; ++j) {
            if (A(r, j) == 0) continue;
            BigInt a = A(r, p), b = A(r, j);
            // extended gcd
            BigInt x0 = 1, y0 = 0, x1 = 0, y1 = 1, aa = a, bb = b;
            while (bb != 0) {
                BigInt q = aa / bb;
                BigInt t = aa - q * bb;
                aa = bb;
                bb = t;
                t = x0 - q * x1;
                x0 = x1;
                x1 = t;
                t = y0 - q * y1;
                y0 = y1;
                y1 = t;
            }
            BigInt g = aa;  // x0*a + y0*b = g (g may be negative)
            BigInt pa = a / g, pb = b / g;
            for (IntMatrix* M : {&A, &U}) {
                for (int i = 0; i < M->rows; ++i) {
                    BigInt cp = (*M)(i, p), cj = (*M)(i, j);
                    (*M)(i, p) = x0 * cp + y0 * cj;
                    (*M)(i, j) = -pb * cp + pa * cj;
                }
            }
        }
        if (A(r, p) != 0) ++p;
    }
    return p;
}

}  // namespace

IntMatrix integer_kernel(const IntMatrix& A) {
    IntMatrix M = A, U = IntMatrix::identity(A.cols);
    int rank = column_echelon(M, U);
    IntMatrix K(A.cols, A.cols - rank);
    for (int j = rank; j < A.cols; ++j)
        for (int i = 0; i < A.cols; ++i) K(i, j - rank) = U(i, j);
    return K;
}

IntMatrix lattice_basis(const IntMatrix& G) {
    IntMatrix M = G, U = IntMatrix::identity(G.cols);
    int rank = column_echelon(M, U);
    IntMatrix B(G.rows, rank);
    for (int j = 0; j < rank; ++j)
        for (int i = 0; i < G.rows; ++i) B(i, j) = M(i, j);
    return B;
}

}  // namespace fpf
