#include "fpf/braid.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <functional>
#include <random>
#include <sstream>

namespace fpf {

BraidWord::BraidWord(int strands, std::vector<int> l) : n(strands), letters(std::move(l)) {
    if (n < 2) throw std::invalid_argument("braid needs at least 2 strands");
    for (int x : letters)
        if (x == 0 || std::abs(x) > n - 1)
            throw std::invalid_argument("generator index " + std::to_string(x) + " out of range for B_" +
                                        std::to_string(n));
}

BraidWord BraidWord::reduced() const {
    std::vector<int> out;
    out.reserve(letters.size());
    for (int x : letters) {
        if (!out.empty() && out.back() == -x)
            out.pop_back();
        else
            out.push_back(x);
    }
    return BraidWord(n, std::move(out));
}

BraidWord BraidWord::inverse() const {
    std::vector<int> out(letters.rbegin(), letters.rend());
    for (int& x : out) x = -x;
    return BraidWord(n, std::move(out));
}

BraidWord BraidWord::mirror() const {
    std::vector<int> out = letters;
    for (int& x : out) x = -x;
    return BraidWord(n, std::move(out));
}

int BraidWord::exponent_sum() const {
    int s = 0;
    for (int x : letters) s += x > 0 ? 1 : -1;
    return s;
}

std::string BraidWord::str() const {
    std::ostringstream os;
    for (size_t i = 0; i < letters.size(); ++i) os << (i ? " " : "") << letters[i];
    return os.str();
}

BraidWord BraidWord::half_twist(int n) {
    std::vector<int> l;
    for (int k = n - 1; k >= 1; --k)
        for (int i = 1; i <= k; ++i) l.push_back(i);
    return BraidWord(n, std::move(l));
}

BraidWord BraidWord::full_twist(int n) {
    std::vector<int> l;
    for (int r = 0; r < n; ++r)
        for (int i = 1; i < n; ++i) l.push_back(i);
    return BraidWord(n, std::move(l));
}

namespace {

struct Parser {
    int n;
    std::string_view s;
    size_t i = 0;

    void skip() {
        while (i < s.size() && (std::isspace((unsigned char)s[i]) || s[i] == ',' || s[i] == '.')) ++i;
    }

    int number() {
        size_t start = i;
        bool neg = false;
        if (i < s.size() && (s[i] == '-' || s[i] == '+')) neg = s[i++] == '-';
        if (i >= s.size() || !std::isdigit((unsigned char)s[i])) throw ParseError("expected integer", start);
        long v = 0;
        while (i < s.size() && std::isdigit((unsigned char)s[i])) {
            v = v * 10 + (s[i++] - '0');
            if (v > 1000000) throw ParseError("integer too large", start);
        }
        return int(neg ? -v : v);
    }

    std::vector<int> seq(bool nested) {
        std::vector<int> out;
        for (;;) {
            skip();
            if (i >= s.size()) {
                if (nested) throw ParseError("unclosed parenthesis", i);
                return out;
            }
            char c = s[i];
            if (c == ')') {
                if (!nested) throw ParseError("unmatched ')'", i);
                ++i;
                return out;
            }
            if (c == '(') {
                ++i;
                auto inner = seq(true);
                skip();
                if (i < s.size() && s[i] == '^') {
                    ++i;
                    inner = repeat(inner, number());
                }
                out.insert(out.end(), inner.begin(), inner.end());
            } else if (c == '^') {
                ++i;
                out = repeat(out, number());
            } else if (c == 'D') {
                size_t start = i++;
                BraidWord w = (i < s.size() && s[i] == '2') ? (++i, BraidWord::full_twist(n))
                                                             : BraidWord::half_twist(n);
                if (i < s.size() && !std::isspace((unsigned char)s[i]) && s[i] != ')' && s[i] != '^')
                    throw ParseError("bad token", start);
                out.insert(out.end(), w.letters.begin(), w.letters.end());
            } else {
                size_t start = i;
                int v = number();
                if (v == 0 || std::abs(v) > n - 1) throw ParseError("generator out of range", start);
                out.push_back(v);
            }
        }
    }

    static std::vector<int> repeat(const std::vector<int>& w, int k) {
        std::vector<int> base = w;
        if (k < 0) {
            std::reverse(base.begin(), base.end());
            for (int& x : base) x = -x;
            k = -k;
        }
        std::vector<int> out;
        for (int r = 0; r < k; ++r) out.insert(out.end(), base.begin(), base.end());
        return out;
    }
};

}  // namespace

BraidWord BraidWord::parse(int n, std::string_view text) {
    Parser p{n, text};
    return BraidWord(n, p.seq(false));
}

BraidWord compose(const BraidWord& a, const BraidWord& b) {
    if (a.n != b.n) throw std::invalid_argument("strand-count mismatch");
    std::vector<int> l = a.letters;
    l.insert(l.end(), b.letters.begin(), b.letters.end());
    return BraidWord(a.n, std::move(l)).reduced();
}

BraidWord power(const BraidWord& a, int k) {
    BraidWord base = k < 0 ? a.inverse() : a;
    std::vector<int> l;
    for (int r = 0; r < std::abs(k); ++r) l.insert(l.end(), base.letters.begin(), base.letters.end());
    return BraidWord(a.n, std::move(l));
}

BraidWord conjugate(const BraidWord& b, const BraidWord& by) { return compose(compose(by, b), by.inverse()); }

std::vector<int> strand_permutation(const BraidWord& b) {
    // track which strand sits at each position
    std::vector<int> at(b.n);
    for (int i = 0; i < b.n; ++i) at[i] = i;
    for (int x : b.letters) {
        int k = std::abs(x) - 1;
        std::swap(at[k], at[k + 1]);
    }
    std::vector<int> perm(b.n);
    for (int pos = 0; pos < b.n; ++pos) perm[at[pos]] = pos;
    return perm;
}

int cycle_count(const std::vector<int>& perm) {
    std::vector<char> seen(perm.size(), 0);
    int c = 0;
    for (size_t i = 0; i < perm.size(); ++i) {
        if (seen[i]) continue;
        ++c;
        for (size_t j = i; !seen[j]; j = perm[j]) seen[j] = 1;
    }
    return c;
}

bool closure_is_knot(const BraidWord& b) { return cycle_count(strand_permutation(b)) == 1; }

// ---- Dynnikov action ----

namespace {

template <class T> T pos(T x) { return x > 0 ? x : T(0); }
template <class T> T neg(T x) { return x < 0 ? x : T(0); }

// sigma_i^{-1}, i in 1..n-1; a, b have n-2 entries.
template <class T> void inverse_gen(std::vector<T>& a, std::vector<T>& b, int i, int n) {
    const int N = n - 2;
    if (i == 1) {
        T a0 = a[0], b0 = b[0];
        b[0] = a0 + pos(b0);
        a[0] = -b0 + pos(b[0]);
        return;
    }
    if (i == n - 1) {
        T a1 = a[N - 1], b1 = b[N - 1];
        b[N - 1] = a1 + neg(b1);
        a[N - 1] = -b1 + neg(b[N - 1]);
        return;
    }
    int j = i - 2, k = i - 1;
    T aj = a[j], ak = a[k], bj = b[j], bk = b[k];
    T c = aj - ak - pos(bk) + neg(bj);
    a[j] = aj - pos(bj) - pos(pos(bk) + c);
    b[j] = bk + neg(c);
    a[k] = ak - neg(bk) - neg(neg(bj) - c);
    b[k] = bj - neg(c);
}

template <class T> std::vector<T> act(const BraidWord& w, const std::vector<T>& x) {
    const int n = w.n, N = n - 2;
    std::vector<T> a(x.begin(), x.begin() + N), b(x.begin() + N, x.end());
    for (int g : w.letters) {
        if (g < 0) {
            inverse_gen(a, b, -g, n);
        } else {
            for (auto& v : a) v = -v;
            inverse_gen(a, b, g, n);
            for (auto& v : a) v = -v;
        }
    }
    std::vector<T> out = a;
    out.insert(out.end(), b.begin(), b.end());
    return out;
}

}  // namespace

bool dynnikov_valid(int n, const Dynnikov& x) {
    if (n < 3 || (int)x.size() != 2 * n - 4) return false;
    return std::any_of(x.begin(), x.end(), [](int64_t v) { return v != 0; });
}

Dynnikov dynnikov_apply(const BraidWord& b, const Dynnikov& x) {
    if (!dynnikov_valid(b.n, x)) throw std::invalid_argument("invalid Dynnikov coordinate vector");
    return act<int64_t>(b, x);
}

std::vector<double> dynnikov_apply_real(const BraidWord& b, std::vector<double> x) {
    if ((int)x.size() != 2 * b.n - 4) throw std::invalid_argument("bad coordinate length");
    return act<double>(b, x);
}

Dynnikov round_curve(int n, int i) {
    if (n < 3 || i < 1 || i > n - 1) throw std::invalid_argument("round_curve index");
    Dynnikov x(2 * n - 4, 0);
    const int N = n - 2;
    if (i >= 2) x[N + i - 2] = -1;
    if (i <= N) x[N + i - 1] = 1;
    return x;
}

Dynnikov nested_curve(int n, int k) {
    if (n < 3 || k < 2 || k > n - 1) throw std::invalid_argument("nested_curve index");
    Dynnikov x(2 * n - 4, 0);
    x[(n - 2) + k - 2] = 1;
    return x;
}

Dynnikov pair_curve(int n, int i, int j) {
    if (i < 1 || j > n || i >= j) throw std::invalid_argument("pair_curve indices");
    std::vector<int> push;
    for (int k = i + 1; k < j; ++k) push.push_back(k);
    return dynnikov_apply(BraidWord(n, push), round_curve(n, i));
}

std::vector<Dynnikov> test_laminations(int n, int random, uint64_t seed) {
    std::vector<Dynnikov> out;
    for (int i = 1; i < n; ++i) out.push_back(round_curve(n, i));
    for (int k = 3; k < n; ++k) out.push_back(nested_curve(n, k));
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> d(-7, 7);
    while ((int)out.size() < n - 1 + std::max(0, n - 3) + random) {
        Dynnikov x(2 * n - 4);
        for (auto& v : x) v = d(rng);
        if (dynnikov_valid(n, x)) out.push_back(x);
    }
    return out;
}

bool braids_equal(const BraidWord& a, const BraidWord& b, int random, uint64_t seed) {
    if (a.n != b.n) throw std::invalid_argument("strand-count mismatch");
    if (a.exponent_sum() != b.exponent_sum()) return false;
    BraidWord q = compose(a, b.inverse());
    if (q.letters.empty()) return true;
    if (a.n == 2) return true;  // B_2 is cyclic: exponent sum decides
    for (const auto& x : test_laminations(a.n, random, seed))
        if (dynnikov_apply(q, x) != x) return false;
    return true;
}

std::optional<BraidWord> find_conjugator(const BraidWord& a, const BraidWord& b, int max_len) {
    if (a.n != b.n) throw std::invalid_argument("strand-count mismatch");
    if (a.exponent_sum() != b.exponent_sum()) return std::nullopt;
    std::vector<int> gens;
    for (int i = 1; i < a.n; ++i) gens.insert(gens.end(), {i, -i});
    std::vector<int> w;
    std::optional<BraidWord> found;
    // iterative deepening over freely reduced words
    std::function<bool(int)> go = [&](int left) {
        if (left == 0) {
            BraidWord c(a.n, w);
            if (braids_equal(a, conjugate(b, c))) {
                found = c;
                return true;
            }
            return false;
        }
        for (int g : gens) {
            if (!w.empty() && w.back() == -g) continue;
            w.push_back(g);
            bool done = go(left - 1);
            w.pop_back();
            if (done) return true;
        }
        return false;
    };
    for (int len = 0; len <= max_len; ++len)
        if (go(len)) return found;
    return std::nullopt;
}

GrowthEstimate dilatation_estimate(const BraidWord& b, int iters, const Dynnikov& seed) {
    if (iters < 1) throw std::invalid_argument("iters must be positive");
    GrowthEstimate g;
    if (b.n < 3) return g;
    std::vector<double> x;
    if (seed.empty()) {
        // generic seed: not a round curve, so reducible braids rarely fix it
        x.assign(2 * b.n - 4, 0.0);
        for (int i = 0; i < (int)x.size(); ++i) x[i] = (i % 3 == 0 ? 1.0 : (i % 3 == 1 ? -1.0 : 2.0));
    } else {
        x.assign(seed.begin(), seed.end());
    }
    auto norm = [](const std::vector<double>& v) {
        double m = 0;
        for (double t : v) m = std::max(m, std::abs(t));
        return m;
    };
    double prev_rate = 0;
    double rate = 1;
    for (int it = 0; it < iters; ++it) {
        double before = norm(x);
        x = act<double>(b, x);
        double after = norm(x);
        rate = after / before;
        for (double& t : x) t /= after;
        prev_rate = rate;
    }
    (void)prev_rate;
    // average over the tail to smooth periodic oscillation of the ratio
    int tail = std::max(1, std::min(iters, 20));
    double logsum = 0;
    for (int it = 0; it < tail; ++it) {
        double before = norm(x);
        x = act<double>(b, x);
        double after = norm(x);
        logsum += std::log(after / before);
        for (double& t : x) t /= after;
    }
    g.rate = std::exp(logsum / tail);
    g.growing = g.rate > 1.0 + 1e-6;
    if (!g.growing) g.rate = 1.0;
    return g;
}

}  // namespace fpf
