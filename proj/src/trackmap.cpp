#include "fpf/trackmap.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace fpf {

bool is_monogon_edge(const Track& t, int e) {
    if (!t.is_real(e)) return false;
    int h = t.edges[e].head;
    return std::any_of(t.marked.begin(), t.marked.end(), [&](const Corner& c) { return c.sw == h; });
}

std::string letter_str(const Track& t, const Letter& l) {
    const std::string& n = t.edges.at(l.edge).name;
    switch (l.dec) {
        case Dec::Plus: return n + "+";
        case Dec::Minus: return n + "-";
        case Dec::Terminal: return n + " o";
        case Dec::Plain: return n;
        case Dec::Bar: return "~" + n;
    }
    return n;
}

std::string path_str(const Track& t, const DecoratedPath& p) {
    std::string s;
    for (const auto& l : p.letters) {
        if (!s.empty()) s += ' ';
        s += letter_str(t, l);
    }
    return s;
}

DecoratedPath parse_path(const Track& t, const std::string& text) {
    std::istringstream is(text);
    std::vector<std::string> tok;
    for (std::string w; is >> w;) tok.push_back(w);
    DecoratedPath p;
    for (size_t i = 0; i < tok.size(); ++i) {
        std::string w = tok[i];
        if (w == "o" || w == "∘") {
            if (p.letters.empty() || p.letters.back().dec == Dec::Terminal ||
                !is_monogon_edge(t, p.letters.back().edge))
                throw std::invalid_argument("stray terminal marker in '" + text + "'");
            p.letters.back().dec = Dec::Terminal;
            continue;
        }
        Letter l;
        bool bar = false;
        if (w[0] == '~') {
            bar = true;
            w = w.substr(1);
        }
        char suffix = 0;
        if (!w.empty() && (w.back() == '+' || w.back() == '-')) {
            suffix = w.back();
            w.pop_back();
        }
        l.edge = t.edge_id(w);
        if (l.edge < 0 || !t.is_real(l.edge)) throw std::invalid_argument("unknown real edge '" + w + "'");
        if (is_monogon_edge(t, l.edge)) {
            if (bar) throw std::invalid_argument("monogon edge " + w + " cannot be barred");
            if (suffix == '+')
                l.dec = Dec::Plus;
            else if (suffix == '-')
                l.dec = Dec::Minus;
            else if (i + 1 < tok.size() && (tok[i + 1] == "o" || tok[i + 1] == "∘"))
                l.dec = Dec::Plus;  // replaced by the terminal marker
            else
                throw std::invalid_argument("monogon letter " + w + " needs +, - or o");
        } else {
            if (suffix) throw std::invalid_argument("edge " + w + " takes no sign");
            l.dec = bar ? Dec::Bar : Dec::Plain;
        }
        p.letters.push_back(l);
    }
    return p;
}

int path_length(const Track& t, int edge, const DecoratedPath& p) {
    int n = 0;
    const bool closing = !is_monogon_edge(t, edge);
    for (const auto& l : p.letters) {
        if (l.dec == Dec::Plus || l.dec == Dec::Minus)
            n += 2;
        else if (l.dec == Dec::Terminal)
            n += closing ? 2 : 1;
        else
            n += 1;
    }
    return n;
}

std::string TrackMap::str() const {
    std::string s;
    for (const auto& [e, p] : images) s += track->edges[e].name + " -> " + path_str(*track, p) + "\n";
    return s;
}

TrackMap parse_trackmap(std::shared_ptr<const Track> t, const std::string& text) {
    TrackMap m;
    m.track = t;
    std::istringstream is(text);
    for (std::string line; std::getline(is, line);) {
        if (auto h = line.find('#'); h != std::string::npos) line.resize(h);
        auto arrow = line.find("->");
        if (arrow == std::string::npos) {
            if (line.find_first_not_of(" \t\r") != std::string::npos)
                throw std::invalid_argument("expected 'edge -> path': " + line);
            continue;
        }
        std::istringstream ls(line.substr(0, arrow));
        std::string name;
        ls >> name;
        int e = t->edge_id(name);
        if (e < 0 || !t->is_real(e)) throw std::invalid_argument("unknown real edge '" + name + "'");
        if (m.images.count(e)) throw std::invalid_argument("edge " + name + " mapped twice");
        m.images[e] = parse_path(*t, line.substr(arrow + 2));
    }
    return m;
}

LetterEnds letter_ends(const Track& t, const Letter& l) {
    const Edge& e = t.edges.at(l.edge);
    const int tg = tail_germ(l.edge), hg = head_germ(l.edge);
    switch (l.dec) {
        case Dec::Plus:
        case Dec::Minus: return {e.tail, tg, e.tail, tg};
        case Dec::Terminal: return {e.tail, tg, e.head, hg};
        case Dec::Plain: return {e.tail, tg, e.head, hg};
        case Dec::Bar: return {e.head, hg, e.tail, tg};
    }
    return {};
}

std::vector<std::vector<int>> polygon_maps(const Track& t) {
    auto polys = t.polygon_faces();
    std::vector<std::vector<int>> verts;
    for (int f : polys) verts.push_back(t.polygon_vertices(f));
    std::vector<int> perm(polys.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::vector<int>> out;
    do {
        bool ok = true;
        for (size_t i = 0; i < perm.size(); ++i)
            if (verts[i].size() != verts[perm[i]].size()) ok = false;
        if (!ok) continue;
        // all rotation choices, odometer style
        std::vector<size_t> shift(polys.size(), 0);
        while (true) {
            std::vector<int> m(t.switches.size(), -1);
            for (size_t i = 0; i < polys.size(); ++i) {
                const auto& a = verts[i];
                const auto& b = verts[perm[i]];
                for (size_t k = 0; k < a.size(); ++k) m[a[k]] = b[(k + shift[i]) % b.size()];
            }
            out.push_back(m);
            size_t i = 0;
            while (i < shift.size() && ++shift[i] == verts[perm[i]].size()) shift[i++] = 0;
            if (i == shift.size()) break;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

std::optional<std::vector<int>> vertex_map(const TrackMap& m) {
    const Track& t = *m.track;
    std::vector<int> v(t.switches.size(), -1);
    auto assign = [&](int from, int to) {
        if (v[from] != -1 && v[from] != to) return false;
        v[from] = to;
        return true;
    };
    for (const auto& [e, p] : m.images) {
        if (p.letters.empty()) return std::nullopt;
        if (!assign(t.edges[e].tail, letter_ends(t, p.letters.front()).start_sw)) return std::nullopt;
        if (!is_monogon_edge(t, e)) {
            const Letter& last = p.letters.back();
            int end = last.dec == Dec::Terminal ? t.edges[last.edge].tail : letter_ends(t, last).end_sw;
            if (!assign(t.edges[e].head, end)) return std::nullopt;
        }
    }
    for (const auto& pm : polygon_maps(t)) {
        bool ok = true;
        for (size_t s = 0; s < v.size() && ok; ++s)
            if (v[s] != -1 && v[s] != pm[s]) ok = false;
        if (!ok) continue;
        // images of the marked switches come from the terminals
        std::vector<int> full = pm;
        for (const auto& [e, p] : m.images)
            if (is_monogon_edge(t, e) && p.letters.back().dec == Dec::Terminal)
                full[t.edges[e].head] = t.edges[p.letters.back().edge].head;
        return full;
    }
    return std::nullopt;
}

namespace {

// Closing terminals of d-type images as doubled letters.
DecoratedPath opened(const Track& t, int edge, const DecoratedPath& p) {
    DecoratedPath q = p;
    if (!is_monogon_edge(t, edge))
        for (auto& l : q.letters)
            if (l.dec == Dec::Terminal) l.dec = Dec::Plus;
    return q;
}

}  // namespace

DecoratedPath reversed_path(const Track& t, int edge, const DecoratedPath& p) {
    DecoratedPath q = opened(t, edge, p);
    std::reverse(q.letters.begin(), q.letters.end());
    for (auto& l : q.letters) switch (l.dec) {
            case Dec::Plain: l.dec = Dec::Bar; break;
            case Dec::Bar: l.dec = Dec::Plain; break;
            case Dec::Plus: l.dec = Dec::Minus; break;
            case Dec::Minus: l.dec = Dec::Plus; break;
            case Dec::Terminal: throw std::invalid_argument("cannot reverse a path ending at a marked point");
        }
    return q;
}

TrackMap compose_maps(const TrackMap& f, const TrackMap& g) {
    if (f.track != g.track && !(f.track && g.track && f.track->name == g.track->name))
        throw std::invalid_argument("maps on different tracks");
    const Track& t = *f.track;
    auto append = [](DecoratedPath& out, const DecoratedPath& p) {
        out.letters.insert(out.letters.end(), p.letters.begin(), p.letters.end());
    };
    TrackMap h;
    h.track = f.track;
    for (const auto& [e, ge] : g.images) {
        DecoratedPath out;
        for (const auto& l : opened(t, e, ge).letters) {
            const DecoratedPath& fx = f.image(l.edge);
            switch (l.dec) {
                case Dec::Plain: append(out, opened(t, l.edge, fx)); break;
                case Dec::Bar: append(out, reversed_path(t, l.edge, fx)); break;
                case Dec::Terminal: append(out, fx); break;
                case Dec::Plus:
                case Dec::Minus: {
                    // up f(X) minus its terminal, once around the image point, back down
                    DecoratedPath w{std::vector<Letter>(fx.letters.begin(), fx.letters.end() - 1)};
                    append(out, w);
                    out.letters.push_back({fx.letters.back().edge, l.dec});
                    if (!w.letters.empty()) append(out, reversed_path(t, l.edge, w));
                    break;
                }
            }
        }
        h.images[e] = out;
    }
    return h;
}

IntMatrix transition_matrix(const TrackMap& m) {
    const Track& t = *m.track;
    auto re = t.real_edges();
    std::vector<int> idx(t.edges.size(), -1);
    for (size_t i = 0; i < re.size(); ++i) idx[re[i]] = (int)i;
    IntMatrix M((int)re.size(), (int)re.size());
    for (size_t i = 0; i < re.size(); ++i) {
        auto it = m.images.find(re[i]);
        if (it == m.images.end()) throw std::invalid_argument("edge " + t.edges[re[i]].name + " has no image");
        const bool closing = !is_monogon_edge(t, re[i]);
        for (const auto& l : it->second.letters) {
            int w = (l.dec == Dec::Plus || l.dec == Dec::Minus || (l.dec == Dec::Terminal && closing)) ? 2 : 1;
            M((int)i, idx[l.edge]) += w;
        }
    }
    return M;
}

IntMatrix weight_lattice(const Track& t) {
    const int E = (int)t.edges.size(), S = (int)t.switches.size();
    IntMatrix A(S, E);
    for (int s = 0; s < S; ++s)
        for (int g : t.switches[s].germs) A(s, germ_edge(g)) += t.side(g) == 0 ? 1 : -1;
    IntMatrix K = integer_kernel(A);
    auto re = t.real_edges();
    IntMatrix G((int)re.size(), K.cols);
    for (size_t i = 0; i < re.size(); ++i)
        for (int j = 0; j < K.cols; ++j) G((int)i, j) = K(re[i], j);
    return lattice_basis(G);
}

namespace {

int sgn(const Rational& r) { return r.numerator().sign(); }

// Solve B X = C for X (B has full column rank); nullopt if inconsistent.
std::optional<std::vector<std::vector<Rational>>> solve(const IntMatrix& B, const IntMatrix& C) {
    const int m = B.rows, r = B.cols, k = C.cols;
    std::vector<std::vector<Rational>> a(m, std::vector<Rational>(r + k));
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < r; ++j) a[i][j] = Rational(B(i, j));
        for (int j = 0; j < k; ++j) a[i][r + j] = Rational(C(i, j));
    }
    int row = 0;
    for (int c = 0; c < r; ++c) {
        int p = row;
        while (p < m && sgn(a[p][c]) == 0) ++p;
        if (p == m) return std::nullopt;  // rank deficient
        std::swap(a[p], a[row]);
        Rational inv = Rational(BigInt(1)) / a[row][c];
        for (auto& x : a[row]) x *= inv;
        for (int i = 0; i < m; ++i) {
            if (i == row || sgn(a[i][c]) == 0) continue;
            Rational f = a[i][c];
            for (int j = 0; j < r + k; ++j) a[i][j] -= f * a[row][j];
        }
        ++row;
    }
    for (int i = row; i < m; ++i)
        for (int j = r; j < r + k; ++j)
            if (sgn(a[i][j]) != 0) return std::nullopt;
    std::vector<std::vector<Rational>> x(r, std::vector<Rational>(k));
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < k; ++j) x[i][j] = a[i][r + j];
    return x;
}

}  // namespace

bool weight_space_unimodular(const TrackMap& m) {
    IntMatrix B = weight_lattice(*m.track);
    if (B.cols == 0) throw std::domain_error("degenerate weight space");
    IntMatrix C = transition_matrix(m).transposed() * B;
    auto X = solve(B, C);
    if (!X) return false;
    IntMatrix Xi(B.cols, B.cols);
    for (int i = 0; i < B.cols; ++i)
        for (int j = 0; j < B.cols; ++j) {
            const Rational& q = (*X)[i][j];
            if (q.denominator() != 1) return false;
            Xi(i, j) = q.numerator();
        }
    BigInt d = determinant(Xi);
    return d == 1 || d == -1;
}

}  // namespace fpf
