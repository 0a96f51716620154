#include "fpf/trackmap.hpp"

#include <set>
#include <stdexcept>

namespace fpf {

namespace {

// Which loop germ a "+" letter leaves through, counted ccw from the real germ.
#ifndef FPF_PLUS_STEP
#define FPF_PLUS_STEP 1
#endif
constexpr int kPlusStep = FPF_PLUS_STEP;

int pos(const Track& t, int germ) { return 64 * t.germ_pos[germ]; }

int polygon_corner(const Track& t, int sw) {
    for (int i = 0; i < t.degree(sw); ++i)
        if (t.faces[t.face_of(Corner{sw, i})].kind == FaceKind::Polygon) return i;
    throw std::logic_error("switch " + t.switches[sw].name + " is not a polygon vertex");
}

// Infinitesimal edge joining u and v: (germ at u, germ at v).
std::optional<std::pair<int, int>> hop(const Track& t, int u, int v) {
    if (u == v) return std::nullopt;
    for (int g : t.switches[u].germs) {
        if (t.side(g) != 1) continue;
        int o = opposite_germ(g);
        if (t.germ_switch[o] == v) return std::make_pair(g, o);
    }
    return std::nullopt;
}

}  // namespace

int virtual_start(const Track& t, int target_sw, int source_germ) {
    auto rg = t.real_germs(t.germ_switch[source_germ]);
    const int k = (int)rg.size();
    int j = 0;
    while (j < k && rg[j] != source_germ) ++j;
    if (j == k) throw std::logic_error("germ is not a real germ of its switch");
    return 64 * polygon_corner(t, target_sw) + 64 * (k - j) / (k + 1);
}

int marked_position(const Track& t, int sw) {
    for (const auto& c : t.marked)
        if (c.sw == sw) return 64 * c.idx + 32;
    throw std::logic_error("switch " + t.switches[sw].name + " is not marked");
}

std::optional<PassageList> expand(const Track& t, const std::vector<int>& vmap, int edge,
                                  const DecoratedPath& p, bool complete, int closing_sign) {
    PassageList out;
    const bool monogon_image = is_monogon_edge(t, edge);
    const int W = vmap.at(t.edges[edge].tail);
    if (W < 0) return std::nullopt;
    int cur_sw = W, cur_in = virtual_start(t, W, tail_germ(edge));
    bool ended = false;
    for (size_t i = 0; i < p.letters.size(); ++i) {
        if (ended) return std::nullopt;
        const Letter& l = p.letters[i];
        LetterEnds le = letter_ends(t, l);
        if (i == 0) {
            if (le.start_sw != W) return std::nullopt;
        } else {
            auto h = hop(t, cur_sw, le.start_sw);
            if (!h) return std::nullopt;
            out.push_back({cur_sw, cur_in, pos(t, h->first)});
            cur_in = pos(t, h->second);
        }
        out.push_back({le.start_sw, cur_in, pos(t, le.start_germ)});
        const bool last = i + 1 == p.letters.size();
        bool doubled = l.dec == Dec::Plus || l.dec == Dec::Minus;
        int sign = l.dec == Dec::Minus ? -1 : 1;
        if (l.dec == Dec::Terminal) {
            if (!last) return std::nullopt;
            if (monogon_image) {
                const int M = t.edges[l.edge].head;
                out.push_back({M, pos(t, head_germ(l.edge)), marked_position(t, M)});
                ended = true;
                continue;
            }
            doubled = true;  // closing letter of a d-type image
            sign = closing_sign;
        }
        if (doubled) {
            const int M = t.edges[l.edge].head;
            const int hg = head_germ(l.edge), d = t.degree(M), ip = t.germ_pos[hg];
            const int step = sign > 0 ? kPlusStep : 3 - kPlusStep;
            int first = t.germ_at(M, ip + step), second = t.germ_at(M, ip + 3 - step);
            out.push_back({M, pos(t, hg), pos(t, first)});
            out.push_back({M, pos(t, second), pos(t, hg)});
            (void)d;
            cur_sw = t.edges[l.edge].tail;
            cur_in = pos(t, tail_germ(l.edge));
        } else {
            cur_sw = le.end_sw;
            cur_in = pos(t, le.end_germ);
        }
    }
    if (ended) return out;
    if (complete) {
        if (monogon_image || p.letters.empty()) return std::nullopt;
        if (vmap.at(t.edges[edge].head) != cur_sw) return std::nullopt;
        out.push_back({cur_sw, cur_in, virtual_start(t, cur_sw, head_germ(edge))});
    } else {
        out.push_back({cur_sw, cur_in, kOpen});
    }
    return out;
}

PassageList reversed(const PassageList& p) {
    PassageList r(p.rbegin(), p.rend());
    for (auto& x : r) std::swap(x.in, x.out);
    return r;
}

namespace {

int ccw(int x, int from, int len) { return ((x - from) % len + len) % len; }

bool inside(int x, int a, int b, int len) {  // strictly inside the ccw arc a -> b
    int dx = ccw(x, a, len), db = ccw(b, a, len);
    return dx > 0 && dx < db;
}

// a against b (b may be a reversed copy); skip marks the index pairs to ignore.
bool cross_directed(const Track& t, const PassageList& A, const PassageList& B, bool self, bool rev) {
    const int nb = (int)B.size();
    for (size_t k = 0; k < A.size(); ++k) {
        const Passage& a = A[k];
        for (int l = 0; l < nb; ++l) {
            const Passage& b = B[l];
            if (a.sw != b.sw) continue;
            if (self && !rev && (int)k == l) continue;
            if (self && rev && l == nb - 1 - (int)k) continue;
            const int len = 64 * t.degree(a.sw);
            if (a.in == kOpen || a.out == kOpen || b.in == kOpen || b.out == kOpen) continue;
            if (a.in != b.in && a.in != b.out && a.out != b.in && a.out != b.out) {
                if (inside(b.in, a.in, a.out, len) != inside(b.out, a.in, a.out, len)) return true;
                continue;
            }
            if (!(a.out == b.out && a.in != b.in)) continue;
            // a run starts: a is on the left iff its in-germ comes first ccw from the out-germ
            const bool a_left = ccw(a.in, a.out, len) < ccw(b.in, b.out, len);
            size_t i = k + 1;
            int j = l + 1;
            for (; i < A.size() && j < nb; ++i, ++j) {
                const Passage &x = A[i], &y = B[j];
                if (x.out == kOpen || y.out == kOpen) break;
                if (x.out == y.out) continue;
                const int L = 64 * t.degree(x.sw);
                const bool x_left = ccw(x.out, x.in, L) > ccw(y.out, y.in, L);
                if (x_left != a_left) return true;
                break;
            }
        }
    }
    return false;
}

}  // namespace

bool paths_cross(const Track& t, const PassageList& a, const PassageList& b, bool self) {
    if (cross_directed(t, a, b, self, false)) return true;
    return cross_directed(t, a, reversed(b), self, true);
}

bool crossing_free(const Track& t, const std::vector<PassageList>& paths) {
    for (size_t i = 0; i < paths.size(); ++i)
        for (size_t j = i; j < paths.size(); ++j)
            if (paths_cross(t, paths[i], paths[j], i == j)) return false;
    return true;
}

namespace {

std::vector<int> closing_edges(const TrackMap& m) {
    std::vector<int> out;
    for (const auto& [e, p] : m.images)
        if (!is_monogon_edge(*m.track, e) && !p.letters.empty() && p.letters.back().dec == Dec::Terminal)
            out.push_back(e);
    return out;
}

}  // namespace

bool realisable(const TrackMap& m) {
    const Track& t = *m.track;
    auto vm = vertex_map(m);
    if (!vm) return false;
    auto ce = closing_edges(m);
    for (unsigned mask = 0; mask < (1u << ce.size()); ++mask) {
        std::vector<PassageList> paths;
        bool ok = true;
        for (const auto& [e, p] : m.images) {
            int sign = 1;
            for (size_t k = 0; k < ce.size(); ++k)
                if (ce[k] == e && (mask >> k & 1)) sign = -1;
            auto pl = expand(t, *vm, e, p, true, sign);
            if (!pl) {
                ok = false;
                break;
            }
            paths.push_back(std::move(*pl));
        }
        if (ok && crossing_free(t, paths)) return true;
    }
    return false;
}

std::vector<std::string> check_legal(const TrackMap& m) {
    const Track& t = *m.track;
    std::vector<std::string> v;
    for (int e : t.real_edges())
        if (!m.images.count(e)) v.push_back("edge " + t.edges[e].name + " has no image");
    if (!v.empty()) return v;
    std::set<int> terminals;
    for (const auto& [e, p] : m.images) {
        const std::string en = t.edges[e].name;
        if (p.letters.empty()) {
            v.push_back("image of " + en + " is empty");
            continue;
        }
        const bool mono = is_monogon_edge(t, e);
        for (size_t i = 0; i < p.letters.size(); ++i) {
            const Letter& l = p.letters[i];
            if (l.dec == Dec::Terminal && i + 1 != p.letters.size())
                v.push_back("image of " + en + ": terminal letter before the end");
            if (i > 0 && !is_monogon_edge(t, l.edge) && l == p.letters[i - 1])
                v.push_back("image of " + en + ": " + letter_str(t, l) + " twice in a row");
        }
        const Letter& last = p.letters.back();
        if (mono) {
            if (last.dec != Dec::Terminal)
                v.push_back("image of " + en + " does not end at a marked point");
            else if (!terminals.insert(last.edge).second)
                v.push_back("two images end at the marked point of " + t.edges[last.edge].name);
        }
    }
    auto vm = vertex_map(m);
    if (!vm) {
        v.push_back("images do not induce a polygon map");
        return v;
    }
    for (const auto& [e, p] : m.images)
        if (!expand(t, *vm, e, p, true))
            v.push_back("image of " + t.edges[e].name + " is not a train path");
    if (v.empty() && !realisable(m)) v.push_back("images cannot be drawn without crossings");
    return v;
}

}  // namespace fpf
