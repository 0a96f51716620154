#include "fpf/lift.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace fpf {

Stratum lift_stratum(const Stratum& s) {
    Stratum r;
    for (int p : s.boundary) r.boundary.push_back(2 * p);
    for (int p : s.marked)
        if (p >= 2) r.interior.push_back(2 * p);
    for (int p : s.interior) {
        r.interior.push_back(p);
        r.interior.push_back(p);
    }
    r.normalize();
    return r;
}

namespace {

bool swaps(const Track& t, const Letter& l) { return is_monogon_edge(t, l.edge); }

int polygon_of(const Track& t, int sw) {
    auto polys = t.polygon_faces();
    for (size_t k = 0; k < polys.size(); ++k)
        for (int v : t.polygon_vertices(polys[k]))
            if (v == sw) return (int)k;
    return -1;
}

int first_d_edge(const Track& t) {
    for (int e : t.real_edges())
        if (!is_monogon_edge(t, e)) return e;
    return -1;
}

}  // namespace

int prefix_swap_parity(const Track& t, const DecoratedPath& p, size_t position) {
    if (position > p.letters.size()) throw std::out_of_range("position beyond the path");
    int q = 0;
    for (size_t i = 0; i < position; ++i) q += swaps(t, p.letters[i]);
    return q & 1;
}

std::vector<int> sheet_shifts(const TrackMap& m, bool toggle) {
    const Track& t = *m.track;
    const int np = (int)t.polygon_faces().size();
    std::vector<int> s(np, -1);
    int d0 = first_d_edge(t);
    int base = d0 >= 0 ? polygon_of(t, t.edges[d0].tail) : 0;
    if (np == 0) return s;
    s[base] = toggle ? 1 : 0;
    for (bool changed = true; changed;) {
        changed = false;
        for (const auto& [e, p] : m.images) {
            if (is_monogon_edge(t, e)) continue;
            int a = polygon_of(t, t.edges[e].tail), b = polygon_of(t, t.edges[e].head);
            int q = prefix_swap_parity(t, p, p.letters.size());
            if (s[a] >= 0 && s[b] < 0) {
                s[b] = s[a] ^ q;
                changed = true;
            } else if (s[b] >= 0 && s[a] < 0) {
                s[a] = s[b] ^ q;
                changed = true;
            } else if (s[a] >= 0 && s[b] >= 0 && s[b] != (s[a] ^ q)) {
                throw std::domain_error("inconsistent sheet shifts along " + t.edges[e].name);
            }
        }
    }
    for (auto& x : s)
        if (x < 0) x = toggle ? 1 : 0;  // unconnected polygons follow the base choice
    return s;
}

int lifted_trace(const TrackMap& m, bool toggle) {
    const Track& t = *m.track;
    auto s = sheet_shifts(m, toggle);
    int tr = 0;
    for (const auto& [e, p] : m.images) {
        const int sT = s.at(polygon_of(t, t.edges[e].tail));
        int q = 0;
        for (const auto& l : p.letters) {
            if (l.edge == e) {
                if (l.dec == Dec::Plus || l.dec == Dec::Minus)
                    tr += 2;  // passes over both lifts
                else
                    tr += ((q + sT) % 2 == 0) ? 2 : 0;
            }
            q += swaps(t, l);
        }
    }
    return tr;
}

std::vector<std::string> trace_lemma_check(const TrackMap& m) {
    const Track& t = *m.track;
    std::vector<std::string> v;
    for (const auto& [e, p] : m.images) {
        const std::string en = t.edges[e].name;
        int last_q = -1, q = 0;
        for (const auto& l : p.letters) {
            if (l.edge == e) {
                if (is_monogon_edge(t, e))
                    v.push_back("marked-monogon edge " + en + " appears in its own image");
                if (l.dec == Dec::Plus || l.dec == Dec::Minus)
                    v.push_back("doubled " + en + " in f(" + en + ") swaps sides between its two passes");
                if (last_q >= 0 && (q - last_q) % 2 != 0)
                    v.push_back("odd number of side-swapping edges between occurrences of " + en + " in f(" + en + ")");
                last_q = q;
            }
            q += swaps(t, l);
        }
    }
    return v;
}

std::string LiftedSingularities::cycles() const {
    std::string s;
    std::vector<bool> seen(perm.size(), false);
    for (size_t i = 0; i < perm.size(); ++i) {
        if (seen[i]) continue;
        std::string c = "(";
        for (size_t j = i; !seen[j]; j = perm[j]) {
            seen[j] = true;
            if (c.size() > 1) c += ' ';
            c += std::to_string(labels.empty() ? (int)j + 1 : labels[j]);
        }
        s += c + ")";
    }
    return s;
}

LiftedSingularities lifted_singularity_permutation(const TrackMap& m, bool toggle) {
    const Track& t = *m.track;
    auto vm = vertex_map(m);
    if (!vm) throw std::invalid_argument("map does not induce a polygon map");
    auto polys = t.polygon_faces();
    auto s = sheet_shifts(m, toggle);
    LiftedSingularities r;
    r.perm.assign(2 * polys.size(), -1);
    for (size_t k = 0; k < polys.size(); ++k) {
        int img = polygon_of(t, (*vm)[t.polygon_vertices(polys[k]).front()]);
        for (int i = 0; i < 2; ++i) r.perm[2 * k + i] = 2 * img + (i ^ s[k]);
    }
    for (size_t i = 0; i < r.perm.size(); ++i)
        if (r.perm[i] == (int)i) r.fixed.push_back((int)i);
    r.case_tag = "-";
    // Display labels for two triangles: 1 = L^0, 2 = R^0, 3 = L^1, 4 = R^1, L holding the tail of d.
    int d0 = first_d_edge(t);
    int L = d0 >= 0 ? polygon_of(t, t.edges[d0].tail) : 0;
    auto label = [&](int x) { int poly = x / 2, sh = x % 2; return (poly == L ? 1 : 2) + 2 * sh; };
    if (polys.size() == 2)
        for (int x = 0; x < 4; ++x) r.labels.push_back(label(x));
    if (!r.fixed.empty()) {
        r.case_tag = "violation";
    } else if (polys.size() == 2) {
        int img[5];
        for (int x = 0; x < 4; ++x) img[label(x)] = label(r.perm[x]);
        const int A[5] = {0, 3, 4, 1, 2}, B[5] = {0, 2, 1, 4, 3}, C[5] = {0, 4, 1, 2, 3}, D[5] = {0, 2, 3, 4, 1},
                  Bx[5] = {0, 4, 3, 2, 1};
        auto eq = [&](const int* c) { return std::equal(c + 1, c + 5, img + 1); };
        if (eq(A)) r.case_tag = "A";
        else if (eq(B)) r.case_tag = "B";
        else if (eq(C)) r.case_tag = "C";
        else if (eq(D)) r.case_tag = "D";
        else if (eq(Bx)) {
            r.case_tag = "B";
            r.relabelled = true;
        }
    }
    return r;
}

LiftReport fpf_verdict(const TrackMap& m, bool toggle) {
    const Track& t = *m.track;
    LiftReport r;
    r.toggled = toggle;
    r.lifted_trace = lifted_trace(m, toggle);
    r.singularities = lifted_singularity_permutation(m, toggle);
    for (const auto& [e, p] : m.images)
        if (is_monogon_edge(t, e) && !p.letters.empty() && p.letters.back().dec == Dec::Terminal &&
            p.letters.back().edge == e)
            r.fixed_marked.push_back(t.edges[e].head);
    r.fpf = r.lifted_trace == 0 && r.singularities.fixed.empty() && r.fixed_marked.empty();
    r.lifted_stratum = lift_stratum(t.declared ? *t.declared : stratum_of(t));
    return r;
}

std::string LiftReport::str() const {
    std::ostringstream os;
    os << "toggle: " << (toggled ? "full twist" : "none") << "\n";
    os << "lifted trace: " << lifted_trace << "\n";
    os << "singularities: " << singularities.cycles() << " case " << singularities.case_tag
       << (singularities.relabelled ? " (after relabelling)" : "") << "\n";
    os << "fixed marked points: " << fixed_marked.size() << "\n";
    os << "lifted stratum: " << lifted_stratum.str() << "\n";
    os << "fpf: " << (fpf ? "yes" : "no") << "\n";
    return os.str();
}

}  // namespace fpf
