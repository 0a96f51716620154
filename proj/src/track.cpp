#include "fpf/track.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>

#ifndef FPF_DATA_DIR
#define FPF_DATA_DIR "data"
#endif

namespace fpf {

int Track::edge_id(const std::string& n) const {
    for (size_t i = 0; i < edges.size(); ++i)
        if (edges[i].name == n) return (int)i;
    return -1;
}

int Track::switch_id(const std::string& n) const {
    for (size_t i = 0; i < switches.size(); ++i)
        if (switches[i].name == n) return (int)i;
    return -1;
}

int Track::germ_at(int sw, int i) const {
    const auto& g = switches[sw].germs;
    int d = (int)g.size();
    return g[((i % d) + d) % d];
}

std::string Track::germ_name(int g) const { return edges[germ_edge(g)].name + ((g & 1) ? ".h" : ".t"); }

std::vector<int> Track::real_edges() const {
    std::vector<int> out;
    for (size_t e = 0; e < edges.size(); ++e)
        if (is_real((int)e)) out.push_back((int)e);
    return out;
}

std::vector<int> Track::real_germs(int sw) const {
    const auto& g = switches[sw].germs;
    int d = (int)g.size();
    // start right after the last germ of an inf run
    int start = 0;
    for (int i = 0; i < d; ++i)
        if (side(g[i]) == 1 && side(g[(i + 1) % d]) == 0) start = (i + 1) % d;
    std::vector<int> out;
    for (int k = 0; k < d; ++k)
        if (side(g[(start + k) % d]) == 0) out.push_back(g[(start + k) % d]);
    return out;
}

int Track::face_of(Corner c) const {
    int off = 0;
    for (int s = 0; s < c.sw; ++s) off += degree(s);
    return corner_face.at(off + c.idx);
}

int Track::peripheral_face() const {
    for (size_t f = 0; f < faces.size(); ++f)
        if (faces[f].kind == FaceKind::Peripheral) return (int)f;
    return -1;
}

std::vector<int> Track::polygon_faces() const {
    std::vector<int> out;
    for (size_t f = 0; f < faces.size(); ++f)
        if (faces[f].kind == FaceKind::Polygon) out.push_back((int)f);
    return out;
}

std::vector<int> Track::polygon_vertices(int face) const {
    std::vector<int> out;
    for (const auto& c : faces.at(face).corners) out.push_back(c.sw);
    return out;
}

void Track::finalize() {
    germ_switch.assign(2 * edges.size(), -1);
    germ_pos.assign(2 * edges.size(), -1);
    for (size_t s = 0; s < switches.size(); ++s)
        for (size_t i = 0; i < switches[s].germs.size(); ++i) {
            int g = switches[s].germs[i];
            if (g < 0 || g >= (int)germ_switch.size()) throw TrackParseError("germ out of range");
            if (germ_switch[g] != -1) throw TrackParseError("germ " + germ_name(g) + " used twice");
            germ_switch[g] = (int)s;
            germ_pos[g] = (int)i;
        }
    for (size_t e = 0; e < edges.size(); ++e) {
        edges[e].tail = germ_switch[tail_germ((int)e)];
        edges[e].head = germ_switch[head_germ((int)e)];
    }
    // faces: corner (g, next(g)) -> cross the edge of next(g) -> corner after its opposite germ
    std::vector<int> offset(switches.size() + 1, 0);
    for (size_t s = 0; s < switches.size(); ++s) offset[s + 1] = offset[s] + degree((int)s);
    corner_face.assign(offset.back(), -1);
    faces.clear();
    for (size_t s = 0; s < switches.size(); ++s)
        for (int i = 0; i < degree((int)s); ++i) {
            if (corner_face[offset[s] + i] != -1) continue;
            Face f;
            int fid = (int)faces.size();
            Corner c{(int)s, i};
            for (int guard = 0; guard <= offset.back(); ++guard) {
                if (corner_face[offset[c.sw] + c.idx] != -1) break;
                corner_face[offset[c.sw] + c.idx] = fid;
                f.corners.push_back(c);
                int g = germ_at(c.sw, c.idx), h = germ_at(c.sw, c.idx + 1);
                if (side(g) == side(h)) ++f.cusps;
                f.edges.push_back(germ_edge(h));
                int h2 = opposite_germ(h);
                if (germ_switch[h2] < 0) break;  // dangling; validate() reports it
                c = Corner{germ_switch[h2], germ_pos[h2]};
            }
            faces.push_back(std::move(f));
        }
    for (size_t k = 0; k < marked.size(); ++k) {
        int f = face_of(marked[k]);
        faces[f].kind = FaceKind::Marked;
        faces[f].marked_index = (int)k;
    }
    if (peripheral) {
        int f = face_of(*peripheral);
        if (faces[f].kind != FaceKind::Marked) faces[f].kind = FaceKind::Peripheral;
    }
    for (auto& f : faces) {
        if (f.kind != FaceKind::Other) continue;
        bool all_inf = std::all_of(f.edges.begin(), f.edges.end(), [&](int e) { return !is_real(e); });
        if (all_inf) f.kind = FaceKind::Polygon;
    }
}

// ---- text format ----

namespace {

std::string trim(const std::string& s) {
    auto a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    auto b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

int parse_germ(const Track& t, const std::string& tok, int line) {
    auto dot = tok.rfind('.');
    if (dot == std::string::npos || (tok.substr(dot) != ".t" && tok.substr(dot) != ".h"))
        throw TrackParseError("line " + std::to_string(line) + ": germ '" + tok + "' must end in .t or .h");
    int e = t.edge_id(tok.substr(0, dot));
    if (e < 0) throw TrackParseError("line " + std::to_string(line) + ": unknown edge in '" + tok + "'");
    return tok.back() == 'h' ? head_germ(e) : tail_germ(e);
}

Corner corner_after(const Track& t, int g, int line) {
    for (size_t s = 0; s < t.switches.size(); ++s) {
        const auto& gs = t.switches[s].germs;
        auto it = std::find(gs.begin(), gs.end(), g);
        if (it != gs.end()) return Corner{(int)s, (int)(it - gs.begin())};
    }
    throw TrackParseError("line " + std::to_string(line) + ": germ " + t.germ_name(g) + " not on any switch");
}

}  // namespace

// Format (one directive per line, '#' comments):
//   name <id>
//   edge <name> real|inf
//   switch <name> <germ> <germ> ...        germs counter-clockwise, e.g. r.t lr.h
//   marked <germ> [above <edge>]           marked face = face of the corner after <germ>
//   peripheral <germ>
//   stratum (b;m;k)                        optional expectation checked by validate()
Track parse_track(const std::string& text) {
    Track t;
    std::istringstream in(text);
    std::string raw;
    int line = 0;
    struct Pending {
        std::string germ, above;
        int line;
    };
    std::vector<Pending> marks;
    std::optional<Pending> periph;
    while (std::getline(in, raw)) {
        ++line;
        auto hash = raw.find('#');
        std::string l = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
        if (l.empty()) continue;
        std::istringstream ls(l);
        std::string kw;
        ls >> kw;
        auto err = [&](const std::string& m) { return TrackParseError("line " + std::to_string(line) + ": " + m); };
        if (kw == "name") {
            ls >> t.name;
        } else if (kw == "edge") {
            std::string n, k;
            ls >> n >> k;
            if (n.empty() || (k != "real" && k != "inf")) throw err("edge needs <name> real|inf");
            if (t.edge_id(n) >= 0) throw err("duplicate edge " + n);
            t.edges.push_back(Edge{n, k == "real" ? EdgeKind::Real : EdgeKind::Inf});
        } else if (kw == "switch") {
            Switch s;
            ls >> s.name;
            if (s.name.empty()) throw err("switch needs a name");
            if (t.switch_id(s.name) >= 0) throw err("duplicate switch " + s.name);
            std::string tok;
            while (ls >> tok) s.germs.push_back(parse_germ(t, tok, line));
            if (s.germs.empty()) throw err("switch " + s.name + " has no germs");
            t.switches.push_back(std::move(s));
        } else if (kw == "marked") {
            Pending p{"", "", line};
            std::string word;
            ls >> p.germ;
            if (ls >> word) {
                if (word != "above" || !(ls >> p.above)) throw err("expected 'above <edge>'");
            }
            marks.push_back(p);
        } else if (kw == "peripheral") {
            Pending p{"", "", line};
            ls >> p.germ;
            periph = p;
        } else if (kw == "stratum") {
            std::string rest;
            std::getline(ls, rest);
            try {
                t.declared = Stratum::parse(rest);
            } catch (const std::exception& e) {
                throw err(e.what());
            }
        } else {
            throw err("unknown directive '" + kw + "'");
        }
    }
    for (const auto& m : marks) {
        t.marked.push_back(corner_after(t, parse_germ(t, m.germ, m.line), m.line));
        if (!m.above.empty()) {
            int e = t.edge_id(m.above);
            if (e < 0) throw TrackParseError("line " + std::to_string(m.line) + ": unknown edge " + m.above);
            t.above[(int)t.marked.size() - 1] = e;
        }
    }
    t.n_marked = (int)t.marked.size();
    if (periph) t.peripheral = corner_after(t, parse_germ(t, periph->germ, periph->line), periph->line);
    t.finalize();
    return t;
}

Track load_track(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw TrackParseError("cannot open " + path);
    std::stringstream ss;
    ss << f.rdbuf();
    return parse_track(ss.str());
}

std::string print_track(const Track& t) {
    std::ostringstream os;
    os << "name " << t.name << "\n";
    for (const auto& e : t.edges) os << "edge " << e.name << (e.kind == EdgeKind::Real ? " real" : " inf") << "\n";
    for (const auto& s : t.switches) {
        os << "switch " << s.name;
        for (int g : s.germs) os << ' ' << t.germ_name(g);
        os << "\n";
    }
    for (size_t k = 0; k < t.marked.size(); ++k) {
        os << "marked " << t.germ_name(t.switches[t.marked[k].sw].germs[t.marked[k].idx]);
        auto it = t.above.find((int)k);
        if (it != t.above.end()) os << " above " << t.edges[it->second].name;
        os << "\n";
    }
    if (t.peripheral) os << "peripheral " << t.germ_name(t.switches[t.peripheral->sw].germs[t.peripheral->idx]) << "\n";
    if (t.declared) os << "stratum " << t.declared->str() << "\n";
    return os.str();
}

// ---- predicates ----

std::vector<std::string> validate(const Track& t) {
    std::vector<std::string> v;
    for (size_t g = 0; g < t.germ_switch.size(); ++g)
        if (t.germ_switch[g] < 0) v.push_back("germ " + t.germ_name((int)g) + " is not attached to a switch");
    if (!v.empty()) return v;
    for (size_t s = 0; s < t.switches.size(); ++s) {
        const auto& gs = t.switches[s].germs;
        int d = (int)gs.size();
        int changes = 0, real = 0;
        for (int i = 0; i < d; ++i) {
            real += t.side(gs[i]) == 0;
            changes += t.side(gs[i]) != t.side(gs[(i + 1) % d]);
        }
        if (real == 0 || real == d)
            v.push_back("switch " + t.switches[s].name + " has germs on one tangential side only");
        else if (changes != 2)
            v.push_back("switch " + t.switches[s].name + ": tangential sides are not contiguous");
    }
    // connectivity
    std::vector<int> comp(t.switches.size());
    std::iota(comp.begin(), comp.end(), 0);
    std::function<int(int)> find = [&](int x) { return comp[x] == x ? x : comp[x] = find(comp[x]); };
    for (const auto& e : t.edges) comp[find(e.tail)] = find(e.head);
    std::set<int> roots;
    for (size_t s = 0; s < t.switches.size(); ++s) roots.insert(find((int)s));
    if (roots.size() > 1) v.push_back("track is disconnected");
    int chi = (int)t.switches.size() - (int)t.edges.size() + (int)t.faces.size();
    if (chi != 2) v.push_back("cell structure has Euler characteristic " + std::to_string(chi) + ", expected 2 (disk plus outside)");
    std::set<int> mf;
    for (const auto& c : t.marked) {
        int f = t.face_of(c);
        if (!mf.insert(f).second) v.push_back("two marked points share a complementary region");
    }
    if (!t.peripheral) {
        v.push_back("no peripheral region declared");
    } else if (t.faces[t.face_of(*t.peripheral)].kind != FaceKind::Peripheral) {
        v.push_back("peripheral region coincides with a marked region");
    }
    for (size_t f = 0; f < t.faces.size(); ++f) {
        const auto& F = t.faces[f];
        if (F.kind == FaceKind::Marked && F.cusps < 1)
            v.push_back("marked region " + std::to_string(F.marked_index) + " has no cusp");
        if ((F.kind == FaceKind::Polygon || F.kind == FaceKind::Other) && F.cusps < 3)
            v.push_back("unmarked interior region with " + std::to_string(F.cusps) + " cusps (needs >= 3)");
        if (F.kind == FaceKind::Peripheral && F.cusps < 1) v.push_back("peripheral region has no cusp");
    }
    for (auto [k, e] : t.above) {
        if (k >= (int)t.marked.size()) continue;
        const auto& F = t.faces[t.face_of(t.marked[k])];
        if (t.is_real(e) || std::find(F.edges.begin(), F.edges.end(), e) == F.edges.end())
            v.push_back("side-swapping edge " + t.edges[e].name + " is not an infinitesimal edge of its marked region");
    }
    if (v.empty() && t.declared) {
        Stratum s = stratum_of(t);
        if (!(s == *t.declared))
            v.push_back("region cusp counts give stratum " + s.str() + ", declared " + t.declared->str());
    }
    return v;
}

Stratum stratum_of(const Track& t) {
    Stratum s;
    for (const auto& f : t.faces) {
        switch (f.kind) {
            case FaceKind::Marked: s.marked.push_back(f.cusps); break;
            case FaceKind::Peripheral: s.boundary.push_back(f.cusps); break;
            default: s.interior.push_back(f.cusps); break;
        }
    }
    s.normalize();
    return s;
}

std::vector<std::string> standard_violations(const Track& t) {
    std::vector<std::string> v;
    for (const auto& f : t.faces)
        if (f.kind != FaceKind::Peripheral &&
            std::any_of(f.edges.begin(), f.edges.end(), [&](int e) { return t.is_real(e); }))
            v.push_back("an interior region is not bounded by infinitesimal edges");
    for (size_t s = 0; s < t.switches.size(); ++s) {
        const auto& gs = t.switches[s].germs;
        if (std::none_of(gs.begin(), gs.end(), [&](int g) { return t.side(g) == 1; }))
            v.push_back("switch " + t.switches[s].name + " is not on an infinitesimal polygon");
    }
    for (size_t k = 0; k < t.marked.size(); ++k) {
        const auto& F = t.faces[t.face_of(t.marked[k])];
        std::set<int> inf(F.edges.begin(), F.edges.end());
        auto it = t.above.find((int)k);
        if (it == t.above.end())
            v.push_back("marked point " + std::to_string(k) + " has no side-swapping edge above it");
        else if (inf.size() != 1 || *inf.begin() != it->second)
            v.push_back("marked point " + std::to_string(k) + ": side-swapping edge is not unique");
    }
    return v;
}

bool is_standard(const Track& t) { return validate(t).empty() && standard_violations(t).empty(); }

bool is_jointless(const Track& t) {
    for (const auto& c : t.marked) {
        const auto& gs = t.switches[c.sw].germs;
        int real = (int)std::count_if(gs.begin(), gs.end(), [&](int g) { return t.side(g) == 0; });
        if (real >= 2) return false;
    }
    return true;
}

std::string data_dir() {
    if (const char* env = std::getenv("FPF_DATA_DIR"); env && *env) return env;
    return FPF_DATA_DIR;
}

std::vector<std::string> named_track_names() { return {"jellyfish", "camel-l", "camel-r", "enoki-l", "enoki-r"}; }

Track named_track(const std::string& name) {
    auto names = named_track_names();
    if (std::find(names.begin(), names.end(), name) == names.end())
        throw std::invalid_argument("unknown track '" + name + "'");
    return load_track(data_dir() + "/tracks/" + name + ".trk");
}

}  // namespace fpf
