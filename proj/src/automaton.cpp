#include "fpf/automaton.hpp"
#include "fpf/track.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>
#include <stdexcept>

namespace fpf {

int Automaton::node_id(const std::string& n) const {
    for (size_t i = 0; i < nodes.size(); ++i)
        if (nodes[i].name == n) return (int)i;
    return -1;
}

std::string Automaton::edge_str(int e) const {
    const auto& E = edges.at(e);
    std::string s = nodes[E.from].name + (E.dashed ? " => " : " -> ") + nodes[E.to].name;
    if (!E.dashed) s += " [" + E.label.str() + "]";
    return s;
}

Automaton parse_automaton(const std::string& text) {
    Automaton a;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    auto fail = [&](const std::string& m) {
        throw TrackParseError("automaton line " + std::to_string(lineno) + ": " + m);
    };
    std::vector<std::string> pending;  // arrows need strands and nodes first
    std::vector<int> pending_line;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
        std::istringstream ls(line);
        std::string kw;
        if (!(ls >> kw)) continue;
        if (kw == "name") {
            ls >> a.name;
        } else if (kw == "strands") {
            if (!(ls >> a.strands) || a.strands < 2) fail("bad strand count");
        } else if (kw == "node") {
            AutomatonNode n;
            if (!(ls >> n.name)) fail("node needs a name");
            std::string key, val;
            while (ls >> key) {
                if (!(ls >> val)) fail("attribute " + key + " needs a value");
                if (key == "kind") {
                    if (val == "enoki") n.kind = NodeKind::Enoki;
                    else if (val == "camel") n.kind = NodeKind::Camel;
                    else if (val == "aux") n.kind = NodeKind::Aux;
                    else fail("unknown node kind " + val);
                } else if (key == "track") {
                    n.track = val;
                } else {
                    fail("unknown node attribute " + key);
                }
            }
            if (a.node_id(n.name) >= 0) fail("duplicate node " + n.name);
            a.nodes.push_back(n);
        } else if (kw == "arrow" || kw == "dashed") {
            pending.push_back(line);
            pending_line.push_back(lineno);
        } else {
            fail("unknown keyword " + kw);
        }
    }
    for (size_t k = 0; k < pending.size(); ++k) {
        lineno = pending_line[k];
        std::istringstream ls(pending[k]);
        std::string kw, from, to;
        ls >> kw >> from >> to;
        AutomatonEdge e;
        e.from = a.node_id(from);
        e.to = a.node_id(to);
        if (e.from < 0 || e.to < 0) fail("arrow between unknown nodes");
        std::string rest;
        std::getline(ls, rest);
        e.dashed = kw == "dashed";
        if (e.dashed && rest.find_first_not_of(" \t") != std::string::npos) fail("dashed arrows carry no label");
        e.label = e.dashed ? BraidWord::identity(a.strands) : BraidWord::parse(a.strands, rest);
        if (!e.dashed && e.label.letters.empty()) fail("arrow needs a label");
        a.edges.push_back(e);
    }
    return a;
}

Automaton load_automaton(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open " + path);
    std::stringstream ss;
    ss << f.rdbuf();
    return parse_automaton(ss.str());
}

Automaton stratum_automaton() { return load_automaton(data_dir() + "/automaton/folding-33.aut"); }

BraidWord compose_loop(const Automaton& a, const std::vector<int>& edges) {
    std::vector<int> w;
    for (int e : edges) {
        const auto& l = a.edges.at(e).label.letters;
        w.insert(w.end(), l.begin(), l.end());
    }
    return BraidWord(a.strands, w);
}

std::vector<Loop> loops(const Automaton& a, int base, int max_len) {
    if (base < 0 || base >= (int)a.nodes.size()) throw std::invalid_argument("unknown base node");
    std::vector<Loop> out;
    std::vector<int> path;
    std::function<void(int)> walk = [&](int at) {
        if (!path.empty() && at == base) {
            Loop l;
            l.edges = path;
            l.word = compose_loop(a, path);
            l.dashed_only = true;
            for (int e : path) {
                const auto& E = a.edges[e];
                l.dashed_only = l.dashed_only && E.dashed;
                l.passes_camel = l.passes_camel || a.nodes[E.from].kind == NodeKind::Camel;
            }
            out.push_back(std::move(l));
        }
        if ((int)path.size() == max_len) return;
        for (size_t e = 0; e < a.edges.size(); ++e)
            if (a.edges[e].from == at) {
                path.push_back((int)e);
                walk(a.edges[e].to);
                path.pop_back();
            }
    };
    walk(base);
    return out;
}

BraidWord beta_ab(int a, int b) {
    std::vector<int> w(a, 4);
    w.insert(w.end(), {3, 2});
    w.insert(w.end(), b, -1);
    w.insert(w.end(), {-2, -3});
    return BraidWord(5, w);
}

BraidWord beta_ab_split(int a, int b) {
    std::vector<int> w{-3};
    w.insert(w.end(), a, 4);
    w.insert(w.end(), {3, 2});
    w.insert(w.end(), b, -1);
    w.push_back(-2);
    return BraidWord(5, w);
}

std::optional<SplitWitness> beta_ab_witness(int a, int b, int max_conj) {
    BraidWord beta = beta_ab(a, b), split = beta_ab_split(a, b);
    auto w = find_conjugator(split, beta, max_conj);
    if (!w) return std::nullopt;
    SplitWitness s;
    s.conjugator = *w;
    Dynnikov c24 = pair_curve(5, 2, 4);
    s.split_fixes = dynnikov_apply(split, c24) == c24;
    s.curve = dynnikov_apply(*w, c24);
    s.beta_fixes = dynnikov_apply(beta, s.curve) == s.curve;
    return s;
}

namespace {

struct StandardCurve {
    std::string name;
    Dynnikov x;
};

std::vector<StandardCurve> standard_curves(int n) {
    std::vector<StandardCurve> out;
    auto set_name = [](int i, int j) { return "{" + std::to_string(i) + "," + std::to_string(j) + "}"; };
    for (int i = 1; i < n; ++i) out.push_back({set_name(i, i + 1), round_curve(n, i)});
    for (int i = 1; i < n; ++i)
        for (int j = i + 2; j <= n; ++j) out.push_back({set_name(i, j), pair_curve(n, i, j)});
    for (int k = 3; k < n; ++k) out.push_back({"{1.." + std::to_string(k) + "}", nested_curve(n, k)});
    return out;
}

void words_of_length(int n, int len, std::vector<int>& w, const std::function<void()>& f) {
    if ((int)w.size() == len) return f();
    for (int i = 1; i < n; ++i)
        for (int g : {i, -i}) {
            if (!w.empty() && w.back() == -g) continue;
            w.push_back(g);
            words_of_length(n, len, w, f);
            w.pop_back();
        }
}

}  // namespace

std::optional<ReducibilityWitness> reducibility_witness(const BraidWord& b, int max_conj) {
    if (b.n < 3) return std::nullopt;
    if (braids_equal(b, BraidWord::identity(b.n))) {
        ReducibilityWitness w;
        w.trivial = true;
        w.curve = round_curve(b.n, 1);
        w.standard = "all";
        w.conjugator = BraidWord::identity(b.n);
        return w;
    }
    const auto curves = standard_curves(b.n);
    for (int len = 0; len <= max_conj; ++len) {
        std::optional<ReducibilityWitness> found;
        std::vector<int> w;
        words_of_length(b.n, len, w, [&] {
            BraidWord c(b.n, w);
            for (const auto& S : curves) {
                Dynnikov x = dynnikov_apply(c, S.x);
                if (dynnikov_apply(b, x) != x) continue;
                if (!found) {
                    found = ReducibilityWitness{false, x, S.name, c, {}};
                } else if (found->conjugator.letters == c.letters) {
                    found->also.push_back(S.name);
                }
            }
        });
        if (found) return found;
    }
    return std::nullopt;
}

std::string PassageReport::str() const {
    std::ostringstream os;
    os << "loops: " << loops << "\nthrough camel: " << through_camel << "\ntrivial: " << trivial
       << "\nreducible: " << reducible << "\nflagged: " << flagged.size() << "\n";
    for (const auto& f : flagged) os << "  " << f << "\n";
    return os.str();
}

PassageReport camel_passage_check(const Automaton& a, int max_len) {
    PassageReport r;
    std::set<std::vector<int>> seen;
    for (size_t v = 0; v < a.nodes.size(); ++v)
        for (auto& l : loops(a, (int)v, max_len)) {
            auto key = l.edges;
            std::vector<int> rot = key;
            for (size_t s = 1; s < key.size(); ++s) {
                std::rotate(rot.begin(), rot.begin() + 1, rot.end());
                key = std::min(key, rot);
            }
            if (!seen.insert(key).second) continue;
            ++r.loops;
            if (l.passes_camel) {
                ++r.through_camel;
            } else if (l.dashed_only || braids_equal(l.word, BraidWord::identity(a.strands))) {
                ++r.trivial;
            } else if (reducibility_witness(l.word)) {
                ++r.reducible;
            } else {
                std::string s;
                for (int e : l.edges) s += (s.empty() ? "" : "; ") + a.edge_str(e);
                r.flagged.push_back(s);
            }
        }
    return r;
}

std::string EnokiDecomposition::str() const {
    std::string s;
    for (const auto& blk : blocks) {
        s += "[";
        for (size_t i = 0; i < blk.size(); ++i)
            s += (i ? " b(" : "b(") + std::to_string(blk[i].a) + "," + std::to_string(blk[i].b) + ")";
        s += "]";
    }
    return s;
}

namespace {

// One or two beta factors equal to w, with exponent sums matching.
std::optional<std::vector<BetaFactor>> match_beta(const BraidWord& w, int range) {
    int es = w.exponent_sum();
    for (int a = 0; a <= range; ++a) {
        int b = a - es;
        if (b >= 0 && b <= range && braids_equal(w, beta_ab(a, b))) return std::vector<BetaFactor>{{a, b}};
    }
    for (int a1 = 0; a1 <= range; ++a1)
        for (int b1 = 0; b1 <= range; ++b1)
            for (int a2 = 0; a2 <= range; ++a2) {
                int b2 = a1 - b1 + a2 - es;
                if (b2 < 0 || b2 > range) continue;
                if (braids_equal(w, compose(beta_ab(a1, b1), beta_ab(a2, b2))))
                    return std::vector<BetaFactor>{{a1, b1}, {a2, b2}};
            }
    return std::nullopt;
}

}  // namespace

std::vector<EnokiDecomposition> decompose_enoki_loops(const Automaton& a, int base, int max_len,
                                                      int max_conj) {
    std::vector<EnokiDecomposition> out;
    for (const auto& l : loops(a, base, max_len)) {
        bool camel = false;
        for (int e : l.edges)
            camel = camel || a.nodes[a.edges[e].to].kind == NodeKind::Camel;
        if (camel || l.passes_camel) continue;
        EnokiDecomposition d;
        d.edges = l.edges;
        out.push_back(std::move(d));
    }
    if (out.empty()) return out;

    // Block words per loop: cut after every edge arriving at base.
    std::vector<std::vector<BraidWord>> blocks(out.size());
    for (size_t i = 0; i < out.size(); ++i) {
        std::vector<int> cur;
        for (int e : out[i].edges) {
            cur.push_back(e);
            if (a.edges[e].to == base) {
                blocks[i].push_back(compose_loop(a, cur));
                cur.clear();
            }
        }
    }

    auto attempt = [&](const BraidWord& c) {
        std::vector<std::vector<std::vector<BetaFactor>>> found(out.size());
        for (size_t i = 0; i < out.size(); ++i)
            for (const auto& w : blocks[i]) {
                auto m = match_beta(conjugate(w, c), (int)w.size());
                if (!m) return false;
                found[i].push_back(*m);
            }
        for (size_t i = 0; i < out.size(); ++i) {
            out[i].conjugator = c;
            out[i].blocks = found[i];
            out[i].ok = true;
        }
        return true;
    };

    for (int len = 0; len <= max_conj; ++len) {
        std::vector<int> w;
        bool done = false;
        words_of_length(a.strands, len, w, [&] {
            if (!done) done = attempt(BraidWord(a.strands, w));
        });
        if (done) return out;
    }
    return out;  // ok stays false everywhere
}

}  // namespace fpf
