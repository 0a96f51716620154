#include "fpf/search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <mutex>
#include <sstream>
#include <thread>

namespace fpf {

namespace {

int polygon_of_vertex(const Track& t, int sw) {
    auto polys = t.polygon_faces();
    for (size_t k = 0; k < polys.size(); ++k)
        for (int v : t.polygon_vertices(polys[k]))
            if (v == sw) return (int)k;
    return -1;
}

std::string rotation_label(const Track& t, const std::vector<int>& vm) {
    std::string s;
    for (size_t v = 0; v < vm.size(); ++v) {
        if (vm[v] < 0) continue;
        if (!s.empty()) s += ' ';
        s += t.switches[v].name + ">" + t.switches[vm[v]].name;
    }
    return s;
}

}  // namespace

std::vector<Rotation> enumerate_rotations(const Track& t) {
    std::vector<Rotation> out;
    for (const auto& vm : polygon_maps(t)) {
        bool ok = true;
        for (int e : t.real_edges()) {
            if (!is_monogon_edge(t, e)) continue;
            int v = t.edges[e].tail;
            // a fixed vertex whose only real germ is e makes f(e) start with e
            if (vm[v] == v && t.real_germs(v).size() == 1) ok = false;
        }
        if (!ok) continue;
        Rotation r;
        r.vmap = vm;
        for (size_t v = 0; v < vm.size(); ++v)
            if (vm[v] >= 0 && polygon_of_vertex(t, (int)v) != polygon_of_vertex(t, vm[v])) r.swapped = true;
        r.label = rotation_label(t, vm);
        out.push_back(std::move(r));
    }
    return out;
}

std::vector<std::string> rotations_where(const Track& t, const std::string& image, const std::string& vertex) {
    int d = -1;
    for (int e : t.real_edges())
        if (!is_monogon_edge(t, e)) d = e;
    if (d < 0) return {};
    int src = image == "~d" ? t.edges[d].head : t.edges[d].tail;
    int e = t.edge_id(vertex);
    if (e < 0) throw std::invalid_argument("unknown edge " + vertex);
    int target = e == d ? t.edges[d].tail : t.edges[e].tail;
    std::vector<std::string> out;
    for (const auto& r : enumerate_rotations(t))
        if (r.swapped && r.vmap[src] == target) out.push_back(r.label);
    return out;
}

std::map<std::string, std::vector<std::string>> bcd_cases(const Track& t) {
    std::map<std::string, std::vector<std::string>> out;
    out["b"] = rotations_where(t, "~d", "b");
    out["r"] = rotations_where(t, "~d", "r");
    auto at_d = rotations_where(t, "~d", "d");
    for (const char* v : {"p", "g", "y"}) {
        auto w = rotations_where(t, "d", v);
        std::vector<std::string> both;
        for (const auto& l : w)
            if (std::find(at_d.begin(), at_d.end(), l) != at_d.end()) both.push_back(l);
        out[v] = both;
    }
    return out;
}

namespace {

struct Cand {
    Letter l;
    bool complete = false;
    int sign = 1;
    int length = 0;
    bool over = false;  // legal but beyond max_image_length
    int toggle_mask = 3;
    PassageList pass;
};

Cand cand(Letter l, bool complete = false, int sign = 1) {
    Cand c;
    c.l = l;
    c.complete = complete;
    c.sign = sign;
    return c;
}

struct Img {
    int edge;
    bool mono;
    std::vector<Letter> letters;
    bool complete = false;
    int sign = 1;
    int length = 0;
    int monos = 0;
    PassageList pass;
};

class Searcher {
public:
    Searcher(const SearchConfig& cfg, const Rotation& rot) : cfg_(cfg), t_(*cfg.track), rot_(rot) {
        for (int e : t_.real_edges()) {
            Img im;
            im.edge = e;
            im.mono = is_monogon_edge(t_, e);
            img_.push_back(im);
            if (!im.mono && d_edge_ < 0) d_edge_ = e;
        }
        used_.assign(t_.edges.size(), 0);
        nbrs_.assign(t_.switches.size(), {});
        for (size_t e = 0; e < t_.edges.size(); ++e) {
            if (t_.is_real((int)e)) continue;
            int a = t_.edges[e].tail, b = t_.edges[e].head;
            if (a != b && rot_.vmap[a] >= 0 && rot_.vmap[b] >= 0) {
                nbrs_[a].push_back(b);
                nbrs_[b].push_back(a);
            }
        }
        for (auto& n : nbrs_) {
            std::sort(n.begin(), n.end());
            n.erase(std::unique(n.begin(), n.end()), n.end());
        }
        // polygons mapped to themselves must move their lifts to the other sheet
        toggle_mask_ = 3;
        if (on("P6")) {
            int base = d_edge_ >= 0 ? polygon_of_vertex(t_, t_.edges[d_edge_].tail) : 0;
            auto polys = t_.polygon_faces();
            if (!polys.empty()) {
                int v = t_.polygon_vertices(polys[base]).front();
                if (polygon_of_vertex(t_, rot_.vmap[v]) == base) toggle_mask_ = 2;
                if (d_edge_ >= 0) {
                    int h = t_.edges[d_edge_].head;
                    head_fixed_ = polygon_of_vertex(t_, rot_.vmap[h]) == polygon_of_vertex(t_, h);
                }
            }
        }
    }

    void run() {
        std::vector<std::vector<Cand>> lists(img_.size());
        for (size_t k = 0; k < img_.size(); ++k) lists[k] = generate(k);
        dfs(lists);
    }

    std::map<std::string, long> counts;
    std::vector<Survivor> survivors;
    long nodes = 0, completions = 0;
    bool exhausted = true;

private:
    const SearchConfig& cfg_;
    const Track& t_;
    const Rotation& rot_;
    std::vector<Img> img_;
    std::vector<char> used_;
    std::vector<std::vector<int>> nbrs_;
    int d_edge_ = -1;
    int toggle_mask_ = 3;
    bool head_fixed_ = false;

    bool on(const char* rule) const { return !cfg_.disabled_rules.count(rule); }

    int end_vertex(const Img& im) const {
        if (im.letters.empty()) return rot_.vmap[t_.edges[im.edge].tail];
        const Letter& l = im.letters.back();
        if (l.dec == Dec::Plus || l.dec == Dec::Minus || l.dec == Dec::Terminal) return t_.edges[l.edge].tail;
        return letter_ends(t_, l).end_sw;
    }

    // A lap is a pass through a directed corridor point: once around a marked point in
    // a fixed direction (X+ or X-) or across a d-type edge in a fixed direction.  An image
    // that passes the same point spiral_bound times has gone around a corridor cycle.
    bool spiral(const std::vector<Letter>& L) const {
        const Letter& last = L.back();
        if (last.dec == Dec::Terminal) return false;
        return std::count(L.begin(), L.end(), last) >= cfg_.spiral_bound;
    }

    // Cheap constraints that depend on the global state (terminals, toggles).
    bool admissible(const Img& im, Cand& c) {
        c.toggle_mask = toggle_mask_;
        if (c.l.dec == Dec::Terminal && im.mono && used_[c.l.edge]) {
            ++counts["P1"];
            return false;
        }
        if (!im.mono && c.l.edge == im.edge && on("P1")) {
            // a d occurrence after q swaps is a fixed lift unless q + s_L is odd
            int need = (im.monos + 1) & 1;
            c.toggle_mask &= 1 << need;
            if (!c.toggle_mask) {
                ++counts["P1"];
                return false;
            }
        }
        if (!im.mono && c.complete && head_fixed_ && on("P6")) {
            int monos = im.monos + (c.l.dec == Dec::Terminal ? 1 : 0);
            int need = 1 ^ (monos & 1);  // s_R = toggle + monos must be 1
            c.toggle_mask &= 1 << need;
            if (!c.toggle_mask) {
                ++counts["P6"];
                return false;
            }
        }
        return true;
    }

    std::vector<Cand> generate(size_t k) {
        const Img& im = img_[k];
        std::vector<Cand> out;
        if (im.complete) return out;
        const int W_end = im.mono ? -1 : rot_.vmap[t_.edges[im.edge].head];
        std::vector<int> from;
        if (im.letters.empty())
            from.push_back(rot_.vmap[t_.edges[im.edge].tail]);
        else
            from = nbrs_[end_vertex(im)];
        std::vector<Cand> raw;
        for (int V : from)
            for (int g : t_.real_germs(V)) {
                int x = germ_edge(g);
                if (is_monogon_edge(t_, x)) {
                    raw.push_back(cand({x, Dec::Plus}));
                    raw.push_back(cand({x, Dec::Minus}));
                    if (im.mono)
                        raw.push_back(cand({x, Dec::Terminal}, true));
                    else if (V == W_end) {
                        raw.push_back(cand({x, Dec::Terminal}, true, 1));
                        raw.push_back(cand({x, Dec::Terminal}, true, -1));
                    }
                } else {
                    Letter l{x, g == tail_germ(x) ? Dec::Plain : Dec::Bar};
                    raw.push_back(cand(l));
                    if (!im.mono && letter_ends(t_, l).end_sw == W_end) raw.push_back(cand(l, true));
                }
            }
        for (auto& c : raw) {
            if (im.mono && c.l.edge == im.edge && on("P1")) {
                ++counts["P1"];
                continue;
            }
            if (!admissible(im, c)) continue;
            std::vector<Letter> L = im.letters;
            L.push_back(c.l);
            DecoratedPath p{L};
            c.length = path_length(t_, im.edge, p);
            auto pl = expand(t_, rot_.vmap, im.edge, p, c.complete, c.sign);
            if (!pl) {
                ++counts["P3"];
                continue;
            }
            c.pass = std::move(*pl);
            if (on("P3")) {
                bool bad = paths_cross(t_, c.pass, c.pass, true);
                for (size_t j = 0; j < img_.size() && !bad; ++j)
                    if (j != k && !img_[j].letters.empty()) bad = paths_cross(t_, c.pass, img_[j].pass, false);
                if (bad) {
                    ++counts["P3"];
                    continue;
                }
            }
            if (on("P4") && spiral(L)) {
                ++counts["P4"];
                continue;
            }
            c.over = c.length > cfg_.max_image_length;
            out.push_back(std::move(c));
        }
        return out;
    }

    // Re-filter image j's candidates after image k changed.
    std::vector<Cand> refilter(size_t j, const std::vector<Cand>& old, size_t k) {
        std::vector<Cand> out;
        const Img& im = img_[j];
        for (const auto& c0 : old) {
            Cand c = c0;
            if (!admissible(im, c)) continue;
            if (on("P3") && paths_cross(t_, c.pass, img_[k].pass, false)) {
                ++counts["P3"];
                continue;
            }
            out.push_back(std::move(c));
        }
        return out;
    }

    void dfs(std::vector<std::vector<Cand>>& lists) {
        if (++nodes > cfg_.node_limit) {
            if (exhausted) ++counts["node_limit"];
            exhausted = false;
            return;
        }
        // choose the most constrained incomplete image; images whose only continuations
        // exceed the length bound are frozen while the others are tried
        int best = -1, best_n = 1 << 30;
        bool any_open = false;
        for (size_t k = 0; k < img_.size(); ++k) {
            if (img_[k].complete) continue;
            any_open = true;
            int within = 0;
            for (const auto& c : lists[k]) within += !c.over;
            if (lists[k].empty() && on("P5")) {
                ++counts["P5"];
                return;
            }
            if (within == 0) continue;
            if (!on("P5")) {  // plain left-to-right order
                if (best < 0) best = (int)k, best_n = within;
                continue;
            }
            if (within < best_n) best = (int)k, best_n = within;
        }
        if (!any_open) {
            complete();
            return;
        }
        if (best < 0) {
            ++counts["bound"];
            exhausted = false;
            return;
        }
        Img& im = img_[best];
        const auto cands = lists[best];
        for (const auto& c : cands) {
            if (c.over) {
                ++counts["bound"];
                exhausted = false;
                continue;
            }
            // apply
            Img saved = im;
            int saved_mask = toggle_mask_;
            im.letters.push_back(c.l);
            im.complete = c.complete;
            im.sign = c.sign;
            im.length = c.length;
            if (is_monogon_edge(t_, c.l.edge)) ++im.monos;
            im.pass = c.pass;
            toggle_mask_ = c.toggle_mask;
            if (c.complete && im.mono) used_[c.l.edge] = 1;
            std::vector<std::vector<Cand>> next(img_.size());
            for (size_t j = 0; j < img_.size(); ++j)
                next[j] = (int)j == best ? generate(j) : refilter(j, lists[j], best);
            dfs(next);
            if (c.complete && im.mono) used_[c.l.edge] = 0;
            toggle_mask_ = saved_mask;
            im = saved;
            if (nodes > cfg_.node_limit) return;
        }
    }

    void complete() {
        ++completions;
        TrackMap m;
        m.track = cfg_.track;
        for (const auto& im : img_) m.images[im.edge] = DecoratedPath{im.letters};
        auto fail = [&](const std::string& why) { ++counts["verdict:" + why]; };
        if (!check_legal(m).empty()) return fail("illegal");
        IntMatrix M = transition_matrix(m);
        if (cfg_.require_pf && !is_perron_frobenius(M)) return fail("not_pf");
        if (cfg_.require_unimodular && !weight_space_unimodular(m)) return fail("not_unimodular");
        Survivor s;
        s.map = m;
        s.rotation = rot_.label;
        bool any = false;
        for (bool tg : {false, true}) {
            LiftReport r = fpf_verdict(m, tg);
            s.fpf_toggles.push_back(r.fpf);
            if (r.fpf && !any) {
                s.report = r;
                any = true;
            }
        }
        if (!any) return fail("not_fpf");
        for (const auto& o : survivors)
            if (o.map == m) return;  // the other closing sign
        survivors.push_back(std::move(s));
    }
};

}  // namespace

SearchOutcome run_search(const SearchConfig& cfg) {
    if (!cfg.track) throw std::invalid_argument("search needs a track");
    if (cfg.max_image_length <= 0 || cfg.spiral_bound <= 0) throw std::invalid_argument("bounds must be positive");
    auto t0 = std::chrono::steady_clock::now();
    std::vector<Rotation> rots;
    if (cfg.disabled_rules.count("P2")) {
        for (const auto& vm : polygon_maps(*cfg.track)) {
            Rotation r;
            r.vmap = vm;
            r.label = rotation_label(*cfg.track, vm);
            rots.push_back(r);
        }
    } else {
        rots = enumerate_rotations(*cfg.track);
    }
    if (cfg.rotation_cases) {
        std::vector<Rotation> keep;
        for (auto& r : rots)
            if (std::find(cfg.rotation_cases->begin(), cfg.rotation_cases->end(), r.label) !=
                cfg.rotation_cases->end())
                keep.push_back(r);
        rots = keep;
    }
    struct Result {
        std::map<std::string, long> counts;
        std::vector<Survivor> survivors;
        long nodes = 0, completions = 0;
        bool exhausted = true;
    };
    std::vector<Result> results(rots.size());
    std::atomic<size_t> next{0};
    auto worker = [&] {
        for (size_t i; (i = next++) < rots.size();) {
            Searcher s(cfg, rots[i]);
            s.run();
            results[i] = {s.counts, s.survivors, s.nodes, s.completions, s.exhausted};
        }
    };
    int jobs = std::max(1, std::min<int>(cfg.jobs, (int)rots.size()));
    std::vector<std::thread> pool;
    for (int j = 1; j < jobs; ++j) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();

    SearchOutcome o;
    for (size_t i = 0; i < rots.size(); ++i) {
        o.rotations.push_back(rots[i].label);
        for (auto& [k, v] : results[i].counts) o.pruned_counts[k] += v;
        for (auto& s : results[i].survivors) o.survivors.push_back(std::move(s));
        o.nodes += results[i].nodes;
        o.completions += results[i].completions;
        o.exhausted = o.exhausted && results[i].exhausted;
    }
    std::sort(o.survivors.begin(), o.survivors.end(),
              [](const Survivor& a, const Survivor& b) { return a.map < b.map; });
    o.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return o;
}

std::string SearchOutcome::summary() const {
    std::ostringstream os;
    os << "rotations: " << rotations.size() << "\n";
    os << "nodes: " << nodes << "\ncompletions: " << completions << "\n";
    os << "survivors: " << survivors.size() << "\n";
    os << "exhausted: " << (exhausted ? "yes" : "no") << "\n";
    for (const auto& [k, v] : pruned_counts) os << "  " << k << " " << v << "\n";
    return os.str();
}

std::string candidate_map_text(int i) {
    static const char* shared = "p -> y o\nd -> r- b- d p- g o\n";
    switch (i) {
        case 1: return std::string("r -> b o\nb -> d p o\ng -> p+ ~d b+ r o\ny -> g o\n") + shared;
        case 2: return std::string("r -> b o\nb -> d p- g o\ng -> p o\ny -> g+ p+ ~d b+ r o\n") + shared;
        case 3: return std::string("r -> b- d p- g o\nb -> d p o\ng -> p+ ~d b o\ny -> g+ p+ ~d b+ r o\n") + shared;
    }
    throw std::out_of_range("candidates are numbered 1..3");
}

TrackMap candidate_map(int i, std::shared_ptr<const Track> camel_r) {
    return parse_trackmap(std::move(camel_r), candidate_map_text(i));
}

std::map<int, std::string> match_candidates(const SearchOutcome& o) {
    std::map<int, std::string> out;
    for (size_t k = 0; k < o.survivors.size(); ++k) {
        const TrackMap& m = o.survivors[k].map;
        out[(int)k] = "unknown";
        for (int i = 1; i <= 3; ++i)
            if (m == candidate_map(i, m.track)) out[(int)k] = "beta" + std::to_string(i);
    }
    return out;
}

}  // namespace fpf
