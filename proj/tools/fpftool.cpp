#include "fpf/acceptance.hpp"
#include "fpf/automaton.hpp"
#include "fpf/elimination.hpp"
#include "fpf/invariants.hpp"
#include "fpf/lift.hpp"
#include "fpf/search.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace fpf;
using nlohmann::json;

namespace {

struct Globals {
    uint64_t seed = 1;
    int jobs = 1;
};

int verify_paper(const Globals& g, int max_len, bool no_ablation) {
    AcceptanceOptions o;
    o.jobs = g.jobs;
    o.seed = g.seed;
    o.ablation = !no_ablation;
    if (max_len > 0) o.max_len = max_len;
    auto rep = run_acceptance(o);
    if (!rep.fixtures_ok) {
        for (const auto& e : rep.fixture_errors) std::cerr << e << "\n";
        return 2;
    }
    for (const auto& r : rep.results) std::cout << r.line() << std::endl;
    if (auto f = rep.first_failure()) {
        std::cerr << "first failing criterion: " << f->id << " " << f->name << "\n";
        return 1;
    }
    return 0;
}

json survivor_json(const Survivor& s, const std::string& match) {
    json j;
    j["match"] = match;
    j["rotation"] = s.rotation;
    j["map"] = s.map.str();
    j["fpf_untoggled"] = (bool)s.fpf_toggles[0];
    j["fpf_toggled"] = (bool)s.fpf_toggles[1];
    j["lifted_stratum"] = s.report.lifted_stratum.str();
    j["singularities"] = s.report.singularities.cycles();
    j["case"] = s.report.singularities.case_tag;
    IntMatrix M = transition_matrix(s.map);
    j["dilatation"] = dilatation(M).mid();
    return j;
}

struct SearchArgs {
    std::string track = "camel-r";
    int max_len = 16;
    int spiral = 2;
    long node_limit = 50'000'000;
    std::vector<std::string> disable;
    std::string bcd_case;
    std::string emit;
};

int search_cmd(const Globals& g, const SearchArgs& a) {
    SearchConfig c;
    c.track = std::make_shared<const Track>(named_track(a.track));
    c.max_image_length = a.max_len;
    c.spiral_bound = a.spiral;
    c.jobs = g.jobs;
    c.node_limit = a.node_limit;
    c.disabled_rules.insert(a.disable.begin(), a.disable.end());
    if (!a.bcd_case.empty()) {
        auto cases = bcd_cases(*c.track);
        if (!cases.count(a.bcd_case)) throw std::invalid_argument("unknown case " + a.bcd_case + " (b r p g y)");
        c.rotation_cases = cases[a.bcd_case];
    }
    auto o = run_search(c);
    std::cout << o.summary();
    auto names = match_candidates(o);
    for (size_t k = 0; k < o.survivors.size(); ++k) {
        const auto& s = o.survivors[k];
        std::cout << "\nsurvivor " << k << " (" << names[(int)k] << ", " << s.rotation << ")\n"
                  << s.map.str() << s.report.str() << "\n";
    }
    if (!a.emit.empty()) {
        json j;
        j["track"] = a.track;
        j["max_len"] = a.max_len;
        j["exhausted"] = o.exhausted;
        j["nodes"] = o.nodes;
        j["completions"] = o.completions;
        j["pruned"] = o.pruned_counts;
        j["rotations"] = o.rotations;
        j["seconds"] = o.seconds;
        j["survivors"] = json::array();
        for (size_t k = 0; k < o.survivors.size(); ++k)
            j["survivors"].push_back(survivor_json(o.survivors[k], names[(int)k]));
        if (a.emit == "-") {
            std::cout << j.dump(2) << "\n";
        } else {
            std::ofstream f(a.emit);
            if (!f) throw std::runtime_error("cannot write " + a.emit);
            f << j.dump(2) << "\n";
        }
    }
    return 0;
}

int automaton_cmd(int max_len, bool census) {
    Automaton a = stratum_automaton();
    std::cout << a.name << ": " << a.nodes.size() << " nodes, " << a.edges.size() << " edges\n";
    for (size_t e = 0; e < a.edges.size(); ++e) std::cout << "  " << a.edge_str((int)e) << "\n";
    for (const char* base : {"enoki-l", "enoki-r"}) {
        auto dec = decompose_enoki_loops(a, a.node_id(base), max_len);
        long ok = 0;
        for (const auto& d : dec) ok += d.ok;
        std::cout << base << ": " << ok << "/" << dec.size() << " camel-avoiding loops are beta(a,b) products";
        if (!dec.empty()) std::cout << " after conjugating by [" << dec[0].conjugator.str() << "]";
        std::cout << "\n";
        if (census)
            for (const auto& d : dec) std::cout << "    " << compose_loop(a, d.edges).str() << "  " << d.str() << "\n";
    }
    auto rep = camel_passage_check(a, max_len);
    std::cout << rep.str();
    if (census)
        for (const auto& l : loops(a, a.node_id("camel-r"), max_len)) {
            auto w = reducibility_witness(l.word);
            std::cout << "    camel-r " << l.word.str() << "  "
                      << (w ? (w->trivial ? "trivial" : "fixes " + w->standard) : "no standard curve") << "\n";
        }
    return rep.flagged.empty() ? 0 : 1;
}

int eliminate_cmd(const std::string& suite, const std::string& braid, int strands, long bound, bool report) {
    if (!braid.empty()) {
        Verdict v = eliminate_T35(BraidWord::parse(strands, braid), kDefaultOrder, true);
        std::cout << v.braid.str() << ": " << v.values() << " -> "
                  << (v.eliminated_by == Filter::None ? "not eliminated" : "eliminated by " + filter_name(v.eliminated_by))
                  << "\n";
        return 0;
    }
    std::vector<std::string> names = suite == "all" ? std::vector<std::string>{"2-34", "433", "6"}
                                                    : std::vector<std::string>{suite};
    bool ok = true;
    for (const auto& n : names) {
        auto s = run_theorem_suite(n, bound);
        if (report)
            std::cout << s.table();
        else
            std::cout << "suite " << n << ": " << s.admissible << " admissible, " << s.survivors << " not eliminated\n";
        ok = ok && s.ok();
    }
    return ok ? 0 : 1;
}

int invariants_cmd(const std::string& word, int strands) {
    BraidWord b = BraidWord::parse(strands, word);
    int comps = cycle_count(strand_permutation(b));
    std::cout << "braid        " << b.str() << " (" << b.n << " strands)\n"
              << "components   " << comps << "\n"
              << "determinant  " << determinant_of_closure(b) << "\n"
              << "self-linking " << self_linking(b) << "\n";
    if (comps == 1) std::cout << "alexander    " << alexander_of_closure(b).str() << "\n";
    if (b.n % 2 == 1) {
        auto p = double_cover_alexander(b);
        std::cout << "double cover " << p.str() << "  (lspace coefficients " << lspace_coefficient_check(p) << ")\n";
    }
    auto g = dilatation_estimate(b, 200);
    std::cout << "growth       " << (g.growing ? std::to_string(g.rate) : "none (periodic or reducible)") << "\n";
    return 0;
}

int lift_check_cmd(const std::string& map_file, const std::string& track) {
    auto t = std::make_shared<const Track>(named_track(track));
    std::vector<std::pair<std::string, TrackMap>> maps;
    if (!map_file.empty()) {
        std::ifstream f(map_file);
        if (!f) throw std::runtime_error("cannot read " + map_file);
        std::stringstream ss;
        ss << f.rdbuf();
        maps.emplace_back(map_file, parse_trackmap(t, ss.str()));
    } else {
        for (int i = 1; i <= 3; ++i) maps.emplace_back("beta" + std::to_string(i), candidate_map(i, t));
    }
    for (const auto& [name, m] : maps) {
        std::cout << "== " << name << "\n" << m.str();
        for (auto e : check_legal(m)) std::cout << "  illegal: " << e << "\n";
        for (bool toggle : {false, true}) std::cout << fpf_verdict(m, toggle).str() << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"fixed-point-free braid search and elimination"};
    app.require_subcommand(1);
    Globals g;
    app.add_option("--seed", g.seed, "seed for randomised checks");
    app.add_option("--jobs", g.jobs, "worker threads")->check(CLI::PositiveNumber);

    auto* vp = app.add_subcommand("verify-paper", "run the acceptance battery");
    int vp_len = 0;
    bool vp_noabl = false;
    vp->add_option("--max-len", vp_len, "override the search bounds");
    vp->add_flag("--no-ablation", vp_noabl, "skip the ablation runs");

    auto* sc = app.add_subcommand("search", "train-track map search");
    SearchArgs sa;
    sc->add_option("--track", sa.track, "camel-r, camel-l, jellyfish, ...");
    sc->add_option("--max-len", sa.max_len, "image length bound")->check(CLI::PositiveNumber);
    sc->add_option("--spiral", sa.spiral, "spiral bound (P4)");
    sc->add_option("--node-limit", sa.node_limit, "per-rotation node cap");
    sc->add_option("--disable", sa.disable, "pruning rules to switch off (P1..P6)");
    sc->add_option("--case", sa.bcd_case, "restrict to a swapped case: b r p g y");
    sc->add_option("--emit", sa.emit, "write survivors as JSON ('-' for stdout)");

    auto* au = app.add_subcommand("automaton", "folding automaton loops");
    int au_len = 8;
    bool census = false;
    au->add_option("--max-len", au_len, "loop length bound");
    au->add_flag("--census", census, "list every loop");

    auto* el = app.add_subcommand("eliminate", "T(3,5) elimination suites");
    std::string suite = "all", braid;
    int el_strands = 5;
    long bound = kDefaultFdtcBound;
    bool report = false;
    el->add_option("--suite", suite, "2-34, 433, 6 or all")->check(CLI::IsMember({"2-34", "433", "6", "all"}));
    el->add_option("--braid", braid, "single braid word instead of a suite");
    el->add_option("--strands", el_strands, "strands for --braid");
    el->add_option("--fdtc-bound", bound, "admit |c| < bound");
    el->add_flag("--report", report, "print the candidate table");

    auto* iv = app.add_subcommand("invariants", "closure invariants of a braid word");
    std::string word;
    int iv_strands = 5;
    iv->add_option("word", word, "e.g. \"(1 2)^5\"")->required();
    iv->add_option("--strands", iv_strands, "strand count");

    auto* lc = app.add_subcommand("lift-check", "double-cover verdicts for train-track maps");
    std::string map_file, lc_track = "camel-r";
    lc->add_option("--map", map_file, "map file (\"r -> b o\" lines); default: the three candidates");
    lc->add_option("--track", lc_track, "track the map lives on");

    CLI11_PARSE(app, argc, argv);
    try {
        if (*vp) return verify_paper(g, vp_len, vp_noabl);
        if (*sc) return search_cmd(g, sa);
        if (*au) return automaton_cmd(au_len, census);
        if (*el) return eliminate_cmd(suite, braid, el_strands, bound, report);
        if (*iv) return invariants_cmd(word, iv_strands);
        if (*lc) return lift_check_cmd(map_file, lc_track);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
