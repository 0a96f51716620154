#include "fpf/acceptance.hpp"
#include "fpf/automaton.hpp"
#include "fpf/elimination.hpp"
#include "fpf/fdtc.hpp"
#include "fpf/invariants.hpp"
#include "fpf/lift.hpp"
#include "fpf/search.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>

namespace fpf {

std::string CriterionResult::line() const {
    char head[96];
    std::snprintf(head, sizeof head, "[%s] %2d %-22s (%.1f s)", pass ? "PASS" : "FAIL", id, name.c_str(), seconds);
    return std::string(head) + "  " + detail;
}

bool AcceptanceReport::all_pass() const {
    return fixtures_ok && std::all_of(results.begin(), results.end(), [](const auto& r) { return r.pass; });
}

std::optional<CriterionResult> AcceptanceReport::first_failure() const {
    for (const auto& r : results)
        if (!r.pass) return r;
    return std::nullopt;
}

namespace {

using Clock = std::chrono::steady_clock;

CriterionResult start(int id, std::string name, bool pass = false) {
    CriterionResult r;
    r.id = id;
    r.name = std::move(name);
    r.pass = pass;
    return r;
}

std::vector<int> search_bounds(const AcceptanceOptions& o) {
    if (o.max_len) return {*o.max_len};
    return {12, 16, 20};
}

std::shared_ptr<const Track> shared_track(const std::string& name) {
    return std::make_shared<const Track>(named_track(name));
}

SearchOutcome search(const std::string& track, int len, const AcceptanceOptions& o,
                     std::set<std::string> disabled = {}, long node_limit = 50'000'000) {
    SearchConfig c;
    c.track = shared_track(track);
    c.max_image_length = len;
    c.jobs = o.jobs;
    c.disabled_rules = std::move(disabled);
    c.node_limit = node_limit;
    return run_search(c);
}

std::string survivor_names(const SearchOutcome& s) {
    std::vector<std::string> names;
    for (auto& [k, v] : match_candidates(s)) names.push_back(v);
    std::sort(names.begin(), names.end());
    std::string out;
    for (auto& v : names) out += (out.empty() ? "" : ",") + v;
    return out.empty() ? "-" : out;
}

// --- 1 ---------------------------------------------------------------------------
// Filtering by even boundary prongs yields eight strata, not the five listed.  The three extras each carry a singularity of unique prong count
// (hence fixed), so they are reported as "fixed" rather than silently dropped.
CriterionResult strata(const AcceptanceOptions&) {
    auto r = start(1, "strata");
    const std::vector<std::string> listed{"(2;∅;3^4)", "(2;∅;4^2)", "(4;∅;3^2)", "(4;∅;4)", "(6;∅;∅)"};
    auto all = enumerate_strata(2, 1, 0, even_boundary_prongs);
    std::vector<std::string> got, lift;
    for (const auto& s : all) {
        got.push_back(s.str());
        if (hyperelliptic_lift_compatible(s)) lift.push_back(s.str());
    }
    std::vector<std::string> want = listed;
    std::sort(want.begin(), want.end());
    std::vector<std::string> sorted = got;
    std::sort(sorted.begin(), sorted.end());
    r.pass = sorted == want;
    std::ostringstream d;
    d << got.size() << " strata (expected 5):";
    for (auto& s : got) d << " " << s;
    d << "; lift-compatible " << lift.size() << "; extras with a forced fixed singularity:";
    for (const auto& s : all) {
        if (std::find(want.begin(), want.end(), s.str()) != want.end()) continue;
        std::map<int, int> c;
        for (int p : s.interior) ++c[p];
        bool unique = std::any_of(c.begin(), c.end(), [](auto& kv) { return kv.second == 1; });
        d << " " << s.str() << (unique ? "=fixed" : "=open");
    }
    r.detail = d.str();
    return r;
}

// --- 2, 3 ------------------------------------------------------------------------
CriterionResult jellyfish(const AcceptanceOptions& o) {
    auto r = start(2, "jellyfish-search", true);
    std::ostringstream d;
    for (int len : search_bounds(o)) {
        auto s = search("jellyfish", len, o);
        bool ok = s.survivors.empty() && s.exhausted;
        r.pass = r.pass && ok;
        d << "len " << len << ": " << s.survivors.size() << " survivors, "
          << (s.exhausted ? "exhausted" : "bound (" + std::to_string(s.pruned_counts["bound"]) + " cuts)")
          << ", " << s.nodes << " nodes; ";
    }
    r.detail = d.str();
    return r;
}

CriterionResult camel(const AcceptanceOptions& o) {
    auto r = start(3, "camel-search", true);
    std::ostringstream d;
    for (int len : search_bounds(o)) {
        auto s = search("camel-r", len, o);
        std::string names = survivor_names(s);
        r.pass = r.pass && names == "beta1,beta2,beta3";
        d << "len " << len << ": " << names << (s.exhausted ? " exhausted" : " (bound cuts " +
             std::to_string(s.pruned_counts["bound"]) + ")") << "; ";
    }
    r.detail = d.str();
    return r;
}

// --- 4 ---------------------------------------------------------------------------
CriterionResult bcd(const AcceptanceOptions& o) {
    auto r = start(4, "case-bcd", true);
    auto t = shared_track("camel-r");
    std::ostringstream d;
    auto cases = bcd_cases(*t);
    r.pass = cases.size() == 5;
    for (auto& [name, rots] : cases) {
        SearchConfig c;
        c.track = t;
        c.max_image_length = o.max_len.value_or(16);
        c.rotation_cases = rots;
        c.jobs = o.jobs;
        auto s = run_search(c);
        r.pass = r.pass && !rots.empty() && s.survivors.empty() && s.exhausted;
        d << name << ": " << rots.size() << " rot, " << s.survivors.size() << " surv"
          << (s.exhausted ? "" : " (bound)") << "; ";
    }
    r.detail = d.str();
    return r;
}

// --- 5 ---------------------------------------------------------------------------
CriterionResult candidates(const AcceptanceOptions&) {
    auto r = start(5, "candidate-verification", true);
    auto t = shared_track("camel-r");
    std::ostringstream d;
    for (int i = 1; i <= 3; ++i) {
        TrackMap m = candidate_map(i, t);
        IntMatrix M = transition_matrix(m);
        bool pf = is_perron_frobenius(M);
        double lam = dilatation(M).mid();
        auto est = dilatation_estimate(beta_i(i), 200);
        bool close = est.growing && std::fabs(lam - est.rate) < 1e-3;
        bool plain = fpf_verdict(m, false).fpf, twisted = fpf_verdict(m, true).fpf;
        auto sing = lifted_singularity_permutation(m, false);
        bool four = sing.fixed.size() == 4;
        r.pass = r.pass && pf && close && !plain && twisted && four;
        char buf[160];
        std::snprintf(buf, sizeof buf, "b%d: pf=%d lam=%.6f est=%.6f fpf=%d/%d fixed=%zu; ", i, pf, lam,
                      est.rate, plain, twisted, sing.fixed.size());
        d << buf;
    }
    r.detail = d.str();
    return r;
}

// --- 6, 7, 8 -----------------------------------------------------------------------
CriterionResult suite_2_34(const AcceptanceOptions&) {
    auto r = start(6, "suite-2-34");
    auto s = run_theorem_suite("2-34");
    std::set<std::string> dets;
    bool ok = s.ok();
    for (const auto& v : s.verdicts) {
        if (v.eliminated_by == Filter::FdtcBound || !v.fdtc_nonzero) continue;
        std::ostringstream x;
        x << v.det;
        dets.insert(x.str());
        ok = ok && v.det != kDetT35 && (v.det == 5 || v.det == 9);
    }
    r.pass = ok && dets == std::set<std::string>{"5", "9"};
    std::ostringstream d;
    d << s.admissible << " within bound, " << s.survivors << " not eliminated; dets of c != 0 candidates:";
    for (auto& x : dets) d << " " << x;
    r.detail = d.str();
    return r;
}

CriterionResult suite_433(const AcceptanceOptions&) {
    auto r = start(7, "suite-433", true);
    std::ostringstream d;
    for (int n = 0; n <= 10; ++n) {
        BigInt det = determinant_of_closure(beta_n(n));
        int sl = self_linking(compose(BraidWord::full_twist(5), beta_n(n)));
        if (det != n + 7 || sl != 25 + n) {
            r.pass = false;
            d << "n=" << n << " det=" << det << " sl=" << sl << "; ";
        }
    }
    auto s = run_theorem_suite("433");
    r.pass = r.pass && s.ok();
    d << "det(beta_n)=n+7, sl(D^2 beta_n)=25+n for n=0..10; " << s.admissible << " admissible, "
      << s.survivors << " not eliminated";
    r.detail = d.str();
    return r;
}

CriterionResult suite_6(const AcceptanceOptions&) {
    auto r = start(8, "suite-6");
    BigInt det = determinant_of_closure(alpha_braid());
    auto s = run_theorem_suite("6");
    r.pass = det == 3 && s.ok() && s.admissible >= 4;
    std::ostringstream d;
    d << "det(alpha)=" << det << "; " << s.admissible << " admissible, " << s.survivors << " not eliminated";
    r.detail = d.str();
    return r;
}

// --- 9 ---------------------------------------------------------------------------
CriterionResult alexander(const AcceptanceOptions&) {
    auto r = start(9, "alexander-pipeline");
    auto p = double_cover_alexander(BraidWord::parse(5, "(1 2 3 4)^3"));
    bool eq = p == LaurentPoly::from_coeffs({1, -1, 1, -1, 1});
    bool ls = lspace_coefficient_check(p), irr = is_irreducible_quartic(p);
    BigInt det = determinant_of_closure(BraidWord::parse(3, "(1 2)^5"));
    r.pass = eq && ls && irr && det == 1;
    std::ostringstream d;
    d << "double cover poly " << p.str() << ", lspace=" << ls << ", irreducible=" << irr
      << ", det T(3,5)=" << det;
    r.detail = d.str();
    return r;
}

// --- 10 --------------------------------------------------------------------------
CriterionResult automaton(const AcceptanceOptions&) {
    auto r = start(10, "automaton", true);
    Automaton a = stratum_automaton();
    std::ostringstream d;
    for (const char* base : {"enoki-l", "enoki-r"}) {
        auto dec = decompose_enoki_loops(a, a.node_id(base), 8);
        long ok = std::count_if(dec.begin(), dec.end(), [](auto& x) { return x.ok; });
        r.pass = r.pass && ok == (long)dec.size() && !dec.empty();
        d << base << ": " << ok << "/" << dec.size() << " loops decompose";
        if (!dec.empty()) d << " (conjugator [" << dec[0].conjugator.str() << "])";
        d << "; ";
    }
    int witnessed = 0;
    for (int x = 0; x <= 3; ++x)
        for (int y = 0; y <= 3; ++y) {
            auto w = beta_ab_witness(x, y);
            witnessed += w && w->split_fixes && w->beta_fixes;
        }
    r.pass = r.pass && witnessed == 16;
    auto rep = camel_passage_check(a, 8);
    r.pass = r.pass && rep.flagged.empty();
    d << witnessed << "/16 beta(a,b) fix the {2,4} curve; passage check " << rep.loops << " loops, "
      << rep.flagged.size() << " flagged";
    r.detail = d.str();
    return r;
}

// --- 11 --------------------------------------------------------------------------
CriterionResult lift_calculus(const AcceptanceOptions&) {
    auto r = start(11, "lift-calculus", true);
    std::ostringstream d;
    const std::pair<const char*, const char*> corr[] = {
        {"(1;1^5;4)", "(2;∅;4^2)"}, {"(1;1^5;3^2)", "(2;∅;3^4)"}, {"(3;1^5;∅)", "(6;∅;∅)"}};
    for (auto [from, to] : corr) {
        std::string got = lift_stratum(Stratum::parse(from)).str();
        r.pass = r.pass && got == to;
        d << from << "->" << got << "; ";
    }
    long bad = 0, checked = 0;
    for (int i = 1; i <= 3; ++i)
        for (const auto& c : twist_family(beta_i(i), "b", beta_i_base(), 3)) {
            ++checked;
            bad += c.c != make_fdtc(c.k);
        }
    for (int n : {0, 5})
        for (const auto& c : twist_family(beta_n(n), "b", beta_n_base(), 3)) {
            ++checked;
            bad += c.c != make_fdtc(2 * c.k + c.sign, 2);
        }
    r.pass = r.pass && bad == 0;
    d << checked << " FDTC values checked, " << bad << " wrong";
    r.detail = d.str();
    return r;
}

// --- 12 --------------------------------------------------------------------------
BraidWord random_word(std::mt19937_64& rng, int n, int len) {
    std::uniform_int_distribution<int> gen(1, n - 1), sgn(0, 1);
    std::vector<int> w;
    for (int i = 0; i < len; ++i) w.push_back(sgn(rng) ? gen(rng) : -gen(rng));
    return BraidWord(n, w);
}

std::string relations_and_roundtrip(uint64_t seed, bool& ok) {
    std::mt19937_64 rng(seed);
    long fails = 0;
    for (int trial = 0; trial < 1000; ++trial) {
        int n = 3 + trial % 4;
        BraidWord w = random_word(rng, n, 1 + trial % 15);
        int i = 1 + (int)(rng() % (n - 2));
        auto with = [&](std::vector<int> tail) {
            auto l = w.letters;
            l.insert(l.end(), tail.begin(), tail.end());
            return BraidWord(n, l);
        };
        bool rel = braids_equal(with({i, i + 1, i}), with({i + 1, i, i + 1}), 4, rng());
        if (i + 2 < n) rel = rel && braids_equal(with({i, i + 2}), with({i + 2, i}), 4, rng());
        rel = rel && braids_equal(compose(w, w.inverse()), BraidWord::identity(n), 4, rng());
        auto x = test_laminations(n, 1, rng()).back();
        bool back = dynnikov_apply(w.inverse(), dynnikov_apply(w, x)) == x;
        fails += !(rel && back);
    }
    ok = fails == 0;
    return "1000 random words: " + std::to_string(fails) + " relation/roundtrip failures; ";
}

std::string multiplicativity(bool& ok) {
    auto t = shared_track("camel-r");
    std::vector<TrackMap> maps;
    for (int i = 1; i <= 3; ++i) maps.push_back(candidate_map(i, t));
    int good = 0;
    for (const auto& f : maps)
        for (const auto& g : maps)
            good += transition_matrix(compose_maps(f, g)) == transition_matrix(g) * transition_matrix(f);
    ok = good == 9;
    return "M(f.g) = M(g)M(f) on " + std::to_string(good) + "/9 candidate pairs; ";
}

std::string ablation(const AcceptanceOptions& o, bool& ok) {
    ok = true;
    int len = o.max_len.value_or(16);
    auto base = search("camel-r", len, o);
    std::ostringstream d;
    d << "ablation at len " << len << ":";
    for (const char* rule : {"P1", "P2", "P4", "P5", "P6"}) {
        auto s = search("camel-r", len, o, {rule});
        bool same = s.survivors.size() == base.survivors.size();
        for (size_t k = 0; same && k < s.survivors.size(); ++k) same = s.survivors[k].map == base.survivors[k].map;
        ok = ok && same;
        d << " " << rule << (same ? " sound" : " EXTRA") << " (" << s.seconds << " s, " << s.nodes << " nodes)";
    }
    // Without P3 the search does not finish; run it under a node limit and check that
    // every completion it reaches is rejected by a verdict.
    auto s = search("jellyfish", 12, o, {"P3"}, 3'000'000);
    long rejected = 0;
    for (auto& [k, v] : s.pruned_counts)
        if (k.rfind("verdict:", 0) == 0) rejected += v;
    ok = ok && s.survivors.empty();
    d << " P3 (jellyfish, 3M-node cap): " << s.completions << " completions, " << rejected
      << " rejected by verdicts, " << s.survivors.size() << " survivors";
    return d.str();
}

CriterionResult properties(const AcceptanceOptions& o) {
    auto r = start(12, "property-suites");
    bool a = false, b = false, c = true;
    r.detail = relations_and_roundtrip(o.seed, a) + multiplicativity(b);
    if (o.ablation)
        r.detail += ablation(o, c);
    else
        r.detail += "ablation skipped";
    r.pass = a && b && c;
    return r;
}

}  // namespace

AcceptanceReport run_acceptance(const AcceptanceOptions& opt) {
    AcceptanceReport rep;
    for (const auto& name : named_track_names()) {
        try {
            for (const auto& e : validate(named_track(name))) rep.fixture_errors.push_back("disk_tracks: " + name + ": " + e);
        } catch (const std::exception& e) {
            rep.fixture_errors.push_back("disk_tracks: " + name + ": " + e.what());
        }
    }
    rep.fixtures_ok = rep.fixture_errors.empty();
    if (!rep.fixtures_ok) return rep;

    using Fn = CriterionResult (*)(const AcceptanceOptions&);
    const std::pair<const char*, Fn> all[] = {
        {"strata", strata},           {"jellyfish-search", jellyfish},
        {"camel-search", camel},      {"case-bcd", bcd},
        {"candidate-verification", candidates}, {"suite-2-34", suite_2_34},
        {"suite-433", suite_433},     {"suite-6", suite_6},
        {"alexander-pipeline", alexander}, {"automaton", automaton},
        {"lift-calculus", lift_calculus}, {"property-suites", properties}};
    for (int i = 0; i < 12; ++i) {
        int id = i + 1;
        if (!opt.only.empty() && std::find(opt.only.begin(), opt.only.end(), id) == opt.only.end()) continue;
        auto t0 = Clock::now();
        auto r = start(id, all[i].first);
        try {
            r = all[i].second(opt);
        } catch (const std::exception& e) {
            r.pass = false;
            r.detail = std::string("exception: ") + e.what();
        }
        r.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
        rep.results.push_back(r);
    }
    return rep;
}

}  // namespace fpf
