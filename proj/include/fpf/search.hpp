#pragma once

#include "fpf/lift.hpp"
#include "fpf/trackmap.hpp"

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace fpf {

struct Rotation {
    std::vector<int> vmap;  // switch -> switch on polygon vertices, -1 elsewhere
    bool swapped = false;   // some polygon goes to a different polygon
    std::string label;      // "Vr>Vb Vb>Vd ..."
};

// Polygon maps that do not force a marked-monogon edge to start its own image.
std::vector<Rotation> enumerate_rotations(const Track& t);

// Pruning rules:
//   P1 trace condition (self-occurrences, d-parity, terminal bijection)
//   P2 rotation consistency (only rotations from enumerate_rotations)
//   P3 germ order: partial images may not cross
//   P4 spiral: an image ending in spiral_bound consecutive copies of a block is cut
//   P5 absorption: a node dies as soon as any image has no legal continuation
//   P6 closing parity: f(d) closes only where the sheet shifts allow an FPF lift
struct SearchConfig {
    std::shared_ptr<const Track> track;
    int max_image_length = 16;
    int spiral_bound = 2;
    bool require_pf = true;
    bool require_unimodular = true;
    std::optional<std::vector<std::string>> rotation_cases;  // restrict to these labels
    std::set<std::string> disabled_rules;                    // e.g. {"P4"} for ablation
    int jobs = 1;
    long node_limit = 50'000'000;  // per rotation; hitting it marks the outcome non-exhausted
};

struct Survivor {
    TrackMap map;
    std::string rotation;
    std::vector<bool> fpf_toggles;  // [untoggled, full-twist toggled]
    LiftReport report;              // for the first FPF toggle
};

struct SearchOutcome {
    std::vector<Survivor> survivors;  // sorted by map
    std::map<std::string, long> pruned_counts;  // P1..P6, bound, verdict:*
    bool exhausted = true;
    long nodes = 0;
    long completions = 0;
    std::vector<std::string> rotations;
    double seconds = 0;
    std::string summary() const;
};

SearchOutcome run_search(const SearchConfig& cfg);

// Swapped-polygon rotations under which f(~d) (image "~d") or f(d) (image "d") starts
// where the letter `vertex` starts.
std::vector<std::string> rotations_where(const Track& t, const std::string& image, const std::string& vertex);
// The five swapped cases on the Camel: f(~d) starts at b or r ("b", "r"), or at d with
// f(d) starting at p, g or y ("p", "g", "y").  Values are rotation labels.
std::map<std::string, std::vector<std::string>> bcd_cases(const Track& t);

// The three candidate image sets on camel-r; f(p) and f(d) are shared.
std::string candidate_map_text(int i);  // i = 1, 2, 3
TrackMap candidate_map(int i, std::shared_ptr<const Track> camel_r);
std::map<int, std::string> match_candidates(const SearchOutcome& o);  // survivor index -> "beta1".."unknown"

}  // namespace fpf
