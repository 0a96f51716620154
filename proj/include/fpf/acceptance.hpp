#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace fpf {

struct AcceptanceOptions {
    std::optional<int> max_len;  // replaces the 12/16/20 search bounds
    int jobs = 1;
    uint64_t seed = 1;
    bool ablation = true;  // the ablation runs dominate the runtime
    std::vector<int> only;  // criterion ids; empty = all
};

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0;
    std::string line() const;  // "[PASS]  3 camel-search  (0.9 s)  ..."
};

struct AcceptanceReport {
    bool fixtures_ok = true;
    std::vector<std::string> fixture_errors;  // prefixed "disk_tracks: "
    std::vector<CriterionResult> results;
    bool all_pass() const;
    std::optional<CriterionResult> first_failure() const;
};

AcceptanceReport run_acceptance(const AcceptanceOptions& opt);

}  // namespace fpf
