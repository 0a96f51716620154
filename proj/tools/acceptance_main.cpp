// One line per acceptance criterion; exit status is nonzero on the first failure.
#include "fpf/acceptance.hpp"

#include <CLI11.hpp>

#include <iostream>

int main(int argc, char** argv) {
    CLI::App app{"fpf acceptance battery"};
    fpf::AcceptanceOptions opt;
    int max_len = 0;
    bool no_ablation = false;
    app.add_option("--max-len", max_len, "override the search bounds (12/16/20)");
    app.add_option("--jobs", opt.jobs, "search threads")->check(CLI::PositiveNumber);
    app.add_option("--seed", opt.seed, "seed for the random property suites");
    app.add_option("--only", opt.only, "criterion ids to run")->check(CLI::Range(1, 12));
    app.add_flag("--no-ablation", no_ablation, "skip the pruning-rule ablation runs");
    CLI11_PARSE(app, argc, argv);
    if (max_len > 0) opt.max_len = max_len;
    opt.ablation = !no_ablation;

    auto rep = fpf::run_acceptance(opt);
    if (!rep.fixtures_ok) {
        for (const auto& e : rep.fixture_errors) std::cout << e << "\n";
        std::cout << "FAIL: fixture validation (disk_tracks)\n";
        return 2;
    }
    for (const auto& r : rep.results) std::cout << r.line() << std::endl;
    if (auto f = rep.first_failure()) {
        std::cout << "first failing criterion: " << f->id << " " << f->name << "\n";
        return 1;
    }
    std::cout << "all " << rep.results.size() << " criteria pass\n";
    return 0;
}
