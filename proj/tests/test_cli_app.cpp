#include "fpf/acceptance.hpp"
#include "fpf/track.hpp"

#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace fpf;
namespace fs = std::filesystem;

TEST_SUITE("cli_app") {

TEST_CASE("fast criteria pass") {
    AcceptanceOptions o;
    o.only = {5, 9, 11};
    auto rep = run_acceptance(o);
    REQUIRE(rep.fixtures_ok);
    REQUIRE(rep.results.size() == 3);
    for (const auto& r : rep.results) {
        CAPTURE(r.line());
        CHECK(r.pass);
    }
}

TEST_CASE("mutated fixture is named as a disk_tracks failure") {
    fs::path tmp = fs::temp_directory_path() / "fpf-mutated-data";
    fs::remove_all(tmp);
    fs::copy(data_dir(), tmp, fs::copy_options::recursive);
    fs::path camel = tmp / "tracks" / "camel-r.trk";
    std::stringstream ss;
    ss << std::ifstream(camel).rdbuf();
    std::string text = ss.str();
    auto p = text.find("switch Vp p.t qp.h pg.t");
    REQUIRE(p != std::string::npos);
    text.replace(p, 23, "switch Vp p.t pg.t qp.h");
    std::ofstream(camel) << text;

    const char* old = std::getenv("FPF_DATA_DIR");
    std::string saved = old ? old : "";
    setenv("FPF_DATA_DIR", tmp.c_str(), 1);
    AcceptanceOptions o;
    o.only = {9};
    auto rep = run_acceptance(o);
    if (old)
        setenv("FPF_DATA_DIR", saved.c_str(), 1);
    else
        unsetenv("FPF_DATA_DIR");
    fs::remove_all(tmp);

    CHECK_FALSE(rep.fixtures_ok);
    CHECK_FALSE(rep.all_pass());
    REQUIRE_FALSE(rep.fixture_errors.empty());
    CHECK(rep.fixture_errors.front().rfind("disk_tracks: camel-r", 0) == 0);
}

}
