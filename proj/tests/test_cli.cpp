#include "doctest.h"

#include "cli.hpp"
#include "json.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace {

struct Run {
    int status;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int status = branchlab::cli::run(args, out, err);
    return {status, out.str(), err.str()};
}

} // namespace

TEST_SUITE("cli") {

TEST_CASE("G2 > A2 [3,2], all methods") {
    const auto r = run({"branch", "--algebra", "G2", "--subalgebra", "A2", "--weight", "3,2", "--method", "all"});
    CHECK(r.status == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["agree"] == true);
    CHECK(j["rows"].size() == 27);
    for (const auto& m : {"splint", "fan", "oracle"}) CHECK(j["methods"][m]["dim_check"] == true);
}

TEST_CASE("C3 splint exits with the unsupported status") {
    const auto r = run({"branch", "--algebra", "C3", "--subalgebra", "A1+A1+A1", "--weight", "1,0,0", "--method", "splint"});
    CHECK(r.status == 3);
    CHECK(r.err.find("unsupported") != std::string::npos);
    CHECK(run({"compare", "-a", "C3", "-s", "A1+A1+A1", "-w", "1,0,0"}).status == 0);
}

TEST_CASE("trivial character") {
    const auto r = run({"character", "--algebra", "A2", "--weight", "0,0"});
    CHECK(r.status == 0);
    const auto j = nlohmann::json::parse(r.out);
    REQUIRE(j["terms"].size() == 1);
    CHECK(j["terms"][0]["coeff"] == 1);
    CHECK(j["dimension"] == 1);
}

TEST_CASE("invalid configurations") {
    CHECK(run({"character", "--algebra", "A2", "--weight", "1"}).status == 2);
    CHECK(run({"character", "--algebra", "A2", "--weight", "1,-1"}).status == 2);
    CHECK(run({"character", "--algebra", "Q2", "--weight", "1,1"}).status == 2);
    CHECK(run({"branch", "--algebra", "B2", "--subalgebra", "A2", "--weight", "1,1"}).status == 2);
    CHECK(run({"branch", "--algebra", "B2", "--subalgebra", "A1+u1", "--weight", "1,1", "--method", "magic"}).status == 2);
    CHECK(run({"frobnicate"}).status == 2);
    CHECK(run({}).status == 2);
    CHECK(run({"character", "-a", "B3", "-w", "1,1,1", "-f", "diagram"}).status == 2);
    CHECK(run({"--help"}).status == 0);
}

TEST_CASE("config files drive fan and oracle, not splint") {
    const auto path = std::filesystem::temp_directory_path() / "branchlab_cli_test_config.json";
    {
        std::ofstream f(path);
        f << R"({"algebra": "B3", "kept_simple": [1, 2]})";
    }
    const auto all = run({"compare", "--config", path.string(), "--weight", "1,1,0"});
    CHECK(all.status == 0);
    const auto j = nlohmann::json::parse(all.out);
    CHECK(j["agree"] == true);
    CHECK(j["methods"]["splint"]["status"] == "refused");
    CHECK(run({"branch", "--config", path.string(), "--weight", "1,1,0", "--method", "splint"}).status == 2);
    CHECK(run({"branch", "--config", path.string(), "--weight", "1,1,0", "--method", "fan"}).status == 0);
    CHECK(run({"branch", "--config", "/nonexistent/branchlab.json", "--weight", "1,1,0"}).status == 2);
    std::filesystem::remove(path);
}

TEST_CASE("byte-identical output across runs and thread counts") {
    const std::vector<std::string> compare{"compare", "-a", "B2", "-s", "A1+u1", "-w", "3,2", "--no-timings"};
    CHECK(run(compare).out == run(compare).out);
    const auto one = run({"bench", "-a", "A3", "-s", "A2+u1", "--max-label", "1", "--no-timings", "--threads", "1"});
    const auto four = run({"bench", "-a", "A3", "-s", "A2+u1", "--max-label", "1", "--no-timings", "--threads", "4"});
    CHECK(one.status == 0);
    CHECK(one.out == four.out);
    CHECK(one.out.rfind("case\tmethod\tms\trows\tdim_check\n", 0) == 0);
    for (const char* fmt : {"json", "tsv", "diagram"}) {
        const std::vector<std::string> args{"branch", "-a", "G2", "-s", "A2", "-w", "2,1", "-m", "fan", "-f", fmt};
        CHECK(run(args).out == run(args).out);
    }
}

TEST_CASE("rank-2 diagrams") {
    const auto r = run({"character", "-a", "A2", "-w", "1,1", "-f", "diagram"});
    CHECK(r.status == 0);
    CHECK(r.out.find('2') != std::string::npos);
    const auto b = run({"branch", "-a", "B2", "-s", "A1+u1", "-w", "3,2", "-m", "splint", "-f", "diagram"});
    CHECK(b.status == 0);
    CHECK(b.out.find('3') != std::string::npos);
}

TEST_CASE("other commands") {
    CHECK(run({"roots", "-a", "F4"}).status == 0);
    CHECK(run({"roots", "-a", "G2", "-f", "diagram"}).status == 0);
    CHECK(run({"fan", "-a", "G2", "-s", "A2", "-f", "tsv"}).status == 0);
    const auto check = run({"splint-check", "-f", "json"});
    CHECK(check.status == 0);
    CHECK(nlohmann::json::parse(check.out)["rows"].size() == 11);
}

TEST_CASE("output directory") {
    const auto dir = std::filesystem::temp_directory_path() / "branchlab_cli_out";
    std::filesystem::remove_all(dir);
    setenv("BRANCHLAB_OUT_DIR", dir.c_str(), 1);
    const auto r = run({"character", "-a", "A2", "-w", "1,0"});
    unsetenv("BRANCHLAB_OUT_DIR");
    CHECK(r.status == 0);
    const auto file = dir / "character_A2_1_0.json";
    REQUIRE(std::filesystem::exists(file));
    std::ifstream f(file);
    std::stringstream ss;
    ss << f.rdbuf();
    CHECK(ss.str() == r.out);
    std::filesystem::remove_all(dir);
}

}
