#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "cli.hpp"
#include "crosscalc/path_io.hpp"
#include "fixtures.hpp"

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    args.insert(args.begin(), "crosscalc");
    std::ostringstream out, err;
    const int code = crosscalc::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name) { return (std::filesystem::temp_directory_path() / name).string(); }

std::string slurp(const std::string& file) {
    std::ifstream in(file);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST_CASE("tv prints a variation summary") {
    const std::string file = temp_file("crosscalc_cli_zigzag.csv");
    crosscalc::save_path(fixtures::zigzag3(), file);
    const auto r = run({"tv", "--in", file});
    CHECK(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["tv"].get<double>() == 3.0);
    CHECK(j["utv"].get<double>() == 2.0);
    CHECK(j["dtv"].get<double>() == 1.0);
    CHECK(run({"tv", "--in", file}).out == r.out);
    CHECK(run({"tv", "--gen", "zigzag:3"}).out == r.out);
    std::remove(file.c_str());
}

TEST_CASE("verify banind1 end to end") {
    const std::string file = temp_file("crosscalc_cli_mixed.csv");
    crosscalc::save_path(fixtures::random_path(12), file);
    const auto r = run({"verify", "--identity", "banind1", "--f", "poly:0,1", "--in", file});
    CHECK(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["identity"] == "banind1");
    CHECK(j["pass"] == true);
    CHECK(j["rhs"].size() == 3);
    CHECK(j["residuals"].size() == 3);
    std::remove(file.c_str());
}

TEST_CASE("profile written to a file") {
    const std::string file = temp_file("crosscalc_cli_prof.csv");
    const auto r = run({"profile", "--gen", "zigzag:3", "--out", file});
    CHECK(r.code == 0);
    CHECK(r.out.empty());
    CHECK(slurp(file) ==
          "z_lo,z_hi,up,down,jump_up,jump_down\n0.0000000000000000e+00,1.0000000000000000e+00,2,1,0,0\n");
    std::remove(file.c_str());
}

TEST_CASE("crossings, stats and truncate") {
    auto j = nlohmann::json::parse(run({"crossings", "--gen", "zigzag:3", "--level", "0.5", "--corridor", "0.4"}).out);
    CHECK(j["up"] == 2);
    CHECK(j["down"] == 1);
    j = nlohmann::json::parse(run({"crossings", "--gen", "zigzag:3", "--level", "0.5"}).out);
    CHECK(j["total"] == 3);
    j = nlohmann::json::parse(run({"stats", "--gen", "zigzag:2", "--level", "1"}).out);
    CHECK(j["r"] == 1);
    CHECK(j["card_I"] == 0);
    j = nlohmann::json::parse(run({"stats", "--gen", "step:3:1", "--level", "5"}).out);
    CHECK(j["indicatrix_n"] == 0);
    const auto t = run({"truncate", "--gen", "zigzag:3", "--c", "0.4"});
    CHECK(t.code == 0);
    const auto p = crosscalc::read_path_csv(t.out);
    CHECK(p.horizon() == 3.0);
    CHECK(run({"truncate", "--gen", "zigzag:3", "--c", "0"}).code == 1);
}

TEST_CASE("window flags") {
    const auto j = nlohmann::json::parse(run({"tv", "--gen", "zigzag:3", "--s", "1", "--t", "2"}).out);
    CHECK(j["tv"].get<double>() == 1.0);
    CHECK(j["dtv"].get<double>() == 1.0);
}

TEST_CASE("oracle kinds") {
    auto j = nlohmann::json::parse(
        run({"oracle", "--kind", "crossings", "--gen", "zigzag:3", "--level", "0.5", "--corridor", "0.4"}).out);
    CHECK(j["exact"]["up"] == 2);
    CHECK(j["oracle"]["up"] == 2);
    j = nlohmann::json::parse(run({"oracle", "--kind", "stieltjes", "--gen", "zigzag:3", "--f", "poly:0,1",
                                   "--variant", "abs", "--points", "30000"})
                                  .out);
    CHECK(std::fabs(j["exact"].get<double>() - 1.5) <= 1e-12);
    CHECK(std::fabs(j["difference"].get<double>()) <= 1e-3);
    j = nlohmann::json::parse(
        run({"oracle", "--kind", "levelint", "--gen", "zigzag:3", "--selector", "total", "--samples", "1000"}).out);
    CHECK(std::fabs(j["exact"].get<double>() - 3.0) <= 1e-12);
    CHECK(run({"oracle", "--kind", "bogus", "--gen", "zigzag:3"}).code == 1);
}

TEST_CASE("gen emits a path that re-ingests identically") {
    const auto r = run({"gen", "--family", "counterexample", "--n", "4"});
    CHECK(r.code == 0);
    const auto p = crosscalc::read_path_csv(r.out);
    CHECK(p == crosscalc::generate({crosscalc::Family::Counterexample, 4, 1, 1.0}));
    const std::string file = temp_file("crosscalc_cli_gen.json");
    CHECK(run({"gen", "--family", "mixed", "--n", "12", "--seed", "5", "--out", file}).code == 0);
    CHECK(crosscalc::load_path(file) == crosscalc::generate({crosscalc::Family::MixedJumpLinear, 12, 5, 1.0}));
    std::remove(file.c_str());
}

TEST_CASE("exit codes") {
    CHECK(run({}).code == 1);
    CHECK(run({"frobnicate"}).code == 1);
    CHECK(run({"tv"}).code == 1);
    CHECK(run({"tv", "--in", "/nonexistent.csv"}).code == 1);
    CHECK(run({"verify", "--identity", "nope", "--gen", "zigzag:3"}).code == 1);
    CHECK(run({"verify", "--identity", "ito", "--f", "sign", "--gen", "zigzag:3"}).code == 1);
    CHECK(run({"verify", "--identity", "tanaka", "--gen", "zigzag:3"}).code == 1);
    CHECK(run({"--help"}).code == 0);

    // A zero tolerance turns rounding-level residuals into failures.
    const auto strict = run({"verify", "--identity", "banind1", "--f", "poly:0,1", "--gen", "mixed:20:7", "--tol", "0"});
    const auto j = nlohmann::json::parse(strict.out);
    CHECK(j["pass"] == false);
    CHECK(strict.code == 2);
    CHECK(run({"verify", "--identity", "banind1", "--f", "poly:0,1", "--gen", "mixed:20:7"}).code == 0);
}

TEST_CASE("tolerance from the environment") {
    const std::vector<std::string> args{"verify", "--identity", "banind1", "--f", "poly:0,1", "--gen", "mixed:20:7"};
    setenv("CROSSCALC_TOL", "0", 1);
    CHECK(run(args).code == 2);
    setenv("CROSSCALC_TOL", "1e-6", 1);
    auto r = run(args);
    CHECK(r.code == 0);
    CHECK(nlohmann::json::parse(r.out)["tolerance"].get<double>() == 1e-6);
    setenv("CROSSCALC_TOL", "abc", 1);
    CHECK(run(args).code == 1);
    unsetenv("CROSSCALC_TOL");
}

TEST_CASE("verification sweeps") {
    const auto r = run({"verify", "--identity", "tm2", "--f", "sign", "--sweep", "40", "--seed", "9", "--jobs", "2"});
    CHECK(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["instances"] == 40);
    CHECK(j["passed"] == 40);
    CHECK(run({"verify", "--identity", "tm2", "--f", "sign", "--sweep", "40", "--seed", "9", "--jobs", "1"}).out ==
          r.out);
    const auto t = run({"verify", "--identity", "tanaka", "--sweep", "30", "--seed", "2"});
    CHECK(t.code == 0);
    // sqrtplus violates the bounded-g hypothesis of tm2 for paths crossing 0.
    const auto bad = run({"verify", "--identity", "tm2", "--f", "sqrtplus", "--sweep", "20", "--seed", "1"});
    CHECK(bad.code == 2);
    CHECK(nlohmann::json::parse(bad.out)["errors"].get<int>() > 0);
}
