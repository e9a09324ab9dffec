#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "brach/cli.hpp"

using namespace brach;
namespace fs = std::filesystem;

namespace {

int run(std::vector<std::string> args)
{
    args.insert(args.begin(), "brach");
    std::vector<char*> argv;
    for (auto& a : args) argv.push_back(a.data());
    return run_cli(static_cast<int>(argv.size()), argv.data());
}

fs::path scratch(const std::string& name)
{
    const fs::path dir = fs::temp_directory_path() / "brach_cli_test" / name;
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

std::string slurp(const fs::path& p)
{
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST_CASE("grid parsing")
{
    const auto g = parse_grid("0:pi:64");
    CHECK(g.size() == 64);
    CHECK(g.front() == 0.0);
    CHECK(g.back() == std::numbers::pi);
    const auto h = parse_grid("-pi/2:2*pi:5");
    CHECK(h.size() == 5);
    CHECK(h.front() == doctest::Approx(-std::numbers::pi / 2));
    CHECK(h.back() == doctest::Approx(2 * std::numbers::pi));
    CHECK(parse_grid("1:1:1") == std::vector<double>{1.0});
    CHECK_THROWS_AS(parse_grid("0:1"), std::invalid_argument);
    CHECK_THROWS_AS(parse_grid("0:1:0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_grid("a:1:3"), std::invalid_argument);
    CHECK(parse_angle("pi") == std::numbers::pi);
    CHECK(parse_angle("0.25") == 0.25);
}

TEST_CASE("input errors write nothing")
{
    const fs::path dir = scratch("input");
    const fs::path out = dir / "mass.json";
    CHECK(run({"classify-mass", "--rep", "majorana", "--out", out.string()}) == kExitInput);
    CHECK_FALSE(fs::exists(out));
    CHECK(run({"classify-mass", "--rep", "weyl", "--m", "1", "--out", out.string()}) == kExitInput);
    CHECK_FALSE(fs::exists(out));
    CHECK(run({"compton", "--rep", "gamma", "--m", "-1", "--omega1", "1", "--out", (dir / "c.csv").string()}) ==
          kExitInput);
    CHECK_FALSE(fs::exists(dir / "c.csv"));
    CHECK(run({"no-such-command"}) == kExitInput);
}

TEST_CASE("mass classification")
{
    const fs::path dir = scratch("mass");
    CHECK(run({"classify-mass", "--rep", "majorana", "--m", "1", "--px", "1", "--py", "1", "--pz", "1", "--out",
               (dir / "maj.json").string()}) == kExitPass);
    const auto maj = nlohmann::json::parse(slurp(dir / "maj.json"));
    CHECK(maj["verdict"] == "ROTATING");
    CHECK(maj["schema_version"] == "1");
    CHECK(std::abs(maj["phase_rate"].get<double>() - maj["expected_rate"].get<double>()) < 1e-6);

    CHECK(run({"classify-mass", "--rep", "dirac", "--m", "1", "--px", "1", "--py", "1", "--pz", "1", "--out",
               (dir / "dirac.json").string()}) == kExitPass);
    CHECK(nlohmann::json::parse(slurp(dir / "dirac.json"))["verdict"] == "CONSTANT");
}

TEST_CASE("algebra verdicts")
{
    const fs::path dir = scratch("algebra");
    CHECK(run({"verify-algebra", "--rep", "dirac", "--out", (dir / "d.json").string()}) == kExitPass);
    const auto d = nlohmann::json::parse(slurp(dir / "d.json"));
    CHECK(d["verdict"] == "PASS");
    CHECK(run({"verify-algebra", "--rep", "majorana", "--out", (dir / "m.json").string()}) != kExitInput);
    CHECK(fs::exists(dir / "m.json"));
}

TEST_CASE("compton table")
{
    const fs::path dir = scratch("compton");
    CHECK(run({"compton", "--rep", "majorana", "--m", "1", "--omega1", "1", "--theta-grid", "0:pi:5", "--out",
               (dir / "c.csv").string()}) == kExitPass);
    std::istringstream in(slurp(dir / "c.csv"));
    std::string line;
    std::getline(in, line);
    CHECK(line == "theta,omega2,residual_energy,residual_matrix_max");
    int rows = 0;
    while (std::getline(in, line)) ++rows;
    CHECK(rows == 5);
}

TEST_CASE("default output directory")
{
    const fs::path dir = scratch("env");
    ::setenv(kOutDirEnv, dir.c_str(), 1);
    CHECK(run({"angmom", "--nx", "0.5", "--lyz", "1.2", "--t", "0.3"}) == kExitPass);
    ::unsetenv(kOutDirEnv);
    CHECK(fs::exists(dir / "angmom.json"));
    const auto j = nlohmann::json::parse(slurp(dir / "angmom.json"));
    CHECK(j["command"] == "angmom");
}

TEST_CASE("frames and evolve")
{
    const fs::path dir = scratch("frames");
    CHECK(run({"frames", "--m", "1", "--px", "0.3", "--t", "0.7", "--seed", "3", "--out", (dir / "f.json").string()}) ==
          kExitPass);
    CHECK(run({"evolve", "--system", "majorana", "--m", "1", "--px", "0.5", "--t-end", "0.1", "--step", "0.01",
               "--out", (dir / "t.csv").string()}) == kExitPass);
    std::istringstream in(slurp(dir / "t.csv"));
    std::string header;
    std::getline(in, header);
    CHECK(header.rfind("t,c_", 0) == 0);
}
