#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "hypersub/cli.hpp"

namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = hypersub::run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch() {
  auto dir = fs::temp_directory_path() / "hypersub_cli_test";
  fs::create_directories(dir);
  return dir;
}

std::string simulated(const std::string& name, const std::string& seed, const std::string& m) {
  auto path = (scratch() / name).string();
  auto r = run({"simulate", "--m", m, "--seed", seed, "--alpha", "2", "--out", path});
  REQUIRE(r.code == 0);
  return path;
}

}  // namespace

TEST_CASE("count on a small file") {
  auto path = (scratch() / "small.txt").string();
  std::ofstream(path) << "# two hyperedges\n1 2 3\n1 2\n";
  auto r = run({"count", path, "--pattern", "twostar2"});
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["estimate"] == 2.0);
  CHECK(j["m"] == 2);
  CHECK(j["statistic"] == "colored_frequency");
  auto c = nlohmann::json::parse(run({"count", path, "--pattern", "triangle", "--r", "2"}).out);
  CHECK(c["estimate"] == 2.0);
  auto u = nlohmann::json::parse(run({"count", path, "--unique-k", "2"}).out);
  CHECK(u["estimate"] == 1.0);
  auto f = nlohmann::json::parse(run({"count", path, "--pattern", "twostar2", "--filter-d", "2"}).out);
  CHECK(f["filter_d"] == 2);
  auto ids = (scratch() / "ids.tsv").string();
  CHECK(run({"count", path, "--statistic", "clustering-type2", "--export-ids", ids}).code == 0);
  std::ifstream in(ids);
  std::string first;
  std::getline(in, first);
  CHECK(first == "0\t1");
}

TEST_CASE("errors are reported with a nonzero exit") {
  auto r = run({"count", "/nonexistent/file.txt", "--pattern", "twostar2"});
  CHECK(r.code != 0);
  CHECK(r.err.find("error") != std::string::npos);
  CHECK(run({"count"}).code != 0);
  CHECK(run({"stability", "--pattern", "triangle3", "--alpha", "2"}).code != 0);
  CHECK(run({"frobnicate"}).code != 0);
}

TEST_CASE("infer output schema") {
  auto path = simulated("infer.txt", "4", "300");
  auto r = run({"infer", path, "--pattern", "twostar2", "--incomplete", "auto", "--subsamples", "100", "--seed", "2"});
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  for (auto key : {"statistic", "pattern", "m", "estimate", "lambda_hat", "ci", "level", "config"})
    CHECK(j.contains(key));
  CHECK(j["ci"].size() == 2);
  CHECK(j["config"]["N_sub"] == 100);
  CHECK(j["config"]["C"] == 1.5);
  CHECK(j["level"] == 0.95);
}

TEST_CASE("compare emits four ratios") {
  auto a = simulated("net_a.txt", "1", "300");
  auto b = simulated("net_b.txt", "2", "300");
  auto r = run({"compare", a, b, "--split", "0.2", "--split-seed", "3", "--subsamples", "50"});
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  REQUIRE(j["ratios"].size() == 4);
  CHECK(j["networks"][0]["m_selection"] == 60);
  CHECK(j["networks"][0]["m_inference"] == 240);
  for (const auto& row : j["ratios"]) CHECK(row["ci"].size() == 2);
}

TEST_CASE("stability report") {
  auto r = run({"stability", "--pattern", "triangle3", "--alpha", "4", "--min-degree", "2", "--n1", "3"});
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["override"]["beta_exact"] == "3/4");
  CHECK(j["beta_exact"] == "1");
  CHECK(j["triangle_threshold"]["exact"] == "1/4");
  auto e = nlohmann::json::parse(run({"stability", "--pattern", "triangle2", "--decay", "exponential", "--alpha", "1.5"}).out);
  CHECK(e["triangle_threshold"]["exact"] == "1/3");
  auto frac = nlohmann::json::parse(run({"stability", "--pattern", "twostar2", "--alpha", "17/2"}).out);
  CHECK(frac["alpha"] == 8.5);
}

TEST_CASE("coverage subcommand writes csv") {
  auto csv = (scratch() / "cov.csv").string();
  auto r = run({"coverage", "--m", "100", "--reps", "3", "--subsamples", "20", "--C-grid", "1.0,2.0", "--n-vertices",
                "100", "--calibration-m", "2000", "--calibration-tuples", "2000", "--csv", csv});
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["cells"].size() == 2);
  std::ifstream in(csv);
  std::string header;
  std::getline(in, header);
  CHECK(header == "m,C,coverage,reps,seed");
}

TEST_CASE("json flag writes to a file") {
  auto out = (scratch() / "out.json").string();
  auto r = run({"stability", "--pattern", "triangle3", "--json", out});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream in(out);
  CHECK(nlohmann::json::parse(in)["pattern"] == "triangle3");
}
