#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <sys/wait.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;
};

// Runs the built binary through the shell, capturing stdout (plus whatever
// the redirections in `args` route there).
RunResult run_cli(const std::string& args, const std::string& env = "") {
  RunResult result;
  const std::string cmd =
      (env.empty() ? "" : env + " ") + std::string(ETH2GAME_CLI_PATH) + " " +
      args;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) return result;
  char buf[4096];
  std::size_t got = 0;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0)
    result.output.append(buf, got);
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("rewards table reports the base reward") {
  const RunResult r = run_cli("rewards 2>&1");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("base_reward") != std::string::npos);
  CHECK(r.output.find("505.96") != std::string::npos);
  CHECK(r.output.find("# manifest") != std::string::npos);
}

TEST_CASE("rewards json carries manifest and exact values") {
  const RunResult r = run_cli("rewards --format json 2>/dev/null");
  REQUIRE(r.exit_code == 0);
  const auto j = nlohmann::json::parse(r.output);
  CHECK(j["manifest"]["subcommand"] == "rewards");
  CHECK(j["manifest"]["config_path"].is_null());
  CHECK(j["manifest"]["out_path"].is_null());
  const double br = j["rewards"]["base_reward"]["gwei"].get<double>();
  CHECK(std::abs(br - 505.96) < 0.01);
  const std::string exact =
      j["rewards"]["attester_penalty"]["exact"].get<std::string>();
  CHECK(exact.find('/') != std::string::npos);
  CHECK(j["manifest"]["config"]["game_core"]["n_agents"] == 4);
}

TEST_CASE("rewards csv has one row per metric") {
  const RunResult r = run_cli("rewards --format csv 2>/dev/null");
  REQUIRE(r.exit_code == 0);
  CHECK(r.output.rfind("metric,gwei,exact", 0) == 0);
  int rows = 0;
  std::istringstream is(r.output);
  std::string line;
  while (std::getline(is, line))
    if (!line.empty() && line[0] != '#' && line.rfind("metric,", 0) != 0)
      ++rows;
  CHECK(rows == 17);
}

TEST_CASE("equilibrium verdicts for the default game") {
  const RunResult r = run_cli("equilibrium --format json 2>/dev/null");
  REQUIRE(r.exit_code == 0);
  const auto j = nlohmann::json::parse(r.output);
  CHECK(j["report"]["bne_verdict"] == true);
  CHECK(j["report"]["dominance_verdict"] == true);
  CHECK(j["report"]["strict"] == true);
  CHECK(j["report"]["cases"].size() == 11);
  CHECK(j["report"]["best_responses"].size() == 4);

  const RunResult table = run_cli("equilibrium 2>&1");
  CHECK(table.exit_code == 0);
  CHECK(table.output.find("dominance") != std::string::npos);

  const RunResult brute =
      run_cli("equilibrium --mode brute --n-agents 3 --format json 2>/dev/null");
  REQUIRE(brute.exit_code == 0);
  const auto bj = nlohmann::json::parse(brute.output);
  CHECK(bj["report"]["mode"] == "brute");
  CHECK(bj["report"]["n_agents"] == 3);
  CHECK(bj["manifest"]["config"]["equilibrium"]["mode"] == "brute");
}

TEST_CASE("simulate is deterministic and honors its flags") {
  const RunResult a =
      run_cli("simulate --epochs 5 --seed 9 --format json 2>/dev/null");
  const RunResult b =
      run_cli("simulate --epochs 5 --seed 9 --format json 2>/dev/null");
  REQUIRE(a.exit_code == 0);
  CHECK(a.output == b.output);
  const auto j = nlohmann::json::parse(a.output);
  CHECK(j["simulation"]["epochs"] == 5);
  CHECK(j["manifest"]["seed"] == 9);
  CHECK(j["simulation"]["agents"].size() == 4);

  const RunResult c =
      run_cli("simulate --epochs 5 --seed 10 --format json 2>/dev/null");
  REQUIRE(c.exit_code == 0);
  CHECK(nlohmann::json::parse(c.output)["manifest"]["seed"] == 10);
  CHECK(c.output != a.output);

  // Without --seed the configured default applies.
  const RunResult d = run_cli("simulate --epochs 2 --format json 2>/dev/null");
  REQUIRE(d.exit_code == 0);
  CHECK(nlohmann::json::parse(d.output)["manifest"]["seed"] == 42);
}

TEST_CASE("simulate writes a trace file on request") {
  namespace fs = std::filesystem;
  const fs::path trace = fs::temp_directory_path() / "eth2game_trace.csv";
  const RunResult r = run_cli("simulate --epochs 3 --seed 4 --trace " +
                              trace.string() + " 2>/dev/null");
  REQUIRE(r.exit_code == 0);
  const std::string text = slurp(trace);
  CHECK(text.rfind("epoch,finalized,leak_active", 0) == 0);
  int rows = 0;
  std::istringstream is(text);
  std::string line;
  std::getline(is, line);  // header
  while (std::getline(is, line))
    if (!line.empty() && line[0] != '#') ++rows;
  CHECK(rows == 3);
  fs::remove(trace);
}

TEST_CASE("sweep renders one row per grid point") {
  const RunResult r = run_cli(
      "sweep --axis cost_per_epoch --grid 0,1000,2000 --format csv "
      "2>/dev/null");
  REQUIRE(r.exit_code == 0);
  CHECK(r.output.rfind("value,min_gap_gwei", 0) == 0);
  int rows = 0;
  std::istringstream is(r.output);
  std::string line;
  std::getline(is, line);
  while (std::getline(is, line))
    if (!line.empty() && line[0] != '#') ++rows;
  CHECK(rows == 3);

  const RunResult j = run_cli(
      "sweep --axis gamma_threshold --grid 1/4,1/2 --format json 2>/dev/null");
  REQUIRE(j.exit_code == 0);
  const auto doc = nlohmann::json::parse(j.output);
  CHECK(doc["axis"] == "gamma_threshold");
  CHECK(doc["points"].size() == 2);
  CHECK(doc["points"][0]["report"]["dominance_verdict"] == true);
}

TEST_CASE("config files and environment overrides") {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path();
  const fs::path cfg = dir / "eth2game_cli_cfg.json";
  {
    std::ofstream out(cfg);
    out << R"({"game_core": {"n_agents": 3}})";
  }

  const RunResult r = run_cli("equilibrium --config " + cfg.string() +
                              " --format json 2>/dev/null");
  REQUIRE(r.exit_code == 0);
  const auto j = nlohmann::json::parse(r.output);
  CHECK(j["report"]["n_agents"] == 3);
  CHECK(j["manifest"]["config_path"] == cfg.string());
  CHECK(j["manifest"]["config"]["game_core"]["n_agents"] == 3);

  const RunResult env =
      run_cli("equilibrium --config " + cfg.string() +
                  " --format json 2>/dev/null",
              "ETH2GAME_game_core__n_agents=2");
  REQUIRE(env.exit_code == 0);
  CHECK(nlohmann::json::parse(env.output)["report"]["n_agents"] == 2);

  fs::remove(cfg);
}

TEST_CASE("out files receive the same payload as stdout") {
  namespace fs = std::filesystem;
  const fs::path outfile = fs::temp_directory_path() / "eth2game_out.json";
  const RunResult direct = run_cli("rewards --format json 2>/dev/null");
  const RunResult filed = run_cli("rewards --format json --out " +
                                  outfile.string() + " 2>/dev/null");
  REQUIRE(direct.exit_code == 0);
  REQUIRE(filed.exit_code == 0);
  CHECK(filed.output.empty());
  const auto a = nlohmann::json::parse(direct.output);
  const auto b = nlohmann::json::parse(slurp(outfile));
  CHECK(a["rewards"] == b["rewards"]);
  CHECK(b["manifest"]["out_path"] == outfile.string());
  fs::remove(outfile);
}

TEST_CASE("exit codes separate usage, config, and domain failures") {
  namespace fs = std::filesystem;
  CHECK(run_cli("bogus 2>/dev/null").exit_code == 64);
  CHECK(run_cli("2>/dev/null").exit_code == 64);  // missing subcommand
  CHECK(run_cli("rewards --format yaml 2>/dev/null").exit_code == 64);
  CHECK(run_cli("sweep --axis bogus --grid 1 2>/dev/null").exit_code == 64);
  CHECK(run_cli("sweep --grid 1 2>/dev/null").exit_code == 64);  // no axis
  CHECK(run_cli("sweep --axis cost_per_epoch --grid 1,,2 2>/dev/null")
            .exit_code == 64);
  CHECK(run_cli("sweep --axis cost_per_epoch --grid abc 2>/dev/null")
            .exit_code == 64);
  CHECK(run_cli("sweep --axis n_validators --grid 0.5 2>/dev/null")
            .exit_code == 66);
  CHECK(run_cli("rewards --config /nonexistent.json 2>/dev/null").exit_code ==
        65);

  const fs::path bad = fs::temp_directory_path() / "eth2game_bad.json";
  {
    std::ofstream out(bad);
    out << "{nope";
  }
  CHECK(run_cli("rewards --config " + bad.string() + " 2>/dev/null")
            .exit_code == 65);
  fs::remove(bad);

  const fs::path range = fs::temp_directory_path() / "eth2game_range.json";
  {
    std::ofstream out(range);
    out << R"({"game_core": {"n_agents": 1}})";
  }
  CHECK(run_cli("rewards --config " + range.string() + " 2>/dev/null")
            .exit_code == 66);
  fs::remove(range);

  CHECK(run_cli("--version").exit_code == 0);
  CHECK(run_cli("--help >/dev/null").exit_code == 0);
  CHECK(run_cli("simulate --help >/dev/null").exit_code == 0);
}

TEST_CASE("version flag prints the library version") {
  const RunResult r = run_cli("--version");
  CHECK(r.output.find("1.0.0") != std::string::npos);
}
