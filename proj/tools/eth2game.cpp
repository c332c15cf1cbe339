// Command-line front end: reward tables, equilibrium verification, slot
// simulation and parameter sweeps over one shared JSON configuration.

#include <CLI11.hpp>

#include "eth2game/config.hpp"
#include "eth2game/equilibrium.hpp"
#include "eth2game/report.hpp"
#include "eth2game/simulator.hpp"
#include "eth2game/version.hpp"

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

using namespace eth2game;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 64;
constexpr int kExitConfig = 65;
constexpr int kExitDomain = 66;

struct CommonOpts {
  std::string config_path;
  std::string format = "table";
  std::string out_path;
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
  cmd->add_option("--config", opts.config_path,
                  "JSON configuration file (defaults apply when omitted)");
  cmd->add_option("--format", opts.format, "Output format")
      ->check(CLI::IsMember({"table", "csv", "json"}))
      ->capture_default_str();
  cmd->add_option("--out", opts.out_path,
                  "Write the report to this file instead of stdout");
}

AppConfig load(const CommonOpts& opts) {
  const auto env = collect_env_overrides();
  if (opts.config_path.empty()) return parse_config("{}", env);
  return load_config(opts.config_path, env);
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + out_path);
  out << text;
  if (!out) throw std::runtime_error("cannot write " + out_path);
}

std::vector<Rational> parse_grid(const std::string& text) {
  std::vector<Rational> grid;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = text.find(',', start);
    const std::string item =
        text.substr(start, comma == std::string::npos ? std::string::npos
                                                      : comma - start);
    if (item.empty())
      throw UsageError("--grid: empty element in \"" + text + "\"");
    try {
      grid.push_back(parse_rational(item));
    } catch (const std::invalid_argument&) {
      throw UsageError("--grid: cannot parse \"" + item + "\"");
    }
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return grid;
}

EquilibriumReport full_report(const GameConfig& game, EnumerationMode mode) {
  EquilibriumReport report = verify_ex_ante_dominance(game, mode);
  EquilibriumReport bne =
      verify_bne(StrategyProfile::all_cooperate(game.n_agents), game);
  report.bne_verdict = bne.bne_verdict;
  report.best_responses = std::move(bne.best_responses);
  report.agent_in_best_response = std::move(bne.agent_in_best_response);
  return report;
}

int run(int argc, char** argv) {
  CLI::App app{"Validator economics: rewards, one-slot game equilibria and "
               "Monte Carlo slot simulation"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);

  CommonOpts rewards_opts;
  CLI::App* rewards = app.add_subcommand(
      "rewards", "Per-epoch reward, penalty and cost table");
  add_common(rewards, rewards_opts);

  CommonOpts eq_opts;
  std::optional<std::uint64_t> eq_agents;
  std::string eq_mode;
  CLI::App* equilibrium = app.add_subcommand(
      "equilibrium",
      "Verify the all-cooperate equilibrium and cooperate dominance");
  add_common(equilibrium, eq_opts);
  equilibrium->add_option("--n-agents", eq_agents, "Number of agents");
  equilibrium->add_option("--mode", eq_mode, "Enumeration mode")
      ->check(CLI::IsMember({"classes", "brute"}));

  CommonOpts sim_opts;
  std::optional<std::uint64_t> sim_agents, sim_epochs, sim_seed;
  std::string trace_path;
  CLI::App* simulate = app.add_subcommand(
      "simulate", "Monte Carlo slot simulation against the analytic means");
  add_common(simulate, sim_opts);
  simulate->add_option("--n-agents", sim_agents, "Number of agents");
  simulate->add_option("--epochs", sim_epochs, "Epochs to simulate");
  simulate->add_option("--seed", sim_seed, "RNG seed");
  simulate->add_option("--trace", trace_path,
                       "Also write the per-epoch trace CSV to this file");

  CommonOpts sweep_opts;
  std::optional<std::uint64_t> sweep_agents;
  std::string axis, grid_text;
  CLI::App* sweep = app.add_subcommand(
      "sweep", "Dominance verification along one parameter axis");
  add_common(sweep, sweep_opts);
  sweep->add_option("--axis", axis, "Parameter to vary")
      ->required()
      ->check(CLI::IsMember({"cost_per_epoch", "gamma_threshold",
                             "inactivity_penalty", "n_validators",
                             "tips-total"}));
  sweep->add_option("--grid", grid_text,
                    "Comma-separated grid values (rationals allowed)")
      ->required();
  sweep->add_option("--n-agents", sweep_agents, "Number of agents");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  if (rewards->parsed()) {
    AppConfig config = load(rewards_opts);
    const RewardTable table = derive_rewards(config.game.incentives);
    const OutputFormat format = parse_format(rewards_opts.format);
    const RunManifest manifest =
        make_manifest("rewards", config, rewards_opts.config_path, format,
                      rewards_opts.out_path, 0);
    emit(render_rewards(manifest, config, table), rewards_opts.out_path);
    return kExitOk;
  }

  if (equilibrium->parsed()) {
    AppConfig config = load(eq_opts);
    if (eq_agents) config.game.n_agents = static_cast<std::size_t>(*eq_agents);
    if (eq_mode == "classes") config.equilibrium_mode = EnumerationMode::Classes;
    if (eq_mode == "brute")
      config.equilibrium_mode = EnumerationMode::BruteForce;
    const EquilibriumReport report =
        full_report(config.game, config.equilibrium_mode);
    const OutputFormat format = parse_format(eq_opts.format);
    const RunManifest manifest = make_manifest(
        "equilibrium", config, eq_opts.config_path, format, eq_opts.out_path,
        0);
    emit(render_equilibrium(manifest, config, report), eq_opts.out_path);
    return kExitOk;
  }

  if (simulate->parsed()) {
    AppConfig config = load(sim_opts);
    if (sim_agents)
      config.game.n_agents = static_cast<std::size_t>(*sim_agents);
    if (sim_epochs) config.simulation.epochs = *sim_epochs;
    if (sim_seed) config.simulation.seed = *sim_seed;

    const StrategyProfile profile =
        config.simulation.profile(config.game.n_agents);
    const OutputFormat format = parse_format(sim_opts.format);
    const bool want_trace =
        !trace_path.empty() || format == OutputFormat::Csv;
    std::vector<EpochTraceRow> trace;
    const SimulationResult result = run_simulation(
        config.game, profile, config.simulation.epochs,
        config.simulation.seed, want_trace ? &trace : nullptr);

    std::vector<ExpectedUtility> analytic;
    analytic.reserve(config.game.n_agents);
    for (std::size_t i = 0; i < config.game.n_agents; ++i)
      analytic.push_back(expected_utility(i, profile, config.game));

    const RunManifest manifest =
        make_manifest("simulate", config, sim_opts.config_path, format,
                      sim_opts.out_path, config.simulation.seed);
    emit(render_simulation(manifest, config, result, analytic,
                           format == OutputFormat::Csv ? &trace : nullptr),
         sim_opts.out_path);

    if (!trace_path.empty()) {
      RunManifest trace_manifest = manifest;
      trace_manifest.format = OutputFormat::Csv;
      trace_manifest.out_path = trace_path;
      emit(render_simulation(trace_manifest, config, result, analytic,
                             &trace),
           trace_path);
    }
    return kExitOk;
  }

  AppConfig config = load(sweep_opts);
  if (sweep_agents)
    config.game.n_agents = static_cast<std::size_t>(*sweep_agents);
  const std::vector<Rational> grid = parse_grid(grid_text);
  const std::vector<SweepPoint> points =
      sensitivity_sweep(config.game, axis, grid);
  const OutputFormat format = parse_format(sweep_opts.format);
  const RunManifest manifest = make_manifest(
      "sweep", config, sweep_opts.config_path, format, sweep_opts.out_path, 0);
  emit(render_sweep(manifest, config, axis, points), sweep_opts.out_path);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
