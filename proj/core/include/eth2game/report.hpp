#pragma once

#include "eth2game/config.hpp"
#include "eth2game/equilibrium.hpp"
#include "eth2game/incentive.hpp"
#include "eth2game/simulator.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace eth2game {

enum class OutputFormat { Table, Csv, Json };

OutputFormat parse_format(std::string_view name);  // UsageError on unknown
std::string_view format_name(OutputFormat format);

// Reproducibility envelope embedded in every report: the fully resolved
// configuration plus run identity. Contains no timestamps, so identical runs
// render identical bytes.
struct RunManifest {
  std::string subcommand;
  std::string config_path;   // empty: defaults
  std::string config_json;   // resolved via config_to_json
  OutputFormat format = OutputFormat::Table;
  std::string out_path;      // empty: stdout
  std::uint64_t seed = 0;
  std::string version;
};

RunManifest make_manifest(std::string_view subcommand, const AppConfig& config,
                          std::string_view config_path, OutputFormat format,
                          std::string_view out_path, std::uint64_t seed);

// Renderers return the complete report text. Tables show GWei with two
// decimals; CSV adds exact num/den columns; JSON carries full-precision
// rationals as strings plus double approximations.
std::string render_rewards(const RunManifest& manifest,
                           const AppConfig& config, const RewardTable& table);

std::string render_equilibrium(const RunManifest& manifest,
                               const AppConfig& config,
                               const EquilibriumReport& report);

// CSV format renders the per-epoch trace (epoch, finalized, leak, per-agent
// net); table and JSON render the summary with the analytic comparison.
std::string render_simulation(const RunManifest& manifest,
                              const AppConfig& config,
                              const SimulationResult& result,
                              const std::vector<ExpectedUtility>& analytic,
                              const std::vector<EpochTraceRow>* trace);

std::string render_sweep(const RunManifest& manifest, const AppConfig& config,
                         std::string_view axis,
                         const std::vector<SweepPoint>& points);

}  // namespace eth2game
