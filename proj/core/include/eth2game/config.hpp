#pragma once

#include "eth2game/equilibrium.hpp"
#include "eth2game/game.hpp"

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>

namespace eth2game {

// Malformed configuration input: unparsable JSON, unknown keys, wrong value
// types. Distinct from std::domain_error, which covers well-formed input
// whose values are out of range.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SimulationDefaults {
  std::uint64_t epochs = 10'000;
  std::uint64_t seed = 42;
  // Uniform strategy applied to every agent.
  Rational proposer_cooperate = 1;
  Rational attester_cooperate = 1;

  StrategyProfile profile(std::size_t n_agents) const;
};

struct AppConfig {
  GameConfig game;
  EnumerationMode equilibrium_mode = EnumerationMode::Classes;
  SimulationDefaults simulation;

  void validate() const;
};

AppConfig default_config();

// Parses a JSON document with sections incentive_model, game_core,
// equilibrium, and slot_simulator. Every key has a default; unknown keys are
// errors (fail closed), reported with their full path. Rational-valued keys
// accept JSON numbers or strings like "1/3" and "0.35".
AppConfig parse_config(const std::string& json_text,
                       const std::map<std::string, std::string>& env = {});

// parse_config over the file's contents. A missing file is a ConfigError.
AppConfig load_config(const std::string& path,
                      const std::map<std::string, std::string>& env = {});

// Environment overrides: ETH2GAME_<section>__<key>[__<subkey>]=<value>,
// applied on top of the document before binding. Values are parsed as JSON
// fragments, falling back to plain strings. collect_env_overrides reads the
// process environment.
std::map<std::string, std::string> collect_env_overrides();

// Full resolved configuration (defaults and derived values made explicit) as
// a deterministic JSON document; parse_config(config_to_json(c)) == c.
// Exact rationals are rendered as "num/den" strings.
std::string config_to_json(const AppConfig& config);

}  // namespace eth2game
