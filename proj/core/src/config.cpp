#include "eth2game/config.hpp"

#include <json.hpp>

#include <cmath>
#include <fstream>
#include <initializer_list>
#include <limits>
#include <sstream>
#include <string_view>
#include <vector>

extern char** environ;

namespace eth2game {

namespace {

using Json = nlohmann::ordered_json;

constexpr std::string_view kEnvPrefix = "ETH2GAME_";

[[noreturn]] void fail(const std::string& path, const std::string& message) {
  throw ConfigError("config: " + path + ": " + message);
}

void check_keys(const Json& obj, const std::string& path,
                std::initializer_list<const char*> allowed) {
  if (!obj.is_object()) fail(path, "expected an object");
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    bool known = false;
    for (const char* key : allowed)
      if (it.key() == key) {
        known = true;
        break;
      }
    if (!known)
      fail(path.empty() ? it.key() : path + "." + it.key(), "unknown key");
  }
}

std::uint64_t bind_u64(const Json& v, const std::string& path) {
  if (v.is_number_unsigned()) return v.get<std::uint64_t>();
  if (v.is_number_integer()) {
    const auto s = v.get<std::int64_t>();
    if (s < 0) fail(path, "must be nonnegative");
    return static_cast<std::uint64_t>(s);
  }
  if (v.is_number_float()) {
    const double d = v.get<double>();
    if (!(d >= 0) || d != std::floor(d) || d >= 18446744073709551616.0)
      fail(path, "must be a nonnegative integer");
    return static_cast<std::uint64_t>(d);
  }
  fail(path, "expected an integer");
}

Rational bind_rational(const Json& v, const std::string& path) {
  if (v.is_string()) {
    try {
      return parse_rational(v.get<std::string>());
    } catch (const std::invalid_argument& e) {
      fail(path, e.what());
    }
  }
  if (v.is_number_unsigned()) return Rational(v.get<std::uint64_t>());
  if (v.is_number_integer()) return Rational(v.get<std::int64_t>());
  if (v.is_number_float()) {
    const double d = v.get<double>();
    if (!std::isfinite(d)) fail(path, "must be finite");
    return rational_from_double(d);
  }
  fail(path, "expected a number or a rational string like \"1/3\"");
}

// Missing and null both mean "keep the default / derive".
const Json* entry(const Json& obj, const char* key) {
  const auto it = obj.find(key);
  if (it == obj.end() || it->is_null()) return nullptr;
  return &*it;
}

void bind_weights(const Json& j, const std::string& path, ProtocolWeights& w) {
  check_keys(j, path,
             {"source", "target", "head", "sync", "proposer", "total"});
  if (const Json* v = entry(j, "source")) w.source = bind_u64(*v, path + ".source");
  if (const Json* v = entry(j, "target")) w.target = bind_u64(*v, path + ".target");
  if (const Json* v = entry(j, "head")) w.head = bind_u64(*v, path + ".head");
  if (const Json* v = entry(j, "sync")) w.sync = bind_u64(*v, path + ".sync");
  if (const Json* v = entry(j, "proposer"))
    w.proposer = bind_u64(*v, path + ".proposer");
  if (const Json* v = entry(j, "total")) w.total = bind_u64(*v, path + ".total");
}

void bind_network(const Json& j, const std::string& path, NetworkParams& n) {
  check_keys(j, path,
             {"n_validators", "total_staked_gwei", "n_attesters",
              "effective_balance_increment", "base_reward_factor",
              "sync_committee_size", "slots_per_epoch"});
  if (const Json* v = entry(j, "n_validators"))
    n.n_validators = bind_u64(*v, path + ".n_validators");
  if (const Json* v = entry(j, "total_staked_gwei"))
    n.total_staked_gwei = bind_u64(*v, path + ".total_staked_gwei");
  if (const Json* v = entry(j, "n_attesters"))
    n.n_attesters = bind_u64(*v, path + ".n_attesters");
  if (const Json* v = entry(j, "effective_balance_increment"))
    n.effective_balance_increment =
        bind_u64(*v, path + ".effective_balance_increment");
  if (const Json* v = entry(j, "base_reward_factor"))
    n.base_reward_factor = bind_u64(*v, path + ".base_reward_factor");
  if (const Json* v = entry(j, "sync_committee_size"))
    n.sync_committee_size = bind_u64(*v, path + ".sync_committee_size");
  if (const Json* v = entry(j, "slots_per_epoch"))
    n.slots_per_epoch = bind_u64(*v, path + ".slots_per_epoch");
}

void bind_balance(const Json& j, const std::string& path,
                  const NetworkParams& net, BalanceState& b) {
  check_keys(j, path, {"total_balance_gwei", "effective_balance_gwei"});
  const Json* total = entry(j, "total_balance_gwei");
  const Json* effective = entry(j, "effective_balance_gwei");
  if (total) {
    const std::uint64_t t = bind_u64(*total, path + ".total_balance_gwei");
    b = BalanceState::from_total(t, net.effective_balance_increment);
  }
  if (effective)
    b.effective_balance_gwei =
        bind_u64(*effective, path + ".effective_balance_gwei");
}

void bind_costs(const Json& j, const std::string& path, CostSchedule& c) {
  check_keys(j, path,
             {"setup_gwei", "infrastructure_gwei", "operating_gwei",
              "participation_gwei", "attestation_execution_gwei",
              "sync_execution_gwei", "proposal_execution_gwei", "years"});
  if (const Json* v = entry(j, "setup_gwei"))
    c.setup_gwei = bind_u64(*v, path + ".setup_gwei");
  if (const Json* v = entry(j, "infrastructure_gwei"))
    c.infrastructure_gwei = bind_u64(*v, path + ".infrastructure_gwei");
  if (const Json* v = entry(j, "operating_gwei"))
    c.operating_gwei = bind_u64(*v, path + ".operating_gwei");
  if (const Json* v = entry(j, "participation_gwei"))
    c.participation_gwei = bind_u64(*v, path + ".participation_gwei");
  if (const Json* v = entry(j, "attestation_execution_gwei"))
    c.attest_exec_gwei = bind_u64(*v, path + ".attestation_execution_gwei");
  if (const Json* v = entry(j, "sync_execution_gwei"))
    c.sync_exec_gwei = bind_u64(*v, path + ".sync_execution_gwei");
  if (const Json* v = entry(j, "proposal_execution_gwei"))
    c.propose_exec_gwei = bind_u64(*v, path + ".proposal_execution_gwei");
  if (const Json* v = entry(j, "years"))
    c.years = bind_rational(*v, path + ".years");
}

void bind_tips(const Json& j, const std::string& path, TransactionTips& t) {
  if (!j.is_array()) fail(path, "expected an array of GWei amounts");
  t.tips.clear();
  for (std::size_t i = 0; i < j.size(); ++i)
    t.tips.push_back(bind_u64(j[i], path + "[" + std::to_string(i) + "]"));
}

void bind_incentives(const Json& j, const std::string& path,
                     IncentiveParams& inc) {
  check_keys(j, path, {"weights", "network", "balance", "costs", "tips"});
  if (const Json* v = entry(j, "weights"))
    bind_weights(*v, path + ".weights", inc.weights);
  if (const Json* v = entry(j, "network"))
    bind_network(*v, path + ".network", inc.network);
  if (const Json* v = entry(j, "balance"))
    bind_balance(*v, path + ".balance", inc.network, inc.balance);
  if (const Json* v = entry(j, "costs"))
    bind_costs(*v, path + ".costs", inc.costs);
  if (const Json* v = entry(j, "tips")) bind_tips(*v, path + ".tips", inc.tips);
}

LeakMode bind_leak(const Json& v, const std::string& path) {
  if (!v.is_string()) fail(path, "expected \"on\", \"off\" or \"derived\"");
  const std::string s = v.get<std::string>();
  if (s == "on") return LeakMode::ForcedOn;
  if (s == "off") return LeakMode::ForcedOff;
  if (s == "derived") return LeakMode::Derived;
  fail(path, "expected \"on\", \"off\" or \"derived\"");
}

EnumerationMode bind_mode(const Json& v, const std::string& path) {
  if (!v.is_string()) fail(path, "expected \"classes\" or \"brute\"");
  const std::string s = v.get<std::string>();
  if (s == "classes") return EnumerationMode::Classes;
  if (s == "brute") return EnumerationMode::BruteForce;
  fail(path, "expected \"classes\" or \"brute\"");
}

void bind_game(const Json& j, const std::string& path, GameConfig& g) {
  check_keys(j, path,
             {"n_agents", "prior_proposer", "gamma_threshold",
              "inactivity_penalty_gwei", "leak", "cost_per_epoch_gwei"});
  if (const Json* v = entry(j, "n_agents"))
    g.n_agents = static_cast<std::size_t>(bind_u64(*v, path + ".n_agents"));
  if (const Json* v = entry(j, "prior_proposer"))
    g.prior_proposer = bind_rational(*v, path + ".prior_proposer");
  if (const Json* v = entry(j, "gamma_threshold"))
    g.gamma_threshold = bind_rational(*v, path + ".gamma_threshold");
  if (const Json* v = entry(j, "inactivity_penalty_gwei"))
    g.inactivity_penalty = bind_rational(*v, path + ".inactivity_penalty_gwei");
  if (const Json* v = entry(j, "leak")) g.leak = bind_leak(*v, path + ".leak");
  if (const Json* v = entry(j, "cost_per_epoch_gwei"))
    g.cost_per_epoch = bind_rational(*v, path + ".cost_per_epoch_gwei");
}

void bind_simulation(const Json& j, const std::string& path,
                     SimulationDefaults& s) {
  check_keys(j, path,
             {"epochs", "seed", "proposer_cooperate", "attester_cooperate"});
  if (const Json* v = entry(j, "epochs"))
    s.epochs = bind_u64(*v, path + ".epochs");
  if (const Json* v = entry(j, "seed")) s.seed = bind_u64(*v, path + ".seed");
  if (const Json* v = entry(j, "proposer_cooperate"))
    s.proposer_cooperate = bind_rational(*v, path + ".proposer_cooperate");
  if (const Json* v = entry(j, "attester_cooperate"))
    s.attester_cooperate = bind_rational(*v, path + ".attester_cooperate");
}

std::vector<std::string> split_path(const std::string& key) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t sep = key.find("__", start);
    if (sep == std::string::npos) {
      parts.push_back(key.substr(start));
      break;
    }
    parts.push_back(key.substr(start, sep - start));
    start = sep + 2;
  }
  return parts;
}

void apply_override(Json& doc, const std::string& key,
                    const std::string& value) {
  const std::vector<std::string> path = split_path(key);
  for (const std::string& part : path)
    if (part.empty())
      fail(std::string(kEnvPrefix) + key, "empty override path segment");

  Json fragment = Json::parse(value, nullptr, false);
  if (fragment.is_discarded()) fragment = value;  // plain string value

  Json* node = &doc;
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    if (node->is_null()) *node = Json::object();
    if (!node->is_object())
      fail(std::string(kEnvPrefix) + key, "override path crosses a value");
    node = &(*node)[path[i]];
  }
  if (node->is_null()) *node = Json::object();
  if (!node->is_object())
    fail(std::string(kEnvPrefix) + key, "override path crosses a value");
  (*node)[path.back()] = fragment;
}

std::string leak_name(LeakMode mode) {
  switch (mode) {
    case LeakMode::ForcedOn:
      return "on";
    case LeakMode::ForcedOff:
      return "off";
    case LeakMode::Derived:
      return "derived";
  }
  return "derived";
}

}  // namespace

StrategyProfile SimulationDefaults::profile(std::size_t n_agents) const {
  return StrategyProfile::uniform(
      n_agents, Strategy{proposer_cooperate, attester_cooperate});
}

void AppConfig::validate() const {
  game.validate();
  Strategy{simulation.proposer_cooperate, simulation.attester_cooperate}
      .validate();
}

AppConfig default_config() { return AppConfig{}; }

AppConfig parse_config(const std::string& json_text,
                       const std::map<std::string, std::string>& env) {
  Json doc;
  try {
    doc = Json::parse(json_text);
  } catch (const Json::parse_error& e) {
    throw ConfigError(std::string("config: ") + e.what());
  }
  if (doc.is_null()) doc = Json::object();
  if (!doc.is_object()) throw ConfigError("config: expected a JSON object");

  for (const auto& [key, value] : env) apply_override(doc, key, value);

  check_keys(doc, "",
             {"incentive_model", "game_core", "equilibrium", "slot_simulator"});

  AppConfig config;
  if (const Json* v = entry(doc, "incentive_model"))
    bind_incentives(*v, "incentive_model", config.game.incentives);
  if (const Json* v = entry(doc, "game_core"))
    bind_game(*v, "game_core", config.game);
  if (const Json* v = entry(doc, "equilibrium")) {
    check_keys(*v, "equilibrium", {"mode"});
    if (const Json* m = entry(*v, "mode"))
      config.equilibrium_mode = bind_mode(*m, "equilibrium.mode");
  }
  if (const Json* v = entry(doc, "slot_simulator"))
    bind_simulation(*v, "slot_simulator", config.simulation);

  config.validate();
  return config;
}

AppConfig load_config(const std::string& path,
                      const std::map<std::string, std::string>& env) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("config: cannot read " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_config(buffer.str(), env);
}

std::map<std::string, std::string> collect_env_overrides() {
  std::map<std::string, std::string> overrides;
  for (char** p = environ; p && *p; ++p) {
    const std::string_view item(*p);
    if (item.substr(0, kEnvPrefix.size()) != kEnvPrefix) continue;
    const std::size_t eq = item.find('=');
    if (eq == std::string_view::npos || eq <= kEnvPrefix.size()) continue;
    overrides.emplace(item.substr(kEnvPrefix.size(), eq - kEnvPrefix.size()),
                      item.substr(eq + 1));
  }
  return overrides;
}

std::string config_to_json(const AppConfig& config) {
  const GameConfig& game = config.game;
  const IncentiveParams& inc = game.incentives;
  const ResolvedGame resolved = resolve_game(game);

  Json doc = Json::object();

  Json weights = Json::object();
  weights["source"] = inc.weights.source;
  weights["target"] = inc.weights.target;
  weights["head"] = inc.weights.head;
  weights["sync"] = inc.weights.sync;
  weights["proposer"] = inc.weights.proposer;
  weights["total"] = inc.weights.total;

  Json network = Json::object();
  network["n_validators"] = inc.network.n_validators;
  network["total_staked_gwei"] = inc.resolved_total_staked();
  network["n_attesters"] = inc.network.resolved_n_attesters();
  network["effective_balance_increment"] = inc.network.effective_balance_increment;
  network["base_reward_factor"] = inc.network.base_reward_factor;
  network["sync_committee_size"] = inc.network.sync_committee_size;
  network["slots_per_epoch"] = inc.network.slots_per_epoch;

  Json balance = Json::object();
  balance["total_balance_gwei"] = inc.balance.total_balance_gwei;
  balance["effective_balance_gwei"] = inc.balance.effective_balance_gwei;

  Json costs = Json::object();
  costs["setup_gwei"] = inc.costs.setup_gwei;
  costs["infrastructure_gwei"] = inc.costs.infrastructure_gwei;
  costs["operating_gwei"] = inc.costs.operating_gwei;
  costs["participation_gwei"] = inc.costs.participation_gwei;
  costs["attestation_execution_gwei"] = inc.costs.attest_exec_gwei;
  costs["sync_execution_gwei"] = inc.costs.sync_exec_gwei;
  costs["proposal_execution_gwei"] = inc.costs.propose_exec_gwei;
  costs["years"] = fraction_string(inc.costs.years);

  Json incentive_model = Json::object();
  incentive_model["weights"] = std::move(weights);
  incentive_model["network"] = std::move(network);
  incentive_model["balance"] = std::move(balance);
  incentive_model["costs"] = std::move(costs);
  incentive_model["tips"] = inc.tips.tips;

  Json game_core = Json::object();
  game_core["n_agents"] = game.n_agents;
  game_core["prior_proposer"] = fraction_string(resolved.prior_proposer);
  game_core["gamma_threshold"] = fraction_string(game.gamma_threshold);
  game_core["inactivity_penalty_gwei"] =
      fraction_string(resolved.inactivity_penalty);
  game_core["leak"] = leak_name(game.leak);
  game_core["cost_per_epoch_gwei"] = fraction_string(resolved.cost_per_epoch);

  Json equilibrium = Json::object();
  equilibrium["mode"] = config.equilibrium_mode == EnumerationMode::BruteForce
                            ? "brute"
                            : "classes";

  Json simulator = Json::object();
  simulator["epochs"] = config.simulation.epochs;
  simulator["seed"] = config.simulation.seed;
  simulator["proposer_cooperate"] =
      fraction_string(config.simulation.proposer_cooperate);
  simulator["attester_cooperate"] =
      fraction_string(config.simulation.attester_cooperate);

  doc["incentive_model"] = std::move(incentive_model);
  doc["game_core"] = std::move(game_core);
  doc["equilibrium"] = std::move(equilibrium);
  doc["slot_simulator"] = std::move(simulator);
  return doc.dump(2);
}

}  // namespace eth2game
