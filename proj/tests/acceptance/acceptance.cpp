// End-to-end acceptance gate. Each check prints one [PASS]/[FAIL] line with
// its wall-clock time and budget; the process exits nonzero if any fails.

#include "eth2game/config.hpp"
#include "eth2game/equilibrium.hpp"
#include "eth2game/rng.hpp"
#include "eth2game/simulator.hpp"
#include "oracle/oracle.hpp"

#include <json.hpp>

#include <sys/wait.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace eth2game;
using Json = nlohmann::json;

struct Outcome {
  bool pass = false;
  std::string detail;
};

struct CliResult {
  int exit_code = -1;
  std::string output;
};

CliResult run_cli(const std::string& args) {
  CliResult result;
  const std::string cmd =
      std::string(ETH2GAME_CLI_PATH) + " " + args + " 2>/dev/null";
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

std::string rational_text(const Rational& v) { return fraction_string(v); }

// 1. The reward command reproduces the published base reward.
Outcome check_base_reward() {
  const CliResult r = run_cli("rewards --format json");
  if (r.exit_code != 0)
    return {false, "reward command exited with " + std::to_string(r.exit_code)};
  double br = 0;
  try {
    br = Json::parse(r.output)["rewards"]["base_reward"]["gwei"].get<double>();
  } catch (const std::exception& e) {
    return {false, std::string("unparsable output: ") + e.what()};
  }
  if (std::abs(br - 505.96) > 0.01)
    return {false, "base reward " + std::to_string(br)};
  std::ostringstream os;
  os << "base reward " << br << " GWei within 0.01 of 505.96";
  return {true, os.str()};
}

// 2. Weight closure: the default set, the exact head/source tie, and 1000
// randomized closed weight sets keep the attestation identities.
Outcome check_weight_closure() {
  const ProtocolWeights def;
  if (def.source + def.target + def.head + def.sync + def.proposer !=
      def.total)
    return {false, "default weights are not closed"};

  const RewardTable defaults = derive_rewards(IncentiveParams{});
  if (defaults.head_reward != defaults.source_reward)
    return {false, "head and source rewards differ on the default weights"};

  const SlotRng rng{0x5eedf00dULL};
  for (std::uint64_t i = 0; i < 1000; ++i) {
    IncentiveParams params;
    ProtocolWeights& w = params.weights;
    w.source = 1 + rng.draw(i, 0, 0) % 64;
    w.target = 1 + rng.draw(i, 1, 0) % 64;
    w.head = 1 + rng.draw(i, 2, 0) % 64;
    w.sync = 1 + rng.draw(i, 3, 0) % 64;
    w.proposer = 1 + rng.draw(i, 4, 0) % 64;
    w.total = w.source + w.target + w.head + w.sync + w.proposer;
    params.network.n_validators = 1000 + rng.draw(i, 5, 0) % 1'000'000;
    const std::uint64_t eb = (1 + rng.draw(i, 6, 0) % 32) * kGweiPerEth;
    params.balance = BalanceState{eb, eb};

    try {
      w.validate();
      const RewardTable t = derive_rewards(params);
      if (t.source_reward + t.target_reward + t.head_reward !=
          t.attestation_reward)
        return {false, "attestation components fail to close at set " +
                           std::to_string(i)};
      if (t.attester_penalty != t.source_reward + t.target_reward)
        return {false, "penalty misses the source+target sum at set " +
                           std::to_string(i)};
      const Rational whole =
          Rational(w.source + w.target + w.head, w.total) *
          Rational(eb, kGweiPerEth) * t.base_reward;
      if (t.attestation_reward != whole)
        return {false, "weight fractions fail to recompose at set " +
                           std::to_string(i)};
      if ((w.head == w.source) != (t.head_reward == t.source_reward))
        return {false, "head/source tie broken at set " + std::to_string(i)};
    } catch (const std::exception& e) {
      return {false, "set " + std::to_string(i) + " rejected: " + e.what()};
    }
  }
  return {true, "default set exact; 1000 randomized closed sets hold"};
}

GameConfig random_positive_config(const SlotRng& rng, std::uint64_t i) {
  GameConfig cfg;
  cfg.n_agents = 2 + i % 4;
  cfg.incentives.network.n_validators = 100 + rng.draw(i, 10, 0) % 2'000'000;
  if (rng.draw(i, 11, 0) % 2)
    cfg.incentives.network.n_attesters =
        2 + rng.draw(i, 12, 0) % (cfg.incentives.network.n_validators - 1);
  const std::uint64_t eb = (1 + rng.draw(i, 13, 0) % 32) * kGweiPerEth;
  cfg.incentives.balance = BalanceState{eb, eb};
  cfg.incentives.costs.setup_gwei = rng.draw(i, 14, 0) % 1'000'000'000;
  cfg.incentives.costs.operating_gwei = rng.draw(i, 15, 0) % 1'000'000'000;
  cfg.incentives.costs.years =
      Rational(1 + rng.draw(i, 16, 0) % 10, 1 + rng.draw(i, 17, 0) % 4);
  if (rng.draw(i, 18, 0) % 2) {
    const std::uint64_t count = rng.draw(i, 19, 0) % 5;
    for (std::uint64_t t = 0; t < count; ++t)
      cfg.incentives.tips.tips.push_back(rng.draw(i, 20, t) % 100'000'000);
  }
  cfg.gamma_threshold = Rational(1 + rng.draw(i, 21, 0) % 9, 10);
  switch (rng.draw(i, 22, 0) % 3) {
    case 0:
      cfg.leak = LeakMode::Derived;
      break;
    case 1:
      cfg.leak = LeakMode::ForcedOff;
      break;
    default:
      cfg.leak = LeakMode::ForcedOn;
      break;
  }
  if (rng.draw(i, 23, 0) % 2)
    cfg.inactivity_penalty = Rational(1 + rng.draw(i, 24, 0) % 1'000'000'000);
  if (rng.draw(i, 25, 0) % 2)
    cfg.cost_per_epoch = Rational(rng.draw(i, 26, 0) % 100'000'000);
  if (rng.draw(i, 27, 0) % 2)
    cfg.prior_proposer = Rational(1 + rng.draw(i, 28, 0) % 99, 100);
  cfg.validate();
  return cfg;
}

// 3. All-cooperate is a verified equilibrium and cooperation dominates with a
// strictly positive gap on randomized configs, matching the brute-force
// enumerator and the reference implementation exactly.
Outcome check_equilibrium_mechanization() {
  const SlotRng rng{0xabcdef12ULL};
  for (std::uint64_t i = 0; i < 200; ++i) {
    GameConfig cfg;
    try {
      cfg = random_positive_config(rng, i);
    } catch (const std::exception& e) {
      return {false, "config " + std::to_string(i) + " invalid: " + e.what()};
    }
    const std::string tag = " at config " + std::to_string(i) +
                            " (n=" + std::to_string(cfg.n_agents) + ")";
    const oracle::Values v = oracle::derive(cfg);
    const bool leak_flag = cfg.leak == LeakMode::ForcedOn;
    const StrategyProfile all_c = StrategyProfile::all_cooperate(cfg.n_agents);

    const EquilibriumReport bne = verify_bne(all_c, cfg);
    if (!bne.bne_verdict || !*bne.bne_verdict)
      return {false, "verify_bne rejected all-cooperate" + tag};
    if (!oracle::is_bne(v, all_c.strategies, leak_flag))
      return {false, "reference enumeration disagrees on the equilibrium" + tag};
    for (std::size_t agent = 0; agent < cfg.n_agents; ++agent) {
      const BestResponse br = best_response(agent, all_c, cfg);
      const oracle::BestResponse ob =
          oracle::best_response(v, agent, all_c.strategies, leak_flag);
      if (br.gap_as_proposer != ob.gap_proposer ||
          br.gap_as_attester != ob.gap_attester)
        return {false, "best-response gaps diverge" + tag};
    }

    const EquilibriumReport classes =
        verify_ex_ante_dominance(cfg, EnumerationMode::Classes);
    const EquilibriumReport brute =
        verify_ex_ante_dominance(cfg, EnumerationMode::BruteForce);
    const oracle::Dominance od = oracle::dominance(v);
    if (!classes.dominance_verdict || !*classes.dominance_verdict)
      return {false, "dominance verdict false" + tag};
    if (!classes.min_gap || *classes.min_gap <= 0)
      return {false, "minimal gap not strictly positive" + tag};
    if (*classes.min_gap != od.min_gap || classes.strict != od.strict ||
        *classes.dominance_verdict != od.holds)
      return {false, "class enumeration diverges from the reference" + tag};
    if (*brute.min_gap != od.min_gap || brute.strict != od.strict ||
        *brute.dominance_verdict != od.holds)
      return {false, "brute-force enumeration diverges from the reference" +
                         tag};
  }
  return {true, "200 randomized configs across n=2..5, exact agreement"};
}

// 4. Direct costs cancel: the dominance gap and the best-response sets are
// bit-identical across a cost sweep from 0 to ten attestation rewards.
Outcome check_cost_invariance() {
  const GameConfig cfg;
  const ResolvedGame g = resolve_game(cfg);
  std::vector<Rational> grid;
  for (int i = 0; i <= 50; ++i)
    grid.push_back(g.attester_reward * 10 * i / 50);

  const std::vector<SweepPoint> points =
      sensitivity_sweep(cfg, "cost_per_epoch", grid);
  if (points.size() != 51) return {false, "sweep dropped grid points"};

  const EquilibriumReport& base = points.front().report;
  for (const SweepPoint& p : points) {
    const EquilibriumReport& rep = p.report;
    if (*rep.min_gap != *base.min_gap)
      return {false, "minimal gap moved at cost " + rational_text(p.value)};
    if (*rep.dominance_verdict != *base.dominance_verdict ||
        rep.strict != base.strict)
      return {false, "dominance verdict moved at cost " +
                         rational_text(p.value)};
    if (*rep.bne_verdict != *base.bne_verdict)
      return {false, "equilibrium verdict moved at cost " +
                         rational_text(p.value)};
    if (rep.best_responses.size() != base.best_responses.size())
      return {false, "best-response set size changed"};
    for (std::size_t a = 0; a < rep.best_responses.size(); ++a) {
      const BestResponse& x = rep.best_responses[a];
      const BestResponse& y = base.best_responses[a];
      if (x.as_proposer != y.as_proposer || x.as_attester != y.as_attester ||
          x.gap_as_proposer != y.gap_as_proposer ||
          x.gap_as_attester != y.gap_as_attester)
        return {false, "best responses moved at cost " +
                           rational_text(p.value)};
    }
    if (rep.case_breakdown.size() != base.case_breakdown.size())
      return {false, "case table changed shape"};
    for (std::size_t c = 0; c < rep.case_breakdown.size(); ++c)
      if (rep.case_breakdown[c].gap != base.case_breakdown[c].gap)
        return {false, "case gap moved at cost " + rational_text(p.value)};
  }
  return {true, "51 cost points, gaps and response sets bit-identical"};
}

// 5. The equivalence-class enumeration matches brute force at n=5 and keeps
// the law of total expectation exactly at n=12.
Outcome check_symmetry_collapse() {
  GameConfig cfg5;
  cfg5.n_agents = 5;
  const EquilibriumReport c5 =
      verify_ex_ante_dominance(cfg5, EnumerationMode::Classes);
  const EquilibriumReport b5 =
      verify_ex_ante_dominance(cfg5, EnumerationMode::BruteForce);
  if (*c5.min_gap != *b5.min_gap || *c5.dominance_verdict != *b5.dominance_verdict ||
      c5.strict != b5.strict)
    return {false, "class and brute enumerations disagree at n=5"};
  if (c5.case_breakdown.size() != b5.case_breakdown.size())
    return {false, "case tables differ in shape at n=5"};
  for (std::size_t i = 0; i < c5.case_breakdown.size(); ++i) {
    const CaseRow& x = c5.case_breakdown[i];
    const CaseRow& y = b5.case_breakdown[i];
    if (x.label != y.label || x.realizable != y.realizable ||
        x.probability != y.probability || x.eu_cooperate != y.eu_cooperate ||
        x.eu_deviate != y.eu_deviate || x.gap != y.gap)
      return {false, "case row " + x.label + " differs at n=5"};
  }

  GameConfig cfg12;
  cfg12.n_agents = 12;
  const EquilibriumReport r12 =
      verify_ex_ante_dominance(cfg12, EnumerationMode::Classes);
  if (!*r12.dominance_verdict || !r12.strict)
    return {false, "dominance fails at n=12"};

  const std::size_t n = 12;
  const StrategyProfile profile =
      StrategyProfile::uniform(n, Strategy{Rational(7, 8), Rational(5, 6)});
  const ExpectedUtility total = expected_utility(0, profile, cfg12);
  Rational value_sum = 0;
  Rational prob_sum = 0;
  for (std::size_t k = 0; k < n; ++k) {
    ScenarioEvent e;
    e.focal_role = Role::Proposer;
    e.gamma = GammaCondition::equals(Rational(k, n - 1));
    const ExpectedUtility part = conditional_expected_utility(0, profile, e, cfg12);
    value_sum += part.weighted();
    prob_sum += part.event_probability;
  }
  for (std::size_t k = 0; k + 1 < n; ++k) {
    ScenarioEvent c;
    c.focal_role = Role::Attester;
    c.x_bc = true;
    c.gamma = GammaCondition::equals(Rational(k, n - 1));
    const ExpectedUtility pc = conditional_expected_utility(0, profile, c, cfg12);
    value_sum += pc.weighted();
    prob_sum += pc.event_probability;

    ScenarioEvent d;
    d.focal_role = Role::Attester;
    d.x_bd = true;
    d.gamma = GammaCondition::equals(Rational(k + 1, n - 1));
    const ExpectedUtility pd = conditional_expected_utility(0, profile, d, cfg12);
    value_sum += pd.weighted();
    prob_sum += pd.event_probability;
  }
  if (prob_sum != 1)
    return {false, "partition probabilities sum to " + rational_text(prob_sum)};
  if (value_sum != total.value)
    return {false, "law of total expectation violated at n=12"};
  return {true, "n=5 modes agree; n=12 partition identity exact"};
}

// 6. The leak automaton matches the reference on every length-12 history.
Outcome check_leak_automaton() {
  for (unsigned bits = 0; bits < 4096; ++bits) {
    EpochState state;
    std::vector<bool> history;
    for (int e = 0; e < 12; ++e) {
      const bool finalized = (bits >> e) & 1u;
      history.push_back(finalized);
      state = step_epoch(state, finalized);
      if (state.leak_active != oracle::leak_after(history))
        return {false, "mismatch on history " + std::to_string(bits) +
                           " at epoch " + std::to_string(e)};
    }
  }
  return {true, "4096 histories, zero mismatches"};
}

// 7. Monte Carlo means stay within three standard errors of the analytic
// expectation for every agent, for at least 99 of 100 seeds.
Outcome check_monte_carlo() {
  const GameConfig cfg;
  const StrategyProfile profile = StrategyProfile::all_cooperate(4);
  std::vector<Rational> analytic;
  for (std::size_t i = 0; i < 4; ++i)
    analytic.push_back(expected_utility(i, profile, cfg).value);

  int good_seeds = 0;
  double worst_z = 0;
  std::vector<std::uint64_t> failing;
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    const SimulationResult r = run_simulation(cfg, profile, 3125, seed);
    bool ok = true;
    for (std::size_t i = 0; i < 4; ++i) {
      const double gap =
          std::abs(to_double(r.agents[i].empirical_mean - analytic[i]));
      if (r.agents[i].std_error > 0)
        worst_z = std::max(worst_z, gap / r.agents[i].std_error);
      ok = ok && gap <= 3 * r.agents[i].std_error;
    }
    if (ok)
      ++good_seeds;
    else
      failing.push_back(seed);
  }
  std::ostringstream os;
  os << good_seeds << "/100 seeds within 3 standard errors; worst excursion "
     << std::fixed << std::setprecision(2) << worst_z << " sigma";
  if (!failing.empty()) {
    os << "; failing seeds";
    for (std::uint64_t s : failing) os << " " << s;
  }
  return {good_seeds >= 99, os.str()};
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    double budget_seconds;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {"base reward reproduction", 1.0, check_base_reward},
      {"weight closure properties", 5.0, check_weight_closure},
      {"equilibrium and dominance vs brute enumeration", 120.0,
       check_equilibrium_mechanization},
      {"cost cancellation invariance", 30.0, check_cost_invariance},
      {"symmetry collapse and total-expectation identity", 60.0,
       check_symmetry_collapse},
      {"leak automaton exactness", 5.0, check_leak_automaton},
      {"Monte Carlo convergence", 60.0, check_monte_carlo},
  };

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const Criterion& c = criteria[i];
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out = {false, std::string("exception: ") + e.what()};
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    const bool in_budget = seconds < c.budget_seconds;
    const bool pass = out.pass && in_budget;
    std::ostringstream line;
    line << (pass ? "[PASS] " : "[FAIL] ") << (i + 1) << ". " << c.name << " ("
         << std::fixed << std::setprecision(2) << seconds << "s of "
         << std::setprecision(0) << c.budget_seconds << "s)";
    if (!out.detail.empty()) line << " - " << out.detail;
    if (!in_budget) line << " - over time budget";
    std::cout << line.str() << std::endl;
    if (!pass) ++failures;
  }
  if (failures != 0) {
    std::cout << failures << " criteria failed" << std::endl;
    return 1;
  }
  std::cout << "all criteria passed" << std::endl;
  return 0;
}
