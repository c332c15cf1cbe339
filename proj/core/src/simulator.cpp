#include "eth2game/simulator.hpp"

#include "eth2game/rng.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace eth2game {

bool finalization_check(const Rational& online_stake_fraction) {
  return online_stake_fraction >= Rational(2, 3);
}

EpochState step_epoch(const EpochState& state, bool finalized) {
  EpochState next;
  next.epoch_index = state.epoch_index + 1;
  next.checkpoint_finalized = finalized;
  next.consecutive_unfinalized =
      finalized ? 0 : state.consecutive_unfinalized + 1;
  next.leak_active = next.consecutive_unfinalized >= 4;
  return next;
}

namespace {

// Per-slot nets take one of 8n values per agent role; simulation counts how
// often each (role, action, other-deviators, leak) cell occurs and multiplies
// out exactly afterwards.
struct CellIndex {
  std::size_t n = 0;

  std::size_t operator()(std::size_t agent, Role role, Action action,
                         std::size_t deviators, bool leak) const {
    std::size_t idx = agent;
    idx = idx * 2 + (role == Role::Attester ? 1 : 0);
    idx = idx * 2 + (action == Action::Deviate ? 1 : 0);
    idx = idx * n + deviators;
    idx = idx * 2 + (leak ? 1 : 0);
    return idx;
  }

  std::size_t size() const { return n * 2 * 2 * n * 2; }
};

// Realization plan for one agent-role cooperation probability: the trivial
// probabilities never consume a draw, which the counter-based generator makes
// safe (no shared stream to desynchronize).
struct BernoulliPlan {
  enum class Kind { Always, Never, Threshold } kind = Kind::Always;
  std::uint64_t threshold = 0;

  static BernoulliPlan from(const Rational& p) {
    BernoulliPlan plan;
    if (p == 1) {
      plan.kind = Kind::Always;
    } else if (p == 0) {
      plan.kind = Kind::Never;
    } else {
      plan.kind = Kind::Threshold;
      plan.threshold = bernoulli_threshold(p);
    }
    return plan;
  }

  bool realize(std::uint64_t draw) const {
    switch (kind) {
      case Kind::Always:
        return true;
      case Kind::Never:
        return false;
      case Kind::Threshold:
        return draw < threshold;
    }
    return false;
  }

  bool needs_draw() const { return kind == Kind::Threshold; }
};

}  // namespace

SimulationResult run_simulation(const GameConfig& cfg,
                                const StrategyProfile& profile,
                                std::uint64_t epochs, std::uint64_t seed,
                                std::vector<EpochTraceRow>* trace) {
  const ResolvedGame g = resolve_game(cfg);
  profile.validate(g.n_agents);
  const std::size_t n = g.n_agents;
  if (n > 0xFFFFFFFFull)
    throw std::domain_error("agent count exceeds the RNG range");
  const std::uint64_t slots_per_epoch =
      cfg.incentives.network.slots_per_epoch;

  const CellIndex cell{n};
  std::vector<Rational> value(cell.size());
  for (std::size_t i = 0; i < n; ++i)
    for (Role role : {Role::Proposer, Role::Attester})
      for (Action action : {Action::Cooperate, Action::Deviate})
        for (std::size_t k = 0; k < n; ++k) {
          const Rational gamma = Rational(static_cast<unsigned>(k)) /
                                 Rational(static_cast<unsigned>(n - 1));
          for (bool leak : {false, true})
            value[cell(i, role, action, k, leak)] =
                g.utility_at(role, action, gamma, leak).net();
        }

  std::vector<BernoulliPlan> plan_proposer(n), plan_attester(n);
  for (std::size_t i = 0; i < n; ++i) {
    plan_proposer[i] =
        BernoulliPlan::from(profile.strategies[i].cooperate_as_proposer);
    plan_attester[i] =
        BernoulliPlan::from(profile.strategies[i].cooperate_as_attester);
  }

  const SlotRng rng{seed};
  std::vector<std::uint64_t> counts(cell.size(), 0);
  std::vector<std::uint64_t> epoch_counts;
  if (trace) epoch_counts.assign(cell.size(), 0);

  std::vector<Action> actions(n, Action::Cooperate);
  EpochState state;
  std::uint64_t leak_epochs = 0;

  for (std::uint64_t epoch = 0; epoch < epochs; ++epoch) {
    bool leak_now = false;
    switch (cfg.leak) {
      case LeakMode::ForcedOn:
        leak_now = true;
        break;
      case LeakMode::ForcedOff:
        leak_now = false;
        break;
      case LeakMode::Derived:
        leak_now = state.leak_active;
        break;
    }
    if (leak_now) ++leak_epochs;
    if (trace) std::fill(epoch_counts.begin(), epoch_counts.end(), 0);

    std::uint64_t cooperating_attester_slots = 0;
    for (std::uint64_t slot = 0; slot < slots_per_epoch; ++slot) {
      const std::size_t proposer =
          rng.bounded(epoch, slot, 0, static_cast<std::uint32_t>(n));

      std::size_t total_deviators = 0;
      for (std::size_t i = 0; i < n; ++i) {
        const BernoulliPlan& plan =
            i == proposer ? plan_proposer[i] : plan_attester[i];
        const bool cooperates =
            plan.realize(plan.needs_draw() ? rng.draw(epoch, slot, 1 + i) : 0);
        actions[i] = cooperates ? Action::Cooperate : Action::Deviate;
        if (!cooperates) ++total_deviators;
        if (cooperates && i != proposer) ++cooperating_attester_slots;
      }

      for (std::size_t i = 0; i < n; ++i) {
        const Role role = i == proposer ? Role::Proposer : Role::Attester;
        const std::size_t others_deviating =
            total_deviators - (actions[i] == Action::Deviate ? 1 : 0);
        const std::size_t idx =
            cell(i, role, actions[i], others_deviating, leak_now);
        ++counts[idx];
        if (trace) ++epoch_counts[idx];
      }
    }

    const std::uint64_t attester_slots = (n - 1) * slots_per_epoch;
    const bool finalized = finalization_check(
        attester_slots == 0
            ? Rational(1)
            : Rational(cooperating_attester_slots) / Rational(attester_slots));

    if (trace) {
      EpochTraceRow row;
      row.epoch = epoch;
      row.finalized = finalized;
      row.leak_active = leak_now;
      row.agent_net.resize(n, Rational(0));
      const std::size_t per_agent = cell.size() / n;
      for (std::size_t idx = 0; idx < epoch_counts.size(); ++idx)
        if (epoch_counts[idx] != 0)
          row.agent_net[idx / per_agent] +=
              Rational(epoch_counts[idx]) * value[idx];
      trace->push_back(std::move(row));
    }

    state = step_epoch(state, finalized);
  }

  SimulationResult result;
  result.n_agents = n;
  result.epochs = epochs;
  result.slots = epochs * slots_per_epoch;
  result.rng_seed = seed;
  result.leak_epochs = leak_epochs;
  result.agents.resize(n);

  const std::size_t per_agent = cell.size() / n;
  for (std::size_t i = 0; i < n; ++i) {
    AgentStats& stats = result.agents[i];
    Rational sum = 0, sum_sq = 0;
    for (std::size_t local = 0; local < per_agent; ++local) {
      const std::size_t idx = i * per_agent + local;
      const std::uint64_t c = counts[idx];
      if (c == 0) continue;
      sum += Rational(c) * value[idx];
      sum_sq += Rational(c) * value[idx] * value[idx];
    }
    stats.total_net = sum;

    for (std::size_t k = 0; k < n; ++k)
      for (bool leak : {false, true}) {
        stats.proposer_cooperate +=
            counts[cell(i, Role::Proposer, Action::Cooperate, k, leak)];
        stats.proposer_deviate +=
            counts[cell(i, Role::Proposer, Action::Deviate, k, leak)];
        stats.attester_cooperate +=
            counts[cell(i, Role::Attester, Action::Cooperate, k, leak)];
        stats.attester_deviate +=
            counts[cell(i, Role::Attester, Action::Deviate, k, leak)];
      }

    const std::uint64_t slots = stats.slots();
    if (slots > 0) stats.empirical_mean = sum / Rational(slots);
    if (slots > 1) {
      const Rational variance =
          (sum_sq - sum * sum / Rational(slots)) / Rational(slots - 1);
      stats.std_error = std::sqrt(to_double(variance) /
                                  static_cast<double>(slots));
    }
  }
  return result;
}

}  // namespace eth2game
