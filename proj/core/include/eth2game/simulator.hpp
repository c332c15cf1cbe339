#pragma once

#include "eth2game/equilibrium.hpp"
#include "eth2game/game.hpp"
#include "eth2game/numeric.hpp"

#include <cstdint>
#include <vector>

namespace eth2game {

// Inactivity-leak trigger state, advanced once per epoch.
struct EpochState {
  std::uint64_t epoch_index = 0;
  bool checkpoint_finalized = true;
  std::uint32_t consecutive_unfinalized = 0;
  bool leak_active = false;
};

// A checkpoint finalizes when the online attesting stake reaches two thirds
// of the total effective balance (inclusive, exact comparison).
bool finalization_check(const Rational& online_stake_fraction);

// Counter update: finalization resets the streak and ends any leak; a fourth
// consecutive unfinalized epoch switches the leak on.
EpochState step_epoch(const EpochState& state, bool finalized);

struct AgentStats {
  Rational total_net;           // exact sum of per-slot nets
  std::uint64_t proposer_cooperate = 0;
  std::uint64_t proposer_deviate = 0;
  std::uint64_t attester_cooperate = 0;
  std::uint64_t attester_deviate = 0;
  Rational empirical_mean;      // total_net / slots
  double std_error = 0.0;       // sample standard error of per-slot net

  std::uint64_t slots() const {
    return proposer_cooperate + proposer_deviate + attester_cooperate +
           attester_deviate;
  }
};

struct EpochTraceRow {
  std::uint64_t epoch = 0;
  bool finalized = false;
  bool leak_active = false;          // state governing this epoch's slots
  std::vector<Rational> agent_net;   // per-agent net earned in the epoch
};

struct SimulationResult {
  std::size_t n_agents = 0;
  std::uint64_t epochs = 0;
  std::uint64_t slots = 0;
  std::uint64_t rng_seed = 0;
  std::uint64_t leak_epochs = 0;
  std::vector<AgentStats> agents;
};

// Plays `epochs` epochs of slots_per_epoch one-slot games: per slot, draw the
// proposer uniformly, realize each agent's mixed strategy, and account the
// resulting utilities. In Derived leak mode an epoch finalizes when its
// cooperating attester-slot fraction passes finalization_check, and the leak
// state entering an epoch governs that epoch's slots; forced modes pin the
// leak flag. Deterministic for a fixed seed. `trace`, when given, receives
// one row per epoch.
SimulationResult run_simulation(const GameConfig& cfg,
                                const StrategyProfile& profile,
                                std::uint64_t epochs, std::uint64_t seed,
                                std::vector<EpochTraceRow>* trace = nullptr);

}  // namespace eth2game
