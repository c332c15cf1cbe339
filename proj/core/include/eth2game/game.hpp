#pragma once

#include "eth2game/incentive.hpp"
#include "eth2game/numeric.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace eth2game {

// One-slot game between the slot's block proposer and the attesters.
// Cooperate keeps the validator online for the slot; Deviate turns it off.
enum class Action { Cooperate, Deviate };

enum class Role { Proposer, Attester };

// Realized roles for one slot, one entry per agent. Exactly one proposer.
struct TypeAssignment {
  std::vector<Role> roles;

  static TypeAssignment with_proposer(std::size_t n_agents,
                                      std::size_t proposer);
  std::size_t proposer_index() const;  // validates uniqueness
  void validate() const;
};

// Behavioral strategy: cooperation probability per role.
struct Strategy {
  Rational cooperate_as_proposer = 1;
  Rational cooperate_as_attester = 1;

  const Rational& cooperate(Role role) const {
    return role == Role::Proposer ? cooperate_as_proposer
                                  : cooperate_as_attester;
  }
  bool pure() const;
  static Strategy pure_cooperate() { return {1, 1}; }
  static Strategy pure_deviate() { return {0, 0}; }
  void validate() const;
};

// Whether the inactivity leak is in force for the analyzed slot. The leak is
// exogenous to a single slot: Derived means "no trigger history assumed" for
// analytic evaluation, with the actual four-epoch trigger machine living in
// the simulator, which feeds realized leak state back in per slot.
enum class LeakMode { ForcedOn, ForcedOff, Derived };

struct GameConfig {
  std::size_t n_agents = 4;
  // Probability of the focal agent being the slot's proposer. Defaults to
  // the uniform lottery 1/n; given an attester focal agent the proposer is
  // uniform among the remaining agents.
  std::optional<Rational> prior_proposer;
  Rational gamma_threshold{1, 3};  // d: offline fraction that threatens finality
  // Penalty per epoch for a deviating attester while the leak is active.
  // Defaults to the ordinary attester penalty.
  std::optional<Rational> inactivity_penalty;
  LeakMode leak = LeakMode::Derived;
  IncentiveParams incentives;
  // Direct override of the per-epoch cost; defaults to the value derived
  // from incentives.costs.
  std::optional<Rational> cost_per_epoch;

  void validate() const;
};

// Situation descriptor for a focal agent, per the game's scenario variables:
// x_bc/x_bd flag a unique proposer among the other agents playing C or D
// (both zero when the focal agent itself proposes), gamma is the deviating
// fraction of the other agents, and leak_triggered the exogenous leak state.
struct Scenario {
  bool x_bc = false;
  bool x_bd = false;
  Rational gamma = 0;
  bool leak_triggered = false;

  void validate() const;
};

struct UtilityOutcome {
  Rational gross_reward;
  Rational penalty;
  Rational cost;

  Rational net() const { return gross_reward - penalty - cost; }
};

// All numbers utility evaluation needs, resolved once from a GameConfig.
struct ResolvedGame {
  std::size_t n_agents = 0;
  Rational prior_proposer;
  Rational prior_attester;
  Rational gamma_threshold;
  Rational attester_reward;     // R^A
  Rational attester_penalty;    // P^A
  Rational inactivity_penalty;  // P^IL
  Rational cost_per_epoch;      // C^EP
  LeakMode leak = LeakMode::Derived;

  // Proposer-reward ingredients (attestation part scales with online count).
  Rational proposer_fraction;  // w_proposer / (w_total - w_proposer)
  std::uint64_t n_attesters = 0;
  Rational proposer_fixed;     // sync aggregation + tips, gamma-independent

  // R^P with floor((1-gamma) * N_A) attesters included.
  Rational proposer_reward(const Rational& gamma) const;
  // Same, precomputed for gamma = k/(n_agents-1); index k = deviator count.
  std::vector<Rational> proposer_reward_by_deviators;

  // Leak flag used for analytic (non-simulated) evaluation.
  bool analytic_leak() const { return leak == LeakMode::ForcedOn; }

  UtilityOutcome utility_at(Role role, Action action, const Rational& gamma,
                            bool leak_active) const;
};

ResolvedGame resolve_game(const GameConfig& cfg);

// Scenario of `focal_agent` under a realized action profile. gamma counts
// deviators among the other agents only (the focal agent's own action never
// moves its own gamma). leak_history supplies the simulator's realized leak
// state and is only consulted in Derived mode.
Scenario classify_scenario(std::span<const Action> profile,
                           const TypeAssignment& assignment,
                           std::size_t focal_agent, const GameConfig& cfg,
                           std::optional<bool> leak_history = std::nullopt);

// Realized utility of the focal agent for one slot:
//   proposer, C: gross R^P (reduced attestation content when attesters are
//                offline; the leak never touches proposer rewards)
//   proposer, D: zero gross, zero penalty (missed proposals cost nothing)
//   attester, C: gross R^A, or nothing while the leak is active
//   attester, D: penalty P^A, or P^IL while the leak is active
// The per-epoch cost is charged in every branch.
UtilityOutcome utility(std::size_t focal_agent,
                       std::span<const Action> profile,
                       const TypeAssignment& assignment,
                       const Scenario& scenario, const GameConfig& cfg);

}  // namespace eth2game
