#pragma once

#include "eth2game/game.hpp"
#include "eth2game/numeric.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace eth2game {

struct StrategyProfile {
  std::vector<Strategy> strategies;

  static StrategyProfile all_cooperate(std::size_t n_agents);
  static StrategyProfile all_deviate(std::size_t n_agents);
  static StrategyProfile uniform(std::size_t n_agents, Strategy s);
  void validate(std::size_t n_agents) const;
};

// Constraint on the deviating fraction gamma of a conditioning event. Below
// and AtLeast compare against the config's gamma threshold d.
struct GammaCondition {
  enum class Kind { Any, Equals, BelowThreshold, AtLeastThreshold };
  Kind kind = Kind::Any;
  Rational value;  // used by Equals

  static GammaCondition any() { return {}; }
  static GammaCondition equals(Rational g);
  static GammaCondition below_threshold();
  static GammaCondition at_least_threshold();
  bool matches(const Rational& gamma, const Rational& threshold) const;
};

// Which utility branch the inactivity leak takes inside a conditioning
// event. The leak carries no probability of its own in the one-slot game; it
// selects equations. Unspecified means "whatever the config's leak mode
// implies" (forced value, or off in Derived mode).
enum class LeakHypothesis { Unspecified, Off, On };

// Conditioning event over the slot's random state (types and realized
// actions of the other agents). Every field is optional; an event built from
// a concrete Scenario pins all of them.
struct ScenarioEvent {
  std::optional<Role> focal_role;
  std::optional<bool> x_bc;
  std::optional<bool> x_bd;
  GammaCondition gamma = GammaCondition::any();
  LeakHypothesis leak = LeakHypothesis::Unspecified;

  ScenarioEvent() = default;
  explicit ScenarioEvent(const Scenario& scenario);
  std::string describe() const;
};

struct ExpectedUtility {
  // Conditional mean when `conditioning` is present, plain mean otherwise.
  Rational value;
  // p(event) under the type lottery and the opposing mixed strategies; 1
  // when unconditioned.
  Rational event_probability = 1;
  std::optional<ScenarioEvent> conditioning;

  // The event-weighted form p(event) * E[u | event].
  Rational weighted() const { return value * event_probability; }
};

// Argmax set over one agent's strategies against a fixed opposing profile.
// Expected utility is linear in each role's cooperation probability, so the
// set is a product over roles of {C}, {D}, or the whole interval.
enum class TypeBestResponse { CooperateOnly, DeviateOnly, Indifferent };

struct BestResponse {
  TypeBestResponse as_proposer = TypeBestResponse::Indifferent;
  TypeBestResponse as_attester = TypeBestResponse::Indifferent;
  Rational gap_as_proposer;  // EU(C | proposer) - EU(D | proposer)
  Rational gap_as_attester;

  bool contains(const Strategy& s) const;
};

// One row of the scenario case table: a (type, proposer-flag, gamma-range,
// leak-branch) situation with the focal agent's conditional utilities for
// Cooperate and Deviate. Rows that no realizable state satisfies (for
// example a proposer among the others with no proposer among the others)
// carry realizable = false and probability 0 and are excluded from verdicts.
struct CaseRow {
  std::string label;       // "1.1" ... "3.2.2", "4"
  std::string condition;   // human-readable event description
  bool realizable = false;
  Rational probability;    // conditional type probability given the event
  Rational eu_cooperate;
  Rational eu_deviate;
  Rational gap;
};

enum class EnumerationMode { Classes, BruteForce };

struct EquilibriumReport {
  std::size_t n_agents = 0;
  EnumerationMode mode = EnumerationMode::Classes;

  // Filled by verify_bne.
  std::optional<bool> bne_verdict;
  std::vector<BestResponse> best_responses;
  std::vector<bool> agent_in_best_response;

  // Filled by verify_ex_ante_dominance.
  std::optional<bool> dominance_verdict;
  bool strict = false;                // every realizable gap > 0
  std::optional<Rational> min_gap;    // over realizable states
  std::vector<CaseRow> case_breakdown;
};

// Ex ante expected utility of `agent` under the profile: the type lottery
// (uniform proposer by default) times each agent's mixed strategy, summed
// over all realizations with exact rational arithmetic.
ExpectedUtility expected_utility(std::size_t agent,
                                 const StrategyProfile& profile,
                                 const GameConfig& cfg);

// Expected utility restricted to the event and renormalized by its
// probability. Throws std::domain_error ("conditioning on null event") when
// the event has probability zero.
ExpectedUtility conditional_expected_utility(std::size_t agent,
                                             const StrategyProfile& profile,
                                             const ScenarioEvent& event,
                                             const GameConfig& cfg);

// Expected utility when the focal agent cooperates with probability
// p_cooperate in either role, against the opposing strategies in `profile`
// (the focal agent's own entry is ignored). Linear in p_cooperate.
ExpectedUtility mixed_strategy_eu(std::size_t agent,
                                  const Rational& p_cooperate,
                                  const StrategyProfile& profile,
                                  const GameConfig& cfg);

BestResponse best_response(std::size_t agent, const StrategyProfile& profile,
                           const GameConfig& cfg);

// True Bayesian-Nash check: every agent's strategy must lie in its argmax
// set against the rest of the profile.
EquilibriumReport verify_bne(const StrategyProfile& profile,
                             const GameConfig& cfg);

// Ex ante dominance of Cooperate: over every opposing pure action profile,
// every focal type, and every admissible leak branch, EU(C) >= EU(D).
// Classes mode collapses the 2^(n-1) opposing profiles to their
// (proposer action, deviator count) equivalence classes and is exact for any
// n; BruteForce enumerates bit masks literally (n <= 20) as a cross-check.
EquilibriumReport verify_ex_ante_dominance(
    const GameConfig& cfg, EnumerationMode mode = EnumerationMode::Classes);

struct SweepPoint {
  Rational value;
  EquilibriumReport report;
};

// Re-runs the dominance verification along one parameter axis. Axes:
// cost_per_epoch, gamma_threshold, inactivity_penalty, n_validators,
// tips-total. Unknown axis names throw UsageError.
std::vector<SweepPoint> sensitivity_sweep(const GameConfig& cfg,
                                          std::string_view axis,
                                          std::span<const Rational> grid);

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

inline constexpr std::string_view kSweepAxes[] = {
    "cost_per_epoch", "gamma_threshold", "inactivity_penalty", "n_validators",
    "tips-total"};

}  // namespace eth2game
