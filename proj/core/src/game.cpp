#include "eth2game/game.hpp"

#include <stdexcept>

namespace eth2game {

TypeAssignment TypeAssignment::with_proposer(std::size_t n_agents,
                                             std::size_t proposer) {
  if (proposer >= n_agents)
    throw std::invalid_argument("proposer index out of range");
  TypeAssignment a;
  a.roles.assign(n_agents, Role::Attester);
  a.roles[proposer] = Role::Proposer;
  return a;
}

std::size_t TypeAssignment::proposer_index() const {
  std::size_t index = roles.size();
  for (std::size_t i = 0; i < roles.size(); ++i) {
    if (roles[i] == Role::Proposer) {
      if (index != roles.size())
        throw std::invalid_argument(
            "type assignment has more than one proposer");
      index = i;
    }
  }
  if (index == roles.size())
    throw std::invalid_argument("type assignment has no proposer");
  return index;
}

void TypeAssignment::validate() const { (void)proposer_index(); }

bool Strategy::pure() const {
  return (cooperate_as_proposer == 0 || cooperate_as_proposer == 1) &&
         (cooperate_as_attester == 0 || cooperate_as_attester == 1);
}

void Strategy::validate() const {
  if (cooperate_as_proposer < 0 || cooperate_as_proposer > 1 ||
      cooperate_as_attester < 0 || cooperate_as_attester > 1)
    throw std::domain_error("strategy probabilities must lie in [0, 1]");
}

void GameConfig::validate() const {
  if (n_agents < 2)
    throw std::domain_error("game.n_agents: at least two agents required");
  if (prior_proposer && (*prior_proposer < 0 || *prior_proposer > 1))
    throw std::domain_error("game.prior_proposer: must lie in [0, 1]");
  if (gamma_threshold <= 0 || gamma_threshold > 1)
    throw std::domain_error("game.gamma_threshold: must lie in (0, 1]");
  if (inactivity_penalty && *inactivity_penalty < 0)
    throw std::domain_error("game.inactivity_penalty: must be nonnegative");
  if (cost_per_epoch && *cost_per_epoch < 0)
    throw std::domain_error("game.cost_per_epoch: must be nonnegative");
  incentives.validate();
}

void Scenario::validate() const {
  if (x_bc && x_bd)
    throw std::domain_error(
        "scenario: the unique proposer cannot both cooperate and deviate");
  if (gamma < 0 || gamma > 1)
    throw std::domain_error("scenario: gamma must lie in [0, 1]");
}

Rational ResolvedGame::proposer_reward(const Rational& gamma) const {
  const Rational online = (Rational(1) - gamma) * Rational(n_attesters);
  return proposer_fraction * Rational(floor_int(online)) * attester_reward +
         proposer_fixed;
}

UtilityOutcome ResolvedGame::utility_at(Role role, Action action,
                                        const Rational& gamma,
                                        bool leak_active) const {
  UtilityOutcome out;
  out.cost = cost_per_epoch;
  if (role == Role::Proposer) {
    // The leak never touches proposer income, and a skipped proposal is
    // merely forgone income.
    if (action == Action::Cooperate) out.gross_reward = proposer_reward(gamma);
    return out;
  }
  if (action == Action::Cooperate) {
    if (!leak_active) out.gross_reward = attester_reward;
    return out;
  }
  out.penalty = leak_active ? inactivity_penalty : attester_penalty;
  return out;
}

ResolvedGame resolve_game(const GameConfig& cfg) {
  cfg.validate();
  const RewardTable table = derive_rewards(cfg.incentives);

  ResolvedGame g;
  g.n_agents = cfg.n_agents;
  g.prior_proposer = cfg.prior_proposer
                         ? *cfg.prior_proposer
                         : Rational(1, static_cast<unsigned>(cfg.n_agents));
  g.prior_attester = Rational(1) - g.prior_proposer;
  g.gamma_threshold = cfg.gamma_threshold;
  g.attester_reward = table.attestation_reward;
  g.attester_penalty = table.attester_penalty;
  g.inactivity_penalty = cfg.inactivity_penalty ? *cfg.inactivity_penalty
                                                : table.attester_penalty;
  g.cost_per_epoch =
      cfg.cost_per_epoch ? *cfg.cost_per_epoch : table.cost_per_epoch;
  g.leak = cfg.leak;
  g.proposer_fraction =
      Rational(cfg.incentives.weights.proposer,
               cfg.incentives.weights.total - cfg.incentives.weights.proposer);
  g.n_attesters = cfg.incentives.network.resolved_n_attesters();
  g.proposer_fixed = table.proposer_sync + table.tips_total;

  g.proposer_reward_by_deviators.reserve(g.n_agents);
  const Rational others(static_cast<unsigned>(g.n_agents - 1));
  for (std::size_t k = 0; k < g.n_agents; ++k)
    g.proposer_reward_by_deviators.push_back(
        g.proposer_reward(Rational(static_cast<unsigned>(k)) / others));
  return g;
}

Scenario classify_scenario(std::span<const Action> profile,
                           const TypeAssignment& assignment,
                           std::size_t focal_agent, const GameConfig& cfg,
                           std::optional<bool> leak_history) {
  if (profile.size() != assignment.roles.size())
    throw std::invalid_argument("profile and assignment lengths differ");
  if (focal_agent >= profile.size())
    throw std::invalid_argument("focal agent index out of range");
  const std::size_t n = profile.size();
  if (n < 2) throw std::invalid_argument("at least two agents required");
  const std::size_t proposer = assignment.proposer_index();

  Scenario s;
  if (proposer != focal_agent) {
    s.x_bc = profile[proposer] == Action::Cooperate;
    s.x_bd = !s.x_bc;
  }
  std::size_t deviators = 0;
  for (std::size_t j = 0; j < n; ++j)
    if (j != focal_agent && profile[j] == Action::Deviate) ++deviators;
  s.gamma = Rational(static_cast<unsigned>(deviators)) /
            Rational(static_cast<unsigned>(n - 1));

  switch (cfg.leak) {
    case LeakMode::ForcedOn:
      s.leak_triggered = true;
      break;
    case LeakMode::ForcedOff:
      s.leak_triggered = false;
      break;
    case LeakMode::Derived:
      s.leak_triggered = leak_history.value_or(false);
      break;
  }
  return s;
}

UtilityOutcome utility(std::size_t focal_agent,
                       std::span<const Action> profile,
                       const TypeAssignment& assignment,
                       const Scenario& scenario, const GameConfig& cfg) {
  if (profile.size() != assignment.roles.size())
    throw std::invalid_argument("profile and assignment lengths differ");
  if (focal_agent >= profile.size())
    throw std::invalid_argument("focal agent index out of range");
  scenario.validate();
  assignment.validate();

  const ResolvedGame g = resolve_game(cfg);
  return g.utility_at(assignment.roles[focal_agent], profile[focal_agent],
                      scenario.gamma, scenario.leak_triggered);
}

}  // namespace eth2game
