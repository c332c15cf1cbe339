#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "eth2game/game.hpp"
#include "oracle/oracle.hpp"

#include <stdexcept>
#include <vector>

using namespace eth2game;

TEST_CASE("type assignment has exactly one proposer") {
  const TypeAssignment a = TypeAssignment::with_proposer(4, 2);
  CHECK(a.roles.size() == 4);
  CHECK(a.proposer_index() == 2);
  CHECK_NOTHROW(a.validate());
  CHECK_THROWS_AS(TypeAssignment::with_proposer(4, 4),
                  std::invalid_argument);

  TypeAssignment two = a;
  two.roles[0] = Role::Proposer;
  CHECK_THROWS_AS(two.proposer_index(), std::invalid_argument);
  TypeAssignment none;
  none.roles = {Role::Attester, Role::Attester};
  CHECK_THROWS_AS(none.proposer_index(), std::invalid_argument);
}

TEST_CASE("strategies are probabilities") {
  CHECK(Strategy::pure_cooperate().pure());
  CHECK(Strategy::pure_deviate().pure());
  CHECK_FALSE(Strategy{Rational(1, 2), Rational(1)}.pure());
  CHECK(Strategy{Rational(1, 2), Rational(1)}.cooperate(Role::Attester) == 1);
  CHECK_NOTHROW(Strategy{Rational(1, 2), Rational(2, 3)}.validate());
  CHECK_THROWS_AS((Strategy{Rational(3, 2), Rational(1)}.validate()),
                  std::domain_error);
  CHECK_THROWS_AS((Strategy{Rational(1), Rational(-1, 100)}.validate()),
                  std::domain_error);
}

TEST_CASE("scenario flags are mutually exclusive, gamma a fraction") {
  Scenario s;
  CHECK_NOTHROW(s.validate());
  s.x_bc = true;
  s.x_bd = true;
  CHECK_THROWS_AS(s.validate(), std::domain_error);
  s.x_bd = false;
  s.gamma = Rational(5, 4);
  CHECK_THROWS_AS(s.validate(), std::domain_error);
}

TEST_CASE("game config validation") {
  GameConfig cfg;
  CHECK_NOTHROW(cfg.validate());
  cfg.n_agents = 1;
  CHECK_THROWS_AS(cfg.validate(), std::domain_error);
  cfg.n_agents = 4;
  cfg.prior_proposer = Rational(3, 2);
  CHECK_THROWS_AS(cfg.validate(), std::domain_error);
  cfg.prior_proposer.reset();
  cfg.gamma_threshold = 0;
  CHECK_THROWS_AS(cfg.validate(), std::domain_error);
  cfg.gamma_threshold = Rational(1, 3);
  cfg.inactivity_penalty = Rational(-1);
  CHECK_THROWS_AS(cfg.validate(), std::domain_error);
  cfg.inactivity_penalty.reset();
  cfg.cost_per_epoch = Rational(-5);
  CHECK_THROWS_AS(cfg.validate(), std::domain_error);
}

TEST_CASE("resolve_game fills the derived quantities") {
  const GameConfig cfg;
  const ResolvedGame g = resolve_game(cfg);
  const oracle::Values v = oracle::derive(cfg);

  CHECK(g.n_agents == 4);
  CHECK(g.prior_proposer == Rational(1, 4));
  CHECK(g.prior_attester == Rational(3, 4));
  CHECK(g.gamma_threshold == Rational(1, 3));
  CHECK(g.attester_reward == v.r_a);
  CHECK(g.attester_penalty == v.p_a);
  CHECK(g.inactivity_penalty == v.p_a);  // defaults to the attester penalty
  CHECK(g.cost_per_epoch == v.cost);
  CHECK(g.proposer_fraction == Rational(1, 7));
  CHECK(g.n_attesters == 500'000);
  CHECK(g.proposer_fixed == v.proposer_fixed);
  CHECK_FALSE(g.analytic_leak());

  REQUIRE(g.proposer_reward_by_deviators.size() == 4);
  for (int k = 0; k < 4; ++k) {
    const Rational gamma(k, 3);
    CHECK(g.proposer_reward_by_deviators[k] == g.proposer_reward(gamma));
    CHECK(g.proposer_reward(gamma) == oracle::proposer_reward(v, gamma));
  }
  CHECK(g.proposer_reward_by_deviators[0] >
        g.proposer_reward_by_deviators[3]);
}

TEST_CASE("resolve_game honors overrides") {
  GameConfig cfg;
  cfg.prior_proposer = Rational(1, 10);
  cfg.inactivity_penalty = Rational(123);
  cfg.cost_per_epoch = Rational(456);
  cfg.leak = LeakMode::ForcedOn;
  const ResolvedGame g = resolve_game(cfg);
  CHECK(g.prior_proposer == Rational(1, 10));
  CHECK(g.prior_attester == Rational(9, 10));
  CHECK(g.inactivity_penalty == 123);
  CHECK(g.cost_per_epoch == 456);
  CHECK(g.analytic_leak());
}

TEST_CASE("utility branches match the case equations") {
  GameConfig cfg;
  cfg.inactivity_penalty = Rational(99'999);  // distinct from P^A
  const ResolvedGame g = resolve_game(cfg);
  const oracle::Values v = oracle::derive(cfg);

  const std::vector<Rational> gammas = {Rational(0), Rational(1, 3),
                                        Rational(2, 3), Rational(1)};
  for (const Rational& gamma : gammas) {
    for (bool leak : {false, true}) {
      for (Role role : {Role::Proposer, Role::Attester}) {
        for (Action action : {Action::Cooperate, Action::Deviate}) {
          const UtilityOutcome out = g.utility_at(role, action, gamma, leak);
          CHECK(out.net() == oracle::net(v, role, action, gamma, leak));
          CHECK(out.cost == v.cost);  // charged in every branch
        }
      }
    }
  }

  // Spot shapes: a skipped proposal forfeits income without a penalty, and
  // the leak replaces the attester reward with nothing and the ordinary
  // penalty with the inactivity one.
  CHECK(g.utility_at(Role::Proposer, Action::Deviate, 0, false).gross_reward ==
        0);
  CHECK(g.utility_at(Role::Proposer, Action::Deviate, 0, false).penalty == 0);
  CHECK(g.utility_at(Role::Proposer, Action::Cooperate, 0, true).net() ==
        g.utility_at(Role::Proposer, Action::Cooperate, 0, false).net());
  CHECK(g.utility_at(Role::Attester, Action::Cooperate, 0, true).gross_reward ==
        0);
  CHECK(g.utility_at(Role::Attester, Action::Deviate, 0, true).penalty ==
        Rational(99'999));
  CHECK(g.utility_at(Role::Attester, Action::Deviate, 0, false).penalty ==
        g.attester_penalty);
}

TEST_CASE("deviating attester with a small direct cost, worked numbers") {
  GameConfig cfg;
  cfg.cost_per_epoch = Rational(1000);
  const ResolvedGame g = resolve_game(cfg);
  const UtilityOutcome out =
      g.utility_at(Role::Attester, Action::Deviate, Rational(0), false);
  CHECK(format_fixed(out.net(), 2) == "-11119.29");  // -(P^A) - 1000
}

TEST_CASE("classify_scenario reads the profile from the focal seat") {
  const GameConfig cfg;  // n = 4
  const TypeAssignment assignment = TypeAssignment::with_proposer(4, 1);
  const std::vector<Action> profile = {Action::Cooperate, Action::Deviate,
                                       Action::Deviate, Action::Cooperate};

  // Focal 0 attests; the proposer among the others deviates.
  Scenario s0 = classify_scenario(profile, assignment, 0, cfg);
  CHECK_FALSE(s0.x_bc);
  CHECK(s0.x_bd);
  CHECK(s0.gamma == Rational(2, 3));
  CHECK_FALSE(s0.leak_triggered);

  // Focal 1 proposes; both flags are off and gamma counts the others.
  Scenario s1 = classify_scenario(profile, assignment, 1, cfg);
  CHECK_FALSE(s1.x_bc);
  CHECK_FALSE(s1.x_bd);
  CHECK(s1.gamma == Rational(1, 3));

  // Cooperating proposer seen from focal 3; agent 2 still deviates.
  std::vector<Action> coop = profile;
  coop[1] = Action::Cooperate;
  Scenario s2 = classify_scenario(coop, assignment, 3, cfg);
  CHECK(s2.x_bc);
  CHECK_FALSE(s2.x_bd);
  CHECK(s2.gamma == Rational(1, 3));

  GameConfig forced = cfg;
  forced.leak = LeakMode::ForcedOn;
  CHECK(classify_scenario(profile, assignment, 0, forced).leak_triggered);
  forced.leak = LeakMode::ForcedOff;
  CHECK_FALSE(
      classify_scenario(profile, assignment, 0, forced, true).leak_triggered);
  CHECK(classify_scenario(profile, assignment, 0, cfg, true).leak_triggered);
}

TEST_CASE("utility dispatches on the classified scenario") {
  GameConfig cfg;
  cfg.inactivity_penalty = Rational(77'777);
  const ResolvedGame g = resolve_game(cfg);
  const oracle::Values v = oracle::derive(cfg);
  const TypeAssignment assignment = TypeAssignment::with_proposer(4, 0);

  for (unsigned mask = 0; mask < 16; ++mask) {
    std::vector<Action> profile;
    for (int j = 0; j < 4; ++j)
      profile.push_back(((mask >> j) & 1u) ? Action::Cooperate
                                           : Action::Deviate);
    for (std::size_t focal = 0; focal < 4; ++focal) {
      for (bool leak : {false, true}) {
        const Scenario s =
            classify_scenario(profile, assignment, focal, cfg, leak);
        const UtilityOutcome out =
            utility(focal, profile, assignment, s, cfg);
        const Role role = focal == 0 ? Role::Proposer : Role::Attester;
        CHECK(out.net() ==
              oracle::net(v, role, profile[focal], s.gamma, leak));
      }
    }
  }
}
