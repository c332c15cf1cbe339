#pragma once

// Independent reference implementation used only by tests. Everything here
// is derived directly from the model equations by straight transcription:
// full enumeration instead of equivalence classes, recomputation from scratch
// instead of incremental state. Kept deliberately separate from the library
// internals so the two routes can disagree.

#include "eth2game/equilibrium.hpp"
#include "eth2game/game.hpp"

#include <cstdint>
#include <vector>

namespace oracle {

using eth2game::Action;
using eth2game::GameConfig;
using eth2game::Rational;
using eth2game::Role;
using eth2game::Strategy;

// Per-epoch quantities recomputed from first principles.
struct Values {
  std::size_t n = 0;
  Rational prior_b;          // P(focal agent proposes)
  Rational d;                // gamma threshold
  Rational br;
  Rational r_a;              // attestation total
  Rational p_a;              // attester penalty
  Rational p_il;             // inactivity-leak penalty
  Rational r_c;              // sync committee reward
  Rational proposer_frac;    // w_p / (w_total - w_p)
  std::uint64_t n_attesters = 0;
  Rational proposer_fixed;   // sync aggregation + tips
  Rational cost;             // per-epoch cost
  bool forced_leak_on = false;
  bool forced_leak_off = false;
};

Values derive(const GameConfig& cfg);

Rational proposer_reward(const Values& v, const Rational& gamma);

// Case-equation net utility for one realized situation.
Rational net(const Values& v, Role role, Action action, const Rational& gamma,
             bool leak);

// Ex ante expected utility by full enumeration over the proposer lottery and
// all 2^n action realizations. `leak` is the exogenous flag for every atom.
Rational expected_utility(const Values& v, std::size_t focal,
                          const std::vector<Strategy>& profile, bool leak);

// Best response of `focal` against the other strategies: sign of the
// per-type endpoint gaps (+1 cooperate, 0 tie, -1 deviate).
struct BestResponse {
  int proposer = 0;
  int attester = 0;
  Rational gap_proposer;
  Rational gap_attester;
};

BestResponse best_response(const Values& v, std::size_t focal,
                           const std::vector<Strategy>& profile, bool leak);

bool is_bne(const Values& v, const std::vector<Strategy>& profile, bool leak);

// Ex ante dominance of Cooperate over every opposing pure action profile
// (2^(n-1) bit masks), every focal type, every proposer position, and every
// admissible leak branch (off when gamma < d; both when gamma >= d, unless
// the config forces one).
struct Dominance {
  bool holds = false;
  bool strict = false;
  Rational min_gap;
};

Dominance dominance(const Values& v);

// Leak state after feeding the whole finalization history through the
// trigger rule, recomputed from scratch: active iff the last four entries
// exist and are all unfinalized.
bool leak_after(const std::vector<bool>& finalized_history);

}  // namespace oracle
