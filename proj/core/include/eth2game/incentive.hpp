#pragma once

#include "eth2game/numeric.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace eth2game {

// Validator duty weights, all expressed in units of `total`.
struct ProtocolWeights {
  std::uint64_t source = 14;
  std::uint64_t target = 26;
  std::uint64_t head = 14;
  std::uint64_t sync = 2;
  std::uint64_t proposer = 8;
  std::uint64_t total = 64;

  bool closed() const;  // source+target+head+sync+proposer == total
  void validate() const;
};

// Network-wide constants and state. total_staked_gwei and n_attesters are
// derivable: when unset they default to n_validators * effective balance of
// the representative validator, and to n_validators respectively.
struct NetworkParams {
  std::uint64_t n_validators = 500'000;
  std::optional<std::uint64_t> total_staked_gwei;
  std::optional<std::uint64_t> n_attesters;
  std::uint64_t effective_balance_increment = kGweiPerEth;
  std::uint64_t base_reward_factor = 64;
  std::uint64_t sync_committee_size = 512;
  std::uint64_t slots_per_epoch = 32;

  std::uint64_t resolved_n_attesters() const;
  void validate() const;
};

// One validator's balance. The effective balance is the total balance rounded
// to the nearest 1-ETH increment (ties round up) and capped at 32 ETH.
struct BalanceState {
  std::uint64_t total_balance_gwei = 32 * kGweiPerEth;
  std::uint64_t effective_balance_gwei = 32 * kGweiPerEth;

  static BalanceState from_total(std::uint64_t total_balance_gwei,
                                 std::uint64_t increment_gwei = kGweiPerEth);
  void validate(std::uint64_t increment_gwei = kGweiPerEth) const;
};

inline constexpr std::uint64_t kMaxEffectiveBalanceGwei = 32 * kGweiPerEth;

// Cost components of running one validator, amortized over `years` of
// service. Monetary fields are GWei totals for the service period.
struct CostSchedule {
  std::uint64_t setup_gwei = 0;            // one-time infrastructure setup
  std::uint64_t infrastructure_gwei = 0;   // hardware/software depreciation
  std::uint64_t operating_gwei = 0;        // upkeep, upgrades, replacements
  std::uint64_t participation_gwei = 32 * kGweiPerEth;  // the 32 ETH stake
  std::uint64_t attest_exec_gwei = 0;      // energy: attesting
  std::uint64_t sync_exec_gwei = 0;        // energy: sync committee duty
  std::uint64_t propose_exec_gwei = 0;     // energy: proposing
  Rational years = 1;

  void validate() const;
};

// Per-transaction tips of one proposed block, in GWei.
struct TransactionTips {
  std::vector<std::uint64_t> tips;

  void validate() const;
};

// Epochs per year: (60*60*24*365) / (12 * 32).
inline constexpr std::uint64_t kEpochsPerYear = 82'125;

// --- reward, penalty and cost operations (exact rational results) ---

// Nearest 1-ETH-increment rounding (half up), capped at 32 ETH.
std::uint64_t effective_balance(std::uint64_t total_balance_gwei,
                                std::uint64_t increment_gwei = kGweiPerEth);

// Base reward per effective-balance increment:
// ebi * base_reward_factor / sqrt(total staked GWei). The square root is
// evaluated in double precision (correctly rounded) and carried exactly
// afterwards. Throws std::domain_error when no stake is present.
Rational base_reward(const NetworkParams& params);

// Attestation rewards: (weight/total) * increments(eb) * br, where
// increments(eb) = eb / increment.
Rational attestation_source_reward(std::uint64_t eb_gwei, const Rational& br,
                                   const ProtocolWeights& w,
                                   std::uint64_t increment_gwei = kGweiPerEth);
Rational attestation_target_reward(std::uint64_t eb_gwei, const Rational& br,
                                   const ProtocolWeights& w,
                                   std::uint64_t increment_gwei = kGweiPerEth);
Rational attestation_head_reward(std::uint64_t eb_gwei, const Rational& br,
                                 const ProtocolWeights& w,
                                 std::uint64_t increment_gwei = kGweiPerEth);
Rational attestation_total_reward(std::uint64_t eb_gwei, const Rational& br,
                                  const ProtocolWeights& w,
                                  std::uint64_t increment_gwei = kGweiPerEth);

// Per-member sync committee reward:
// (1/(slots_per_epoch*committee_size)) * (w_sync/w_total) * N_V
//   * increments(eb) * br.
Rational sync_committee_reward(const NetworkParams& params,
                               std::uint64_t eb_gwei, const Rational& br,
                               const ProtocolWeights& w);

// Proposer-side rewards. The proposer fraction is
// w_proposer / (w_total - w_proposer); throws std::domain_error when
// w_proposer >= w_total.
Rational proposer_attestation_reward(std::uint64_t n_attesters,
                                     const Rational& r_a,
                                     const ProtocolWeights& w);
Rational proposer_sync_reward(const Rational& r_c, const ProtocolWeights& w,
                              std::uint64_t sync_committee_size);
Rational proposer_tips(const TransactionTips& tips);
Rational proposer_total_reward(const Rational& pa, const Rational& pc,
                               const Rational& pt);

// Penalties. The attester penalty is deliberately asymmetric: a wrong or
// missing head vote costs nothing, so only source + target contribute.
Rational attester_penalty(const Rational& r_as, const Rational& r_at);
Rational sync_penalty(const Rational& r_c);

// Annualized costs; amortization throws std::domain_error when years <= 0.
Rational annual_equipment_cost(const CostSchedule& c);
Rational annual_participation_cost(const CostSchedule& c);
Rational annual_execution_cost(const CostSchedule& c);
Rational annual_total_cost(const CostSchedule& c);
Rational cost_per_epoch(const CostSchedule& c);

// --- parameter bundle used by the game layer ---

struct IncentiveParams {
  ProtocolWeights weights;
  NetworkParams network;
  BalanceState balance;   // representative (homogeneous) validator
  CostSchedule costs;
  TransactionTips tips;   // tips of the block under consideration

  std::uint64_t resolved_total_staked() const;
  void validate() const;
};

// Every per-epoch quantity the game needs, derived once from the parameters.
struct RewardTable {
  Rational base_reward;
  Rational source_reward, target_reward, head_reward, attestation_reward;
  Rational sync_reward;
  Rational attester_penalty, sync_penalty;
  Rational proposer_attestation;  // at full attester participation
  Rational proposer_sync;
  Rational tips_total;
  Rational proposer_total;        // at full attester participation
  Rational annual_equipment, annual_participation, annual_execution;
  Rational annual_total;
  Rational cost_per_epoch;
};

RewardTable derive_rewards(const IncentiveParams& params);

// Proposer reward when a fraction gamma of the epoch's attesters is offline:
// the attestation component of the block scales with floor((1-gamma) * N_A);
// sync aggregation and tips are unaffected.
Rational proposer_reward_at(const IncentiveParams& params,
                            const RewardTable& table, const Rational& gamma);

}  // namespace eth2game
