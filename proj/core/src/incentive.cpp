#include "eth2game/incentive.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace eth2game {

bool ProtocolWeights::closed() const {
  return source + target + head + sync + proposer == total;
}

void ProtocolWeights::validate() const {
  if (source == 0 || target == 0 || head == 0 || sync == 0 || proposer == 0 ||
      total == 0)
    throw std::domain_error("weights: all weights must be positive");
  if (!closed())
    throw std::domain_error("weights: components must sum to total");
  if (proposer >= total)
    throw std::domain_error("weights: proposer must be below total");
}

std::uint64_t NetworkParams::resolved_n_attesters() const {
  return n_attesters ? *n_attesters : n_validators;
}

void NetworkParams::validate() const {
  if (n_validators < 2)
    throw std::domain_error("network.n_validators: must be at least 2");
  if (total_staked_gwei && *total_staked_gwei == 0)
    throw std::domain_error("network.total_staked_gwei: must be positive");
  if (resolved_n_attesters() > n_validators)
    throw std::domain_error(
        "network.n_attesters: cannot exceed n_validators");
  if (effective_balance_increment == 0)
    throw std::domain_error(
        "network.effective_balance_increment: must be positive");
  if (base_reward_factor == 0)
    throw std::domain_error("network.base_reward_factor: must be positive");
  if (sync_committee_size == 0)
    throw std::domain_error("network.sync_committee_size: must be positive");
  if (slots_per_epoch == 0)
    throw std::domain_error("network.slots_per_epoch: must be positive");
}

std::uint64_t effective_balance(std::uint64_t total_balance_gwei,
                                std::uint64_t increment_gwei) {
  if (increment_gwei == 0)
    throw std::domain_error("effective balance increment must be positive");
  // Round to the nearest increment, half up, then cap.
  const BigInt rounded =
      ((BigInt(total_balance_gwei) * 2 + increment_gwei) /
       (BigInt(increment_gwei) * 2)) *
      increment_gwei;
  const BigInt capped =
      rounded > kMaxEffectiveBalanceGwei ? BigInt(kMaxEffectiveBalanceGwei)
                                         : rounded;
  return capped.convert_to<std::uint64_t>();
}

BalanceState BalanceState::from_total(std::uint64_t total_balance_gwei,
                                      std::uint64_t increment_gwei) {
  return {total_balance_gwei,
          effective_balance(total_balance_gwei, increment_gwei)};
}

void BalanceState::validate(std::uint64_t increment_gwei) const {
  if (effective_balance_gwei > kMaxEffectiveBalanceGwei)
    throw std::domain_error("balance: effective balance above the 32 ETH cap");
  if (increment_gwei == 0 || effective_balance_gwei % increment_gwei != 0)
    throw std::domain_error(
        "balance: effective balance must be a whole number of increments");
}

void CostSchedule::validate() const {
  if (years <= 0)
    throw std::domain_error("costs.years: amortization period must be positive");
}

void TransactionTips::validate() const {
  // Tips are unsigned GWei amounts; nothing further to check.
}

Rational base_reward(const NetworkParams& params) {
  if (!params.total_staked_gwei || *params.total_staked_gwei == 0)
    throw std::domain_error("base reward requires positive total stake");
  const double root =
      std::sqrt(static_cast<double>(*params.total_staked_gwei));
  return Rational(params.effective_balance_increment) *
         Rational(params.base_reward_factor) / rational_from_double(root);
}

namespace {

Rational increments_of(std::uint64_t eb_gwei, std::uint64_t increment_gwei) {
  if (increment_gwei == 0)
    throw std::domain_error("effective balance increment must be positive");
  return Rational(eb_gwei) / Rational(increment_gwei);
}

Rational weighted_attestation(std::uint64_t weight, std::uint64_t eb_gwei,
                              const Rational& br, const ProtocolWeights& w,
                              std::uint64_t increment_gwei) {
  if (w.total == 0) throw std::domain_error("weights: total must be positive");
  return Rational(weight, w.total) * increments_of(eb_gwei, increment_gwei) *
         br;
}

}  // namespace

Rational attestation_source_reward(std::uint64_t eb_gwei, const Rational& br,
                                   const ProtocolWeights& w,
                                   std::uint64_t increment_gwei) {
  return weighted_attestation(w.source, eb_gwei, br, w, increment_gwei);
}

Rational attestation_target_reward(std::uint64_t eb_gwei, const Rational& br,
                                   const ProtocolWeights& w,
                                   std::uint64_t increment_gwei) {
  return weighted_attestation(w.target, eb_gwei, br, w, increment_gwei);
}

Rational attestation_head_reward(std::uint64_t eb_gwei, const Rational& br,
                                 const ProtocolWeights& w,
                                 std::uint64_t increment_gwei) {
  return weighted_attestation(w.head, eb_gwei, br, w, increment_gwei);
}

Rational attestation_total_reward(std::uint64_t eb_gwei, const Rational& br,
                                  const ProtocolWeights& w,
                                  std::uint64_t increment_gwei) {
  return weighted_attestation(w.source + w.target + w.head, eb_gwei, br, w,
                              increment_gwei);
}

Rational sync_committee_reward(const NetworkParams& params,
                               std::uint64_t eb_gwei, const Rational& br,
                               const ProtocolWeights& w) {
  const BigInt slots_members =
      BigInt(params.slots_per_epoch) * params.sync_committee_size;
  if (slots_members == 0)
    throw std::domain_error("sync reward requires nonzero committee and slots");
  return Rational(BigInt(1), slots_members) * Rational(w.sync, w.total) *
         Rational(params.n_validators) *
         increments_of(eb_gwei, params.effective_balance_increment) * br;
}

namespace {

Rational proposer_fraction(const ProtocolWeights& w) {
  if (w.proposer >= w.total)
    throw std::domain_error(
        "proposer weight must be strictly below the total weight");
  return Rational(w.proposer, w.total - w.proposer);
}

}  // namespace

Rational proposer_attestation_reward(std::uint64_t n_attesters,
                                     const Rational& r_a,
                                     const ProtocolWeights& w) {
  return proposer_fraction(w) * Rational(n_attesters) * r_a;
}

Rational proposer_sync_reward(const Rational& r_c, const ProtocolWeights& w,
                              std::uint64_t sync_committee_size) {
  return proposer_fraction(w) * r_c * Rational(sync_committee_size);
}

Rational proposer_tips(const TransactionTips& tips) {
  BigInt sum = 0;
  for (std::uint64_t t : tips.tips) sum += t;
  return Rational(sum);
}

Rational proposer_total_reward(const Rational& pa, const Rational& pc,
                               const Rational& pt) {
  return pa + pc + pt;
}

Rational attester_penalty(const Rational& r_as, const Rational& r_at) {
  return r_as + r_at;
}

Rational sync_penalty(const Rational& r_c) { return r_c; }

namespace {

void check_years(const CostSchedule& c) {
  if (c.years <= 0)
    throw std::domain_error("cost amortization period must be positive");
}

}  // namespace

Rational annual_equipment_cost(const CostSchedule& c) {
  check_years(c);
  return (Rational(c.setup_gwei) + Rational(c.infrastructure_gwei) +
          Rational(c.operating_gwei)) /
         c.years;
}

Rational annual_participation_cost(const CostSchedule& c) {
  check_years(c);
  return Rational(c.participation_gwei) / c.years;
}

Rational annual_execution_cost(const CostSchedule& c) {
  check_years(c);
  return (Rational(c.attest_exec_gwei) + Rational(c.sync_exec_gwei) +
          Rational(c.propose_exec_gwei)) /
         c.years;
}

Rational annual_total_cost(const CostSchedule& c) {
  return annual_equipment_cost(c) + annual_participation_cost(c) +
         annual_execution_cost(c);
}

Rational cost_per_epoch(const CostSchedule& c) {
  return annual_total_cost(c) / Rational(kEpochsPerYear);
}

std::uint64_t IncentiveParams::resolved_total_staked() const {
  if (network.total_staked_gwei) return *network.total_staked_gwei;
  const BigInt derived =
      BigInt(network.n_validators) * balance.effective_balance_gwei;
  if (derived > std::numeric_limits<std::uint64_t>::max())
    throw std::domain_error("derived total stake exceeds the GWei range");
  return derived.convert_to<std::uint64_t>();
}

void IncentiveParams::validate() const {
  weights.validate();
  network.validate();
  balance.validate(network.effective_balance_increment);
  costs.validate();
  tips.validate();
}

RewardTable derive_rewards(const IncentiveParams& params) {
  params.weights.validate();
  params.costs.validate();

  NetworkParams net = params.network;
  net.total_staked_gwei = params.resolved_total_staked();
  const std::uint64_t eb = params.balance.effective_balance_gwei;
  const std::uint64_t inc = net.effective_balance_increment;

  RewardTable t;
  t.base_reward = base_reward(net);
  t.source_reward =
      attestation_source_reward(eb, t.base_reward, params.weights, inc);
  t.target_reward =
      attestation_target_reward(eb, t.base_reward, params.weights, inc);
  t.head_reward =
      attestation_head_reward(eb, t.base_reward, params.weights, inc);
  t.attestation_reward =
      attestation_total_reward(eb, t.base_reward, params.weights, inc);
  t.sync_reward =
      sync_committee_reward(net, eb, t.base_reward, params.weights);
  t.attester_penalty = attester_penalty(t.source_reward, t.target_reward);
  t.sync_penalty = sync_penalty(t.sync_reward);
  t.proposer_attestation = proposer_attestation_reward(
      net.resolved_n_attesters(), t.attestation_reward, params.weights);
  t.proposer_sync = proposer_sync_reward(t.sync_reward, params.weights,
                                         net.sync_committee_size);
  t.tips_total = proposer_tips(params.tips);
  t.proposer_total = proposer_total_reward(t.proposer_attestation,
                                           t.proposer_sync, t.tips_total);
  t.annual_equipment = annual_equipment_cost(params.costs);
  t.annual_participation = annual_participation_cost(params.costs);
  t.annual_execution = annual_execution_cost(params.costs);
  t.annual_total = annual_total_cost(params.costs);
  t.cost_per_epoch = cost_per_epoch(params.costs);
  return t;
}

Rational proposer_reward_at(const IncentiveParams& params,
                            const RewardTable& table, const Rational& gamma) {
  if (gamma < 0 || gamma > 1)
    throw std::domain_error("offline fraction must lie in [0, 1]");
  const Rational online =
      (Rational(1) - gamma) * Rational(params.network.resolved_n_attesters());
  const BigInt included = floor_int(online);
  return proposer_attestation_reward(included.convert_to<std::uint64_t>(),
                                     table.attestation_reward,
                                     params.weights) +
         table.proposer_sync + table.tips_total;
}

}  // namespace eth2game
