#pragma once

#include "eth2game/numeric.hpp"

#include <cstdint>

namespace eth2game {

// Finalizing mix of SplitMix64 (Steele, Lea, Flood). Full 64-bit avalanche,
// identical on every platform.
std::uint64_t splitmix64(std::uint64_t x);

// Stateless counter-based generator: every (seed, epoch, slot, stream, nonce)
// cell is one independent 64-bit draw, so simulation replicas reproduce
// exactly regardless of evaluation order or platform.
//
// Stream assignment used by the simulator:
//   stream 0      proposer selection for the slot
//   stream 1 + i  agent i's action realization for the slot
struct SlotRng {
  std::uint64_t seed = 0;

  std::uint64_t draw(std::uint64_t epoch, std::uint64_t slot,
                     std::uint64_t stream, std::uint64_t nonce = 0) const;

  // Unbiased integer in [0, n) via rejection sampling over the nonce.
  // Requires n > 0.
  std::uint32_t bounded(std::uint64_t epoch, std::uint64_t slot,
                        std::uint64_t stream, std::uint32_t n) const;
};

// Threshold for "draw < threshold" Bernoulli realization of probability p,
// computed exactly as floor(p * 2^64) with p clamped to [0, 1]. The p == 1
// case is handled by callers (always true) because 2^64 does not fit u64.
std::uint64_t bernoulli_threshold(const Rational& p);

}  // namespace eth2game
