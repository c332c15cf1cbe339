#include "eth2game/rng.hpp"

#include <limits>
#include <stdexcept>

namespace eth2game {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t SlotRng::draw(std::uint64_t epoch, std::uint64_t slot,
                            std::uint64_t stream, std::uint64_t nonce) const {
  std::uint64_t h = splitmix64(seed ^ 0x243f6a8885a308d3ULL);
  h = splitmix64(h ^ epoch);
  h = splitmix64(h ^ slot);
  h = splitmix64(h ^ stream);
  h = splitmix64(h ^ nonce);
  return h;
}

std::uint32_t SlotRng::bounded(std::uint64_t epoch, std::uint64_t slot,
                               std::uint64_t stream, std::uint32_t n) const {
  if (n == 0) throw std::invalid_argument("bounded draw over empty range");
  constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
  const std::uint64_t rem = (kMax % n + 1) % n;  // 2^64 mod n
  const std::uint64_t cap = kMax - rem;
  for (std::uint64_t nonce = 0;; ++nonce) {
    const std::uint64_t r = draw(epoch, slot, stream, nonce);
    if (r <= cap) return static_cast<std::uint32_t>(r % n);
  }
}

std::uint64_t bernoulli_threshold(const Rational& p) {
  if (p <= 0) return 0;
  if (p >= 1) return std::numeric_limits<std::uint64_t>::max();
  const BigInt two64 = BigInt(1) << 64;
  const BigInt t = (numerator(p) * two64) / denominator(p);
  return t.convert_to<std::uint64_t>();
}

}  // namespace eth2game
