#pragma once

#include <cassert>
#include <cstdint>

namespace qrv::rng {

// splitmix64 (Steele, Lea, Flood: "Fast splittable pseudorandom number
// generators"). One add + mix per output, trivially seedable, passes
// BigCrush. Used instead of <random> because std::uniform_int_distribution
// is implementation-defined and this project promises bit-identical runs
// across platforms for a given 64-bit seed.

inline constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ull;

constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

// Sub-stream derivation rule: child seed = mix64(seed + kGamma * (tag + 1)).
//
// Every random quantity in the simulator hangs off a trial seed through
// this rule (see README for the full tree):
//   trial seed --tag 1/2--> user seed --tag k--> radio seed
//   radio seed --tag 0--> setup stream (ID channel, slopes, biases)
//   radio seed --tag s--> random-branch stream of codeword position s
constexpr std::uint64_t derive(std::uint64_t seed, std::uint64_t tag) noexcept {
  return mix64(seed + kGamma * (tag + 1));
}

class Stream {
 public:
  Stream() = default;
  explicit constexpr Stream(std::uint64_t seed) noexcept : state_(seed) {}

  constexpr std::uint64_t next() noexcept {
    state_ += kGamma;
    return mix64(state_);
  }

  // Uniform draw from [0, bound); rejection sampling, so exactly uniform.
  std::uint64_t below(std::uint64_t bound) noexcept {
    assert(bound > 0);
    const std::uint64_t threshold = (0 - bound) % bound;  // 2^64 mod bound
    for (;;) {
      const std::uint64_t r = next();
      if (r >= threshold) return r % bound;
    }
  }

  // Uniform in [0, 1) with 53 random bits.
  double unit() noexcept { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  // Child stream decorrelated from this one; does not advance the parent.
  Stream split(std::uint64_t tag) const noexcept { return Stream(derive(state_, tag)); }

 private:
  std::uint64_t state_ = 0;
};

}  // namespace qrv::rng
