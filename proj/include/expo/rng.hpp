#ifndef EXPO_RNG_HPP
#define EXPO_RNG_HPP

#include <cstdint>

namespace expo {

// SplitMix64 finalizer. Used both as the seed-splitting rule and as the
// core of the engine below, so a documented one-liner fully specifies the
// random stream: replication r of master seed s draws from
// Rng(split_seed(s, r)) where split_seed(s, r) = mix64(s + (r+1)*GOLDEN).
inline constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ull;

inline std::uint64_t mix64(std::uint64_t z) {
  z += kGolden;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

inline std::uint64_t split_seed(std::uint64_t master, std::uint64_t index) {
  return mix64(master + (index + 1) * kGolden);
}

// Counter-based SplitMix64 stream. Fully specified, portable, and cheap;
// no implementation-defined <random> distributions anywhere near outputs
// that must be byte-stable across runs.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    state_ += kGolden;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  // Uniform double in [0, 1) with 53 random bits.
  double next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  // Uniform integer in [0, bound) by rejection, unbiased.
  std::uint64_t next_below(std::uint64_t bound) {
    std::uint64_t threshold = -bound % bound;
    for (;;) {
      std::uint64_t r = next_u64();
      if (r >= threshold) return r % bound;
    }
  }

 private:
  std::uint64_t state_;
};

}  // namespace expo

#endif  // EXPO_RNG_HPP
