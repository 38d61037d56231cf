#pragma once

#include <cstdint>
#include <limits>

namespace sdraw {

/// SplitMix64 (Steele, Lea, Flood). Used everywhere randomness must be
/// reproducible across platforms: `stream(seed, i)` derives an independent
/// 64-bit value for item i without advancing any shared state.
class SplitMix64 {
 public:
  using result_type = std::uint64_t;

  explicit SplitMix64(std::uint64_t seed = 0) : state_(seed) {}

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

  result_type operator()() {
    state_ += 0x9e3779b97f4a7c15ULL;
    return mix(state_);
  }

  static constexpr std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Value number `index` of the stream keyed by `seed`.
  static constexpr std::uint64_t stream(std::uint64_t seed, std::uint64_t index) {
    return mix(mix(seed) + 0x9e3779b97f4a7c15ULL * (index + 1));
  }

  /// Uniform integer in [0, bound) (bound > 0); slight modulo bias is
  /// irrelevant for the sizes used here.
  std::uint64_t below(std::uint64_t bound) { return (*this)() % bound; }

  /// Uniform double in [0, 1).
  double uniform() { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

 private:
  std::uint64_t state_;
};

}  // namespace sdraw
