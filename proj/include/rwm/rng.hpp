#pragma once

#include <cstdint>

namespace rwm {

/// Deterministic random generator used everywhere a draw is needed.
///
/// The algorithm is SplitMix64 (the java.util.SplittableRandom update
/// function): seedable, splittable, and bit-reproducible across
/// platforms, which the run determinism contract depends on.
struct Rng {
  std::uint64_t state = 0;

  Rng() = default;
  explicit Rng(std::uint64_t seed) : state(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, n). n must be nonzero.
  std::uint64_t next_below(std::uint64_t n) {
    // rejection sampling to avoid modulo bias
    std::uint64_t threshold = (0 - n) % n;
    for (;;) {
      std::uint64_t r = next_u64();
      if (r >= threshold) return r % n;
    }
  }

  /// Uniform double in [0, 1).
  double next_unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  /// Derive an independent generator (split).
  Rng split() { return Rng(next_u64()); }
};

}  // namespace rwm
