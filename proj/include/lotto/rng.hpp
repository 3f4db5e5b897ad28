#pragma once

#include <cstdint>
#include <random>

namespace lotto {

/// Deterministic random source used everywhere randomness is needed.
///
/// Wraps std::mt19937_64, whose output sequence is fixed by the standard, and
/// derives uniforms with an explicit bit recipe instead of
/// std::uniform_real_distribution (whose mapping is implementation-defined).
/// Identical seeds therefore produce identical draws on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  /// Uniform index in {0, ..., m-1}; m must be positive.
  int uniform_index(int m) {
    int idx = static_cast<int>(uniform() * static_cast<double>(m));
    return idx >= m ? m - 1 : idx;
  }

  std::uint64_t raw() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

}  // namespace lotto
