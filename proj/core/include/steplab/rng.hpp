#pragma once

#include <cstdint>

#include "steplab/linalg.hpp"

namespace steplab {

/// Deterministic seeded generator: xoshiro256++ with splitmix64 seeding.
///
/// Identical (seed, stream, call sequence) gives identical integer and
/// uniform draws on any IEEE-754 platform. Gaussian draws use the Marsaglia
/// polar method (uniforms, sqrt, log only), so they are reproducible given a
/// faithfully rounded libm log.
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed, std::uint64_t stream = 0);

  std::uint64_t next_u64();

  /// Uniform double in [0, 1), 53 random bits.
  double uniform();

  /// Uniform double in [lo, hi).
  double uniform(double lo, double hi);

  /// Uniform integer in [0, n). Uses rejection to avoid modulo bias.
  std::uint64_t uniform_index(std::uint64_t n);

  /// Standard normal draw (polar method, second value cached).
  double normal();

  /// n IID standard normal draws.
  Vec normal_vec(std::size_t n);
  void fill_normal(double* out, std::size_t n);

  std::uint64_t seed() const { return seed_; }
  std::uint64_t stream() const { return stream_; }

 private:
  std::uint64_t state_[4];
  std::uint64_t seed_ = 0;
  std::uint64_t stream_ = 0;
  double cached_normal_ = 0.0;
  bool has_cached_normal_ = false;
};

}  // namespace steplab
