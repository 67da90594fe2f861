#pragma once

#include <cstdint>

#include "hessiankit/rational.hpp"

namespace hk {

// Every "generic" choice in the toolkit (coordinate changes, separating linear
// forms, sampled cubics) is drawn from this generator so that a run is fully
// determined by its seed.
//
// Seeding: the 64-bit seed is passed through one round of splitmix64
//   z = seed + 0x9E3779B97F4A7C15
//   z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
//   z = (z ^ (z >> 27)) * 0x94D049BB133111EB
//   state = z ^ (z >> 31)   (replaced by 0x9E3779B97F4A7C15 if it is zero)
// Output: xorshift64* with shifts (12, 25, 27) and multiplier
// 0x2545F4914F6CDD1D.
class Xorshift64Star {
 public:
  explicit Xorshift64Star(std::uint64_t seed);

  std::uint64_t next();

  /// Uniform integer in [lo, hi] (rejection sampling, no modulo bias).
  std::int64_t uniform(std::int64_t lo, std::int64_t hi);

  /// Uniform integer in [lo, hi] \ {0}.
  std::int64_t nonzero(std::int64_t lo, std::int64_t hi);

  /// p/q with p in [-num_bound, num_bound] \ {0} and q in [1, den_bound].
  Rational nonzero_rational(std::int64_t num_bound, std::int64_t den_bound);

 private:
  std::uint64_t state_;
};

/// Derives an independent stream seed from a base seed and a stream index.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream);

}  // namespace hk
