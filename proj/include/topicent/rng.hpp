#pragma once

#include <cstdint>
#include <limits>
#include <span>

namespace topicent {

/// SplitMix64 finalizer (Steele, Lea, Flood 2014). Used for seeding and for
/// deriving per-cell seeds.
constexpr std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

/// xoshiro256** (Blackman and Vigna) with a fixed seeding procedure, so every
/// draw is reproducible across platforms and standard libraries.
///
/// Seeding: the 256-bit state is four successive outputs of a SplitMix64
/// sequence started at splitmix64(seed) ^ splitmix64(~stream). Distinct
/// (seed, stream) pairs thus start at unrelated points of the sequence.
///
/// Only the methods below are used for model randomness; std distributions
/// are avoided because their algorithms are implementation-defined.
class Rng {
 public:
  using result_type = std::uint64_t;

  Rng(std::uint64_t seed, std::uint64_t stream);

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }
  result_type operator()() { return next(); }

  std::uint64_t next();
  /// Uniform double in [0, 1) with 53 random bits.
  double uniform();
  /// Uniform integer in [0, n) by modulo with rejection of the biased range.
  std::uint64_t uniform_index(std::uint64_t n);
  /// Standard normal, Marsaglia polar method (no cached second value).
  double normal();
  /// Gamma(shape, 1), Marsaglia and Tsang; shape < 1 uses the boost
  /// Gamma(shape + 1) * U^(1/shape).
  double gamma(double shape);
  /// Fills `out` with a draw from the symmetric Dirichlet(concentration).
  void dirichlet(double concentration, std::span<double> out);

 private:
  std::uint64_t s_[4];
};

}  // namespace topicent
