#pragma once

#include <cstdint>
#include <random>

namespace hdlap {

/// SplitMix64 step (Steele/Lea/Flood). Used to derive stream seeds.
std::uint64_t splitmix64_next(std::uint64_t& state);

/// Seedable, splittable random source with fixed output algorithms.
///
/// The engine is the 64-bit Mersenne twister (mt19937-64). Uniform doubles
/// come from the high 53 bits, normals from the polar Box-Muller method and
/// chi-square/gamma variates from sums of squares resp. the Marsaglia-Tsang
/// rejection scheme. None of the variate paths go through the standard
/// <random> distributions, whose output is implementation-defined; a given
/// seed therefore produces the same stream on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);

  /// Independent stream derived from this generator's seed and a stream
  /// index. Streams with distinct indices never share engine state.
  Rng stream(std::uint64_t index) const;

  std::uint64_t seed() const { return seed_; }

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform on [0,1), 53-bit resolution.
  double uniform();

  /// Standard normal via the polar Box-Muller method (rejection on the
  /// unit disk, two variates per accepted pair; the spare is cached).
  double normal();

  /// Chi-square with k degrees of freedom. Exact sum of k squared normals
  /// for k <= 64; 2*Gamma(k/2) via Marsaglia-Tsang for larger k.
  double chi_square(std::int64_t k);

  /// Gamma(shape, 1) for shape > 0, Marsaglia-Tsang with the
  /// boost-to-shape+1 step for shape < 1.
  double gamma(double shape);

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace hdlap
