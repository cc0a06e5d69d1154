#ifndef SEMINORM_RNG_HPP
#define SEMINORM_RNG_HPP

#include <complex>
#include <cstdint>
#include <random>

namespace seminorm {

/// Splittable seeded generator. Value semantics: copies evolve independently,
/// and split(k) derives an independent stream from the original seed, so a
/// parent can hand deterministic sub-streams to parallel workers regardless
/// of how much the parent itself has been consumed.
///
/// Gaussian variates use Box-Muller on the raw engine output instead of
/// std::normal_distribution, whose sequence is implementation-defined.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);

  std::uint64_t next_u64();

  /// Uniform in [0, 1).
  double uniform();
  double uniform(double lo, double hi);

  /// Integer in [0, n).
  std::uint64_t uniform_index(std::uint64_t n);

  /// Standard normal.
  double gaussian();

  /// Standard complex normal CN(0,1): real and imaginary parts N(0, 1/2).
  std::complex<double> complex_gaussian();

  /// Independent stream derived from (original seed, stream index).
  Rng split(std::uint64_t stream) const;

  std::uint64_t seed() const { return seed_; }

 private:
  std::uint64_t seed_;
  std::mt19937_64 eng_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

/// SplitMix64 finalizer; used for seed derivation.
std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b);

}  // namespace seminorm

#endif
