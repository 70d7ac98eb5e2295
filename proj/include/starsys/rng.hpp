#pragma once

#include <cstdint>

#include <starsys/cmat.hpp>
#include <starsys/report.hpp>

namespace starsys {

/// xoshiro256** keyed by (root, stream) through SplitMix64. Normals come from
/// Box-Muller on the generator's own uniforms, so a Seed fixes every
/// generated matrix bit for bit.
class Rng {
 public:
  static constexpr const char* kAlgorithm =
      "xoshiro256** (SplitMix64-keyed root/stream substreams, Box-Muller normals)";

  explicit Rng(Seed seed);

  std::uint64_t next_u64();
  /// Uniform in [0, 1) with 53 random bits.
  double uniform();
  double uniform(double lo, double hi);
  /// Uniform integer in [lo, hi].
  std::uint64_t range(std::uint64_t lo, std::uint64_t hi);
  double normal();
  /// Standard complex normal: E|z|² = 1.
  cplx complex_normal();

  /// Independent child generator; the parent advances by one draw.
  Rng split();

 private:
  std::uint64_t s_[4];
};

/// Matrix with i.i.d. standard complex normal entries.
CMat gaussian(std::size_t rows, std::size_t cols, Rng& rng);

/// Hermitian matrix G + G* with G Gaussian.
CMat random_hermitian(std::size_t n, Rng& rng);

}  // namespace starsys
