#include <starsys/rng.hpp>

#include <cmath>
#include <numbers>

namespace starsys {

namespace {

std::uint64_t splitmix64(std::uint64_t& x) {
  std::uint64_t z = (x += 0x9E3779B97F4A7C15ull);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

constexpr std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

}  // namespace

Rng::Rng(Seed seed) {
  std::uint64_t key = seed.root;
  const std::uint64_t root_mix = splitmix64(key);
  std::uint64_t state = root_mix ^ (seed.stream * 0xD1B54A32D192ED03ull + 0x2545F4914F6CDD1Dull);
  for (auto& w : s_) w = splitmix64(state);
}

std::uint64_t Rng::next_u64() {
  const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
  const std::uint64_t t = s_[1] << 17;
  s_[2] ^= s_[0];
  s_[3] ^= s_[1];
  s_[1] ^= s_[2];
  s_[0] ^= s_[3];
  s_[2] ^= t;
  s_[3] = rotl(s_[3], 45);
  return result;
}

double Rng::uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

double Rng::uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

std::uint64_t Rng::range(std::uint64_t lo, std::uint64_t hi) {
  const std::uint64_t span = hi - lo + 1;
  if (span == 0) return next_u64();
  // Rejection keeps the draw unbiased.
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % span);
  std::uint64_t v;
  do v = next_u64();
  while (v >= limit);
  return lo + v % span;
}

double Rng::normal() { return complex_normal().real() * std::numbers::sqrt2; }

cplx Rng::complex_normal() {
  const double u1 = 1.0 - uniform();  // (0, 1]
  const double u2 = uniform();
  const double r = std::sqrt(-std::log(u1));  // sqrt(-2 ln u) / sqrt(2)
  const double theta = 2.0 * std::numbers::pi * u2;
  return {r * std::cos(theta), r * std::sin(theta)};
}

Rng Rng::split() { return Rng(Seed{next_u64(), next_u64()}); }

CMat gaussian(std::size_t rows, std::size_t cols, Rng& rng) {
  CMat m(rows, cols);
  for (auto& z : m.data()) z = rng.complex_normal();
  return m;
}

CMat random_hermitian(std::size_t n, Rng& rng) {
  const CMat g = gaussian(n, n, rng);
  return g + g.adjoint();
}

}  // namespace starsys
