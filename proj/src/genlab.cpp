#include <starsys/genlab.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include <starsys/errors.hpp>
#include <starsys/matcore.hpp>

namespace starsys {

namespace {

const cplx kOmega{-0.5, std::numbers::sqrt3 / 2.0};
const cplx kOmega2{-0.5, -std::numbers::sqrt3 / 2.0};

// Leading `r` columns of u times diag(d) times the leading rows of v*.
CMat compose(const CMat& u, const CMat& mid, const CMat& v) {
  return u * mid * v.adjoint();
}

// Hermitian r x r block with eigenvalues of modulus in [0.5, 2] and random sign.
CMat hermitian_block(std::size_t r, Rng& rng) {
  if (r == 0) return CMat(0, 0);
  const CMat w = gen_unitary(r, rng);
  CMat d(r, r);
  for (std::size_t i = 0; i < r; ++i) {
    const double mag = rng.uniform(0.5, 2.0);
    d(i, i) = (rng.next_u64() & 1u) ? mag : -mag;
  }
  return hermitian_part(w * d * w.adjoint());
}

}  // namespace

CMat gen_unitary(std::size_t n, Rng& rng) {
  CMat q = gaussian(n, n, rng);
  for (std::size_t j = 0; j < n; ++j) {
    for (int attempt = 0;; ++attempt) {
      for (int pass = 0; pass < 2; ++pass) {
        for (std::size_t k = 0; k < j; ++k) {
          cplx dot{};
          for (std::size_t i = 0; i < n; ++i) dot += std::conj(q(i, k)) * q(i, j);
          for (std::size_t i = 0; i < n; ++i) q(i, j) -= dot * q(i, k);
        }
      }
      double norm = 0.0;
      for (std::size_t i = 0; i < n; ++i) norm += std::norm(q(i, j));
      norm = std::sqrt(norm);
      if (norm > 1e-8) {
        for (std::size_t i = 0; i < n; ++i) q(i, j) /= norm;
        break;
      }
      if (attempt > 16) throw NumericError("gen_unitary: could not orthonormalize");
      for (std::size_t i = 0; i < n; ++i) q(i, j) = rng.complex_normal();
    }
  }
  return q;
}

CMat gen_unitary(std::size_t n, Seed seed) {
  Rng rng(seed);
  return gen_unitary(n, rng);
}

CMat gen_rank_r(std::size_t m, std::size_t n, std::size_t r, Rng& rng) {
  if (r > std::min(m, n))
    throw PreconditionError("gen_rank_r: rank " + std::to_string(r) + " exceeds min(" +
                            std::to_string(m) + ", " + std::to_string(n) + ")");
  const CMat u = gen_unitary(m, rng);
  const CMat v = gen_unitary(n, rng);
  CMat d(m, n);
  for (std::size_t i = 0; i < r; ++i) d(i, i) = rng.uniform(0.5, 2.0);
  return compose(u, d, v);
}

CMat gen_rank_r(std::size_t m, std::size_t n, std::size_t r, Seed seed) {
  Rng rng(seed);
  return gen_rank_r(m, n, r, rng);
}

std::pair<CMat, CMat> gen_star_pair(std::size_t n, std::size_t r, std::size_t k, Rng& rng,
                                    bool hermitian) {
  if (r + k > n)
    throw PreconditionError("gen_star_pair: r + k = " + std::to_string(r + k) +
                            " exceeds n = " + std::to_string(n));
  const CMat u = gen_unitary(n, rng);
  const CMat v = hermitian ? u : gen_unitary(n, rng);
  const CMat a1 = hermitian ? hermitian_block(r, rng) : gen_rank_r(r, r, r, rng);
  const CMat b1 = hermitian ? hermitian_block(k, rng) : gen_rank_r(k, k, k, rng);

  CMat small_mid(n, n);
  small_mid.set_block(0, 0, a1);
  CMat big_mid = small_mid;
  big_mid.set_block(r, r, b1);

  CMat big = compose(u, big_mid, v);
  CMat small = compose(u, small_mid, v);
  if (hermitian) {
    big = hermitian_part(big);
    small = hermitian_part(small);
  }
  if (k == 0) small = big;
  return {std::move(big), std::move(small)};
}

std::pair<CMat, CMat> gen_star_pair(std::size_t n, std::size_t r, std::size_t k, Seed seed,
                                    bool hermitian) {
  Rng rng(seed);
  return gen_star_pair(n, r, k, rng, hermitian);
}

CMat gen_gp(std::size_t n, GpMultiplicities mult, Rng& rng) {
  if (mult.one + mult.omega + mult.omega2 > n)
    throw PreconditionError("gen_gp: multiplicities exceed n = " + std::to_string(n));
  const CMat u = gen_unitary(n, rng);
  CMat d(n, n);
  std::size_t i = 0;
  for (std::size_t c = 0; c < mult.one; ++c) d(i, i) = 1.0, ++i;
  for (std::size_t c = 0; c < mult.omega; ++c) d(i, i) = kOmega, ++i;
  for (std::size_t c = 0; c < mult.omega2; ++c) d(i, i) = kOmega2, ++i;
  return u * d * u.adjoint();
}

CMat gen_gp(std::size_t n, GpMultiplicities mult, Seed seed) {
  Rng rng(seed);
  return gen_gp(n, mult, rng);
}

CMat gen_idempotent(std::size_t n, std::size_t r, double skew, Rng& rng) {
  if (r > n) throw PreconditionError("gen_idempotent: r exceeds n");
  if (!(skew >= 0.0)) throw PreconditionError("gen_idempotent: skew must be nonnegative");
  const CMat u = gen_unitary(n, rng);
  CMat d(n, n);
  for (std::size_t i = 0; i < r; ++i) d(i, i) = 1.0;
  const CMat proj = u * d * u.adjoint();
  if (skew == 0.0) return hermitian_part(proj);

  const double g_scale = skew / std::sqrt(static_cast<double>(n));
  for (int attempt = 0; attempt < 10; ++attempt) {
    const CMat s = CMat::identity(n) + gaussian(n, n, rng) * g_scale;
    const Svd f = svd(s, "gen_idempotent basis");
    if (f.s.back() * 1e8 < f.s.front()) continue;
    return s * proj * pinv(s);
  }
  throw NumericError("gen_idempotent: basis change singular after 10 attempts");
}

CMat gen_idempotent(std::size_t n, std::size_t r, double skew, Seed seed) {
  Rng rng(seed);
  return gen_idempotent(n, r, skew, rng);
}

CMat gen_thm23_instance(const CMat& a, bool positive, Rng& rng, const Tol& tol) {
  require_square(a, "gen_thm23_instance");
  const std::size_t n = a.rows();
  if (!positive && rank_of(a, tol) == n)
    throw PreconditionError("gen_thm23_instance: A is invertible, no negative instance exists");
  const Projectors p = projectors(a, tol);
  const CMat m = meet_projector(p.range, p.range_adjoint, tol);
  CMat b = hermitian_part(m * random_hermitian(n, rng) * m);
  if (positive) return b;
  const CMat pn = CMat::identity(n) - m;
  const CMat e = pn * gaussian(n, n, rng) * pn;
  return hermitian_part(b + 0.1 * (e + e.adjoint()));
}

CMat gen_thm23_instance(const CMat& a, bool positive, Seed seed, const Tol& tol) {
  Rng rng(seed);
  return gen_thm23_instance(a, positive, rng, tol);
}

CMat gen_non_partial_isometry(std::size_t n, std::size_t r, Rng& rng, const Tol& tol) {
  if (r == 0) throw PreconditionError("gen_non_partial_isometry: rank 0 is a partial isometry");
  for (int attempt = 0; attempt < 64; ++attempt) {
    CMat a = gen_rank_r(n, n, r, rng);
    if ((pinv(a, tol) - a.adjoint()).frobenius_norm() > 1e-6 * a.frobenius_norm()) return a;
  }
  throw NumericError("gen_non_partial_isometry: only partial isometries drawn");
}

}  // namespace starsys
