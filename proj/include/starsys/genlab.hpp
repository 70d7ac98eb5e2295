#pragma once

#include <cstddef>
#include <utility>

#include <starsys/cmat.hpp>
#include <starsys/report.hpp>
#include <starsys/rng.hpp>
#include <starsys/tol.hpp>

namespace starsys {

// Constructive instance generators. Each has a Seed overload (fresh
// generator) and an Rng& overload for composing draws inside one trial.

/// Haar-like unitary: Gram-Schmidt (with re-orthogonalization) on a complex
/// Gaussian matrix.
CMat gen_unitary(std::size_t n, Rng& rng);
CMat gen_unitary(std::size_t n, Seed seed);

/// m x n matrix of rank r with nonzero singular values drawn from [0.5, 2].
/// Throws PreconditionError if r > min(m, n).
CMat gen_rank_r(std::size_t m, std::size_t n, std::size_t r, Rng& rng);
CMat gen_rank_r(std::size_t m, std::size_t n, std::size_t r, Seed seed);

/// (big, small) = (U [A1 0 0; 0 B1 0; 0 0 0] V*, U [A1 0; 0 0] V*) with A1 (r x r)
/// and B1 (k x k) invertible, so small <=* big. With `hermitian`, V = U and
/// both blocks are Hermitian. Throws PreconditionError if r + k > n.
std::pair<CMat, CMat> gen_star_pair(std::size_t n, std::size_t r, std::size_t k, Rng& rng,
                                    bool hermitian = false);
std::pair<CMat, CMat> gen_star_pair(std::size_t n, std::size_t r, std::size_t k, Seed seed,
                                    bool hermitian = false);

struct GpMultiplicities {
  std::size_t one = 0;     ///< eigenvalue 1
  std::size_t omega = 0;   ///< eigenvalue e^{2πi/3}
  std::size_t omega2 = 0;  ///< eigenvalue e^{4πi/3}
};

/// U D U* with D diagonal over {1, ω, ω², 0}; satisfies A² = A*.
/// Throws PreconditionError if the multiplicities exceed n.
CMat gen_gp(std::size_t n, GpMultiplicities mult, Rng& rng);
CMat gen_gp(std::size_t n, GpMultiplicities mult, Seed seed);

/// Q = S P S⁻¹ with P a random rank-r orthogonal projector and
/// S = I + skew * G / sqrt(n), G Gaussian. skew = 0 gives an orthogonal
/// projector. S is redrawn while its condition number exceeds 1e8; throws
/// NumericError after 10 attempts.
CMat gen_idempotent(std::size_t n, std::size_t r, double skew, Rng& rng);
CMat gen_idempotent(std::size_t n, std::size_t r, double skew, Seed seed);

/// Hermitian B for the solvability criterion of BXA = B = AXB. Positive:
/// B = M H M with M the projector onto R(A) ∩ R(A*), H random Hermitian.
/// Negative: adds 0.1 (P_N H' P_N + adjoint), P_N = I - M, which breaks
/// AA†BA†A = B. Throws PreconditionError for a negative request when A is
/// invertible.
CMat gen_thm23_instance(const CMat& a, bool positive, Rng& rng, const Tol& tol = {});
CMat gen_thm23_instance(const CMat& a, bool positive, Seed seed, const Tol& tol = {});

/// Square rank-r matrix that is not a partial isometry: redraws gen_rank_r
/// while ‖A† - A*‖_F <= 1e-6 ‖A‖_F. Requires r >= 1.
CMat gen_non_partial_isometry(std::size_t n, std::size_t r, Rng& rng, const Tol& tol = {});

}  // namespace starsys
