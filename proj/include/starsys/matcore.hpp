#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include <starsys/cmat.hpp>
#include <starsys/tol.hpp>

namespace starsys {

/// Full singular value decomposition A = U * diag(s) * Vh with U (m x m) and
/// Vh (n x n) unitary and s nonincreasing of length min(m, n).
struct Svd {
  CMat u;
  std::vector<double> s;
  CMat vh;

  /// U * diag(s) * Vh, rebuilt from the factors.
  CMat reconstruct() const;
};

/// Throws NumericError naming `what` if the factorization produces
/// non-finite output.
Svd svd(const CMat& a, std::string_view what = "matrix");

/// Singular values at or below this are treated as zero. `ref_scale`, when
/// given, replaces sigma_max if larger; use it for operands that are
/// differences or products which may be exactly zero in theory but carry
/// rounding noise.
double rank_cutoff(const Svd& f, std::size_t rows, std::size_t cols, const Tol& tol,
                   std::optional<double> ref_scale = std::nullopt);

CMat pinv(const CMat& a, const Tol& tol = {});
CMat pinv(const CMat& a, const Tol& tol, double ref_scale);

std::size_t rank_of(const CMat& a, const Tol& tol = {});

/// The four orthogonal projectors attached to A.
struct Projectors {
  CMat range;          ///< P_R(A)  = A A†
  CMat range_adjoint;  ///< P_R(A*) = A† A
  CMat null_adjoint;   ///< P_N(A*) = I - A A†
  CMat null;           ///< P_N(A)  = I - A† A
};

Projectors projectors(const CMat& a, const Tol& tol = {});

/// Orthogonal projector onto R(P) ∩ R(Q), via 2 P (P + Q)† Q.
/// Throws PreconditionError if p or q is not an orthogonal projector.
CMat meet_projector(const CMat& p, const CMat& q, const Tol& tol = {});

/// ‖E‖_F / max(1, ‖scale‖_F).
double rel_residual(const CMat& e, const CMat& scale);

/// rel_residual(A - A*, A).
double hermitian_residual(const CMat& a);
/// rel_residual(A² - A, A).
double idempotent_residual(const CMat& a);
/// max of the Hermitian and idempotent residuals.
double projector_residual(const CMat& a);

/// Throws ShapeError unless `a` is square.
void require_square(const CMat& a, std::string_view what);
/// Throws ShapeError unless the shapes match.
void require_same_shape(const CMat& a, const CMat& b, std::string_view what);

}  // namespace starsys
