#pragma once

namespace starsys {

/// Tolerance policy shared by every approximate predicate.
///
/// `rank_rtol` is the relative singular-value cutoff: a singular value is
/// treated as zero when it is at most rank_rtol * sigma_max * max(rows, cols).
/// `res_rtol` bounds relative residuals (see rel_residual).
struct Tol {
  double rank_rtol = 1e-12;
  double res_rtol = 1e-8;

  /// Throws PreconditionError unless both fields lie in (0, 1).
  void validate() const;
};

}  // namespace starsys
