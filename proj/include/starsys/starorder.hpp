#pragma once

#include <starsys/cmat.hpp>
#include <starsys/tol.hpp>

namespace starsys {

/// The two defining residuals of A <=* B:
///   left  = rel_residual(AA* - BA*, AA*)
///   right = rel_residual(A*A - A*B, A*A)
struct StarResiduals {
  double left = 0.0;
  double right = 0.0;

  double max() const { return left > right ? left : right; }
  bool holds(const Tol& tol) const { return left <= tol.res_rtol && right <= tol.res_rtol; }
};

StarResiduals star_residuals(const CMat& a, const CMat& b);

/// A <=* B. Throws ShapeError on a shape mismatch.
bool star_leq(const CMat& a, const CMat& b, const Tol& tol = {});

/// Block realization of A <=* B:
///   a ≈ u_left * [a1 0; 0 0] * u_right*,  b ≈ u_left * [a1 0; 0 b1] * u_right*
/// The leading columns of u_right span R(A*) (then N(A)); those of u_left
/// span R(A) (then N(A*)). Bases come from the SVD of a.
struct StarWitness {
  CMat a1;
  CMat b1;
  CMat u_left;
  CMat u_right;
  /// rel_residual(b - a - P_N(A*) b P_N(A), b).
  double residual = 0.0;

  /// u_left * [a1 0; 0 fill] * u_right*.
  CMat assemble(bool with_b1) const;
};

/// Throws NotComparableError (with both star residuals) unless a <=* b.
StarWitness star_leq_witness(const CMat& a, const CMat& b, const Tol& tol = {});

/// rel_residual(AA†C - C, C); zero iff R(C) ⊆ R(A).
double range_inclusion_residual(const CMat& c, const CMat& a, const Tol& tol = {});

/// R(C) ⊆ R(A). Throws ShapeError if the row counts differ.
bool range_included(const CMat& c, const CMat& a, const Tol& tol = {});

}  // namespace starsys
