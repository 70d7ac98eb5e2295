#pragma once

#include <utility>

#include <starsys/cmat.hpp>
#include <starsys/report.hpp>
#include <starsys/solvers.hpp>
#include <starsys/tol.hpp>

namespace starsys {

enum class Side { left, right };

/// PB <=* B  iff  PBB* = BB*P   (side left,  R(P) ⊆ R(B))
/// BQ <=* B  iff  QB*B = B*BQ   (side right, R(Q) ⊆ R(B*))
/// Checks: star, commute, flags lhs, rhs, agree.
/// Throws PreconditionError if p is not an orthogonal projector or the range
/// hypothesis fails.
Report projector_char(const CMat& p, const CMat& b, Side side, const Tol& tol = {});

/// PBQ <=* B  iff  PBQB* = BQB*P and QB*PB = B*PBQ, for orthogonal
/// projectors with R(P) ⊆ R(B), R(Q) ⊆ R(B*).
Report pbq_char(const CMat& p, const CMat& b, const CMat& q, const Tol& tol = {});

/// For idempotent C <=* A: the family of X with A = C + (I - C*)X(I - C*).
/// Throws PreconditionError if c is not idempotent and UnsolvableError when
/// no such X exists (equivalently, C is not below A).
SolutionFamily deng_decompose(const CMat& a, const CMat& c_idempotent, const Tol& tol = {});

/// Generalized-projection diagnostic. Checks gp_defect (A² - A*),
/// cube_hermitian, cube_idempotent and cube_range (A³ - P_R(A)).
Report gp_check(const CMat& a, const Tol& tol = {});

/// For a generalized projection B <=* A returns X = A, which satisfies
/// A = B + (I - BB*)X(I - B*B). Throws PreconditionError if b is not a
/// generalized projection, NotComparableError if B is not below A.
CMat gp_decompose(const CMat& a, const CMat& b_gp, const Tol& tol = {});

/// rel_residual(A - B - (I - BB*)X(I - B*B), A).
double gp_reconstruction_residual(const CMat& a, const CMat& b, const CMat& x);

/// For a generalized projection A and B below both A and A*: X = AA* - B,
/// with certificates b_idempotent, x_idempotent, bx (B*X) and xb (XB*).
std::pair<CMat, Report> meet_split(const CMat& a_gp, const CMat& b, const Tol& tol = {});

/// For an idempotent A: X = A - B with certificates star (B <=* A),
/// b_idempotent, x_idempotent, bx, xb. When B is not below A at least one
/// certificate fails. Throws PreconditionError if a is not idempotent.
std::pair<CMat, Report> idempotent_split(const CMat& a_idem, const CMat& b, const Tol& tol = {});

/// B is a common star-lower bound of A and CC* (side i) versus: B idempotent,
/// A = B + (I - B*)X(I - B*) solvable, Y = CC* - B with B*Y = YB* = 0 (side ii).
/// Flags lower_bound, characterized, agree.
Report common_lower_bound(const CMat& a, const CMat& c_gp, const CMat& b, const Tol& tol = {});

}  // namespace starsys
