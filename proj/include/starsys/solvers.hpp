#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include <starsys/cmat.hpp>
#include <starsys/report.hpp>
#include <starsys/tol.hpp>

namespace starsys {

struct ParamShape {
  std::size_t rows = 0;
  std::size_t cols = 0;
};

/// A particular solution plus an affine map from free-parameter matrices to
/// solutions. instantiate(zero_params()) reproduces the particular solution.
class SolutionFamily {
 public:
  using Map = std::function<CMat(std::span<const CMat>)>;

  SolutionFamily(CMat particular, std::vector<ParamShape> shapes, Map map);

  const CMat& particular() const noexcept { return particular_; }
  const std::vector<ParamShape>& param_shapes() const noexcept { return shapes_; }

  /// Throws ShapeError if the parameter count or any parameter shape is wrong.
  CMat instantiate(std::span<const CMat> params) const;
  std::vector<CMat> zero_params() const;

 private:
  CMat particular_;
  std::vector<ParamShape> shapes_;
  Map map_;
};

/// AX = C. Family X(T) = A†C + (I - A†A)T.
/// Throws UnsolvableError (residual of AA†C - C) unless R(C) ⊆ R(A).
SolutionFamily douglas_solve(const CMat& a, const CMat& c, const Tol& tol = {});

/// rel_residual(AA†CB†B - C, C): zero iff AXB = C is solvable.
double sandwich_residual(const CMat& a, const CMat& c, const CMat& b, const Tol& tol = {});

/// AXB = C. Family X(U) = A†CB† + U - A†AUBB†.
/// Throws UnsolvableError unless sandwich_residual(a, c, b) <= res_rtol.
SolutionFamily sandwich_solve(const CMat& a, const CMat& c, const CMat& b, const Tol& tol = {});

/// rel_residual(AA†·B·A†A - B, B).
double system_solvability_residual(const CMat& a, const CMat& b, const Tol& tol = {});

/// Whether BXA = B = AXB has a solution, for Hermitian B. Equivalent to
/// R(B) ⊆ R(A) ∩ R(A*). Throws PreconditionError if b is not Hermitian.
bool system_solvable(const CMat& a, const CMat& b_selfadjoint, const Tol& tol = {});

enum class Particular { pinv_a, pinv_b };

/// A† or B† as a solution of BXA = B = AXB, valid when B <=* A.
/// Throws NotComparableError otherwise.
CMat system_particular(const CMat& a, const CMat& b, const Tol& tol = {},
                       Particular which = Particular::pinv_a);

/// Two-parameter solution family of BXA = B = AXB for B <=* A:
///
///   X = A†BB† + A†[(I-AA†)B + (A-B)S](A-B)† + T - A†AT(A-B)(A-B)†
///       - A†(I-AA†)B(A-B)†BB† - A†(A-B)S(A-B)†BB†
///       - A†ATBB† + A†AT(A-B)(A-B)†BB†
///
/// It is X = A†BB† + W - A†AWBB† with W solving AW(A-B) = (I-AA†)B + (A-B)S.
/// s and t are n x n. Throws NotComparableError unless B <=* A.
CMat system_general(const CMat& a, const CMat& b, const CMat& s, const CMat& t,
                    const Tol& tol = {});

/// The same family packaged with parameters (S, T).
SolutionFamily system_general_family(const CMat& a, const CMat& b, const Tol& tol = {});

/// Diagnostic for BXA = B = AXB versus B <=* AXA. Checks:
///   bxa, axb          equation residuals
///   star.left/right   residuals of B <=* AXA
///   solves, star_dominated, agree   flags
/// Never throws on non-solutions.
Report solves_system(const CMat& a, const CMat& b, const CMat& x, const Tol& tol = {});

/// Y = A†A · X · AA†, which solves XB = A†B, BX = BA† whenever X solves
/// BXA = B = AXB. Throws PreconditionError if x_big is not a solution.
CMat reduce_system(const CMat& a, const CMat& b, const CMat& x_big, const Tol& tol = {});

/// Hermitian solution of AX = C, XB = D:
///
///   M = B*(I - A†A),  s = D* - B*A†C,  K = (I - A†A)(I - M†M)
///   X0 = A†C + (I - A†A)M†s
///   X  = X0 + K X0* + K W K*
///
/// Requires AA†C = C, DB†B = D, AD = CB, AC* and B*D Hermitian, W Hermitian.
/// Throws UnsolvableError naming the first violated condition.
CMat hermitian_system_solve(const CMat& a, const CMat& b, const CMat& c, const CMat& d,
                            const CMat& w_hermitian, const Tol& tol = {});

/// Hermitian solution of BXA = B = AXB when B <=* A and B*A†B, B(A†)*B* are
/// Hermitian; solves XB = A†B, BX = BA† through hermitian_system_solve.
CMat system_hermitian(const CMat& a, const CMat& b, const CMat& w_hermitian,
                      const Tol& tol = {});

/// Both sides of: R(A) ⊆ R(B), N(B) ⊆ N(A), BXA = B = AXB
///           iff  N(A) = N(B), R(A) = R(B), AXA = A.
/// Checks carry the individual residuals plus flags lhs, rhs and agree.
Report prop_main_check(const CMat& a, const CMat& b, const CMat& x, const Tol& tol = {});

}  // namespace starsys
