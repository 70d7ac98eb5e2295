#include <starsys/chars.hpp>

#include <algorithm>
#include <string>

#include <starsys/errors.hpp>
#include <starsys/matcore.hpp>
#include <starsys/starorder.hpp>

namespace starsys {

namespace {

void require_projector(const CMat& p, const Tol& tol, const std::string& what) {
  require_square(p, what);
  const double r = projector_residual(p);
  if (r > tol.res_rtol)
    throw PreconditionError(what + " must be an orthogonal projector (residual " +
                            std::to_string(r) + ")");
}

void require_idempotent(const CMat& c, const Tol& tol, const std::string& what) {
  require_square(c, what);
  const double r = idempotent_residual(c);
  if (r > tol.res_rtol)
    throw PreconditionError(what + " must be idempotent (residual " + std::to_string(r) + ")");
}

void require_range(const CMat& p, const CMat& b, const Tol& tol, const std::string& what) {
  const double r = range_inclusion_residual(p, b, tol);
  if (r > tol.res_rtol)
    throw PreconditionError(what + " (residual " + std::to_string(r) + ")");
}

double gp_defect(const CMat& a) { return rel_residual(a * a - a.adjoint(), a); }

}  // namespace

Report projector_char(const CMat& p, const CMat& b, Side side, const Tol& tol) {
  require_square(b, "projector_char: b");
  require_same_shape(p, b, "projector_char");
  require_projector(p, tol, "projector_char: p");
  const CMat bs = b.adjoint();
  Report r;
  r.suite = "projector_char";
  double commute = 0.0;
  StarResiduals star{};
  if (side == Side::left) {
    require_range(p, b, tol, "projector_char: R(P) must lie in R(B)");
    const CMat bbs = b * bs;
    commute = rel_residual(p * bbs - bbs * p, bbs);
    star = star_residuals(p * b, b);
  } else {
    require_range(p, bs, tol, "projector_char: R(Q) must lie in R(B*)");
    const CMat bsb = bs * b;
    commute = rel_residual(p * bsb - bsb * p, bsb);
    star = star_residuals(b * p, b);
  }
  const bool lhs = r.add_threshold("star", star.max(), tol).pass;
  const bool rhs = r.add_threshold("commute", commute, tol).pass;
  r.add_flag("lhs", lhs);
  r.add_flag("rhs", rhs);
  r.add_flag("agree", lhs == rhs);
  return r;
}

Report pbq_char(const CMat& p, const CMat& b, const CMat& q, const Tol& tol) {
  require_square(b, "pbq_char: b");
  require_same_shape(p, b, "pbq_char: p");
  require_same_shape(q, b, "pbq_char: q");
  require_projector(p, tol, "pbq_char: p");
  require_projector(q, tol, "pbq_char: q");
  const CMat bs = b.adjoint();
  require_range(p, b, tol, "pbq_char: R(P) must lie in R(B)");
  require_range(q, bs, tol, "pbq_char: R(Q) must lie in R(B*)");

  const CMat pbq = p * b * q;
  const CMat bqbs = b * q * bs;
  const CMat bspb = bs * p * b;
  Report r;
  r.suite = "pbq_char";
  const bool lhs = r.add_threshold("star", star_residuals(pbq, b).max(), tol).pass;
  const bool c1 = r.add_threshold("commute_left", rel_residual(p * bqbs - bqbs * p, b * bs), tol).pass;
  const bool c2 =
      r.add_threshold("commute_right", rel_residual(q * bspb - bspb * q, bs * b), tol).pass;
  r.add_flag("lhs", lhs);
  r.add_flag("rhs", c1 && c2);
  r.add_flag("agree", lhs == (c1 && c2));
  return r;
}

SolutionFamily deng_decompose(const CMat& a, const CMat& c_idempotent, const Tol& tol) {
  require_idempotent(c_idempotent, tol, "deng_decompose: c");
  require_same_shape(a, c_idempotent, "deng_decompose");
  const CMat side = CMat::identity(a.rows()) - c_idempotent.adjoint();
  return sandwich_solve(side, a - c_idempotent, side, tol);
}

Report gp_check(const CMat& a, const Tol& tol) {
  require_square(a, "gp_check");
  const CMat cube = a * a * a;
  Report r;
  r.suite = "gp_check";
  r.add_threshold("gp_defect", gp_defect(a), tol);
  r.add_threshold("cube_hermitian", hermitian_residual(cube), tol);
  r.add_threshold("cube_idempotent", idempotent_residual(cube), tol);
  r.add_threshold("cube_range", rel_residual(cube - projectors(a, tol).range, cube), tol);
  return r;
}

double gp_reconstruction_residual(const CMat& a, const CMat& b, const CMat& x) {
  const CMat id = CMat::identity(a.rows());
  const CMat bs = b.adjoint();
  return rel_residual(a - b - (id - b * bs) * x * (id - bs * b), a);
}

CMat gp_decompose(const CMat& a, const CMat& b_gp, const Tol& tol) {
  require_same_shape(a, b_gp, "gp_decompose");
  const Report g = gp_check(b_gp, tol);
  if (!g.verdict())
    throw PreconditionError("gp_decompose: b is not a generalized projection (defect " +
                            std::to_string(g.residual("gp_defect")) + ")");
  const StarResiduals s = star_residuals(b_gp, a);
  if (!s.holds(tol))
    throw NotComparableError("gp_decompose: B <=* A does not hold", s.left, s.right);
  return a;
}

std::pair<CMat, Report> meet_split(const CMat& a_gp, const CMat& b, const Tol& tol) {
  require_same_shape(a_gp, b, "meet_split");
  const double defect = gp_defect(a_gp);
  if (defect > tol.res_rtol)
    throw PreconditionError("meet_split: a is not a generalized projection (defect " +
                            std::to_string(defect) + ")");
  const StarResiduals below_a = star_residuals(b, a_gp);
  if (!below_a.holds(tol))
    throw NotComparableError("meet_split: B <=* A does not hold", below_a.left, below_a.right);
  const StarResiduals below_as = star_residuals(b, a_gp.adjoint());
  if (!below_as.holds(tol))
    throw NotComparableError("meet_split: B <=* A* does not hold", below_as.left,
                             below_as.right);

  const CMat aas = a_gp * a_gp.adjoint();
  CMat x = aas - b;
  const CMat bs = b.adjoint();
  Report r;
  r.suite = "meet_split";
  r.add_threshold("b_idempotent", idempotent_residual(b), tol);
  r.add_threshold("x_idempotent", idempotent_residual(x), tol);
  r.add_threshold("bx", rel_residual(bs * x, aas), tol);
  r.add_threshold("xb", rel_residual(x * bs, aas), tol);
  return {std::move(x), std::move(r)};
}

std::pair<CMat, Report> idempotent_split(const CMat& a_idem, const CMat& b, const Tol& tol) {
  require_same_shape(a_idem, b, "idempotent_split");
  require_idempotent(a_idem, tol, "idempotent_split: a");
  CMat x = a_idem - b;
  const CMat bs = b.adjoint();
  Report r;
  r.suite = "idempotent_split";
  r.add_threshold("star", star_residuals(b, a_idem).max(), tol);
  r.add_threshold("b_idempotent", idempotent_residual(b), tol);
  r.add_threshold("x_idempotent", idempotent_residual(x), tol);
  r.add_threshold("bx", rel_residual(bs * x, a_idem), tol);
  r.add_threshold("xb", rel_residual(x * bs, a_idem), tol);
  return {std::move(x), std::move(r)};
}

Report common_lower_bound(const CMat& a, const CMat& c_gp, const CMat& b, const Tol& tol) {
  require_square(a, "common_lower_bound: a");
  require_same_shape(a, c_gp, "common_lower_bound: c");
  require_same_shape(a, b, "common_lower_bound: b");
  const CMat ccs = c_gp * c_gp.adjoint();
  const CMat bs = b.adjoint();
  const CMat side = CMat::identity(a.rows()) - bs;
  const CMat y = ccs - b;

  Report r;
  r.suite = "common_lower_bound";
  const bool below_a = r.add_threshold("star_a", star_residuals(b, a).max(), tol).pass;
  const bool below_c = r.add_threshold("star_ccs", star_residuals(b, ccs).max(), tol).pass;
  const bool idem = r.add_threshold("b_idempotent", idempotent_residual(b), tol).pass;
  const bool solvable =
      r.add_threshold("x_solvable", sandwich_residual(side, a - b, side, tol), tol).pass;
  const bool by = r.add_threshold("by", rel_residual(bs * y, ccs), tol).pass;
  const bool yb = r.add_threshold("yb", rel_residual(y * bs, ccs), tol).pass;
  const bool lower = below_a && below_c;
  const bool characterized = idem && solvable && by && yb;
  r.add_flag("lower_bound", lower);
  r.add_flag("characterized", characterized);
  r.add_flag("agree", lower == characterized);
  return r;
}

}  // namespace starsys
