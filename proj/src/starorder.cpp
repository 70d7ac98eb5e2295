#include <starsys/starorder.hpp>

#include <string>

#include <starsys/errors.hpp>
#include <starsys/matcore.hpp>

namespace starsys {

StarResiduals star_residuals(const CMat& a, const CMat& b) {
  require_same_shape(a, b, "star order");
  const CMat as = a.adjoint();
  const CMat aas = a * as;
  const CMat asa = as * a;
  return {rel_residual(aas - b * as, aas), rel_residual(asa - as * b, asa)};
}

bool star_leq(const CMat& a, const CMat& b, const Tol& tol) {
  return star_residuals(a, b).holds(tol);
}

CMat StarWitness::assemble(bool with_b1) const {
  CMat mid(u_left.rows(), u_right.rows());
  mid.set_block(0, 0, a1);
  if (with_b1) mid.set_block(a1.rows(), a1.cols(), b1);
  return u_left * mid * u_right.adjoint();
}

StarWitness star_leq_witness(const CMat& a, const CMat& b, const Tol& tol) {
  const StarResiduals r = star_residuals(a, b);
  if (!r.holds(tol)) {
    throw NotComparableError("star_leq_witness: a is not below b in the star order (residuals " +
                                 std::to_string(r.left) + ", " + std::to_string(r.right) + ")",
                             r.left, r.right);
  }
  const Svd f = svd(a, "star witness");
  const double cut = rank_cutoff(f, a.rows(), a.cols(), tol);
  std::size_t rank = 0;
  while (rank < f.s.size() && f.s[rank] > cut) ++rank;

  StarWitness w;
  w.u_left = f.u;
  w.u_right = f.vh.adjoint();
  // Change of basis: the compressed blocks of a and b.
  const CMat bt = w.u_left.adjoint() * b * w.u_right;
  const CMat at = w.u_left.adjoint() * a * w.u_right;
  w.a1 = at.block(0, 0, rank, rank);
  w.b1 = bt.block(rank, rank, a.rows() - rank, a.cols() - rank);

  const Projectors p = projectors(a, tol);
  w.residual = rel_residual(b - a - p.null_adjoint * b * p.null, b);
  return w;
}

double range_inclusion_residual(const CMat& c, const CMat& a, const Tol& tol) {
  if (c.rows() != a.rows()) {
    throw ShapeError("range_included: row counts " + std::to_string(c.rows()) + " and " +
                     std::to_string(a.rows()) + " differ");
  }
  return rel_residual(a * pinv(a, tol) * c - c, c);
}

bool range_included(const CMat& c, const CMat& a, const Tol& tol) {
  return range_inclusion_residual(c, a, tol) <= tol.res_rtol;
}

}  // namespace starsys
