#include <starsys/solvers.hpp>

#include <algorithm>
#include <string>

#include <starsys/errors.hpp>
#include <starsys/matcore.hpp>
#include <starsys/starorder.hpp>

namespace starsys {

SolutionFamily::SolutionFamily(CMat particular, std::vector<ParamShape> shapes, Map map)
    : particular_(std::move(particular)), shapes_(std::move(shapes)), map_(std::move(map)) {}

CMat SolutionFamily::instantiate(std::span<const CMat> params) const {
  if (params.size() != shapes_.size()) {
    throw ShapeError("SolutionFamily: expected " + std::to_string(shapes_.size()) +
                     " parameters, got " + std::to_string(params.size()));
  }
  for (std::size_t k = 0; k < params.size(); ++k) {
    if (params[k].rows() != shapes_[k].rows || params[k].cols() != shapes_[k].cols)
      throw ShapeError("SolutionFamily: parameter " + std::to_string(k) + " has the wrong shape");
  }
  return map_(params);
}

std::vector<CMat> SolutionFamily::zero_params() const {
  std::vector<CMat> z;
  z.reserve(shapes_.size());
  for (const auto& s : shapes_) z.emplace_back(s.rows, s.cols);
  return z;
}

namespace {

void require_below(const CMat& b, const CMat& a, const Tol& tol, const std::string& what) {
  const StarResiduals r = star_residuals(b, a);
  if (!r.holds(tol)) {
    throw NotComparableError(what + ": B <=* A does not hold (residuals " +
                                 std::to_string(r.left) + ", " + std::to_string(r.right) + ")",
                             r.left, r.right);
  }
}

void require_hermitian(const CMat& m, const Tol& tol, const std::string& what) {
  const double r = hermitian_residual(m);
  if (r > tol.res_rtol)
    throw PreconditionError(what + " must be Hermitian (residual " + std::to_string(r) + ")");
}

}  // namespace

SolutionFamily douglas_solve(const CMat& a, const CMat& c, const Tol& tol) {
  const double r = range_inclusion_residual(c, a, tol);
  if (r > tol.res_rtol) {
    throw UnsolvableError("douglas_solve: R(C) is not contained in R(A) (residual of AA†C - C " +
                              std::to_string(r) + ")",
                          r);
  }
  const CMat ap = pinv(a, tol);
  CMat particular = ap * c;
  CMat free_part = CMat::identity(a.cols()) - ap * a;
  auto map = [particular, free_part](std::span<const CMat> p) {
    return particular + free_part * p[0];
  };
  return SolutionFamily(particular, {{a.cols(), c.cols()}}, std::move(map));
}

double sandwich_residual(const CMat& a, const CMat& c, const CMat& b, const Tol& tol) {
  if (a.rows() != c.rows() || b.cols() != c.cols())
    throw ShapeError("sandwich: AXB = C needs rows(A) = rows(C) and cols(B) = cols(C)");
  return rel_residual(a * pinv(a, tol) * c * pinv(b, tol) * b - c, c);
}

SolutionFamily sandwich_solve(const CMat& a, const CMat& c, const CMat& b, const Tol& tol) {
  const double r = sandwich_residual(a, c, b, tol);
  if (r > tol.res_rtol) {
    throw UnsolvableError(
        "sandwich_solve: AXB = C is unsolvable (residual of AA†CB†B - C " + std::to_string(r) + ")",
        r);
  }
  const CMat ap = pinv(a, tol);
  const CMat bp = pinv(b, tol);
  CMat particular = ap * c * bp;
  CMat left = ap * a;
  CMat right = b * bp;
  auto map = [particular, left, right](std::span<const CMat> p) {
    return particular + p[0] - left * p[0] * right;
  };
  return SolutionFamily(particular, {{a.cols(), b.rows()}}, std::move(map));
}

double system_solvability_residual(const CMat& a, const CMat& b, const Tol& tol) {
  require_square(a, "system_solvable: a");
  require_same_shape(a, b, "system_solvable");
  const CMat ap = pinv(a, tol);
  return rel_residual(a * ap * b * ap * a - b, b);
}

bool system_solvable(const CMat& a, const CMat& b_selfadjoint, const Tol& tol) {
  require_square(b_selfadjoint, "system_solvable: b");
  require_hermitian(b_selfadjoint, tol, "system_solvable: b");
  return system_solvability_residual(a, b_selfadjoint, tol) <= tol.res_rtol;
}

CMat system_particular(const CMat& a, const CMat& b, const Tol& tol, Particular which) {
  require_square(a, "system_particular: a");
  require_below(b, a, tol, "system_particular");
  return which == Particular::pinv_a ? pinv(a, tol) : pinv(b, tol, a.frobenius_norm());
}

CMat system_general(const CMat& a, const CMat& b, const CMat& s, const CMat& t, const Tol& tol) {
  require_square(a, "system_general: a");
  require_same_shape(a, s, "system_general: s");
  require_same_shape(a, t, "system_general: t");
  require_below(b, a, tol, "system_general");

  const std::size_t n = a.rows();
  const CMat id = CMat::identity(n);
  const double scale = a.frobenius_norm();
  const CMat ap = pinv(a, tol);
  const CMat bp = pinv(b, tol, scale);
  const CMat amb = a - b;
  const CMat ambp = pinv(amb, tol, scale);

  const CMat bbp = b * bp;
  const CMat apa = ap * a;
  const CMat not_range_a = id - a * ap;   // I - AA†
  const CMat amb_range = amb * ambp;      // (A-B)(A-B)†

  // Term by term, in the order of the documented formula.
  CMat x = ap * b * bp;
  x += ap * (not_range_a * b + amb * s) * ambp;
  x += t;
  x -= apa * t * amb_range;
  x -= ap * not_range_a * b * ambp * bbp;
  x -= ap * amb * s * ambp * bbp;
  x -= apa * t * bbp;
  x += apa * t * amb_range * bbp;
  return x;
}

SolutionFamily system_general_family(const CMat& a, const CMat& b, const Tol& tol) {
  const std::size_t n = a.rows();
  CMat particular = system_general(a, b, CMat(n, n), CMat(n, n), tol);
  auto map = [a, b, tol](std::span<const CMat> p) { return system_general(a, b, p[0], p[1], tol); };
  return SolutionFamily(std::move(particular), {{n, n}, {n, n}}, std::move(map));
}

Report solves_system(const CMat& a, const CMat& b, const CMat& x, const Tol& tol) {
  Report r;
  r.suite = "solves_system";
  const CMat axa = a * x * a;
  const auto& bxa = r.add_threshold("bxa", rel_residual(b * x * a - b, b), tol);
  const auto& axb = r.add_threshold("axb", rel_residual(a * x * b - b, b), tol);
  const bool solves = bxa.pass && axb.pass;
  const StarResiduals sr = star_residuals(b, axa);
  r.add_threshold("star.left", sr.left, tol);
  r.add_threshold("star.right", sr.right, tol);
  const bool dominated = sr.holds(tol);
  r.add_flag("solves", solves);
  r.add_flag("star_dominated", dominated);
  r.add_flag("agree", solves == dominated);
  return r;
}

CMat reduce_system(const CMat& a, const CMat& b, const CMat& x_big, const Tol& tol) {
  require_square(a, "reduce_system: a");
  require_same_shape(a, b, "reduce_system");
  require_same_shape(a, x_big, "reduce_system: x");
  const double r1 = rel_residual(b * x_big * a - b, b);
  const double r2 = rel_residual(a * x_big * b - b, b);
  if (r1 > tol.res_rtol || r2 > tol.res_rtol) {
    throw PreconditionError("reduce_system: x does not solve BXA = B = AXB (residuals " +
                            std::to_string(r1) + ", " + std::to_string(r2) + ")");
  }
  const CMat ap = pinv(a, tol);
  return ap * a * x_big * a * ap;
}

CMat hermitian_system_solve(const CMat& a, const CMat& b, const CMat& c, const CMat& d,
                            const CMat& w_hermitian, const Tol& tol) {
  require_square(a, "hermitian_system_solve: a");
  for (const CMat* m : {&b, &c, &d, &w_hermitian})
    require_same_shape(a, *m, "hermitian_system_solve");
  require_hermitian(w_hermitian, tol, "hermitian_system_solve: w");

  const std::size_t n = a.rows();
  const CMat id = CMat::identity(n);
  const CMat ap = pinv(a, tol);
  const CMat bp = pinv(b, tol);

  const auto fail_if = [&](const char* name, double res) {
    if (res > tol.res_rtol) {
      throw UnsolvableError("hermitian_system_solve: condition " + std::string(name) +
                                " fails (residual " + std::to_string(res) + ")",
                            res);
    }
  };
  fail_if("AA†C = C", rel_residual(a * ap * c - c, c));
  fail_if("DB†B = D", rel_residual(d * bp * b - d, d));
  const CMat ad = a * d;
  fail_if("AD = CB", rel_residual(ad - c * b, ad));
  fail_if("AC* Hermitian", hermitian_residual(a * c.adjoint()));
  fail_if("B*D Hermitian", hermitian_residual(b.adjoint() * d));

  const CMat null_a = id - ap * a;  // I - A†A
  const CMat m = b.adjoint() * null_a;
  // M vanishes in theory whenever R(B) ⊆ R(A*); measure its rank against B.
  const CMat mp = pinv(m, tol, b.frobenius_norm());
  const CMat schur = d.adjoint() - b.adjoint() * ap * c;
  const CMat k = null_a * (id - mp * m);

  const CMat x0 = ap * c + null_a * mp * schur;
  return x0 + k * x0.adjoint() + k * w_hermitian * k.adjoint();
}

CMat system_hermitian(const CMat& a, const CMat& b, const CMat& w_hermitian, const Tol& tol) {
  require_square(a, "system_hermitian: a");
  require_same_shape(a, b, "system_hermitian");
  require_below(b, a, tol, "system_hermitian");
  const CMat ap = pinv(a, tol);
  const CMat bs = b.adjoint();
  require_hermitian(bs * ap * b, tol, "system_hermitian: B*A†B");
  require_hermitian(b * ap.adjoint() * bs, tol, "system_hermitian: B(A†)*B*");
  return hermitian_system_solve(b, b, b * ap, ap * b, w_hermitian, tol);
}

Report prop_main_check(const CMat& a, const CMat& b, const CMat& x, const Tol& tol) {
  require_square(a, "prop_main_check: a");
  require_same_shape(a, b, "prop_main_check");
  require_same_shape(a, x, "prop_main_check: x");
  const std::size_t n = a.rows();
  const CMat id = CMat::identity(n);

  Report r;
  r.suite = "prop_main_check";
  const bool a_in_b = r.add_threshold("range_a_in_b", range_inclusion_residual(a, b, tol), tol).pass;
  const bool b_in_a = r.add_threshold("range_b_in_a", range_inclusion_residual(b, a, tol), tol).pass;
  // N(B) ⊆ N(A) iff A vanishes on N(B), i.e. A(I - B†B) = 0.
  const bool nb_in_na =
      r.add_threshold("null_b_in_a", rel_residual(a * (id - pinv(b, tol) * b), a), tol).pass;
  const bool na_in_nb =
      r.add_threshold("null_a_in_b", rel_residual(b * (id - pinv(a, tol) * a), b), tol).pass;
  const bool bxa = r.add_threshold("bxa", rel_residual(b * x * a - b, b), tol).pass;
  const bool axb = r.add_threshold("axb", rel_residual(a * x * b - b, b), tol).pass;
  const bool axa = r.add_threshold("axa", rel_residual(a * x * a - a, a), tol).pass;

  const bool lhs = a_in_b && nb_in_na && bxa && axb;
  const bool rhs = nb_in_na && na_in_nb && a_in_b && b_in_a && axa;
  r.add_flag("lhs", lhs);
  r.add_flag("rhs", rhs);
  r.add_flag("agree", lhs == rhs);
  return r;
}

}  // namespace starsys
