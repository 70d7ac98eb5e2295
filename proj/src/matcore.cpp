#include <starsys/matcore.hpp>

#include <algorithm>
#include <cmath>
#include <string>

#include <Eigen/SVD>

#include <starsys/errors.hpp>

namespace starsys {

namespace {

using EMat = Eigen::Matrix<cplx, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

EMat to_eigen(const CMat& a) {
  EMat e(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) e(i, j) = a(i, j);
  return e;
}

template <class M>
CMat from_eigen(const M& e) {
  CMat a(e.rows(), e.cols());
  for (Eigen::Index i = 0; i < e.rows(); ++i)
    for (Eigen::Index j = 0; j < e.cols(); ++j) a(i, j) = e(i, j);
  return a;
}

}  // namespace

void Tol::validate() const {
  if (!(rank_rtol > 0.0 && rank_rtol < 1.0) || !(res_rtol > 0.0 && res_rtol < 1.0))
    throw PreconditionError("Tol: rank_rtol and res_rtol must lie in (0, 1)");
}

CMat Svd::reconstruct() const {
  CMat us = u.block(0, 0, u.rows(), s.size());
  for (std::size_t i = 0; i < us.rows(); ++i)
    for (std::size_t j = 0; j < s.size(); ++j) us(i, j) *= s[j];
  return us * vh.block(0, 0, s.size(), vh.cols());
}

Svd svd(const CMat& a, std::string_view what) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  if (m == 0 || n == 0) return {CMat::identity(m), {}, CMat::identity(n)};
  if (!a.all_finite()) throw NumericError("svd: non-finite input '" + std::string(what) + "'");

  Eigen::JacobiSVD<EMat> f(to_eigen(a), Eigen::ComputeFullU | Eigen::ComputeFullV);
  Svd out{from_eigen(f.matrixU()), {}, from_eigen(f.matrixV()).adjoint()};
  const auto& sv = f.singularValues();
  out.s.assign(sv.data(), sv.data() + sv.size());
  if (!out.u.all_finite() || !out.vh.all_finite() ||
      !std::all_of(out.s.begin(), out.s.end(), [](double x) { return std::isfinite(x); })) {
    throw NumericError("svd: factorization of '" + std::string(what) + "' did not converge");
  }
  return out;
}

double rank_cutoff(const Svd& f, std::size_t rows, std::size_t cols, const Tol& tol,
                   std::optional<double> ref_scale) {
  double smax = f.s.empty() ? 0.0 : f.s.front();
  if (ref_scale) smax = std::max(smax, *ref_scale);
  return tol.rank_rtol * smax * static_cast<double>(std::max(rows, cols));
}

namespace {

CMat pinv_impl(const CMat& a, const Tol& tol, std::optional<double> ref) {
  const Svd f = svd(a, "pinv operand");
  const double cut = rank_cutoff(f, a.rows(), a.cols(), tol, ref);
  // A† = V diag(1/s) U*, restricted to the retained singular triplets.
  CMat x(a.cols(), a.rows());
  for (std::size_t k = 0; k < f.s.size(); ++k) {
    if (!(f.s[k] > cut)) break;
    const double inv = 1.0 / f.s[k];
    for (std::size_t i = 0; i < a.cols(); ++i) {
      const cplx vik = std::conj(f.vh(k, i)) * inv;
      for (std::size_t j = 0; j < a.rows(); ++j) x(i, j) += vik * std::conj(f.u(j, k));
    }
  }
  return x;
}

}  // namespace

CMat pinv(const CMat& a, const Tol& tol) { return pinv_impl(a, tol, std::nullopt); }

CMat pinv(const CMat& a, const Tol& tol, double ref_scale) {
  return pinv_impl(a, tol, ref_scale);
}

std::size_t rank_of(const CMat& a, const Tol& tol) {
  const Svd f = svd(a, "rank operand");
  const double cut = rank_cutoff(f, a.rows(), a.cols(), tol);
  return static_cast<std::size_t>(
      std::count_if(f.s.begin(), f.s.end(), [cut](double x) { return x > cut; }));
}

Projectors projectors(const CMat& a, const Tol& tol) {
  const CMat ap = pinv(a, tol);
  Projectors p;
  p.range = a * ap;
  p.range_adjoint = ap * a;
  p.null_adjoint = CMat::identity(a.rows()) - p.range;
  p.null = CMat::identity(a.cols()) - p.range_adjoint;
  return p;
}

CMat meet_projector(const CMat& p, const CMat& q, const Tol& tol) {
  require_square(p, "meet_projector: p");
  require_same_shape(p, q, "meet_projector");
  const double rp = projector_residual(p);
  const double rq = projector_residual(q);
  if (rp > tol.res_rtol || rq > tol.res_rtol) {
    throw PreconditionError("meet_projector: inputs must be orthogonal projectors (residuals " +
                            std::to_string(rp) + ", " + std::to_string(rq) + ")");
  }
  return 2.0 * (p * pinv(p + q, tol) * q);
}

double rel_residual(const CMat& e, const CMat& scale) {
  return e.frobenius_norm() / std::max(1.0, scale.frobenius_norm());
}

double hermitian_residual(const CMat& a) { return rel_residual(a - a.adjoint(), a); }

double idempotent_residual(const CMat& a) { return rel_residual(a * a - a, a); }

double projector_residual(const CMat& a) {
  return std::max(hermitian_residual(a), idempotent_residual(a));
}

void require_square(const CMat& a, std::string_view what) {
  if (!a.is_square()) {
    throw ShapeError(std::string(what) + ": expected a square matrix, got " +
                     std::to_string(a.rows()) + "x" + std::to_string(a.cols()));
  }
}

void require_same_shape(const CMat& a, const CMat& b, std::string_view what) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw ShapeError(std::string(what) + ": shapes " + std::to_string(a.rows()) + "x" +
                     std::to_string(a.cols()) + " and " + std::to_string(b.rows()) + "x" +
                     std::to_string(b.cols()) + " differ");
  }
}

}  // namespace starsys
