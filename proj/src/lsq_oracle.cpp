#include <starsys/verify.hpp>

#include <algorithm>

#include <starsys/kernels.hpp>
#include <starsys/matcore.hpp>

namespace starsys {

namespace {

// Column-major vectorization: vec(X)[j*n + i] = X(i, j).
CMat vec(const CMat& x) {
  CMat v(x.rows() * x.cols(), 1);
  for (std::size_t j = 0; j < x.cols(); ++j)
    for (std::size_t i = 0; i < x.rows(); ++i) v(j * x.rows() + i, 0) = x(i, j);
  return v;
}

CMat unvec(const CMat& v, std::size_t rows, std::size_t cols) {
  CMat x(rows, cols);
  for (std::size_t j = 0; j < cols; ++j)
    for (std::size_t i = 0; i < rows; ++i) x(i, j) = v(j * rows + i, 0);
  return x;
}

}  // namespace

LsqResult lsq_oracle(const CMat& a, const CMat& b, const Tol& tol) {
  require_square(a, "lsq_oracle: a");
  require_same_shape(a, b, "lsq_oracle");
  const std::size_t n = a.rows();
  const std::size_t nn = n * n;

  // vec(B X A) = (Aᵀ ⊗ B) vec(X),  vec(A X B) = (Bᵀ ⊗ A) vec(X).
  const CMat k1 = kernels::kron_parallel(a.transpose(), b);
  const CMat k2 = kernels::kron_parallel(b.transpose(), a);
  CMat system(2 * nn, nn);
  system.set_block(0, 0, k1);
  system.set_block(nn, 0, k2);
  const CMat vb = vec(b);
  CMat rhs(2 * nn, 1);
  rhs.set_block(0, 0, vb);
  rhs.set_block(nn, 0, vb);

  LsqResult out;
  out.x_best = unvec(pinv(system, tol) * rhs, n, n);
  out.residual = (b * out.x_best * a - b).frobenius_norm() +
                 (a * out.x_best * b - b).frobenius_norm();
  return out;
}

double lsq_relative(const LsqResult& r, const CMat& b) {
  return r.residual / std::max(1.0, b.frobenius_norm());
}

bool lsq_solvable(const LsqResult& r, const CMat& b, const Tol& tol) {
  return lsq_relative(r, b) <= tol.res_rtol;
}

}  // namespace starsys
