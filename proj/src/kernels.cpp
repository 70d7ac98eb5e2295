#include <starsys/kernels.hpp>

#include <cstdint>

#include <starsys/errors.hpp>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace starsys::kernels {

namespace {

void check_inner(const CMat& a, const CMat& b) {
  if (a.cols() != b.rows()) throw ShapeError("matmul: inner dimension mismatch");
}

// One output row; shared by both variants so the accumulation order is fixed.
inline void matmul_row(const CMat& a, const CMat& b, CMat& c, std::size_t i) {
  const std::size_t inner = a.cols();
  const std::size_t n = b.cols();
  for (std::size_t k = 0; k < inner; ++k) {
    const cplx aik = a(i, k);
    if (aik == cplx{}) continue;
    for (std::size_t j = 0; j < n; ++j) c(i, j) += aik * b(k, j);
  }
}

inline void kron_row(const CMat& a, const CMat& b, CMat& c, std::size_t row) {
  const std::size_t ia = row / b.rows();
  const std::size_t ib = row % b.rows();
  for (std::size_t ja = 0; ja < a.cols(); ++ja) {
    const cplx s = a(ia, ja);
    for (std::size_t jb = 0; jb < b.cols(); ++jb) c(row, ja * b.cols() + jb) = s * b(ib, jb);
  }
}

}  // namespace

CMat matmul_serial(const CMat& a, const CMat& b) {
  check_inner(a, b);
  CMat c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) matmul_row(a, b, c, i);
  return c;
}

CMat matmul_parallel(const CMat& a, const CMat& b) {
  check_inner(a, b);
  CMat c(a.rows(), b.cols());
  const auto m = static_cast<std::int64_t>(a.rows());
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < m; ++i) matmul_row(a, b, c, static_cast<std::size_t>(i));
  return c;
}

CMat kron_serial(const CMat& a, const CMat& b) {
  CMat c(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t r = 0; r < c.rows(); ++r) kron_row(a, b, c, r);
  return c;
}

CMat kron_parallel(const CMat& a, const CMat& b) {
  CMat c(a.rows() * b.rows(), a.cols() * b.cols());
  const auto m = static_cast<std::int64_t>(c.rows());
#pragma omp parallel for schedule(static)
  for (std::int64_t r = 0; r < m; ++r) kron_row(a, b, c, static_cast<std::size_t>(r));
  return c;
}

int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace starsys::kernels
