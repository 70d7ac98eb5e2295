#include <starsys/cmat.hpp>

#include <cmath>
#include <string>

#include <starsys/errors.hpp>
#include <starsys/kernels.hpp>

namespace starsys {

CMat::CMat(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, cplx{0.0, 0.0}) {}

CMat::CMat(std::size_t rows, std::size_t cols, std::vector<cplx> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (data_.size() != rows_ * cols_) {
    throw PreconditionError("CMat: " + std::to_string(data_.size()) +
                            " entries for a " + std::to_string(rows_) + "x" +
                            std::to_string(cols_) + " matrix");
  }
  if (!all_finite()) throw PreconditionError("CMat: non-finite entry");
}

CMat CMat::identity(std::size_t n) {
  CMat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

CMat CMat::diag(std::span<const cplx> d) {
  CMat m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

CMat CMat::diag(std::initializer_list<cplx> d) {
  return diag(std::span<const cplx>(d.begin(), d.size()));
}

CMat CMat::from_rows(std::initializer_list<std::initializer_list<cplx>> rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r ? rows.begin()->size() : 0;
  std::vector<cplx> e;
  e.reserve(r * c);
  for (const auto& row : rows) {
    if (row.size() != c) throw ShapeError("CMat::from_rows: ragged rows");
    e.insert(e.end(), row.begin(), row.end());
  }
  return CMat(r, c, std::move(e));
}

CMat CMat::adjoint() const {
  CMat t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = std::conj((*this)(i, j));
  return t;
}

CMat CMat::transpose() const {
  CMat t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

CMat CMat::conj() const {
  CMat t = *this;
  for (auto& z : t.data_) z = std::conj(z);
  return t;
}

CMat CMat::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) throw ShapeError("CMat::block out of range");
  CMat b(nr, nc);
  for (std::size_t i = 0; i < nr; ++i)
    for (std::size_t j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
  return b;
}

void CMat::set_block(std::size_t r0, std::size_t c0, const CMat& b) {
  if (r0 + b.rows() > rows_ || c0 + b.cols() > cols_)
    throw ShapeError("CMat::set_block out of range");
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) (*this)(r0 + i, c0 + j) = b(i, j);
}

double CMat::frobenius_norm() const {
  // Scaled accumulation keeps tiny and huge entries from under/overflowing.
  double scale = 0.0;
  double ssq = 1.0;
  for (const auto& z : data_) {
    for (double v : {z.real(), z.imag()}) {
      if (v == 0.0) continue;
      const double a = std::abs(v);
      if (scale < a) {
        ssq = 1.0 + ssq * (scale / a) * (scale / a);
        scale = a;
      } else {
        ssq += (a / scale) * (a / scale);
      }
    }
  }
  return scale * std::sqrt(ssq);
}

bool CMat::all_finite() const {
  for (const auto& z : data_)
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
  return true;
}

static void require_same_shape(const CMat& a, const CMat& b, const char* op) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw ShapeError(std::string(op) + ": shape " + std::to_string(a.rows()) + "x" +
                     std::to_string(a.cols()) + " vs " + std::to_string(b.rows()) + "x" +
                     std::to_string(b.cols()));
  }
}

CMat& CMat::operator+=(const CMat& o) {
  require_same_shape(*this, o, "operator+");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
  return *this;
}

CMat& CMat::operator-=(const CMat& o) {
  require_same_shape(*this, o, "operator-");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
  return *this;
}

CMat& CMat::operator*=(cplx s) {
  for (auto& z : data_) z *= s;
  return *this;
}

CMat operator+(CMat a, const CMat& b) { return a += b; }
CMat operator-(CMat a, const CMat& b) { return a -= b; }
CMat operator-(CMat a) { return a *= -1.0; }
CMat operator*(cplx s, CMat a) { return a *= s; }
CMat operator*(CMat a, cplx s) { return a *= s; }

CMat operator*(const CMat& a, const CMat& b) {
  if (a.cols() != b.rows()) {
    throw ShapeError("operator*: inner dimensions " + std::to_string(a.cols()) + " and " +
                     std::to_string(b.rows()));
  }
  if (a.rows() * a.cols() * b.cols() >= kernels::kParallelMatmulWork)
    return kernels::matmul_parallel(a, b);
  return kernels::matmul_serial(a, b);
}

CMat hermitian_part(const CMat& a) { return 0.5 * (a + a.adjoint()); }

}  // namespace starsys
