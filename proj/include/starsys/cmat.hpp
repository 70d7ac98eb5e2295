#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace starsys {

using cplx = std::complex<double>;

/// Dense complex matrix, row-major. Zero-sized dimensions are allowed so that
/// empty blocks (e.g. the compressed part of a rank-0 operator) stay
/// representable.
class CMat {
 public:
  CMat() = default;
  CMat(std::size_t rows, std::size_t cols);
  /// Throws PreconditionError if the entry count is wrong or an entry is not finite.
  CMat(std::size_t rows, std::size_t cols, std::vector<cplx> entries);

  static CMat zeros(std::size_t rows, std::size_t cols) { return CMat(rows, cols); }
  static CMat identity(std::size_t n);
  static CMat diag(std::span<const cplx> d);
  static CMat diag(std::initializer_list<cplx> d);
  static CMat from_rows(std::initializer_list<std::initializer_list<cplx>> rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t size() const noexcept { return data_.size(); }
  bool is_square() const noexcept { return rows_ == cols_; }
  bool empty() const noexcept { return data_.empty(); }

  cplx& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const cplx& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<cplx> data() noexcept { return data_; }
  std::span<const cplx> data() const noexcept { return data_; }

  CMat adjoint() const;
  CMat transpose() const;
  CMat conj() const;

  CMat block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  void set_block(std::size_t r0, std::size_t c0, const CMat& b);

  double frobenius_norm() const;
  bool all_finite() const;

  CMat& operator+=(const CMat& o);
  CMat& operator-=(const CMat& o);
  CMat& operator*=(cplx s);

  friend bool operator==(const CMat&, const CMat&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<cplx> data_;
};

CMat operator+(CMat a, const CMat& b);
CMat operator-(CMat a, const CMat& b);
CMat operator-(CMat a);
CMat operator*(const CMat& a, const CMat& b);
CMat operator*(cplx s, CMat a);
CMat operator*(CMat a, cplx s);

/// Hermitian part (A + A*)/2.
CMat hermitian_part(const CMat& a);

}  // namespace starsys
