#pragma once

#include <algorithm>

#include <doctest.h>

#include <starsys/cmat.hpp>

namespace starsys::test {

inline bool near(const CMat& a, const CMat& b, double rtol = 1e-12) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  return (a - b).frobenius_norm() <= rtol * std::max(1.0, b.frobenius_norm());
}

inline CMat diag(std::initializer_list<cplx> d) { return CMat::diag(d); }

inline const cplx kOmega{-0.5, 0.86602540378443864676};

}  // namespace starsys::test
