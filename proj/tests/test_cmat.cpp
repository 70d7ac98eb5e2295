#include <cmath>
#include <limits>

#include <starsys/errors.hpp>
#include <starsys/rng.hpp>

#include "support.hpp"

using namespace starsys;
using starsys::test::near;

TEST_CASE("construction and shape") {
  const CMat a = CMat::from_rows({{1, 2, 3}, {4, 5, {0, 6}}});
  CHECK(a.rows() == 2);
  CHECK(a.cols() == 3);
  CHECK(a(1, 2) == cplx(0, 6));
  CHECK(CMat(0, 3).empty());
  CHECK(CMat::identity(3)(2, 2) == cplx(1));
  CHECK_THROWS_AS(CMat(2, 2, std::vector<cplx>(3)), PreconditionError);
  CHECK_THROWS_AS(CMat(1, 1, {cplx(std::numeric_limits<double>::quiet_NaN(), 0)}),
                  PreconditionError);
  CHECK_THROWS_AS(CMat::from_rows({{1, 2}, {3}}), ShapeError);
}

TEST_CASE("adjoint, transpose, conj") {
  const CMat a = CMat::from_rows({{{1, 1}, 2}, {3, {0, -4}}, {5, 6}});
  const CMat h = a.adjoint();
  CHECK(h.rows() == 2);
  CHECK(h(0, 0) == cplx(1, -1));
  CHECK(h(1, 1) == cplx(0, 4));
  CHECK(a.transpose().conj() == h);
  CHECK(h.adjoint() == a);
}

TEST_CASE("arithmetic") {
  const CMat a = CMat::from_rows({{1, 2}, {3, 4}});
  const CMat b = CMat::from_rows({{0, 1}, {1, 0}});
  CHECK(a * b == CMat::from_rows({{2, 1}, {4, 3}}));
  CHECK(a + b == CMat::from_rows({{1, 3}, {4, 4}}));
  CHECK(a - a == CMat(2, 2));
  CHECK(cplx(0, 1) * b == CMat::from_rows({{0, {0, 1}}, {{0, 1}, 0}}));
  CHECK(-a == cplx(-1) * a);
  CHECK_THROWS_AS(a * CMat(3, 1), ShapeError);
  CHECK_THROWS_AS(a + CMat(2, 3), ShapeError);
  // Empty inner dimension gives a zero product.
  CHECK(CMat(2, 0) * CMat(0, 3) == CMat(2, 3));
}

TEST_CASE("blocks") {
  CMat a(3, 3);
  a.set_block(1, 1, CMat::from_rows({{1, 2}, {3, 4}}));
  CHECK(a.block(1, 1, 2, 2) == CMat::from_rows({{1, 2}, {3, 4}}));
  CHECK(a.block(0, 0, 1, 3) == CMat(1, 3));
  CHECK_THROWS_AS((void)a.block(2, 2, 2, 2), ShapeError);
}

TEST_CASE("frobenius norm is scale safe") {
  CHECK(CMat::identity(4).frobenius_norm() == doctest::Approx(2.0));
  CMat big = CMat::from_rows({{1e200, 1e200}});
  CHECK(std::isfinite(big.frobenius_norm()));
  CHECK(big.frobenius_norm() == doctest::Approx(std::sqrt(2.0) * 1e200));
  CMat tiny = CMat::from_rows({{1e-200, 1e-200}});
  CHECK(tiny.frobenius_norm() == doctest::Approx(std::sqrt(2.0) * 1e-200));
}

TEST_CASE("large products agree with the serial path") {
  Rng rng(Seed{3, 0});
  const CMat a = gaussian(40, 35, rng);
  const CMat b = gaussian(35, 45, rng);
  const CMat c = gaussian(45, 30, rng);
  CHECK(near((a * b) * c, a * (b * c), 1e-12));
  CHECK(near((a * b).adjoint(), b.adjoint() * a.adjoint(), 1e-14));
}

TEST_CASE("hermitian part") {
  const CMat a = CMat::from_rows({{1, {0, 2}}, {0, 3}});
  const CMat h = hermitian_part(a);
  CHECK(h == h.adjoint());
  CHECK(h(0, 1) == cplx(0, 1));
}
