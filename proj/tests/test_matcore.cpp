#include <cmath>

#include <starsys/errors.hpp>
#include <starsys/genlab.hpp>
#include <starsys/matcore.hpp>

#include "support.hpp"

using namespace starsys;
using starsys::test::diag;
using starsys::test::near;

TEST_CASE("pinv examples") {
  CHECK(near(pinv(CMat::identity(2)), CMat::identity(2)));
  const CMat z = pinv(CMat(2, 3));
  CHECK(z.rows() == 3);
  CHECK(z == CMat(3, 2));
  CHECK(near(pinv(CMat::from_rows({{0, 1}, {0, 0}})), CMat::from_rows({{0, 0}, {1, 0}})));
  CHECK(near(pinv(diag({2, 0, {0, -4}})), diag({0.5, 0, {0, 0.25}})));
  CHECK(pinv(CMat(0, 3)).rows() == 3);
}

TEST_CASE("pinv of a fixed complex 3x2 matrix matches frozen reference") {
  const CMat a = CMat::from_rows({{{1, 1}, 2}, {{0, 0.5}, -1}, {3, {1, -1}}});
  // Reference from an independent LAPACK-based pseudoinverse.
  const CMat expected = CMat::from_rows(
      {{{-0.08955223880597026, 0.059701492537313494},
        {0.14925373134328368, -0.23880597014925378},
        {0.34328358208955223, -0.01492537313432832}},
       {{0.38805970149253743, 0.014925373134328472},
        {-0.4029850746268657, 0.07462686567164173},
        {-0.11194029850746266, -0.06716417910447767}}});
  CHECK(near(pinv(a), expected, 1e-14));
}

TEST_CASE("ref_scale suppresses noise-level operands") {
  const CMat noise = 1e-17 * CMat::identity(3);
  CHECK(rank_of(noise) == 3);
  CHECK(pinv(noise, {}, 1.0) == CMat(3, 3));
  CHECK(near(pinv(noise, {}, 1e-17), 1e17 * CMat::identity(3)));
}

TEST_CASE("projectors examples") {
  const Projectors id = projectors(CMat::identity(2));
  CHECK(near(id.range, CMat::identity(2)));
  CHECK(near(id.range_adjoint, CMat::identity(2)));
  CHECK(near(id.null_adjoint, CMat(2, 2)));
  CHECK(near(id.null, CMat(2, 2)));

  const Projectors d = projectors(diag({1, 0}));
  CHECK(near(d.range, diag({1, 0})));
  CHECK(near(d.range_adjoint, diag({1, 0})));
  CHECK(near(d.null_adjoint, diag({0, 1})));
  CHECK(near(d.null, diag({0, 1})));

  const Projectors n = projectors(CMat::from_rows({{0, 1}, {0, 0}}));
  CHECK(near(n.range, diag({1, 0})));
  CHECK(near(n.range_adjoint, diag({0, 1})));
}

TEST_CASE("rank examples") {
  CHECK(rank_of(CMat(3, 3)) == 0);
  CHECK(rank_of(CMat::identity(4)) == 4);
  const CMat u = CMat::from_rows({{1}, {{0, 2}}, {-3}});
  const CMat v = CMat::from_rows({{{1, 1}, 4}});
  CHECK(rank_of(u * v) == 1);
}

TEST_CASE("meet projector examples") {
  CHECK(near(meet_projector(CMat::identity(2), CMat::identity(2)), CMat::identity(2)));
  CHECK(near(meet_projector(diag({1, 0}), diag({0, 1})), CMat(2, 2)));
  CHECK(near(meet_projector(diag({1, 1, 0}), diag({0, 1, 1})), diag({0, 1, 0})));
  CHECK_THROWS_AS(meet_projector(diag({2, 0}), diag({1, 0})), PreconditionError);
  CHECK_THROWS_AS(meet_projector(CMat::from_rows({{1, 1}, {0, 0}}), diag({1, 0})),
                  PreconditionError);
}

TEST_CASE("meet projector sits below both inputs") {
  for (std::uint64_t s = 0; s < 30; ++s) {
    Rng rng(Seed{21, s});
    const std::size_t n = 5;
    // Two subspaces sharing a random common part.
    const CMat u = gen_unitary(n, rng);
    const std::size_t common = rng.range(0, 2);
    auto proj = [&](std::size_t extra_start, std::size_t extra) {
      CMat basis(n, common + extra);
      basis.set_block(0, 0, u.block(0, 0, n, common));
      basis.set_block(0, common, u.block(0, extra_start, n, extra));
      return hermitian_part(basis * basis.adjoint());
    };
    const CMat p = proj(2, 1);
    const CMat q = proj(3, 2);
    const CMat m = meet_projector(p, q);
    CHECK(projector_residual(m) <= 1e-10);
    CHECK(rel_residual(p * m - m, m) <= 1e-10);
    CHECK(rel_residual(q * m - m, m) <= 1e-10);
    cplx trace = 0;
    for (std::size_t i = 0; i < n; ++i) trace += m(i, i);
    CHECK(trace.real() == doctest::Approx(static_cast<double>(common)));
  }
}

TEST_CASE("rel_residual examples") {
  CHECK(rel_residual(CMat(2, 2), CMat::identity(2)) == 0.0);
  CHECK(rel_residual(CMat::identity(2), CMat::identity(2)) == doctest::Approx(1.0));
  const CMat e = 3.0 * CMat::identity(2);
  CHECK(rel_residual(e, CMat(2, 2)) == doctest::Approx(e.frobenius_norm()));
  CHECK(rel_residual(e, 10.0 * CMat::identity(2)) == doctest::Approx(0.3));
}

TEST_CASE("Penrose identities on 200 seeded matrices of every rank") {
  double worst = 0.0;
  for (std::uint64_t s = 0; s < 200; ++s) {
    Rng rng(Seed{42, s});
    const std::size_t m = rng.range(1, 8), n = rng.range(1, 8);
    const std::size_t r = rng.range(0, std::min(m, n));
    const CMat a = gen_rank_r(m, n, r, rng);
    const CMat x = pinv(a);
    worst = std::max({worst, rel_residual(a * x * a - a, a), rel_residual(x * a * x - x, x),
                      hermitian_residual(a * x), hermitian_residual(x * a),
                      rel_residual(x.adjoint() - pinv(a.adjoint()), x)});
    CHECK(rel_residual(pinv(x) - a, a) <= 1e-9);
    CHECK(rank_of(a) == r);

    const Projectors p = projectors(a);
    for (const CMat* q : {&p.range, &p.range_adjoint, &p.null_adjoint, &p.null})
      CHECK(projector_residual(*q) <= 1e-10);
    CHECK(rel_residual(p.range * a - a, a) <= 1e-10);
    CHECK(rel_residual(a * p.range_adjoint - a, a) <= 1e-10);
  }
  CHECK(worst <= 1e-10);
}

TEST_CASE("svd reconstructs and its factors are unitary") {
  Rng rng(Seed{5, 0});
  for (const auto [m, n] : {std::pair{3, 5}, {5, 3}, {4, 4}, {1, 6}}) {
    const CMat a = gaussian(m, n, rng);
    const Svd f = svd(a);
    CHECK(near(f.reconstruct(), a, 1e-13));
    CHECK(near(f.u.adjoint() * f.u, CMat::identity(m), 1e-13));
    CHECK(near(f.vh * f.vh.adjoint(), CMat::identity(n), 1e-13));
    CHECK(std::is_sorted(f.s.rbegin(), f.s.rend()));
  }
}

TEST_CASE("tolerance validation and shape helpers") {
  CHECK_THROWS_AS((Tol{0.0, 1e-8}.validate()), PreconditionError);
  CHECK_THROWS_AS((Tol{1e-12, 2.0}.validate()), PreconditionError);
  CHECK_NOTHROW(Tol{}.validate());
  CHECK_THROWS_AS(require_square(CMat(2, 3), "x"), ShapeError);
  CHECK_THROWS_AS(require_same_shape(CMat(2, 3), CMat(3, 2), "x"), ShapeError);
}
