#include <starsys/chars.hpp>
#include <starsys/errors.hpp>
#include <starsys/genlab.hpp>
#include <starsys/matcore.hpp>
#include <starsys/starorder.hpp>

#include "support.hpp"

using namespace starsys;
using starsys::test::diag;
using starsys::test::kOmega;
using starsys::test::near;

TEST_CASE("projector_char examples") {
  Rng rng(Seed{1, 0});
  const CMat b = gen_rank_r(3, 3, 2, rng);
  const Report range = projector_char(projectors(b).range, b, Side::left);
  CHECK(range.passed("lhs"));
  CHECK(range.passed("rhs"));

  const Report d = projector_char(diag({1, 0}), diag({1, 2}), Side::left);
  CHECK(d.passed("lhs"));
  CHECK(d.passed("rhs"));

  const Report shear = projector_char(diag({1, 0}), CMat::from_rows({{1, 1}, {0, 1}}), Side::left);
  CHECK_FALSE(shear.passed("lhs"));
  CHECK_FALSE(shear.passed("rhs"));
  CHECK(shear.passed("agree"));

  const Report right = projector_char(diag({0, 1}), diag({1, 2}), Side::right);
  CHECK(right.passed("lhs"));
  CHECK(right.passed("rhs"));

  CHECK_THROWS_AS(projector_char(diag({2, 0}), diag({1, 2}), Side::left), PreconditionError);
  CHECK_THROWS_AS(projector_char(diag({0, 1}), diag({1, 0}), Side::left), PreconditionError);
}

TEST_CASE("pbq_char examples") {
  Rng rng(Seed{2, 0});
  const CMat b = gen_rank_r(4, 4, 3, rng);
  const Projectors p = projectors(b);
  const Report full = pbq_char(p.range, b, p.range_adjoint);
  CHECK(full.passed("lhs"));
  CHECK(full.passed("rhs"));
  const Report zero_p = pbq_char(CMat(4, 4), b, p.range_adjoint);
  CHECK(zero_p.passed("lhs"));
  CHECK(zero_p.passed("rhs"));
  const Report zero_q = pbq_char(p.range, b, CMat(4, 4));
  CHECK(zero_q.passed("lhs"));
  CHECK(zero_q.passed("rhs"));
}

TEST_CASE("pbq_char agreement on random projectors inside the ranges") {
  for (std::uint64_t s = 0; s < 100; ++s) {
    Rng rng(Seed{3, s});
    const std::size_t n = rng.range(2, 6);
    const std::size_t rb = rng.range(1, n);
    const CMat b = gen_rank_r(n, n, rb, rng);
    const Svd f = svd(b);
    auto sub = [&](const CMat& basis) {
      const std::size_t d = rng.range(0, rb);
      const CMat w = gen_unitary(rb, rng);
      const CMat cols = basis.block(0, 0, n, rb) * w.block(0, 0, rb, d);
      return hermitian_part(cols * cols.adjoint());
    };
    const Report r = pbq_char(sub(f.u), b, sub(f.vh.adjoint()));
    CHECK(r.passed("agree"));
  }
}

TEST_CASE("deng_decompose examples") {
  Rng rng(Seed{4, 0});
  const CMat c = gen_idempotent(3, 2, 0.5, rng);
  const SolutionFamily same = deng_decompose(c, c);
  CHECK(near(same.particular(), CMat(3, 3), 1e-12));

  const CMat a = gaussian(3, 3, rng);
  const SolutionFamily zero = deng_decompose(a, CMat(3, 3));
  CHECK(near(zero.particular(), a, 1e-12));

  const SolutionFamily d = deng_decompose(diag({1, 5}), diag({1, 0}));
  CHECK(near(d.particular(), diag({0, 5})));

  CHECK_THROWS_AS(deng_decompose(diag({1, 5}), diag({2, 0})), PreconditionError);
  CHECK_THROWS_AS(deng_decompose(CMat::from_rows({{1, 1}, {0, 5}}), diag({1, 0})), UnsolvableError);
}

TEST_CASE("gp_check examples") {
  for (const auto& ch : gp_check(diag({1, 0, 1})).checks) CHECK(ch.residual <= 1e-14);
  const CMat w = diag({kOmega, 0});
  CHECK(near(w * w, w.adjoint()));
  CHECK(gp_check(w).verdict());
  const Report bad = gp_check(diag({2, 0}));
  CHECK_FALSE(bad.passed("gp_defect"));
  CHECK(bad.residual("gp_defect") == doctest::Approx(2.0 / 2.0));
}

TEST_CASE("gp_check on generated projections and random matrices") {
  for (std::uint64_t s = 0; s < 100; ++s) {
    Rng rng(Seed{5, s});
    const std::size_t n = rng.range(1, 8);
    GpMultiplicities m;
    m.one = rng.range(0, n);
    m.omega = rng.range(0, n - m.one);
    m.omega2 = rng.range(0, n - m.one - m.omega);
    for (const auto& ch : gp_check(gen_gp(n, m, rng)).checks) CHECK(ch.residual <= 1e-10);
    CHECK(gp_check(gaussian(n + 1, n + 1, rng)).residual("gp_defect") > 1e-2);
  }
}

TEST_CASE("gp_decompose examples") {
  Rng rng(Seed{6, 0});
  const CMat b = gen_gp(4, {1, 1, 0}, rng);
  CHECK(gp_reconstruction_residual(b, b, gp_decompose(b, b)) <= 1e-12);
  const CMat a = gaussian(3, 3, rng);
  CHECK(gp_reconstruction_residual(a, CMat(3, 3), gp_decompose(a, CMat(3, 3))) <= 1e-14);
  const CMat bw = diag({kOmega, 0});
  const CMat aw = diag({kOmega, 7});
  CHECK(gp_reconstruction_residual(aw, bw, gp_decompose(aw, bw)) <= 1e-12);
  CHECK_THROWS_AS(gp_decompose(aw, diag({2, 0})), PreconditionError);
  CHECK_THROWS_AS(gp_decompose(diag({1, 7}), bw), NotComparableError);
}

TEST_CASE("meet_split examples") {
  Rng rng(Seed{7, 0});
  const CMat a = gen_gp(3, {1, 1, 0}, rng);
  const auto [x0, r0] = meet_split(a, CMat(3, 3));
  CHECK(near(x0, a * a.adjoint(), 1e-14));
  CHECK(r0.verdict());

  const CMat ad = diag({1, kOmega, 0});
  const auto [x, r] = meet_split(ad, diag({1, 0, 0}));
  CHECK(near(x, diag({0, 1, 0}), 1e-14));
  CHECK(r.verdict());
  CHECK(r.checks.size() == 4);

  // B = AA* lies below A only when A is Hermitian.
  const CMat proj = gen_gp(3, {2, 0, 0}, rng);
  const auto [xf, rf] = meet_split(proj, proj * proj.adjoint());
  CHECK(near(xf, CMat(3, 3), 1e-12));
  CHECK(rf.verdict());
  CHECK_THROWS_AS(meet_split(ad, ad * ad.adjoint()), NotComparableError);

  // diag(0, 1, 0) is below A A* but not below A.
  CHECK_THROWS_AS(meet_split(ad, diag({0, 1, 0})), PreconditionError);
}

TEST_CASE("idempotent_split examples") {
  Rng rng(Seed{8, 0});
  const CMat a = gen_idempotent(4, 2, 0.5, rng);
  const auto [x0, r0] = idempotent_split(a, a);
  CHECK(near(x0, CMat(4, 4), 1e-14));
  CHECK(r0.verdict());

  const auto [x, r] = idempotent_split(CMat::identity(2), diag({1, 0}));
  CHECK(near(x, diag({0, 1})));
  CHECK(r.verdict());

  const auto [xh, rh] = idempotent_split(CMat::identity(2), diag({0.5, 0}));
  CHECK_FALSE(rh.passed("star"));
  CHECK_FALSE(rh.passed("b_idempotent"));
  (void)xh;

  CHECK_THROWS_AS(idempotent_split(diag({2, 0}), diag({1, 0})), PreconditionError);
}

TEST_CASE("common_lower_bound examples") {
  Rng rng(Seed{9, 0});
  const CMat c = gen_gp(3, {1, 1, 0}, rng);
  const CMat a = gaussian(3, 3, rng);
  const Report zero = common_lower_bound(a, c, CMat(3, 3));
  CHECK(zero.passed("lower_bound"));
  CHECK(zero.passed("characterized"));

  const Report d = common_lower_bound(CMat::identity(2), diag({1, kOmega}), diag({1, 0}));
  CHECK(d.passed("lower_bound"));
  CHECK(d.passed("characterized"));

  const Report half = common_lower_bound(CMat::identity(2), diag({1, kOmega}), diag({0.5, 0}));
  CHECK_FALSE(half.passed("lower_bound"));
  CHECK_FALSE(half.passed("characterized"));
  CHECK(half.passed("agree"));
}
