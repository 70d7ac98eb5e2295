// Suite bodies: one per numbered result, each pairing generated positives
// with engineered negatives.

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include <starsys/chars.hpp>
#include <starsys/errors.hpp>
#include <starsys/genlab.hpp>
#include <starsys/matcore.hpp>
#include <starsys/solvers.hpp>
#include <starsys/starorder.hpp>
#include <starsys/verify.hpp>

namespace starsys {

namespace {

constexpr double kPerturbation = 0.1;

std::size_t pick(Rng& rng, std::size_t lo, std::size_t hi) {
  return static_cast<std::size_t>(rng.range(lo, hi));
}

CMat id(std::size_t n) { return CMat::identity(n); }

// Orthogonal projector onto the span of the given columns of u.
CMat span_projector(const CMat& u, const std::vector<std::size_t>& cols) {
  CMat basis(u.rows(), cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (std::size_t i = 0; i < u.rows(); ++i) basis(i, j) = u(i, cols[j]);
  return hermitian_part(basis * basis.adjoint());
}

// Random subset of {0, ..., count-1} with at least `min_size` elements.
std::vector<std::size_t> random_subset(Rng& rng, std::size_t count, std::size_t min_size) {
  std::vector<std::size_t> s;
  for (std::size_t i = 0; i < count; ++i)
    if (rng.next_u64() & 1u) s.push_back(i);
  for (std::size_t i = 0; s.size() < min_size && i < count; ++i)
    if (std::find(s.begin(), s.end(), i) == s.end()) s.push_back(i);
  std::sort(s.begin(), s.end());
  return s;
}

// Projector onto a random d-dimensional subspace of the span of the first
// `count` columns of u.
CMat random_subprojector(const CMat& u, std::size_t count, std::size_t d, Rng& rng) {
  const CMat w = gen_unitary(count, rng);
  const CMat basis = u.block(0, 0, u.rows(), count) * w.block(0, 0, count, d);
  return hermitian_part(basis * basis.adjoint());
}

// Random star pair with big = A (n x n), small = B.
struct StarPair {
  CMat a;
  CMat b;
};

StarPair random_star_pair(std::size_t n, Rng& rng, bool hermitian = false,
                          std::size_t min_r = 0) {
  const std::size_t r = pick(rng, min_r, n);
  const std::size_t k = pick(rng, 0, n - r);
  auto [big, small] = gen_star_pair(n, r, k, rng, hermitian);
  return {std::move(big), std::move(small)};
}

void add_system_residuals(Report& r, const std::string& prefix, const CMat& a, const CMat& b,
                          const CMat& x, const Tol& tol) {
  r.expect_small(prefix + ".bxa", rel_residual(b * x * a - b, b), tol);
  r.expect_small(prefix + ".axb", rel_residual(a * x * b - b, b), tol);
}

// ---------------------------------------------------------------------------

Report suite_penrose(TrialContext& c) {
  const Tol strict{c.tol.rank_rtol, 1e-10};
  const std::size_t m = pick(c.rng, 1, c.dims);
  const std::size_t n = pick(c.rng, 1, c.dims);
  const std::size_t lim = std::min(m, n);
  std::size_t r = pick(c.rng, 0, lim);
  if (c.seed.stream % 10 == 0) r = 0;
  if (c.seed.stream % 10 == 1) r = lim;
  const CMat a = gen_rank_r(m, n, r, c.rng);
  const CMat x = pinv(a, c.tol);
  const CMat ax = a * x;
  const CMat xa = x * a;

  Report rep;
  rep.expect_small("axa", rel_residual(a * x * a - a, a), strict);
  rep.expect_small("xax", rel_residual(x * a * x - x, x), strict);
  rep.expect_small("ax_hermitian", hermitian_residual(ax), strict);
  rep.expect_small("xa_hermitian", hermitian_residual(xa), strict);
  rep.expect_small("adjoint_commutes", rel_residual(x.adjoint() - pinv(a.adjoint(), c.tol), x),
                   strict);
  rep.expect_small("double_pinv", rel_residual(pinv(x, c.tol) - a, a), Tol{c.tol.rank_rtol, 1e-9});
  rep.expect_flag("rank", rank_of(a, c.tol) == r, true);
  return rep;
}

Report suite_douglas(TrialContext& c) {
  const std::size_t n = c.dims;
  const CMat a = gen_rank_r(n, n, pick(c.rng, 0, n - 1), c.rng);
  const CMat rhs = a * gaussian(n, n, c.rng);
  Report rep;
  const SolutionFamily fam = douglas_solve(a, rhs, c.tol);
  rep.expect_small("particular", rel_residual(a * fam.particular() - rhs, rhs), c.tol);
  for (int d = 0; d < 3; ++d) {
    const CMat t = gaussian(n, n, c.rng);
    const CMat x = fam.instantiate(std::span<const CMat>(&t, 1));
    rep.expect_small("family" + std::to_string(d), rel_residual(a * x - rhs, rhs), c.tol);
  }
  const CMat bad = rhs + kPerturbation * projectors(a, c.tol).null_adjoint * gaussian(n, n, c.rng);
  rep.expect_large("neg.range", range_inclusion_residual(bad, a, c.tol), c.tol);
  bool threw = false;
  try {
    (void)douglas_solve(a, bad, c.tol);
  } catch (const UnsolvableError&) {
    threw = true;
  }
  rep.expect_flag("neg.unsolvable", threw, true);
  return rep;
}

Report suite_lem22(TrialContext& c) {
  const std::size_t n = c.dims;
  const CMat a = gen_rank_r(n, n, pick(c.rng, 1, n - 1), c.rng);
  const Projectors p = projectors(a, c.tol);
  const CMat b = p.range * gaussian(n, n, c.rng) * p.range_adjoint;

  Report rep;
  rep.expect_small("range_b_in_a", range_inclusion_residual(b, a, c.tol), c.tol);
  rep.expect_small("range_bs_in_as", range_inclusion_residual(b.adjoint(), a.adjoint(), c.tol),
                   c.tol);
  rep.expect_small("left_vanishes", rel_residual(p.null_adjoint * b, b), c.tol);
  rep.expect_small("right_vanishes", rel_residual(b * p.null, b), c.tol);
  rep.expect_small("block_form", rel_residual(b - p.range * b * p.range_adjoint, b), c.tol);

  const CMat g = gaussian(n, n, c.rng);
  rep.expect_large("neg.range", range_inclusion_residual(g, a, c.tol), c.tol);
  rep.expect_large("neg.block_form", rel_residual(g - p.range * g * p.range_adjoint, g), c.tol);
  return rep;
}

Report suite_thm23(TrialContext& c) {
  const std::size_t n = c.dims;
  const std::size_t r = pick(c.rng, 1, n - 1);
  CMat a;
  if (c.seed.stream % 2 == 0) {
    a = gen_rank_r(n, n, r, c.rng);
  } else {
    // R(A) = R(A*): the intersection is all of R(A).
    const CMat u = gen_unitary(n, c.rng);
    CMat mid(n, n);
    mid.set_block(0, 0, gen_rank_r(r, r, r, c.rng));
    a = u * mid * u.adjoint();
  }
  Report rep;
  for (const bool positive : {true, false}) {
    const CMat b = gen_thm23_instance(a, positive, c.rng, c.tol);
    const std::string tag = positive ? "pos" : "neg";
    const double cond2 = system_solvability_residual(a, b, c.tol);
    const double oracle = lsq_relative(lsq_oracle(a, b, c.tol), b);
    const bool direct = system_solvable(a, b, c.tol);
    const bool via_oracle = oracle <= c.tol.res_rtol;
    if (positive) {
      rep.expect_small(tag + ".cond2", cond2, c.tol);
      rep.expect_small(tag + ".oracle", oracle, c.tol);
      rep.expect_small(tag + ".range_a", range_inclusion_residual(b, a, c.tol), c.tol);
      rep.expect_small(tag + ".range_as", range_inclusion_residual(b, a.adjoint(), c.tol), c.tol);
      add_system_residuals(rep, tag + ".pinv", a, b, pinv(a, c.tol), c.tol);
    } else {
      rep.expect_large(tag + ".cond2", cond2, c.tol);
      rep.expect_large(tag + ".oracle", oracle, c.tol);
    }
    rep.expect_flag(tag + ".agree", direct == via_oracle, true);
  }
  return rep;
}

Report suite_prop24(TrialContext& c) {
  const std::size_t n = c.dims;
  const std::size_t r = pick(c.rng, 1, n);
  const CMat u = gen_unitary(n, c.rng);
  const CMat v = gen_unitary(n, c.rng);
  CMat ma(n, n), mb(n, n);
  ma.set_block(0, 0, gen_rank_r(r, r, r, c.rng));
  mb.set_block(0, 0, gen_rank_r(r, r, r, c.rng));
  const CMat a = u * ma * v.adjoint();
  const CMat b = u * mb * v.adjoint();
  const CMat ap = pinv(a, c.tol);
  const CMat t = gaussian(n, n, c.rng);
  const CMat g_inverse = ap + t - ap * a * t * a * ap;

  Report rep;
  const Report pos = prop_main_check(a, b, g_inverse, c.tol);
  rep.expect_flag("pos.lhs", pos.passed("lhs"), true);
  rep.expect_flag("pos.rhs", pos.passed("rhs"), true);
  rep.expect_flag("pos.agree", pos.passed("agree"), true);

  const CMat x_bad = gaussian(n, n, c.rng);
  const Report neg = prop_main_check(a, b, x_bad, c.tol);
  rep.expect_large("neg.axa", neg.residual("axa"), c.tol);
  rep.expect_large("neg.bxa", neg.residual("bxa"), c.tol);
  rep.expect_flag("neg.agree", neg.passed("agree"), true);

  if (r < n) {
    // Different range: both sides fail on the range conditions.
    const CMat b2 = gen_rank_r(n, n, r, c.rng);
    const Report neg2 = prop_main_check(a, b2, ap, c.tol);
    rep.expect_large("neg_range.range_a_in_b", neg2.residual("range_a_in_b"), c.tol);
    rep.expect_flag("neg_range.agree", neg2.passed("agree"), true);
  }
  return rep;
}

Report suite_prop33(TrialContext& c) {
  const StarPair sp = random_star_pair(c.dims, c.rng);
  Report rep;
  add_system_residuals(rep, "pinv_a", sp.a, sp.b,
                       system_particular(sp.a, sp.b, c.tol, Particular::pinv_a), c.tol);
  add_system_residuals(rep, "pinv_b", sp.a, sp.b,
                       system_particular(sp.a, sp.b, c.tol, Particular::pinv_b), c.tol);
  return rep;
}

Report suite_prop34(TrialContext& c) {
  const std::size_t n = c.dims;
  const std::size_t r = pick(c.rng, 1, n);
  // A <=* B with a solvable system forces A = B; take the k = 0 pair.
  const auto [big, small] = gen_star_pair(n, r, 0, c.rng);
  const CMat& a = small;
  const CMat& b = big;
  const CMat x = system_general(b, a, gaussian(n, n, c.rng), gaussian(n, n, c.rng), c.tol);

  Report rep;
  rep.expect_small("star", star_residuals(a, b).max(), c.tol);
  add_system_residuals(rep, "solution", a, b, x, c.tol);
  const Report concl = prop_main_check(a, b, x, c.tol);
  rep.expect_small("null_equal", std::max(concl.residual("null_a_in_b"), concl.residual("null_b_in_a")),
                   c.tol);
  rep.expect_small("range_equal",
                   std::max(concl.residual("range_a_in_b"), concl.residual("range_b_in_a")), c.tol);
  rep.expect_small("axa", concl.residual("axa"), c.tol);

  // A strictly smaller element has a different range, so the system must be
  // unsolvable.
  const std::size_t r2 = pick(c.rng, 0, n - 1);
  const auto [big2, small2] = gen_star_pair(n, r2, pick(c.rng, 1, n - r2), c.rng);
  rep.expect_large("strict.oracle", lsq_relative(lsq_oracle(small2, big2, c.tol), big2), c.tol);
  return rep;
}

Report suite_rem35(TrialContext& c) {
  const std::size_t n = c.dims;
  const CMat a0 = gen_non_partial_isometry(n, pick(c.rng, 1, n), c.rng, c.tol);
  // (A, B, X) := (A†, A*, A).
  const CMat a = pinv(a0, c.tol);
  const CMat b = a0.adjoint();
  const CMat& x = a0;

  Report rep;
  const Report concl = prop_main_check(a, b, x, c.tol);
  rep.expect_small("null_equal", std::max(concl.residual("null_a_in_b"), concl.residual("null_b_in_a")),
                   c.tol);
  rep.expect_small("range_equal",
                   std::max(concl.residual("range_a_in_b"), concl.residual("range_b_in_a")), c.tol);
  rep.expect_small("axa", concl.residual("axa"), c.tol);
  rep.expect_small("bxa", concl.residual("bxa"), c.tol);
  rep.expect_small("axb", concl.residual("axb"), c.tol);
  rep.expect_large("not_star_below", star_residuals(a, b).max(), c.tol);
  return rep;
}

Report suite_thm36(TrialContext& c) {
  const std::size_t n = c.dims;
  const StarPair sp = random_star_pair(n, c.rng, false, 1);
  Report rep;
  auto expect_solution = [&](const std::string& tag, const CMat& x) {
    const Report d = solves_system(sp.a, sp.b, x, c.tol);
    rep.expect_flag(tag + ".solves", d.passed("solves"), true);
    rep.expect_flag(tag + ".agree", d.passed("agree"), true);
  };
  expect_solution("pinv_a", pinv(sp.a, c.tol));
  expect_solution("pinv_b", system_particular(sp.a, sp.b, c.tol, Particular::pinv_b));
  for (int d = 0; d < 2; ++d)
    expect_solution("general" + std::to_string(d),
                    system_general(sp.a, sp.b, gaussian(n, n, c.rng), gaussian(n, n, c.rng), c.tol));
  for (int d = 0; d < 3; ++d) {
    const std::string tag = "random" + std::to_string(d);
    const Report rnd = solves_system(sp.a, sp.b, gaussian(n, n, c.rng), c.tol);
    rep.expect_large(tag + ".equations", std::max(rnd.residual("bxa"), rnd.residual("axb")), c.tol);
    rep.expect_large(tag + ".star",
                     std::max(rnd.residual("star.left"), rnd.residual("star.right")), c.tol);
    rep.expect_flag(tag + ".agree", rnd.passed("agree"), true);
  }
  return rep;
}

Report suite_lem37(TrialContext& c) {
  const std::size_t n = c.dims;
  const CMat a = gen_rank_r(n, n, pick(c.rng, 0, n - 1), c.rng);
  const CMat b = gen_rank_r(n, n, pick(c.rng, 0, n), c.rng);
  const CMat rhs = a * gaussian(n, n, c.rng) * b;
  Report rep;
  const SolutionFamily fam = sandwich_solve(a, rhs, b, c.tol);
  rep.expect_small("particular", rel_residual(a * fam.particular() * b - rhs, rhs), c.tol);
  for (int d = 0; d < 3; ++d) {
    const CMat u = gaussian(n, n, c.rng);
    const CMat x = fam.instantiate(std::span<const CMat>(&u, 1));
    rep.expect_small("family" + std::to_string(d), rel_residual(a * x * b - rhs, rhs), c.tol);
  }
  const CMat bad = rhs + kPerturbation * projectors(a, c.tol).null_adjoint * gaussian(n, n, c.rng);
  rep.expect_large("neg.criterion", sandwich_residual(a, bad, b, c.tol), c.tol);
  bool threw = false;
  try {
    (void)sandwich_solve(a, bad, b, c.tol);
  } catch (const UnsolvableError&) {
    threw = true;
  }
  rep.expect_flag("neg.unsolvable", threw, true);
  return rep;
}

Report suite_thm38(TrialContext& c) {
  const std::size_t n = c.dims;
  const StarPair sp = random_star_pair(n, c.rng);
  Report rep;
  const SolutionFamily fam = system_general_family(sp.a, sp.b, c.tol);
  add_system_residuals(rep, "particular", sp.a, sp.b, fam.particular(), c.tol);
  for (int d = 0; d < 5; ++d) {
    const std::vector<CMat> st{gaussian(n, n, c.rng), gaussian(n, n, c.rng)};
    add_system_residuals(rep, "draw" + std::to_string(d), sp.a, sp.b, fam.instantiate(st), c.tol);
  }
  // Degenerate ends of the order: B = A and B = 0.
  const CMat s = gaussian(n, n, c.rng);
  const CMat t = gaussian(n, n, c.rng);
  add_system_residuals(rep, "b_eq_a", sp.a, sp.a, system_general(sp.a, sp.a, s, t, c.tol), c.tol);
  const CMat zero(n, n);
  add_system_residuals(rep, "b_zero", sp.a, zero, system_general(sp.a, zero, s, t, c.tol), c.tol);
  return rep;
}

Report suite_thm39(TrialContext& c) {
  const std::size_t n = c.dims;
  const StarPair sp = random_star_pair(n, c.rng);
  const CMat& a = sp.a;
  const CMat& b = sp.b;
  const CMat ap = pinv(a, c.tol);
  const CMat apb = ap * b;
  const CMat bap = b * ap;

  Report rep;
  const CMat x_big = system_general(a, b, gaussian(n, n, c.rng), gaussian(n, n, c.rng), c.tol);
  const CMat y = reduce_system(a, b, x_big, c.tol);
  rep.expect_small("forward.xb", rel_residual(y * b - apb, apb), c.tol);
  rep.expect_small("forward.bx", rel_residual(b * y - bap, bap), c.tol);

  // Any small-system solution: A† + (I - B†B) Z (I - BB†).
  const CMat bp = pinv(b, c.tol, a.frobenius_norm());
  const CMat small = ap + (id(n) - bp * b) * gaussian(n, n, c.rng) * (id(n) - b * bp);
  rep.expect_small("converse.xb", rel_residual(small * b - apb, apb), c.tol);
  rep.expect_small("converse.bx", rel_residual(b * small - bap, bap), c.tol);
  add_system_residuals(rep, "converse", a, b, small, c.tol);
  return rep;
}

Report suite_thm311(TrialContext& c) {
  const std::size_t n = c.dims;
  const StarPair sp = random_star_pair(n, c.rng, true);
  Report rep;
  for (const bool zero_w : {true, false}) {
    const std::string tag = zero_w ? "w0" : "wrand";
    const CMat w = zero_w ? CMat(n, n) : random_hermitian(n, c.rng);
    const CMat x = system_hermitian(sp.a, sp.b, w, c.tol);
    rep.expect_small(tag + ".hermitian", hermitian_residual(x), c.tol);
    add_system_residuals(rep, tag, sp.a, sp.b, x, c.tol);
  }
  return rep;
}

Report suite_prop41(TrialContext& c) {
  const std::size_t n = c.dims;
  const std::size_t rb = pick(c.rng, 2, n);
  const CMat b = gen_rank_r(n, n, rb, c.rng);
  const Svd f = svd(b);
  const CMat v = f.vh.adjoint();

  Report rep;
  for (const Side side : {Side::left, Side::right}) {
    const std::string tag = side == Side::left ? "left" : "right";
    const CMat& basis = side == Side::left ? f.u : v;
    const CMat p_pos = span_projector(basis, random_subset(c.rng, rb, 1));
    const Report pos = projector_char(p_pos, b, side, c.tol);
    rep.expect_small(tag + ".pos.star", pos.residual("star"), c.tol);
    rep.expect_small(tag + ".pos.commute", pos.residual("commute"), c.tol);
    rep.expect_flag(tag + ".pos.agree", pos.passed("agree"), true);

    const CMat p_neg = random_subprojector(basis, rb, pick(c.rng, 1, rb - 1), c.rng);
    const Report neg = projector_char(p_neg, b, side, c.tol);
    rep.expect_large(tag + ".neg.star", neg.residual("star"), c.tol);
    rep.expect_large(tag + ".neg.commute", neg.residual("commute"), c.tol);
    rep.expect_flag(tag + ".neg.agree", neg.passed("agree"), true);
  }
  return rep;
}

Report suite_prop42(TrialContext& c) {
  const std::size_t n = c.dims;
  const std::size_t rb = pick(c.rng, 2, n);
  const CMat b = gen_rank_r(n, n, rb, c.rng);
  const Svd f = svd(b);
  const CMat v = f.vh.adjoint();

  Report rep;
  const std::size_t min_size = c.seed.stream % 5 == 0 ? 0 : 1;
  const CMat p = span_projector(f.u, random_subset(c.rng, rb, min_size));
  const CMat q = span_projector(v, random_subset(c.rng, rb, min_size));
  const Report pos = pbq_char(p, b, q, c.tol);
  rep.expect_small("pos.star", pos.residual("star"), c.tol);
  rep.expect_small("pos.commute_left", pos.residual("commute_left"), c.tol);
  rep.expect_small("pos.commute_right", pos.residual("commute_right"), c.tol);
  rep.expect_flag("pos.agree", pos.passed("agree"), true);

  const CMat pn = random_subprojector(f.u, rb, pick(c.rng, 1, rb - 1), c.rng);
  const CMat qn = random_subprojector(v, rb, pick(c.rng, 1, rb - 1), c.rng);
  const Report neg = pbq_char(pn, b, qn, c.tol);
  rep.expect_large("neg.star", neg.residual("star"), c.tol);
  rep.expect_large("neg.commute",
                   std::max(neg.residual("commute_left"), neg.residual("commute_right")), c.tol);
  rep.expect_flag("neg.agree", neg.passed("agree"), true);
  return rep;
}

Report suite_thm43(TrialContext& c) {
  const std::size_t n = c.dims;
  const CMat cq = gen_idempotent(n, pick(c.rng, 1, n - 1), 0.5, c.rng);
  const CMat side = id(n) - cq.adjoint();
  const CMat a = cq + side * gaussian(n, n, c.rng) * side;

  Report rep;
  rep.expect_small("pos.star", star_residuals(cq, a).max(), c.tol);
  const SolutionFamily fam = deng_decompose(a, cq, c.tol);
  for (int d = 0; d < 2; ++d) {
    const CMat u = gaussian(n, n, c.rng);
    const CMat x = fam.instantiate(std::span<const CMat>(&u, 1));
    rep.expect_small("pos.reconstruct" + std::to_string(d),
                     rel_residual(a - cq - side * x * side, a), c.tol);
  }

  const CMat cs = cq.adjoint();
  const CMat a_bad = a + kPerturbation * cs * gaussian(n, n, c.rng) * cs;
  rep.expect_large("neg.star", star_residuals(cq, a_bad).max(), c.tol);
  rep.expect_large("neg.criterion", sandwich_residual(side, a_bad - cq, side, c.tol), c.tol);
  bool threw = false;
  try {
    (void)deng_decompose(a_bad, cq, c.tol);
  } catch (const UnsolvableError&) {
    threw = true;
  }
  rep.expect_flag("neg.agree", threw, true);
  return rep;
}

GpMultiplicities random_multiplicities(std::size_t n, Rng& rng, std::size_t min_one = 0) {
  GpMultiplicities m;
  m.one = pick(rng, min_one, n);
  m.omega = pick(rng, 0, n - m.one);
  m.omega2 = pick(rng, 0, n - m.one - m.omega);
  if (m.one + m.omega + m.omega2 == 0) m.one = 1;
  return m;
}

Report suite_lem44(TrialContext& c) {
  const std::size_t n = c.dims;
  const CMat a = gen_gp(n, random_multiplicities(n, c.rng), c.rng);
  Report rep;
  const Report pos = gp_check(a, c.tol);
  for (const auto& ch : pos.checks) rep.expect_small("pos." + ch.name, ch.residual, c.tol);

  const CMat perturbed = a + kPerturbation * gaussian(n, n, c.rng);
  rep.expect_large("neg.perturbed.gp_defect", gp_check(perturbed, c.tol).residual("gp_defect"), c.tol);
  const CMat random = gaussian(n, n, c.rng);
  const double defect = gp_check(random, c.tol).residual("gp_defect");
  rep.expect_large("neg.random.gp_defect", defect, c.tol);
  rep.expect_flag("neg.random.defect_gt_1e-2", defect > 1e-2, true);
  return rep;
}

Report suite_thm45(TrialContext& c) {
  const std::size_t n = c.dims;
  const GpMultiplicities m = random_multiplicities(n, c.rng);
  const CMat b = gen_gp(n, m, c.rng);
  const CMat bs = b.adjoint();
  const CMat a = b + (id(n) - b * bs) * gaussian(n, n, c.rng) * (id(n) - bs * b);

  Report rep;
  rep.expect_small("pos.star", star_residuals(b, a).max(), c.tol);
  const CMat x = gp_decompose(a, b, c.tol);
  rep.expect_small("pos.reconstruct", gp_reconstruction_residual(a, b, x), c.tol);

  const CMat a_bad = a + kPerturbation * b * gaussian(n, n, c.rng) * b;
  rep.expect_large("neg.star", star_residuals(b, a_bad).max(), c.tol);
  // Unitary B leaves I - BB* as rounding noise; the criterion is vacuous there.
  if (m.one + m.omega + m.omega2 < n)
    rep.expect_large("neg.criterion",
                     sandwich_residual(id(n) - b * bs, a_bad - b, id(n) - bs * b, c.tol), c.tol);
  return rep;
}

// Generalized projection U D U* together with U and its multiplicities.
struct StructuredGp {
  CMat a;
  CMat u;
  GpMultiplicities mult;
};

StructuredGp structured_gp(std::size_t n, Rng& rng, std::size_t min_one) {
  const cplx omega{-0.5, std::numbers::sqrt3 / 2.0};
  StructuredGp g;
  g.mult = random_multiplicities(n, rng, min_one);
  g.u = gen_unitary(n, rng);
  CMat d(n, n);
  std::size_t i = 0;
  for (std::size_t k = 0; k < g.mult.one; ++k, ++i) d(i, i) = 1.0;
  for (std::size_t k = 0; k < g.mult.omega; ++k, ++i) d(i, i) = omega;
  for (std::size_t k = 0; k < g.mult.omega2; ++k, ++i) d(i, i) = std::conj(omega);
  g.a = g.u * d * g.u.adjoint();
  return g;
}

Report suite_thm46(TrialContext& c) {
  const std::size_t n = c.dims;
  const StructuredGp g = structured_gp(n, c.rng, 1);
  const CMat& a = g.a;
  // Below A and A*: projectors inside the eigenvalue-1 eigenspace.
  const CMat b = random_subprojector(g.u, g.mult.one, pick(c.rng, 0, g.mult.one), c.rng);

  Report rep;
  const auto [x, certs] = meet_split(a, b, c.tol);
  for (const auto& ch : certs.checks) rep.expect_small("pos." + ch.name, ch.residual, c.tol);
  rep.expect_small("pos.sum", rel_residual(a * a.adjoint() - b - x, a), c.tol);
  const CMat as = a.adjoint();
  rep.expect_small("pos.ab", rel_residual(a * b - b, a), c.tol);
  rep.expect_small("pos.ba", rel_residual(b * a - b, a), c.tol);
  rep.expect_small("pos.asb", rel_residual(as * b - b, a), c.tol);
  rep.expect_small("pos.bas", rel_residual(b * as - b, a), c.tol);

  const CMat range = a * as;
  const CMat b_bad = b + kPerturbation * range * gaussian(n, n, c.rng) * range;
  rep.expect_large("neg.star_a", star_residuals(b_bad, a).max(), c.tol);
  const auto [x_bad, neg] = idempotent_split(range, b_bad, c.tol);
  rep.expect_large("neg.b_idempotent", neg.residual("b_idempotent"), c.tol);
  rep.expect_flag("neg.certificates_fail", !neg.verdict(), true);
  return rep;
}

// Idempotent A = W (B1 ⊕ X2) W* with B = W (B1 ⊕ 0) W*, so B <=* A.
Report suite_lem47(TrialContext& c) {
  const std::size_t n = c.dims;
  const std::size_t r1 = pick(c.rng, 1, n - 1);
  const CMat w = gen_unitary(n, c.rng);
  const CMat b1 = gen_idempotent(r1, pick(c.rng, 0, r1), 0.5, c.rng);
  const CMat x2 = gen_idempotent(n - r1, pick(c.rng, 0, n - r1), 0.5, c.rng);
  CMat mb(n, n);
  mb.set_block(0, 0, b1);
  CMat ma = mb;
  ma.set_block(r1, r1, x2);
  const CMat a = w * ma * w.adjoint();
  const CMat b = w * mb * w.adjoint();

  Report rep;
  const auto [x, pos] = idempotent_split(a, b, c.tol);
  for (const auto& ch : pos.checks) rep.expect_small("pos." + ch.name, ch.residual, c.tol);

  const CMat b_bad = b + kPerturbation * gaussian(n, n, c.rng);
  const auto [x_bad, neg] = idempotent_split(a, b_bad, c.tol);
  rep.expect_large("neg.star", neg.residual("star"), c.tol);
  rep.expect_large("neg.b_idempotent", neg.residual("b_idempotent"), c.tol);
  return rep;
}

Report suite_cor48(TrialContext& c) {
  const std::size_t n = c.dims;
  const StructuredGp g = structured_gp(n, c.rng, 0);
  const std::size_t rank = g.mult.one + g.mult.omega + g.mult.omega2;
  const CMat aas = g.a * g.a.adjoint();
  const CMat b = random_subprojector(g.u, rank, pick(c.rng, 0, rank), c.rng);

  Report rep;
  rep.expect_small("aas_idempotent", idempotent_residual(aas), c.tol);
  const auto [x, pos] = idempotent_split(aas, b, c.tol);
  for (const auto& ch : pos.checks) rep.expect_small("pos." + ch.name, ch.residual, c.tol);

  const CMat b_bad = b + kPerturbation * aas * gaussian(n, n, c.rng) * aas;
  const auto [x_bad, neg] = idempotent_split(aas, b_bad, c.tol);
  rep.expect_large("neg.star", neg.residual("star"), c.tol);
  rep.expect_large("neg.b_idempotent", neg.residual("b_idempotent"), c.tol);
  return rep;
}

Report suite_prop49(TrialContext& c) {
  const std::size_t n = c.dims;
  const StructuredGp g = structured_gp(n, c.rng, 0);
  const std::size_t rank = g.mult.one + g.mult.omega + g.mult.omega2;
  const CMat ccs = g.a * g.a.adjoint();
  const CMat b = random_subprojector(g.u, rank, pick(c.rng, 0, rank), c.rng);
  const CMat a = b + (id(n) - b) * gaussian(n, n, c.rng) * (id(n) - b);

  Report rep;
  const Report pos = common_lower_bound(a, g.a, b, c.tol);
  rep.expect_flag("pos.lower_bound", pos.passed("lower_bound"), true);
  rep.expect_flag("pos.characterized", pos.passed("characterized"), true);
  rep.expect_flag("pos.agree", pos.passed("agree"), true);

  const CMat b_bad = b + kPerturbation * ccs * gaussian(n, n, c.rng) * ccs;
  const Report neg = common_lower_bound(a, g.a, b_bad, c.tol);
  rep.expect_large("neg.star_ccs", neg.residual("star_ccs"), c.tol);
  rep.expect_large("neg.b_idempotent", neg.residual("b_idempotent"), c.tol);
  rep.expect_flag("neg.lower_bound", neg.passed("lower_bound"), false);
  rep.expect_flag("neg.characterized", neg.passed("characterized"), false);
  rep.expect_flag("neg.agree", neg.passed("agree"), true);
  return rep;
}

Report suite_inverse_along(TrialContext& c) {
  const std::size_t n = c.dims;
  const CMat a = gen_rank_r(n, n, pick(c.rng, 0, n), c.rng);
  const CMat ap = pinv(a, c.tol);
  const CMat as = a.adjoint();
  Report rep;
  // A† along A: A X A = A on both sides of the system.
  rep.expect_small("along_a", rel_residual(a * ap * a - a, a), c.tol);
  // Mirrored system B A X = B = X A B with B = A*.
  rep.expect_small("along_adjoint.left", rel_residual(as * a * ap - as, as), c.tol);
  rep.expect_small("along_adjoint.right", rel_residual(ap * a * as - as, as), c.tol);
  return rep;
}

Report suite_oracle_agreement(TrialContext& c) {
  const std::size_t n = c.dims;
  const CMat a = gen_rank_r(n, n, pick(c.rng, 1, n), c.rng);
  const CMat ap = pinv(a, c.tol);
  CMat b = gaussian(n, n, c.rng);
  if (c.rng.next_u64() & 1u) b = a * ap * b * ap * a;

  const double direct =
      std::max(rel_residual(a * ap * b - b, b), rel_residual(b * ap * a - b, b));
  const double oracle = lsq_relative(lsq_oracle(a, b, c.tol), b);
  Report rep;
  if (direct <= c.tol.res_rtol) {
    rep.expect_small("direct", direct, c.tol);
    rep.expect_small("oracle", oracle, c.tol);
  } else {
    rep.expect_large("direct", direct, c.tol);
    rep.expect_large("oracle", oracle, c.tol);
  }
  return rep;
}

}  // namespace

namespace detail {

const std::vector<SuiteEntry>& suite_registry() {
  static const std::vector<SuiteEntry> registry{
      {"penrose", suite_penrose},
      {"douglas", suite_douglas},
      {"lem2.2", suite_lem22},
      {"thm2.3", suite_thm23},
      {"prop2.4", suite_prop24},
      {"prop3.3", suite_prop33},
      {"prop3.4", suite_prop34},
      {"rem3.5", suite_rem35},
      {"thm3.6", suite_thm36},
      {"lem3.7", suite_lem37},
      {"thm3.8", suite_thm38},
      {"thm3.9", suite_thm39},
      {"thm3.11", suite_thm311},
      {"prop4.1", suite_prop41},
      {"prop4.2", suite_prop42},
      {"thm4.3", suite_thm43},
      {"lem4.4", suite_lem44},
      {"thm4.5", suite_thm45},
      {"thm4.6", suite_thm46},
      {"lem4.7", suite_lem47},
      {"cor4.8", suite_cor48},
      {"prop4.9", suite_prop49},
      {"inverse-along", suite_inverse_along},
      {"oracle-agreement", suite_oracle_agreement},
  };
  return registry;
}

}  // namespace detail

}  // namespace starsys
