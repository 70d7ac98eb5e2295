#include <starsys/cli.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include <starsys/chars.hpp>
#include <starsys/errors.hpp>
#include <starsys/genlab.hpp>
#include <starsys/matcore.hpp>
#include <starsys/matrix_io.hpp>
#include <starsys/solvers.hpp>
#include <starsys/starorder.hpp>
#include <starsys/verify.hpp>

namespace starsys::cli {

namespace {

struct Usage : Error {
  using Error::Error;
};

void add_tol(CLI::App* sub, Tol& tol) {
  sub->add_option("--rank-rtol", tol.rank_rtol, "relative rank cutoff");
  sub->add_option("--res-rtol", tol.res_rtol, "relative residual threshold");
}

CMat load(const std::string& path) { return read_matrix(path); }

CMat load_or_zero(const std::optional<std::string>& path, std::size_t rows, std::size_t cols) {
  return path ? load(*path) : CMat(rows, cols);
}

std::string version_text() {
  const Tol t;
  return std::string("starsys ") + kVersion + "\nprng " + Rng::kAlgorithm +
         "\ndefault rank_rtol " + format_residual(t.rank_rtol) + "\ndefault res_rtol " +
         format_residual(t.res_rtol);
}

struct Options {
  Tol tol;
  std::string in, out, out_small, a, b, c, suite, report;
  std::optional<std::string> s, t, w, u;
  std::vector<std::string> factors;
  std::size_t n = 0, r = 0, k = 0, rows = 0, cols = 0, m1 = 0, mw = 0, mw2 = 0;
  std::size_t trials = 0, dims = 0;
  std::uint64_t seed = 0;
  double skew = 0.5;
  bool hermitian = false;
  bool serial = false;
};

int run_verify(const Options& o, std::ostream& out, std::ostream& err) {
  std::vector<std::string> names;
  if (o.suite == "all") {
    names = suite_names();
  } else if (is_suite(o.suite)) {
    names.push_back(o.suite);
  } else {
    throw Usage("unknown suite '" + o.suite + "'");
  }
  if (o.dims < kMinSuiteDims || o.dims > kMaxSuiteDims)
    throw Usage("--dims must lie in [" + std::to_string(kMinSuiteDims) + ", " +
                std::to_string(kMaxSuiteDims) + "]");

  std::ofstream file;
  if (!o.report.empty()) {
    file.open(o.report);
    if (!file) throw Usage("cannot write " + o.report);
  }
  std::ostream& sink = o.report.empty() ? out : file;
  const Execution exec = o.serial ? Execution::serial : Execution::parallel;

  std::size_t failed_trials = 0;
  for (const auto& name : names) {
    const auto reports = run_suite(name, o.trials, o.dims, o.seed, o.tol, exec);
    std::size_t passed = 0;
    for (const auto& rep : reports) {
      sink << rep.to_line() << '\n';
      if (rep.verdict()) {
        ++passed;
      } else {
        err << "  " << name << " trial " << rep.trial << " failed";
        if (!rep.error.empty()) err << ": " << rep.error;
        err << '\n';
      }
    }
    failed_trials += reports.size() - passed;
    err << name << ": " << passed << "/" << reports.size() << " passed\n";
  }
  sink.flush();
  err << names.size() << " suites, " << failed_trials << " failed trials\n";
  return failed_trials == 0 ? kExitOk : kExitFalse;
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Star-order matrix equations: solvers, predicates and verification suites",
               "starsys"};
  app.set_version_flag("--version", version_text());
  app.require_subcommand(1);

  Options o;
  std::function<int()> action;

  auto* pinv_cmd = app.add_subcommand("pinv", "Moore-Penrose inverse");
  pinv_cmd->add_option("--in", o.in)->required();
  pinv_cmd->add_option("--out", o.out)->required();
  add_tol(pinv_cmd, o.tol);
  pinv_cmd->callback([&] {
    action = [&] {
      write_matrix(o.out, pinv(load(o.in), o.tol));
      return kExitOk;
    };
  });

  auto* check = app.add_subcommand("check", "predicates; exit 0 iff the predicate holds");
  check->require_subcommand(1);

  auto* star = check->add_subcommand("star-order", "a <=* b");
  star->add_option("--a", o.a)->required();
  star->add_option("--b", o.b)->required();
  add_tol(star, o.tol);
  star->callback([&] {
    action = [&] {
      const StarResiduals res = star_residuals(load(o.a), load(o.b));
      const bool holds = res.holds(o.tol);
      out << "left " << format_residual(res.left) << "\nright " << format_residual(res.right)
          << "\nholds " << (holds ? "yes" : "no") << '\n';
      return holds ? kExitOk : kExitFalse;
    };
  });

  auto* gp = check->add_subcommand("gp", "generalized projection: A^2 = A*");
  gp->add_option("--a", o.a)->required();
  add_tol(gp, o.tol);
  gp->callback([&] {
    action = [&] {
      const Report rep = gp_check(load(o.a), o.tol);
      out << rep.to_line() << '\n';
      return rep.verdict() ? kExitOk : kExitFalse;
    };
  });

  auto* solvable = check->add_subcommand("solvable", "BXA = B = AXB has a solution (B Hermitian)");
  solvable->add_option("--a", o.a)->required();
  solvable->add_option("--b", o.b)->required();
  add_tol(solvable, o.tol);
  solvable->callback([&] {
    action = [&] {
      const CMat a = load(o.a);
      const CMat b = load(o.b);
      const bool holds = system_solvable(a, b, o.tol);
      out << "residual " << format_residual(system_solvability_residual(a, b, o.tol))
          << "\nsolvable " << (holds ? "yes" : "no") << '\n';
      return holds ? kExitOk : kExitFalse;
    };
  });

  auto* solve = app.add_subcommand("solve", "solvers; omitted parameters default to zero");
  solve->require_subcommand(1);

  auto* sys = solve->add_subcommand("system", "BXA = B = AXB for B <=* A");
  sys->add_option("--a", o.a)->required();
  sys->add_option("--b", o.b)->required();
  sys->add_option("--s", o.s);
  sys->add_option("--t", o.t);
  sys->add_option("--out", o.out)->required();
  add_tol(sys, o.tol);
  sys->callback([&] {
    action = [&] {
      const CMat a = load(o.a);
      const CMat b = load(o.b);
      const std::size_t n = a.rows();
      write_matrix(o.out, system_general(a, b, load_or_zero(o.s, n, n), load_or_zero(o.t, n, n),
                                         o.tol));
      return kExitOk;
    };
  });

  auto* herm = solve->add_subcommand("hermitian", "Hermitian solution of BXA = B = AXB");
  herm->add_option("--a", o.a)->required();
  herm->add_option("--b", o.b)->required();
  herm->add_option("--w", o.w);
  herm->add_option("--out", o.out)->required();
  add_tol(herm, o.tol);
  herm->callback([&] {
    action = [&] {
      const CMat a = load(o.a);
      const std::size_t n = a.cols();
      write_matrix(o.out, system_hermitian(a, load(o.b), load_or_zero(o.w, n, n), o.tol));
      return kExitOk;
    };
  });

  auto* sandwich = solve->add_subcommand("sandwich", "AXB = C");
  sandwich->add_option("--a", o.a)->required();
  sandwich->add_option("--c", o.c)->required();
  sandwich->add_option("--b", o.b)->required();
  sandwich->add_option("--u", o.u);
  sandwich->add_option("--out", o.out)->required();
  add_tol(sandwich, o.tol);
  sandwich->callback([&] {
    action = [&] {
      const CMat a = load(o.a);
      const CMat b = load(o.b);
      const SolutionFamily fam = sandwich_solve(a, load(o.c), b, o.tol);
      const CMat u = load_or_zero(o.u, a.cols(), b.rows());
      write_matrix(o.out, fam.instantiate(std::span<const CMat>(&u, 1)));
      return kExitOk;
    };
  });

  auto* mul = app.add_subcommand("mul", "product of the --in matrices, left to right");
  mul->add_option("--in", o.factors)->required()->expected(1, -1)->allow_extra_args(false);
  mul->add_option("--out", o.out)->required();
  mul->callback([&] {
    action = [&] {
      CMat p = load(o.factors.front());
      for (std::size_t i = 1; i < o.factors.size(); ++i) p = p * load(o.factors[i]);
      write_matrix(o.out, p);
      return kExitOk;
    };
  });

  auto* gen = app.add_subcommand("gen", "seeded instance generators");
  gen->require_subcommand(1);

  auto* pair = gen->add_subcommand("star-pair", "B <=* A; --out gets A, --out-small gets B");
  pair->add_option("--n", o.n)->required();
  pair->add_option("--r", o.r)->required();
  pair->add_option("--k", o.k)->required();
  pair->add_flag("--hermitian", o.hermitian);
  pair->add_option("--seed", o.seed)->required();
  pair->add_option("--out", o.out)->required();
  pair->add_option("--out-small", o.out_small)->required();
  pair->callback([&] {
    action = [&] {
      const auto [big, small] = gen_star_pair(o.n, o.r, o.k, Seed{o.seed, 0}, o.hermitian);
      write_matrix(o.out, big);
      write_matrix(o.out_small, small);
      return kExitOk;
    };
  });

  auto* gen_gp_cmd = gen->add_subcommand("gp", "generalized projection");
  gen_gp_cmd->add_option("--n", o.n)->required();
  gen_gp_cmd->add_option("--m1", o.m1, "multiplicity of eigenvalue 1");
  gen_gp_cmd->add_option("--mw", o.mw, "multiplicity of omega");
  gen_gp_cmd->add_option("--mw2", o.mw2, "multiplicity of omega^2");
  gen_gp_cmd->add_option("--seed", o.seed)->required();
  gen_gp_cmd->add_option("--out", o.out)->required();
  gen_gp_cmd->callback([&] {
    action = [&] {
      write_matrix(o.out, gen_gp(o.n, GpMultiplicities{o.m1, o.mw, o.mw2}, Seed{o.seed, 0}));
      return kExitOk;
    };
  });

  auto* idem = gen->add_subcommand("idempotent", "oblique projector");
  idem->add_option("--n", o.n)->required();
  idem->add_option("--r", o.r)->required();
  idem->add_option("--skew", o.skew);
  idem->add_option("--seed", o.seed)->required();
  idem->add_option("--out", o.out)->required();
  idem->callback([&] {
    action = [&] {
      write_matrix(o.out, gen_idempotent(o.n, o.r, o.skew, Seed{o.seed, 0}));
      return kExitOk;
    };
  });

  auto* rank = gen->add_subcommand("rank", "matrix of prescribed rank");
  rank->add_option("--rows", o.rows)->required();
  rank->add_option("--cols", o.cols)->required();
  rank->add_option("--r", o.r)->required();
  rank->add_option("--seed", o.seed)->required();
  rank->add_option("--out", o.out)->required();
  rank->callback([&] {
    action = [&] {
      write_matrix(o.out, gen_rank_r(o.rows, o.cols, o.r, Seed{o.seed, 0}));
      return kExitOk;
    };
  });

  auto* verify = app.add_subcommand("verify", "run property suites; exit 0 iff every trial passes");
  verify->add_option("--suite", o.suite, "suite id or 'all'")->required();
  verify->add_option("--trials", o.trials)->required();
  verify->add_option("--dims", o.dims)->required();
  verify->add_option("--seed", o.seed)->required();
  verify->add_option("--report", o.report, "report file (default stdout)");
  verify->add_flag("--serial", o.serial, "run trials on one thread");
  add_tol(verify, o.tol);
  verify->callback([&] {
    action = [&] { return run_verify(o, out, err); };
  });

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    o.tol.validate();
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    return action();
  } catch (const Usage& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ShapeError& e) {
    err << "shape error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const NotComparableError& e) {
    err << "not comparable: " << e.what() << '\n';
    return kExitFalse;
  } catch (const UnsolvableError& e) {
    err << "unsolvable: " << e.what() << '\n';
    return kExitFalse;
  } catch (const PreconditionError& e) {
    err << "precondition failed: " << e.what() << '\n';
    return kExitFalse;
  } catch (const NumericError& e) {
    err << "numeric failure: " << e.what() << '\n';
    return kExitNumeric;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

int dispatch(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return dispatch(args, std::cout, std::cerr);
}

}  // namespace starsys::cli
