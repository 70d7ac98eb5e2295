#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <starsys/cmat.hpp>
#include <starsys/report.hpp>
#include <starsys/rng.hpp>
#include <starsys/tol.hpp>

namespace starsys {

struct LsqResult {
  CMat x_best;
  /// ‖B X A - B‖_F + ‖A X B - B‖_F at x_best.
  double residual = 0.0;
};

/// Independent solvability oracle for BXA = B = AXB. Stacks both equations
/// into one linear system over vec(X) with Kronecker structure
///   [Aᵀ ⊗ B; Bᵀ ⊗ A] vec(X) = [vec B; vec B]
/// and solves it by SVD least squares. Uses only matrix primitives.
LsqResult lsq_oracle(const CMat& a, const CMat& b, const Tol& tol = {});

/// residual / max(1, ‖B‖_F).
double lsq_relative(const LsqResult& r, const CMat& b);

/// residual <= res_rtol * max(1, ‖B‖_F).
bool lsq_solvable(const LsqResult& r, const CMat& b, const Tol& tol = {});

enum class Execution { serial, parallel };

/// Per-trial context handed to a suite body.
struct TrialContext {
  std::size_t dims;
  Seed seed;
  Tol tol;
  Rng& rng;
};

inline constexpr std::size_t kMinSuiteDims = 2;
inline constexpr std::size_t kMaxSuiteDims = 8;

/// Registered suite ids, in registry order.
const std::vector<std::string>& suite_names();

bool is_suite(std::string_view name);

/// Runs `trials` trials of one suite at dimension `dims`; trial t uses
/// Seed{root_seed, t}. Reports are ordered by trial index regardless of
/// scheduling. Throws PreconditionError for an unknown suite or dims outside
/// [kMinSuiteDims, kMaxSuiteDims].
std::vector<Report> run_suite(std::string_view name, std::size_t trials, std::size_t dims,
                              std::uint64_t root_seed, const Tol& tol = {},
                              Execution exec = Execution::parallel);

/// One trial, serially. Exceptions thrown by the suite body become a failed
/// `exception` check and the message is kept in `error`.
Report run_trial(std::string_view name, std::size_t trial, std::size_t dims,
                 std::uint64_t root_seed, const Tol& tol = {});

bool all_pass(const std::vector<Report>& reports);

namespace detail {
using SuiteFn = Report (*)(TrialContext&);
struct SuiteEntry {
  const char* name;
  SuiteFn fn;
};
const std::vector<SuiteEntry>& suite_registry();
}  // namespace detail

}  // namespace starsys
