#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <starsys/tol.hpp>

namespace starsys {

/// Reproducibility key: `root` seeds a run, `stream` selects the trial.
struct Seed {
  std::uint64_t root = 0;
  std::uint64_t stream = 0;
};

enum class CheckStatus { pass, marginal, fail };

struct Check {
  std::string name;
  double residual = 0.0;
  bool pass = false;
  /// Residual sits close to a decision threshold; see Report::add_*.
  bool marginal = false;

  CheckStatus status() const;
};

/// Lower bound on a relative residual that a negative (expected-to-fail)
/// check must reach. Residuals between res_rtol and this value are the gray
/// zone: reported as marginal and counted as failures.
inline constexpr double kNegativeMargin = 1e-5;

/// Named check results for one diagnostic evaluation or one suite trial.
struct Report {
  std::string suite;
  std::uint64_t trial = 0;
  Seed seed{};
  std::vector<Check> checks;
  /// Diagnostic message when a trial threw; not part of the line format.
  std::string error;

  /// Conjunction of every check's pass flag (true for an empty report).
  bool verdict() const;

  /// Threshold test residual <= tol.res_rtol. Within 10% of the threshold the
  /// check is flagged marginal but still decided by the strict comparison.
  Check& add_threshold(std::string name, double residual, const Tol& tol);
  /// Positive expectation: passes iff residual <= tol.res_rtol.
  Check& expect_small(std::string name, double residual, const Tol& tol);
  /// Negative expectation: passes iff residual >= kNegativeMargin; residuals in
  /// (res_rtol, kNegativeMargin) are marginal failures.
  Check& expect_large(std::string name, double residual, const Tol& tol);
  /// Boolean fact; residual is recorded as 0 (true) or 1 (false).
  Check& add_flag(std::string name, bool value);
  /// Asserts that a boolean fact has the expected value.
  Check& expect_flag(std::string name, bool value, bool expected);

  /// Appends another report's checks with `prefix.` prepended to their names.
  void merge(const Report& other, std::string_view prefix);

  const Check* find(std::string_view name) const;
  /// Pass flag of the named check; throws std::out_of_range if absent.
  bool passed(std::string_view name) const;
  double residual(std::string_view name) const;

  /// One line: `suite=... trial=... root=... <check>=<residual>:<status> ... verdict=...`
  /// with residuals in scientific notation to 6 significant digits.
  std::string to_line() const;
};

/// Scientific notation with 6 significant digits, locale independent.
std::string format_residual(double x);

}  // namespace starsys
