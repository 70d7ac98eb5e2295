#include <starsys/verify.hpp>

#include <algorithm>
#include <cstdint>
#include <exception>
#include <string>

#include <starsys/errors.hpp>

namespace starsys {

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& e : detail::suite_registry()) v.emplace_back(e.name);
    return v;
  }();
  return names;
}

bool is_suite(std::string_view name) {
  const auto& names = suite_names();
  return std::find(names.begin(), names.end(), name) != names.end();
}

namespace {

detail::SuiteFn lookup(std::string_view name) {
  for (const auto& e : detail::suite_registry())
    if (name == e.name) return e.fn;
  throw PreconditionError("unknown suite '" + std::string(name) + "'");
}

void check_dims(std::size_t dims) {
  if (dims < kMinSuiteDims || dims > kMaxSuiteDims)
    throw PreconditionError("suite dims must lie in [" + std::to_string(kMinSuiteDims) + ", " +
                            std::to_string(kMaxSuiteDims) + "], got " + std::to_string(dims));
}

Report run_one(detail::SuiteFn fn, std::string_view name, std::size_t trial, std::size_t dims,
               std::uint64_t root_seed, const Tol& tol) {
  const Seed seed{root_seed, trial};
  Rng rng(seed);
  TrialContext ctx{dims, seed, tol, rng};
  Report r;
  try {
    r = fn(ctx);
  } catch (const std::exception& e) {
    r = Report{};
    r.add_flag("exception", false);
    r.error = e.what();
  }
  r.suite = std::string(name);
  r.trial = trial;
  r.seed = seed;
  return r;
}

}  // namespace

Report run_trial(std::string_view name, std::size_t trial, std::size_t dims,
                 std::uint64_t root_seed, const Tol& tol) {
  check_dims(dims);
  return run_one(lookup(name), name, trial, dims, root_seed, tol);
}

std::vector<Report> run_suite(std::string_view name, std::size_t trials, std::size_t dims,
                              std::uint64_t root_seed, const Tol& tol, Execution exec) {
  tol.validate();
  check_dims(dims);
  const detail::SuiteFn fn = lookup(name);
  std::vector<Report> reports(trials);
  if (exec == Execution::serial) {
    for (std::size_t t = 0; t < trials; ++t) reports[t] = run_one(fn, name, t, dims, root_seed, tol);
  } else {
    const auto count = static_cast<std::int64_t>(trials);
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t t = 0; t < count; ++t) {
      const auto idx = static_cast<std::size_t>(t);
      reports[idx] = run_one(fn, name, idx, dims, root_seed, tol);
    }
  }
  return reports;
}

bool all_pass(const std::vector<Report>& reports) {
  return std::all_of(reports.begin(), reports.end(), [](const Report& r) { return r.verdict(); });
}

}  // namespace starsys
