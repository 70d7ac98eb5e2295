#include <starsys/report.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <stdexcept>

namespace starsys {

CheckStatus Check::status() const {
  if (marginal) return CheckStatus::marginal;
  return pass ? CheckStatus::pass : CheckStatus::fail;
}

bool Report::verdict() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

Check& Report::add_threshold(std::string name, double residual, const Tol& tol) {
  const bool pass = residual <= tol.res_rtol;
  const bool marginal = std::abs(residual - tol.res_rtol) <= 0.1 * tol.res_rtol;
  return checks.emplace_back(Check{std::move(name), residual, pass, marginal});
}

Check& Report::expect_small(std::string name, double residual, const Tol& tol) {
  const bool pass = residual <= tol.res_rtol;
  const bool marginal = !pass && residual < kNegativeMargin;
  return checks.emplace_back(Check{std::move(name), residual, pass, marginal});
}

Check& Report::expect_large(std::string name, double residual, const Tol& tol) {
  const bool pass = residual >= kNegativeMargin;
  const bool marginal = !pass && residual > tol.res_rtol;
  return checks.emplace_back(Check{std::move(name), residual, pass, marginal});
}

Check& Report::add_flag(std::string name, bool value) {
  return checks.emplace_back(Check{std::move(name), value ? 0.0 : 1.0, value, false});
}

Check& Report::expect_flag(std::string name, bool value, bool expected) {
  return checks.emplace_back(Check{std::move(name), value ? 0.0 : 1.0, value == expected, false});
}

void Report::merge(const Report& other, std::string_view prefix) {
  for (Check c : other.checks) {
    c.name = std::string(prefix) + "." + c.name;
    checks.push_back(std::move(c));
  }
}

const Check* Report::find(std::string_view name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

bool Report::passed(std::string_view name) const {
  const Check* c = find(name);
  if (!c) throw std::out_of_range("Report: no check named " + std::string(name));
  return c->pass;
}

double Report::residual(std::string_view name) const {
  const Check* c = find(name);
  if (!c) throw std::out_of_range("Report: no check named " + std::string(name));
  return c->residual;
}

std::string format_residual(double x) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::scientific, 5);
  if (ec != std::errc{}) return "nan";
  return std::string(buf, end);
}

std::string Report::to_line() const {
  std::string line = "suite=" + suite + " trial=" + std::to_string(trial) +
                     " root=" + std::to_string(seed.root);
  for (const auto& c : checks) {
    line += ' ';
    line += c.name;
    line += '=';
    line += format_residual(c.residual);
    switch (c.status()) {
      case CheckStatus::pass: line += ":pass"; break;
      case CheckStatus::marginal: line += ":marginal"; break;
      case CheckStatus::fail: line += ":fail"; break;
    }
  }
  line += verdict() ? " verdict=pass" : " verdict=fail";
  return line;
}

}  // namespace starsys
