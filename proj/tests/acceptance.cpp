// One line per acceptance criterion; exit status 0 iff every line is PASS.

#include <sys/wait.h>
#include <unistd.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <starsys/report.hpp>
#include <starsys/verify.hpp>

using namespace starsys;
namespace fs = std::filesystem;

namespace {

constexpr double kRankRtol = 1e-12;
constexpr double kResRtol = 1e-8;
constexpr double kPenroseRtol = 1e-10;
constexpr double kMargin = 1e-5;
constexpr double kTimeBudgetSeconds = 10.0;
constexpr std::size_t kDims = 6;
constexpr std::uint64_t kRoot = 20240601;

const Tol kTol{kRankRtol, kResRtol};

struct Outcome {
  bool pass = true;
  std::string detail;
};

int failures = 0;
double suite_seconds = 0.0;

void emit(int id, const std::string& title, const Outcome& o) {
  std::cout << "criterion " << id << " [" << (o.pass ? "PASS" : "FAIL") << "] " << title << ": "
            << o.detail << '\n';
  if (!o.pass) ++failures;
}

struct SuiteStats {
  std::size_t trials = 0;
  std::size_t passed = 0;
  std::size_t marginal = 0;
  std::size_t flags_false = 0;
  std::string first_failure;
};

// A check named "*agree" carries an agreement flag.
bool is_agreement(const Check& c) {
  return c.name.size() >= 5 && c.name.compare(c.name.size() - 5, 5, "agree") == 0;
}

SuiteStats run(const std::string& name, std::size_t trials, std::size_t dims = kDims,
               const Tol& tol = kTol) {
  const auto t0 = std::chrono::steady_clock::now();
  const auto reports = run_suite(name, trials, dims, kRoot, tol);
  suite_seconds += std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  SuiteStats s;
  s.trials = reports.size();
  for (const auto& r : reports) {
    if (r.verdict()) ++s.passed;
    else if (s.first_failure.empty()) s.first_failure = r.to_line() + (r.error.empty() ? "" : " (" + r.error + ")");
    for (const auto& c : r.checks) {
      if (c.status() == CheckStatus::marginal && !c.pass) ++s.marginal;
      if (is_agreement(c) && !c.pass) ++s.flags_false;
    }
  }
  return s;
}

Outcome from(const SuiteStats& s) {
  Outcome o;
  o.pass = s.passed == s.trials && s.flags_false == 0;
  o.detail = std::to_string(s.passed) + "/" + std::to_string(s.trials) + " trials, " +
             std::to_string(s.flags_false) + " disagreements, " + std::to_string(s.marginal) +
             " marginal";
  if (!s.first_failure.empty()) o.detail += "; first failure: " + s.first_failure;
  return o;
}

// Worst (largest) residual of the named checks, and smallest of the negatives.
struct Extremes {
  double worst_positive = 0.0;
  double weakest_negative = 1e300;
};

Extremes extremes(const std::vector<Report>& reports, const std::vector<std::string>& positives,
                  const std::vector<std::string>& negatives) {
  Extremes e;
  for (const auto& r : reports) {
    for (const auto& n : positives)
      if (const Check* c = r.find(n)) e.worst_positive = std::max(e.worst_positive, c->residual);
    for (const auto& n : negatives)
      if (const Check* c = r.find(n)) e.weakest_negative = std::min(e.weakest_negative, c->residual);
  }
  return e;
}

int shell(const std::string& cmd) {
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Outcome criterion_penrose() {
  const Tol strict{kRankRtol, kPenroseRtol};
  const auto reports = run_suite("penrose", 200, 8, kRoot, kTol);
  const Extremes e = extremes(reports, {"axa", "xax", "ax_hermitian", "xa_hermitian", "adjoint_commutes"}, {});
  Outcome o = from(run("penrose", 200, 8));
  o.pass = o.pass && e.worst_positive <= strict.res_rtol;
  o.detail += ", worst identity residual " + format_residual(e.worst_positive) + " (limit " +
              format_residual(kPenroseRtol) + ")";
  return o;
}

Outcome criterion_thm23() {
  const auto reports = run_suite("thm2.3", 100, kDims, kRoot, kTol);
  const Extremes e = extremes(reports, {"pos.cond2", "pos.oracle", "pos.pinv.bxa", "pos.pinv.axb"},
                              {"neg.cond2", "neg.oracle"});
  Outcome o = from(run("thm2.3", 100));
  o.pass = o.pass && e.worst_positive <= kResRtol && e.weakest_negative >= kMargin;
  o.detail += ", 100 positives + 100 negatives, worst positive " + format_residual(e.worst_positive) +
              ", weakest negative " + format_residual(e.weakest_negative);
  return o;
}

Outcome criterion_positive(const std::string& suite, std::size_t trials) {
  return from(run(suite, trials));
}

Outcome criterion_thm36() {
  const auto reports = run_suite("thm3.6", 100, kDims, kRoot, kTol);
  std::vector<std::string> neg;
  for (int d = 0; d < 3; ++d) {
    neg.push_back("random" + std::to_string(d) + ".equations");
    neg.push_back("random" + std::to_string(d) + ".star");
  }
  const Extremes e = extremes(reports, {}, neg);
  Outcome o = from(run("thm3.6", 100));
  o.pass = o.pass && e.weakest_negative >= kMargin;
  o.detail += ", weakest non-solution residual " + format_residual(e.weakest_negative);
  return o;
}

Outcome criterion_section4() {
  const char* suites[] = {"prop4.1", "thm4.3", "lem4.4", "thm4.5", "thm4.6",
                          "prop4.2", "lem4.7", "cor4.8", "prop4.9"};
  Outcome o;
  std::size_t total = 0, passed = 0, disagreements = 0;
  for (const char* s : suites) {
    const SuiteStats st = run(s, 100);
    total += st.trials;
    passed += st.passed;
    disagreements += st.flags_false;
    if (st.passed != st.trials || st.flags_false != 0) {
      o.pass = false;
      o.detail += std::string(s) + " failed: " + from(st).detail + "; ";
    }
  }
  o.detail += std::to_string(passed) + "/" + std::to_string(total) + " trials over 9 suites, " +
              std::to_string(disagreements) + " disagreements";
  return o;
}

Outcome criterion_rem35() {
  const auto reports = run_suite("rem3.5", 50, kDims, kRoot, kTol);
  const Extremes e = extremes(reports, {"null_equal", "range_equal", "axa"}, {"not_star_below"});
  Outcome o = from(run("rem3.5", 50));
  o.pass = o.pass && e.worst_positive <= kResRtol && e.weakest_negative >= kMargin;
  o.detail += ", worst conclusion residual " + format_residual(e.worst_positive) +
              ", weakest order residual " + format_residual(e.weakest_negative);
  return o;
}

Outcome criterion_determinism(const fs::path& dir) {
  const std::string bin = STARSYS_CLI;
  const std::string args = " verify --suite all --trials 50 --dims 6 --seed 1 --report ";
  const int c1 = shell(bin + args + (dir / "run1.txt").string() + " 2>/dev/null");
  const int c2 = shell(bin + args + (dir / "run2.txt").string() + " 2>/dev/null");
  const std::string r1 = slurp(dir / "run1.txt"), r2 = slurp(dir / "run2.txt");
  std::size_t lines = 0;
  for (char ch : r1) lines += ch == '\n';
  Outcome o;
  o.pass = c1 == 0 && c2 == 0 && !r1.empty() && r1 == r2 && lines == 24 * 50;
  o.detail = "exit codes " + std::to_string(c1) + "/" + std::to_string(c2) + ", " +
             std::to_string(r1.size()) + " bytes, " + std::to_string(lines) + " lines, " +
             (r1 == r2 ? "byte-identical" : "DIFFERENT");
  return o;
}

Outcome criterion_cli(const fs::path& dir) {
  const std::string bin = STARSYS_CLI;
  auto p = [&](const char* name) { return (dir / name).string(); };
  const std::string quiet = " >/dev/null 2>&1";
  const int gen = shell(bin + " gen star-pair --n 6 --r 2 --k 3 --seed 1 --out " + p("A") +
                        " --out-small " + p("B") + quiet);
  const int solve =
      shell(bin + " solve system --a " + p("A") + " --b " + p("B") + " --out " + p("X") + quiet);
  const int mul = shell(bin + " mul --in " + p("A") + " --in " + p("X") + " --in " + p("A") +
                        " --out " + p("AXA") + quiet);
  const int check =
      shell(bin + " check star-order --a " + p("B") + " --b " + p("AXA") + quiet);

  {
    std::ofstream(p("bad")) << "2 2\n(1,0) (0,0)\n(0,0) (1,0 \n";
  }
  const int bad = shell(bin + " pinv --in " + p("bad") + " --out " + p("Y") + " 2>" + p("err"));
  const std::string err = slurp(p("err"));
  const bool located = err.find("line 3, column 11") != std::string::npos;

  Outcome o;
  o.pass = gen == 0 && solve == 0 && mul == 0 && check == 0 && bad == 2 && located;
  o.detail = "pipeline exits gen=" + std::to_string(gen) + " solve=" + std::to_string(solve) +
             " mul=" + std::to_string(mul) + " check=" + std::to_string(check) +
             ", malformed file exit " + std::to_string(bad) +
             (located ? " with line/column" : " WITHOUT line/column");
  return o;
}

}  // namespace

int main() {
  const fs::path dir = fs::temp_directory_path() / ("starsys_acceptance_" + std::to_string(::getpid()));
  fs::create_directories(dir);

  emit(1, "Penrose identities, 200 matrices, all ranks", criterion_penrose());
  emit(2, "solvability criterion vs least-squares oracle", criterion_thm23());
  emit(3, "general solution soundness, 100 pairs x 5 draws + degenerate cases",
       criterion_positive("thm3.8", 100));
  emit(4, "solution iff star domination", criterion_thm36());
  emit(5, "reduced system round trip", criterion_positive("thm3.9", 100));
  emit(6, "Hermitian solutions, W in {0, random}", criterion_positive("thm3.11", 100));
  emit(7, "projector, idempotent and generalized-projection characterizations",
       criterion_section4());
  emit(8, "converse failure for non-partial-isometries", criterion_rem35());
  std::cout << "suite time " << suite_seconds << " s (budget " << kTimeBudgetSeconds << " s)\n";
  if (suite_seconds > kTimeBudgetSeconds) {
    std::cout << "suite time budget exceeded\n";
    ++failures;
  }
  emit(9, "report stream determinism", criterion_determinism(dir));
  emit(10, "CLI pipeline and malformed input", criterion_cli(dir));

  fs::remove_all(dir);
  std::cout << (failures == 0 ? "all criteria pass" : std::to_string(failures) + " criteria failed")
            << '\n';
  return failures == 0 ? 0 : 1;
}
