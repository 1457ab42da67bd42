// Acceptance suite: runs every acceptance criterion at its stated tolerance
// and prints one pass/fail line per criterion. Exits nonzero on any failure.
//
// Usage: acceptance_tests [path-to-arctic-cli]

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "arctic/io.hpp"
#include "arctic/verify.hpp"

using namespace arctic;

namespace {

struct Criterion {
  std::string label;
  std::vector<std::string> prefixes;
  int pass = 0, fail = 0;
  std::vector<std::string> failures;
  double seconds = -1;
  double time_budget = -1;
};

bool starts_with_any(const std::string& name, const std::vector<std::string>& prefixes) {
  for (const auto& p : prefixes)
    if (name.rfind(p, 0) == 0) return true;
  return false;
}

double run_suite_timed(const std::string& name, std::vector<CheckResult>& sink) {
  auto t0 = std::chrono::steady_clock::now();
  SuiteReport rep = run_verify_suite(name);
  auto t1 = std::chrono::steady_clock::now();
  for (auto& c : rep.checks) sink.push_back(std::move(c));
  return std::chrono::duration<double>(t1 - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
  std::string cli_path = argc > 1 ? argv[1] : "";

  std::vector<Criterion> crit = {
      {"1: partition functions equal brute-force enumeration (rel 1e-20, < 2 min)",
       {"6v asm", "6vp vsasm", "20v uniform", "aztec triangle",
        "aztec triangle vs 20v configurations"}},
      {"2: refined domino/20V identity exact for n=1..3",
       {"refined domino/20V identity"}},
      {"3: classical and free-fermion closed forms vs determinants (rel 1e-30, n<=8)",
       {"classical closed form", "free-fermion closed form"}},
      {"4: Delta and one-point recursions (residuals < 1e-20, n<=6)",
       {"6v delta recursion", "6v one-point relation", "6vp delta recursion",
        "6vp one-point relation"}},
      {"5: reflection symmetries (rel 1e-25, n<=6)",
       {"6v reflection symmetry", "6vp reflection symmetry"}},
      {"6: path closed forms vs DP oracle (rel 1e-25, k,l<=30; integrality)",
       {"path closed vs dp", "uniform 20v path counts integral"}},
      {"7: Wronskian/Liouville/psi-ODE residuals (< 1e-25, 5-point grid)",
       {"6v wronskian", "6v psi-ode", "6vp liouville", "6vp psi-ode"}},
      {"8: asymptotic convergence at N=32 (< 0.05, < 10 min)",
       {"20v free-energy error", "6v one-point exponent"}},
      {"9: saddle-point systems (residuals < 1e-25, 10 xi per model)",
       {"saddle system"}},
      {"10: curve validations (tangency, duals, half circle, algebraic, scaling, endpoints, "
       "analytic continuation)",
       {"tangency", "secant envelope", "dual vs finite-difference", "free-fermion 6vp half",
        "near-limit ellipse", "algebraic", "6vp = 2 x 6v branch", "DT NW tangency",
        "DT horizontal tangency", "SE = analytic continuation"}},
      {"extra: refined sum rules, factorization, kappa round trip",
       {"free-fermion factorization", "6v refined sum rule", "6vp refined sum rule",
        "20v refined sum rule", "kappa->xi"}},
  };

  std::vector<CheckResult> checks;
  double t_counts = run_suite_timed("counts", checks);
  run_suite_timed("recursions", checks);
  run_suite_timed("closed_forms", checks);
  run_suite_timed("sum_rules", checks);
  run_suite_timed("saddles", checks);
  run_suite_timed("curves", checks);
  double t_conv = run_suite_timed("asymptotic_convergence", checks);

  crit[0].seconds = t_counts;
  crit[0].time_budget = 120.0;
  crit[7].seconds = t_conv;
  crit[7].time_budget = 600.0;

  for (const CheckResult& c : checks) {
    bool claimed = false;
    for (Criterion& cr : crit) {
      if (starts_with_any(c.name, cr.prefixes)) {
        (c.pass ? cr.pass : cr.fail)++;
        if (!c.pass) cr.failures.push_back(c.name + " = " + c.computed);
        claimed = true;
        break;
      }
    }
    if (!claimed) std::fprintf(stderr, "note: unmapped check '%s'\n", c.name.c_str());
  }

  int total_fail = 0;
  for (Criterion& cr : crit) {
    bool time_ok = cr.time_budget < 0 || cr.seconds <= cr.time_budget;
    bool ok = cr.fail == 0 && cr.pass > 0 && time_ok;
    std::string timing;
    if (cr.seconds >= 0) {
      char buf[48];
      std::snprintf(buf, sizeof(buf), ", %.1f s", cr.seconds);
      timing = buf;
    }
    std::printf("[%s] criterion %s (%d checks%s)\n", ok ? "PASS" : "FAIL", cr.label.c_str(),
                cr.pass + cr.fail, timing.c_str());
    for (const auto& f : cr.failures) std::printf("        failed: %s\n", f.c_str());
    if (!ok) ++total_fail;
  }

  // Criterion 11: the CLI front end (exit codes and CSV round trip).
  if (!cli_path.empty()) {
    std::string tmp_csv = "acceptance_curve.csv";
    int rc1 = std::system((cli_path + " verify all > acceptance_cli.log 2>&1").c_str());
    int rc2 = std::system((cli_path +
                           " curve --point uniform --branches ne,se --points 40 --format csv "
                           "--out " + tmp_csv)
                              .c_str());
    bool ok = rc1 == 0 && rc2 == 0;
    int rows = 0;
    if (ok) {
      std::ifstream is(tmp_csv);
      std::stringstream buf;
      buf << is.rdbuf();
      try {
        auto parsed = parse_curve_csv(buf.str(), 256);
        rows = static_cast<int>(parsed.size());
        for (const CurveRow& r : parsed) {
          // rows carry 30 decimal digits; re-parsed values must still sit on
          // their tangent line
          if (abs(r.y + r.A * r.x - r.B).to_double() > 1e-25) ok = false;
        }
        if (rows == 0) ok = false;
      } catch (const std::exception& e) {
        std::fprintf(stderr, "csv re-parse failed: %s\n", e.what());
        ok = false;
      }
    }
    std::printf("[%s] criterion 11: CLI exit codes and CSV round-trip tangency (%d rows)\n",
                ok ? "PASS" : "FAIL", rows);
    std::remove(tmp_csv.c_str());
    std::remove("acceptance_cli.log");
    if (!ok) ++total_fail;
  } else {
    std::printf("[SKIP] criterion 11: CLI path not supplied\n");
  }

  if (total_fail) {
    std::printf("%d criterion(s) failed\n", total_fail);
    return 1;
  }
  std::printf("all criteria passed\n");
  return 0;
}
