// Acceptance suite: one pass/fail line per criterion, non-zero exit on any
// failure. Criteria marked with runtime budgets are timed with a wall clock.

#include <derivgamma/derivgamma.hpp>

#include <array>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

using namespace derivgamma;

namespace {

int failures = 0;

void criterion(int id, const std::string& what, bool pass, const std::string& detail) {
  std::cout << (pass ? "PASS" : "FAIL") << " criterion " << id << ": " << what;
  if (!detail.empty()) std::cout << "  (" << detail << ")";
  std::cout << std::endl;
  if (!pass) ++failures;
}

double harmonic(int n) {
  double h = 0.0;
  for (int k = 1; k <= n; ++k) h += 1.0 / k;
  return h;
}

struct RunResult {
  int exit_code;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  const std::string cmd = std::string(DERIVGAMMA_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {-1, ""};
  std::string out;
  std::array<char, 4096> buf;
  while (std::size_t n = std::fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::vector<std::vector<std::string>> csv_rows(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::stringstream ss(text);
  std::string line;
  while (std::getline(ss, line)) {
    std::vector<std::string> fields;
    std::stringstream ls(line);
    std::string f;
    while (std::getline(ls, f, ',')) fields.push_back(f);
    rows.push_back(fields);
  }
  return rows;
}

void c1_terminating_integers() {
  double worst = 0.0;
  bool counts_ok = true;
  for (int k = 1; k <= 20; ++k) {
    const SeriesResult r = digamma({static_cast<double>(k), 0.0});
    worst = std::max(worst, std::abs(r.value.real() -
                                     (harmonic(k - 1) - constants::euler_gamma)));
    worst = std::max(worst, std::abs(r.value.imag()));
    if (r.terms_used != std::max<TermIndex>(k - 1, 1)) counts_ok = false;
  }
  criterion(1, "integer arguments terminate exactly at harmonic values",
            worst <= 1e-13 && counts_ok,
            "max err " + std::to_string(worst) +
                (counts_ok ? ", term counts exact" : ", TERM COUNTS WRONG"));
}

void c2_form_equivalence() {
  std::mt19937 rng(101u);
  std::uniform_real_distribution<double> re(0.2, 8.0);
  std::uniform_real_distribution<double> im(-2.0, 2.0);
  std::uniform_int_distribution<TermIndex> md(1, 100);
  double worst = 0.0;
  for (int i = 0; i < 100; ++i) {
    const ComplexScalar z{re(rng), im(rng)};
    const TermIndex m = md(rng);
    const ComplexScalar a = digamma_partial(z, m);
    const ComplexScalar b = digamma_eq11_partial(z, m);
    worst = std::max(worst, std::abs(a - b) / (1.0 + std::abs(a)));
  }
  criterion(2, "signed-product and Pochhammer partial sums agree", worst <= 1e-12,
            "max scaled diff " + std::to_string(worst));
}

void c3_oracle_agreement() {
  const auto start = std::chrono::steady_clock::now();
  EvalConfig cfg;
  cfg.abs_tol = 1e-8;
  cfg.max_terms = 1'000'000;
  bool grid_ok = true;
  double worst_ratio = 0.0;
  for (double zr : {0.5, 1.5, 2.5, 3.7, 5.2}) {
    for (double zi : {0.0, 1.0}) {
      const ComplexScalar z{zr, zi};
      const SeriesResult r = digamma(z, cfg);
      const double err = std::abs(r.value - reference_digamma(z));
      const double tol = std::max(1e-7, 2.0 * r.tail_estimate);
      worst_ratio = std::max(worst_ratio, err / tol);
      if (err > tol) grid_ok = false;
    }
  }
  const double raw_err = std::abs(digamma_partial({0.5, 0.0}, 1'000'000).real() -
                                  reference_digamma({0.5, 0.0}).real());
  const double corrected_err = std::abs(digamma({0.5, 0.0}, cfg).value.real() -
                                        reference_digamma({0.5, 0.0}).real());
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const bool pass = grid_ok && raw_err >= 5e-4 && raw_err <= 5e-3 &&
                    corrected_err <= 1e-4 && secs <= 5.0;
  char detail[160];
  std::snprintf(detail, sizeof(detail),
                "worst err/tol %.3g, raw half-integer err %.3g, corrected %.3g, %.2fs",
                worst_ratio, raw_err, corrected_err, secs);
  criterion(3, "series route matches the oracle across the grid", pass, detail);
}

void c4_hypergeometric_route() {
  EvalConfig cfg;
  cfg.abs_tol = 1e-13;
  cfg.argument_reduction = false;
  cfg.max_terms = 1'000'000;
  double worst = 0.0;
  for (const ComplexScalar z :
       {ComplexScalar{2.0, 0.0}, {2.5, 0.0}, {3.7, 0.0}, {5.2, 0.0}, {2.5, 1.0}, {4.1, 0.7}}) {
    const ComplexScalar a = digamma_via_3f2(z, cfg).value;
    const ComplexScalar b = digamma(z, cfg).value;
    worst = std::max(worst, std::abs(a - b) / (1.0 + std::abs(b)));
  }
  EvalConfig bc;
  bc.abs_tol = 1e-8;
  bc.max_terms = 1'000'000;
  const Hyp3F2Params basel{{1, 0}, {1, 0}, {1, 0}, {2, 0}, {2, 0}};
  const double basel_err = std::abs(hyp3f2_unit(basel, bc).value.real() -
                                    constants::pi * constants::pi / 6.0);
  criterion(4, "3F2 route agrees with the series route; Basel value correct",
            worst <= 1e-12 && basel_err <= 1e-6,
            "max route diff " + std::to_string(worst) + ", Basel err " +
                std::to_string(basel_err));
}

void c5_limit_construction() {
  bool pass = true;
  double worst_slope = 1.0, worst_final = 0.0;
  for (double zr : {1.0, 2.0, 3.3}) {
    const ComplexScalar z{zr, 0.0};
    const ComplexScalar psi = reference_digamma(z);
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    double final_err = 0.0;
    int n = 0;
    for (int k = 6; k <= 12; ++k) {
      const double h = std::pow(2.0, -k);
      final_err = std::abs(psi_via_limit(z, {h, 0.0}) - psi);
      const double x = std::log(h), y = std::log(final_err);
      sx += x; sy += y; sxx += x * x; sxy += x * y;
      ++n;
    }
    const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    if (slope < 0.8 || slope > 1.2) pass = false;
    if (final_err > 5e-4) pass = false;
    if (std::abs(slope - 1.0) > std::abs(worst_slope - 1.0)) worst_slope = slope;
    worst_final = std::max(worst_final, final_err);
  }
  char detail[120];
  std::snprintf(detail, sizeof(detail), "worst order %.3f, worst final err %.3g",
                worst_slope, worst_final);
  criterion(5, "finite-h limit converges at first order", pass, detail);
}

void c6_weierstrass_limit() {
  const auto start = std::chrono::steady_clock::now();
  const double e1 = std::abs(gamma_small({1e-3, 0.0}, 1'000'000) -
                             (1e3 - constants::euler_gamma));
  const double e2 = std::abs(gamma_small({1.0, 0.0}, 1'000'000) - 1.0);
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  char detail[120];
  std::snprintf(detail, sizeof(detail), "small-h err %.3g, unit err %.3g, %.2fs", e1, e2, secs);
  criterion(6, "Weierstrass product limit", e1 <= 5e-3 && e2 <= 1e-5 && secs <= 2.0, detail);
}

void c7_beta_expansions() {
  double term_worst = 0.0;
  for (int zi = 1; zi <= 8; ++zi) {
    const ComplexScalar z{static_cast<double>(zi), 0.0};
    const ComplexScalar h{0.8, 0.0};
    const ComplexScalar exact = beta_exact(z, h);
    term_worst = std::max(term_worst,
                          std::abs(beta_series(z, h, zi) - exact) / std::abs(exact));
  }
  for (int hi = 0; hi <= 7; ++hi) {
    const ComplexScalar z{1.4, 0.0};
    const ComplexScalar h{static_cast<double>(hi), 0.0};
    const ComplexScalar exact = beta_exact(z, h + 1.0);
    term_worst = std::max(term_worst, std::abs(beta_series_shifted(z, h, hi + 1) - exact) /
                                          std::abs(exact));
  }
  const double e1 =
      std::abs(beta_series({0.5, 0.0}, {0.5, 0.0}, 1'000'000).real() - constants::pi);
  const double e2 = std::abs(beta_series_shifted({0.5, 0.0}, {0.5, 0.0}, 1'000'000).real() -
                             constants::pi / 2.0);
  char detail[120];
  std::snprintf(detail, sizeof(detail),
                "terminating rel %.3g, pi err %.3g, pi/2 err %.3g", term_worst, e1, e2);
  criterion(7, "Beta expansions truncate as predicted",
            term_worst <= 1e-10 && e1 <= 5e-3 && e2 <= 5e-3, detail);
}

void c8_beta_identities() {
  std::mt19937 rng(55u);
  std::uniform_real_distribution<double> re(0.2, 10.0);
  std::uniform_real_distribution<double> im(-3.0, 3.0);
  double worst = 0.0;
  for (int i = 0; i < 100; ++i) {
    const ComplexScalar z{re(rng), im(rng)};
    const ComplexScalar h{re(rng), im(rng)};
    worst = std::max(worst, beta_recurrence_residual(z, h));
  }
  criterion(8, "Beta recurrence identity", worst <= 1e-9,
            "max residual " + std::to_string(worst));
}

void c9_polygamma() {
  EvalConfig cfg;
  cfg.abs_tol = 1e-10;
  cfg.max_terms = 1'000'000;
  const double basel = constants::pi * constants::pi / 6.0;
  const double e1 = std::abs(polygamma({1.0, 0.0}, 1, cfg).value.real() - basel);
  const double e2 = std::abs(polygamma({2.0, 0.0}, 1, cfg).value.real() - (basel - 1.0));
  const double e3 = std::abs(polygamma({1.0, 0.0}, 2, cfg).value.real() +
                             2.0 * constants::zeta3);
  EvalConfig fc = cfg;
  fc.abs_tol = 1e-12;
  fc.argument_reduction = false;
  double fd_worst = 0.0;
  const double step = 1e-3;
  for (double zr : {1.5, 2.5, 4.0}) {
    const ComplexScalar z{zr, 0.0};
    const ComplexScalar fd =
        (digamma(z + step, fc).value - digamma(z - step, fc).value) / (2.0 * step);
    fd_worst = std::max(fd_worst, std::abs(polygamma(z, 1, fc).value - fd));
  }
  char detail[160];
  std::snprintf(detail, sizeof(detail),
                "psi'(1) err %.3g, psi'(2) err %.3g, psi''(1) err %.3g, fd err %.3g",
                e1, e2, e3, fd_worst);
  criterion(9, "polygamma golden values and finite differences",
            e1 <= 1e-5 && e2 <= 1e-5 && e3 <= 1e-4 && fd_worst <= 1e-4, detail);
}

void c10_recurrence() {
  std::mt19937 rng(77u);
  std::uniform_real_distribution<double> re(0.5, 6.0);
  std::uniform_real_distribution<double> im(-1.0, 1.0);
  EvalConfig cfg;
  cfg.abs_tol = 1e-8;
  cfg.argument_reduction = false;
  double worst = 0.0;
  for (int i = 0; i < 100; ++i) {
    const ComplexScalar z{re(rng), im(rng)};
    const ComplexScalar d = digamma(z + 1.0, cfg).value - digamma(z, cfg).value;
    worst = std::max(worst, std::abs(d - 1.0 / z));
  }
  criterion(10, "digamma recurrence psi(z+1) - psi(z) = 1/z", worst <= 1e-7,
            "max residual " + std::to_string(worst));
}

void c11_cancellation_guard() {
  const double exact = harmonic(29) - constants::euler_gamma;
  const double guarded = std::abs(digamma({30.0, 0.0}).value.real() - exact);
  EvalConfig off;
  off.argument_reduction = false;
  const double raw = std::abs(digamma({30.0, 0.0}, off).value.real() - exact);
  char detail[120];
  std::snprintf(detail, sizeof(detail), "guarded err %.3g, unguarded err %.3g",
                guarded, raw);
  criterion(11, "argument reduction is necessary and sufficient at z = 30",
            guarded <= 1e-8 && raw > 1e-8, detail);
}

void c12_term_growth() {
  double peak = 0.0;
  TermIndex peak_n = 0;
  for (TermIndex n = 1; n <= 9; ++n) {
    const double mag = std::abs(series_term({10.0, 0.0}, n));
    if (mag > peak) { peak = mag; peak_n = n; }
  }
  bool decay = true;
  double prev = std::abs(series_term({10.0, 0.0}, 10));
  for (TermIndex n = 11; n <= 30; ++n) {
    const double mag = std::abs(series_term({10.0, 0.0}, n));
    if (prev != 0.0 && mag >= prev) decay = false;
    prev = mag;
  }
  // the CLI table must exhibit the same shape
  const RunResult table = run_cli("table --z 10 --m 1..20");
  bool cli_ok = table.exit_code == 0;
  if (cli_ok) {
    const auto rows = csv_rows(table.out);
    cli_ok = rows.size() == 21;
    if (cli_ok) {
      std::size_t argmax = 1;
      for (std::size_t i = 2; i < rows.size(); ++i)
        if (std::stod(rows[i][3]) > std::stod(rows[argmax][3])) argmax = i;
      cli_ok = argmax < 10;
    }
  }
  criterion(12, "term growth peaks before n = 10 and decays afterwards",
            peak_n < 10 && decay && cli_ok,
            "peak at n = " + std::to_string(peak_n));
}

void c13_cli_contract() {
  bool pass = true;
  std::string detail;
  if (run_cli("eval --z 1 --method series").exit_code != 0) { pass = false; detail += "[exit0]"; }
  if (run_cli("eval --z 1 --badflag").exit_code != 2) { pass = false; detail += "[exit2]"; }
  if (run_cli("eval --z -1").exit_code != 3) { pass = false; detail += "[exit3]"; }
  if (run_cli("verify").exit_code != 0) { pass = false; detail += "[verify]"; }
  setenv("DERIVGAMMA_MAX_TERMS", "10", 1);
  if (run_cli("verify --only digamma").exit_code != 1) { pass = false; detail += "[exit1]"; }
  unsetenv("DERIVGAMMA_MAX_TERMS");
  for (const std::string& cmd :
       {std::string("eval --z 0.5 --z 2+1i --method series --compare --format csv"),
        std::string("table --z 0.5 --m 10,100,1000"),
        std::string("eval --z 3.3 --method f32 --format json")}) {
    const RunResult a = run_cli(cmd);
    const RunResult b = run_cli(cmd);
    if (a.out != b.out || a.out.empty()) { pass = false; detail += "[determinism]"; }
  }
  criterion(13, "CLI exit codes, verify, and byte determinism", pass,
            detail.empty() ? "all sub-checks ok" : detail);
}

}  // namespace

int main() {
  c1_terminating_integers();
  c2_form_equivalence();
  c3_oracle_agreement();
  c4_hypergeometric_route();
  c5_limit_construction();
  c6_weierstrass_limit();
  c7_beta_expansions();
  c8_beta_identities();
  c9_polygamma();
  c10_recurrence();
  c11_cancellation_guard();
  c12_term_growth();
  c13_cli_contract();
  std::cout << (failures == 0 ? "ACCEPTANCE: all criteria passed"
                              : "ACCEPTANCE: FAILURES PRESENT")
            << std::endl;
  return failures == 0 ? 0 : 1;
}
