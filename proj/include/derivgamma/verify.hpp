#ifndef DERIVGAMMA_VERIFY_HPP
#define DERIVGAMMA_VERIFY_HPP

#include <derivgamma/beta_gamma.hpp>
#include <derivgamma/digamma.hpp>
#include <derivgamma/hypergeometric.hpp>
#include <derivgamma/oracle.hpp>
#include <derivgamma/pochhammer.hpp>
#include <derivgamma/polygamma.hpp>

#include <algorithm>
#include <random>
#include <string>
#include <vector>

namespace derivgamma {

struct Check {
  std::string module;
  std::string name;
  double residual;
  double tolerance;
  bool pass;
};

struct VerificationReport {
  std::vector<Check> checks;

  bool all_passed() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const Check& c) { return c.pass; });
  }
};

namespace detail {

inline void push(VerificationReport& rep, const std::string& module,
                 const std::string& name, double residual, double tolerance) {
  rep.checks.push_back({module, name, residual, tolerance, residual <= tolerance});
}

inline bool wants(const std::vector<std::string>& only, const char* module) {
  return only.empty() ||
         std::find(only.begin(), only.end(), module) != only.end();
}

// Least-squares slope of log|err| against log h.
inline double loglog_slope(const std::vector<double>& h, const std::vector<double>& e) {
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double n = static_cast<double>(h.size());
  for (std::size_t i = 0; i < h.size(); ++i) {
    const double x = std::log(h[i]), y = std::log(e[i]);
    sx += x; sy += y; sxx += x * x; sxy += x * y;
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

inline double harmonic_number(TermIndex n) {
  double h = 0.0;
  for (TermIndex k = 1; k <= n; ++k) h += 1.0 / static_cast<double>(k);
  return h;
}

inline void verify_pochhammer(VerificationReport& rep) {
  std::mt19937 rng(2024u);
  std::uniform_real_distribution<double> comp(-14.0, 14.0);
  std::uniform_int_distribution<TermIndex> nd(1, 30);

  double worst = 0.0;
  for (int i = 0; i < 200; ++i) {
    const ComplexScalar z{comp(rng), comp(rng)};
    const TermIndex n = nd(rng);
    const ComplexScalar p = pochhammer(1.0 - z, n);
    const double sign = (n % 2 == 0) ? -1.0 : 1.0;  // (-1)^{n+1}
    const double r = std::abs(falling_product(z, n) + sign * p) /
                     (1.0 + std::abs(p));
    worst = std::max(worst, r);
  }
  push(rep, "pochhammer", "falling_product matches signed pochhammer", worst, 1e-10);

  std::uniform_real_distribution<double> small(-5.0, 5.0);
  worst = 0.0;
  for (int i = 0; i < 50; ++i) {
    const ComplexScalar z{small(rng), small(rng)};
    for (TermIndex n = 1; n <= 15; ++n) {
      double fact = 1.0;
      for (TermIndex k = 2; k <= n; ++k) fact *= static_cast<double>(k);
      const ComplexScalar direct =
          pochhammer(1.0 - z, n) / (static_cast<double>(n) * fact);
      const double r = std::abs(series_term(z, n) - direct) /
                       (1e-300 + std::abs(direct));
      worst = std::max(worst, r);
    }
  }
  push(rep, "pochhammer", "series_term matches direct factorial form", worst, 1e-12);

  worst = 0.0;
  for (double zr : {0.5, 1.0, 2.5, 7.0, 10.0, 15.3}) {
    const TermIndex start = static_cast<TermIndex>(std::ceil(zr));
    for (TermIndex n = std::max<TermIndex>(start, 1); n < start + 50; ++n)
      worst = std::max(worst, std::abs(term_ratio({zr, 0.0}, n)));
  }
  push(rep, "pochhammer", "term ratio below 1 past the growth hump", worst, 0.9999);

  std::uniform_int_distribution<TermIndex> nm(0, 10);
  worst = 0.0;
  for (int i = 0; i < 100; ++i) {
    const ComplexScalar a{small(rng), small(rng)};
    const TermIndex n = nm(rng), m = nm(rng);
    const ComplexScalar lhs = pochhammer(a, n + m);
    const ComplexScalar rhs = pochhammer(a, n) * pochhammer(a + static_cast<double>(n), m);
    worst = std::max(worst, std::abs(lhs - rhs) / (1.0 + std::abs(lhs)));
  }
  push(rep, "pochhammer", "addition identity (a)_{n+m} = (a)_n (a+n)_m", worst, 1e-12);
}

inline void verify_beta(VerificationReport& rep, const EvalConfig& cfg) {
  std::mt19937 rng(7u);
  std::uniform_real_distribution<double> re(0.2, 10.0);
  std::uniform_real_distribution<double> im(-3.0, 3.0);

  double worst = 0.0;
  for (int i = 0; i < 100; ++i) {
    const ComplexScalar z{re(rng), im(rng)};
    const ComplexScalar h{re(rng), im(rng)};
    worst = std::max(worst, beta_recurrence_residual(z, h));
  }
  push(rep, "beta", "recurrence B(z,h) = (z+h)/h B(z,h+1)", worst, 1e-9);

  worst = 0.0;
  for (int zi = 1; zi <= 8; ++zi) {
    for (double hr : {0.3, 1.2, 4.5}) {
      const ComplexScalar z{static_cast<double>(zi), 0.0};
      const ComplexScalar h{hr, 0.0};
      const ComplexScalar exact = beta_exact(z, h);
      worst = std::max(worst, std::abs(beta_series(z, h, zi) - exact) / std::abs(exact));
    }
  }
  push(rep, "beta", "terminating expansion equals exact Beta", worst, 1e-10);

  worst = 0.0;
  for (int hi = 0; hi <= 7; ++hi) {
    for (double zr : {0.4, 1.7, 3.1}) {
      const ComplexScalar z{zr, 0.0};
      const ComplexScalar h{static_cast<double>(hi), 0.0};
      const ComplexScalar exact = beta_exact(z, h + 1.0);
      worst = std::max(worst,
                       std::abs(beta_series_shifted(z, h, hi + 1) - exact) / std::abs(exact));
    }
  }
  push(rep, "beta", "terminating shifted expansion equals exact Beta", worst, 1e-10);

  const TermIndex factors = std::min<TermIndex>(1'000'000, cfg.max_terms);
  const double r2 = std::abs(ComplexScalar{1e-2, 0.0} * gamma_small({1e-2, 0.0}, factors) - 1.0);
  const double r3 = std::abs(ComplexScalar{1e-3, 0.0} * gamma_small({1e-3, 0.0}, factors) - 1.0);
  const double r4 = std::abs(ComplexScalar{1e-4, 0.0} * gamma_small({1e-4, 0.0}, factors) - 1.0);
  const bool monotone = r2 > r3 && r3 > r4;
  push(rep, "beta", "Weierstrass residual |h Gamma(h) - 1| vanishing",
       monotone ? r4 : 1.0, 1e-4);

  worst = 0.0;
  for (double zr : {1.0, 2.0, 3.3}) {
    const ComplexScalar z{zr, 0.0};
    const ComplexScalar psi = reference_digamma(z);
    std::vector<double> hs, errs;
    for (int k = 6; k <= 12; ++k) {
      const double h = std::pow(2.0, -k);
      hs.push_back(h);
      errs.push_back(std::abs(psi_via_limit(z, {h, 0.0}) - psi));
    }
    worst = std::max(worst, std::abs(loglog_slope(hs, errs) - 1.0));
  }
  push(rep, "beta", "limit formula converges at first order", worst, 0.2);
}

inline void verify_digamma(VerificationReport& rep, const EvalConfig& cfg) {
  std::mt19937 rng(11u);
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
  push(rep, "digamma", "signed-product form equals Pochhammer form", worst, 1e-12);

  worst = 0.0;
  for (TermIndex k = 1; k <= 20; ++k) {
    const double expected = harmonic_number(k - 1) - constants::euler_gamma;
    const ComplexScalar got =
        digamma_partial({static_cast<double>(k), 0.0}, std::max<TermIndex>(k - 1, 1));
    worst = std::max(worst, std::abs(got - expected));
    for (TermIndex n : {k, k + 3})
      worst = std::max(worst, std::abs(series_term({static_cast<double>(k), 0.0}, n)));
  }
  // rounding in the ratio recurrence leaves ~1e-12 at k near 20
  push(rep, "digamma", "integer arguments terminate at harmonic values", worst, 1e-11);

  EvalConfig rc = cfg;
  rc.abs_tol = 1e-8;
  rc.argument_reduction = false;
  std::uniform_real_distribution<double> re2(0.5, 6.0);
  std::uniform_real_distribution<double> im2(-1.0, 1.0);
  worst = 0.0;
  for (int i = 0; i < 100; ++i) {
    const ComplexScalar z{re2(rng), im2(rng)};
    const ComplexScalar d = digamma(z + 1.0, rc).value - digamma(z, rc).value;
    worst = std::max(worst, std::abs(d - 1.0 / z));
  }
  push(rep, "digamma", "recurrence psi(z+1) - psi(z) = 1/z", worst, 1e-7);

  EvalConfig oc = cfg;
  oc.abs_tol = 1e-8;
  worst = 0.0;
  for (double zr : {0.5, 1.5, 2.5, 3.7, 5.2}) {
    for (double zi : {0.0, 1.0}) {
      const ComplexScalar z{zr, zi};
      const SeriesResult r = digamma(z, oc);
      const double err = std::abs(r.value - reference_digamma(z));
      const double tol = std::max(1e-7, 2.0 * r.tail_estimate);
      worst = std::max(worst, err / tol);
    }
  }
  push(rep, "digamma", "oracle agreement across the sample grid", worst, 1.0);

  worst = 0.0;
  for (const ComplexScalar z : {ComplexScalar{0.7, 1.3}, {2.4, -0.6}, {5.1, 2.2}}) {
    const ComplexScalar a = digamma(std::conj(z), cfg).value;
    const ComplexScalar b = std::conj(digamma(z, cfg).value);
    worst = std::max(worst, std::abs(a - b));
  }
  push(rep, "digamma", "conjugate symmetry", worst, 1e-12);

  // z = 10: |t_n| peaks before n = 10 and the ratio stays below 1 afterwards.
  double peak = 0.0;
  TermIndex peak_n = 0;
  for (TermIndex n = 1; n <= 9; ++n) {
    const double mag = std::abs(series_term({10.0, 0.0}, n));
    if (mag > peak) { peak = mag; peak_n = n; }
  }
  double hump_res = (peak_n >= 1 && peak_n < 10) ? 0.0 : 1.0;
  for (TermIndex n = 10; n <= 30; ++n)
    hump_res = std::max(hump_res, std::abs(term_ratio({10.0, 0.0}, n)) < 1.0 ? 0.0 : 1.0);
  push(rep, "digamma", "term growth hump at z = 10", hump_res, 0.5);
}

inline void verify_hyp3f2(VerificationReport& rep, const EvalConfig& cfg) {
  EvalConfig ec = cfg;
  ec.abs_tol = 1e-13;
  ec.argument_reduction = false;
  double worst = 0.0;
  for (const ComplexScalar z :
       {ComplexScalar{2.0, 0.0}, {2.5, 0.0}, {3.7, 0.0}, {5.2, 0.0}, {2.5, 1.0}, {4.1, 0.7}}) {
    const ComplexScalar a = digamma_via_3f2(z, ec).value;
    const ComplexScalar b = digamma(z, ec).value;
    worst = std::max(worst, std::abs(a - b) / (1.0 + std::abs(b)));
  }
  push(rep, "hyp3f2", "3F2 route equals series route", worst, 1e-12);

  worst = 0.0;
  for (int k = 0; k <= 10; ++k) {
    const Hyp3F2Params p{{static_cast<double>(-k), 0.0}, {1.3, 0.2}, {0.7, 0.0},
                         {2.1, 0.0}, {1.6, -0.4}};
    const SeriesResult r = hyp3f2_unit(p, cfg);
    // Independent direct summation of the k+1 nonzero terms.
    KahanComplex direct;
    double fact = 1.0;
    for (TermIndex n = 0; n <= k; ++n) {
      if (n > 0) fact *= static_cast<double>(n);
      direct.add(pochhammer(p.a1, n) * pochhammer(p.a2, n) * pochhammer(p.a3, n) /
                 (pochhammer(p.b1, n) * pochhammer(p.b2, n) * fact));
    }
    worst = std::max(worst, std::abs(r.value - direct.value()) /
                                (1e-300 + std::abs(direct.value())));
  }
  push(rep, "hyp3f2", "terminating series summed exactly", worst, 1e-14);

  EvalConfig sc = cfg;
  sc.abs_tol = 1e-10;
  const Hyp3F2Params base{{0.4, 0.1}, {1.2, 0.0}, {0.9, -0.2}, {2.3, 0.0}, {1.9, 0.3}};
  const ComplexScalar v0 = hyp3f2_unit(base, sc).value;
  worst = 0.0;
  for (const Hyp3F2Params& p :
       {Hyp3F2Params{base.a2, base.a3, base.a1, base.b1, base.b2},
        Hyp3F2Params{base.a3, base.a1, base.a2, base.b2, base.b1}}) {
    worst = std::max(worst, std::abs(hyp3f2_unit(p, sc).value - v0));
  }
  push(rep, "hyp3f2", "parameter permutation symmetry", worst, 1e-13);
}

inline void verify_polygamma(VerificationReport& rep, const EvalConfig& cfg) {
  double worst = 0.0;
  for (const ComplexScalar z : {ComplexScalar{1.5, 0.0}, {3.2, 0.4}}) {
    worst = std::max(worst,
                     std::abs(polygamma(z, 0, cfg).value - digamma(z, cfg).value));
  }
  push(rep, "polygamma", "order zero is the digamma path", worst, 0.0);

  EvalConfig fc = cfg;
  fc.abs_tol = 1e-12;
  fc.argument_reduction = false;
  const double step = 1e-3;
  worst = 0.0;
  for (double zr : {1.5, 2.5, 4.0}) {
    const ComplexScalar z{zr, 0.0};
    const ComplexScalar up = digamma(z + step, fc).value;
    const ComplexScalar mid = digamma(z, fc).value;
    const ComplexScalar dn = digamma(z - step, fc).value;
    const ComplexScalar fd1 = (up - dn) / (2.0 * step);
    const ComplexScalar fd2 = (up - 2.0 * mid + dn) / (step * step);
    worst = std::max(worst, std::abs(polygamma(z, 1, fc).value - fd1));
    worst = std::max(worst, std::abs(polygamma(z, 2, fc).value - fd2));
  }
  push(rep, "polygamma", "finite differences of digamma", worst, 1e-4);

  worst = 0.0;
  for (TermIndex l : {TermIndex{1}, TermIndex{2}}) {
    double fact = 1.0;
    for (TermIndex j = 2; j <= l; ++j) fact *= static_cast<double>(j);
    const double sign = (l % 2 == 0) ? 1.0 : -1.0;
    for (double zr : {1.0, 1.7, 3.2}) {
      const ComplexScalar z{zr, 0.0};
      const ComplexScalar d = polygamma(z + 1.0, l, cfg).value - polygamma(z, l, cfg).value;
      const ComplexScalar expected =
          sign * fact * std::pow(z, -static_cast<double>(l + 1));
      worst = std::max(worst, std::abs(d - expected));
    }
  }
  push(rep, "polygamma", "recurrence of the derivative orders", worst, 1e-4);

  worst = 0.0;
  for (double zr : {1.0, 1.5, 2.5, 4.0}) {
    for (TermIndex l : {TermIndex{1}, TermIndex{2}, TermIndex{3}}) {
      const ComplexScalar z{zr, 0.0};
      const SeriesResult r = polygamma(z, l, cfg);
      const double err = std::abs(r.value - reference_polygamma(z, l));
      const double tol = std::max(1e-5, 2.0 * r.tail_estimate);
      worst = std::max(worst, err / tol);
    }
  }
  push(rep, "polygamma", "oracle agreement across the sample grid", worst, 1.0);
}

inline void verify_oracle(VerificationReport& rep, const EvalConfig& cfg) {
  const TermIndex big = std::min<TermIndex>(1'000'000, cfg.max_terms);
  double worst = 0.0;
  for (double zr : {0.5, 1.0, 2.5, 7.0}) {
    const ComplexScalar z{zr, 0.0};
    worst = std::max(worst, std::abs(digamma_classical(z, big) - reference_digamma(z)));
  }
  push(rep, "oracle", "classical series matches reference digamma", worst, 1e-5);

  std::mt19937 rng(42u);
  std::uniform_real_distribution<double> re(0.2, 20.0);
  std::uniform_real_distribution<double> im(-3.0, 3.0);
  double wpsi = 0.0, wgam = 0.0;
  for (int i = 0; i < 200; ++i) {
    const ComplexScalar z{re(rng), im(rng)};
    wpsi = std::max(wpsi, std::abs(reference_digamma(z + 1.0) - reference_digamma(z) - 1.0 / z));
    const ComplexScalar g1 = reference_gamma(z + 1.0);
    wgam = std::max(wgam, std::abs(g1 - z * reference_gamma(z)) / std::abs(g1));
  }
  push(rep, "oracle", "reference digamma recurrence", wpsi, 1e-11);
  push(rep, "oracle", "reference gamma recurrence", wgam, 1e-11);

  worst = 0.0;
  for (double zr : {1.0, 2.2, 5.5}) {
    const ComplexScalar z{zr, 0.0};
    const double h = 1e-4;
    const ComplexScalar fd =
        (reference_digamma(z + h) - reference_digamma(z - h)) / (2.0 * h);
    worst = std::max(worst, std::abs(reference_polygamma(z, 1) - fd));
  }
  push(rep, "oracle", "reference polygamma matches finite difference", worst, 1e-6);

  worst = 0.0;
  for (const KnownValue& kv : known_values()) {
    const ComplexScalar got = (kv.order == 0) ? reference_digamma(kv.argument)
                                              : reference_polygamma(kv.argument, kv.order);
    worst = std::max(worst, std::abs(got - kv.value));
  }
  push(rep, "oracle", "golden values reproduced by the reference route", worst, 1e-12);
}

}  // namespace detail

/// Runs the full cross-module invariant suite (optionally filtered by module
/// name: pochhammer, beta, digamma, hyp3f2, polygamma, oracle).
inline VerificationReport run_verification(const std::vector<std::string>& only = {},
                                           const EvalConfig& cfg = {}) {
  VerificationReport rep;
  if (detail::wants(only, "pochhammer")) detail::verify_pochhammer(rep);
  if (detail::wants(only, "beta")) detail::verify_beta(rep, cfg);
  if (detail::wants(only, "digamma")) detail::verify_digamma(rep, cfg);
  if (detail::wants(only, "hyp3f2")) detail::verify_hyp3f2(rep, cfg);
  if (detail::wants(only, "polygamma")) detail::verify_polygamma(rep, cfg);
  if (detail::wants(only, "oracle")) detail::verify_oracle(rep, cfg);
  return rep;
}

}  // namespace derivgamma

#endif  // DERIVGAMMA_VERIFY_HPP
