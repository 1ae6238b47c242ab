#ifndef DERIVGAMMA_DIGAMMA_HPP
#define DERIVGAMMA_DIGAMMA_HPP

#include <derivgamma/core.hpp>
#include <derivgamma/oracle.hpp>
#include <derivgamma/pochhammer.hpp>

namespace derivgamma {

/// Partial sum psi_m(z) = -gamma - sum_{n=1..m} (1-z)_n/(n n!), summed in
/// increasing n by the ratio recurrence. No tail correction, no reduction.
inline ComplexScalar digamma_partial(ComplexScalar z, TermIndex m) {
  if (!(z.real() > 0.0)) throw DomainError("digamma_partial: requires Re(z) > 0");
  if (m < 1) throw DomainError("digamma_partial: m must be >= 1");
  KahanComplex sum;
  ComplexScalar t = 1.0 - z;
  for (TermIndex n = 1; n <= m; ++n) {
    if (t == ComplexScalar{}) break;  // terminating: remaining terms vanish
    sum.add(t);
    const double nd = static_cast<double>(n);
    t *= (nd + 1.0 - z) * (nd / ((nd + 1.0) * (nd + 1.0)));
  }
  return -constants::euler_gamma - sum.value();
}

/// Signed-product partial sum:
/// -gamma + sum_{n=1..m} (-1)^{n+1} prod_{i=1..n}(z-i) / (n n!).
/// Factorials are formed explicitly, so m is limited to 150.
inline ComplexScalar digamma_eq11_partial(ComplexScalar z, TermIndex m) {
  if (!(z.real() > 0.0)) throw DomainError("digamma_eq11_partial: requires Re(z) > 0");
  if (m < 1) throw DomainError("digamma_eq11_partial: m must be >= 1");
  if (m > 150) throw OverflowError("digamma_eq11_partial: m > 150 overflows n!");
  KahanComplex sum;
  ComplexScalar prod{1.0, 0.0};
  double factorial = 1.0;
  double sign = 1.0;  // (-1)^{n+1}
  for (TermIndex n = 1; n <= m; ++n) {
    const double nd = static_cast<double>(n);
    prod *= z - nd;
    factorial *= nd;
    require_finite(prod, "digamma_eq11_partial");
    sum.add(sign * prod / (nd * factorial));
    sign = -sign;
  }
  return -constants::euler_gamma + sum.value();
}

/// Integral-comparison estimate of |sum_{n>m} t_n| given |t_n| ~ C n^{-1-Re(z)}.
inline double tail_estimate(ComplexScalar z, ComplexScalar t_m, TermIndex m) {
  if (!(z.real() > 0.0)) throw DomainError("tail_estimate: requires Re(z) > 0");
  const TermIndex hump = static_cast<TermIndex>(std::ceil(std::abs(z.real()))) + 2;
  if (m < hump) throw DomainError("tail_estimate: m below the term-growth hump");
  return std::abs(t_m) * static_cast<double>(m) / z.real();
}

namespace detail {

/// Core adaptive evaluation of -gamma - sum t_n at the (possibly reduced)
/// argument. `offset` is added to the value, `extra_terms` to the count.
inline SeriesResult digamma_series_core(ComplexScalar zr, const EvalConfig& cfg,
                                        ComplexScalar offset, TermIndex extra_terms) {
  SeriesResult res;
  const TermIndex hump =
      static_cast<TermIndex>(std::ceil(std::abs(zr.real()))) + 2;
  KahanComplex sum;
  ComplexScalar t = 1.0 - zr;
  TermIndex n = 1;
  bool terminated = (t == ComplexScalar{});
  bool tol_met = false;
  double tail = 0.0;
  while (!terminated) {
    sum.add(t);
    const double nd = static_cast<double>(n);
    const ComplexScalar next =
        t * ((nd + 1.0 - zr) * (nd / ((nd + 1.0) * (nd + 1.0))));
    if (next == ComplexScalar{}) {
      terminated = true;
      break;
    }
    if (n >= hump) {
      tail = std::abs(t) * nd / zr.real();
      if (tail <= cfg.abs_tol) {
        tol_met = true;
        break;
      }
    }
    if (n >= cfg.max_terms) break;
    t = next;
    ++n;
  }
  ComplexScalar correction{};
  if (terminated) {
    res.last_term_mag = 0.0;
    res.tail_estimate = 0.0;
    res.converged = true;
  } else {
    res.last_term_mag = std::abs(t);
    res.tail_estimate = std::abs(t) * static_cast<double>(n) / zr.real();
    res.converged = tol_met;
    if (cfg.tail_correction)
      correction = t * static_cast<double>(n) / zr;  // signed first-order tail
  }
  res.terms_used = n + extra_terms;
  res.value = -constants::euler_gamma - (sum.value() + correction) + offset;
  require_finite(res.value, "digamma");
  return res;
}

}  // namespace detail

/// Adaptive digamma via the Pochhammer series, with the term-growth guard,
/// first-order tail correction, and recurrence-based argument reduction into
/// (reduction_low, reduction_high].
inline SeriesResult digamma(ComplexScalar z, const EvalConfig& cfg = {}) {
  cfg.validate();
  if (!is_finite(z)) throw DomainError("digamma: non-finite argument");
  if (!(z.real() > 0.0)) throw DomainError("digamma: requires Re(z) > 0");
  ComplexScalar zr = z;
  ComplexScalar harmonic{};
  TermIndex reduction_steps = 0;
  if (cfg.argument_reduction) {
    while (zr.real() > cfg.reduction_high) {
      zr -= 1.0;  // psi(z) = psi(z-1) + 1/(z-1)
      if (zr == ComplexScalar{} || is_nonpositive_integer(zr))
        throw DomainError("digamma: pole reached during argument reduction");
      harmonic += 1.0 / zr;
      ++reduction_steps;
    }
  }
  return detail::digamma_series_core(zr, cfg, harmonic, reduction_steps);
}

}  // namespace derivgamma

#endif  // DERIVGAMMA_DIGAMMA_HPP
