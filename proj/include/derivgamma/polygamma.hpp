#ifndef DERIVGAMMA_POLYGAMMA_HPP
#define DERIVGAMMA_POLYGAMMA_HPP

#include <derivgamma/digamma.hpp>

#include <vector>

namespace derivgamma {

inline constexpr TermIndex kMaxPolygammaOrder = 8;

/// Derivatives p^(j) = d^j/dz^j (1-z)_n for j = 0..l.
struct DerivStack {
  std::vector<ComplexScalar> derivs;  // length l+1
};

/// All z-derivatives of (1-z)_n up to order l, by the product-rule
/// recurrence p^(j)_{n+1} = (1+n-z) p^(j)_n - j p^(j-1)_n, seeded
/// p^(0)_0 = 1, p^(j)_0 = 0. No division occurs, so integer z is fine.
inline DerivStack pochhammer_derivs(ComplexScalar z, TermIndex n, TermIndex order) {
  if (n < 0) throw DomainError("pochhammer_derivs: n must be >= 0");
  if (order < 0 || order > kMaxPolygammaOrder)
    throw UnsupportedOrderError("pochhammer_derivs: order must be in [0, 8]");
  std::vector<ComplexScalar> p(static_cast<std::size_t>(order) + 1);
  p[0] = {1.0, 0.0};
  std::vector<ComplexScalar> next(p.size());
  for (TermIndex m = 0; m < n; ++m) {
    const ComplexScalar factor = 1.0 + static_cast<double>(m) - z;
    for (std::size_t j = 0; j < p.size(); ++j) {
      next[j] = factor * p[j];
      if (j > 0) next[j] -= static_cast<double>(j) * p[j - 1];
    }
    p.swap(next);
  }
  return DerivStack{std::move(p)};
}

namespace detail {

/// Adaptive sum of -sum_n p^(l)_n/(n n!) at the reduced argument, carrying
/// the whole scaled derivative stack q^(j)_n = p^(j)_n/(n n!).
inline SeriesResult polygamma_series_core(ComplexScalar zr, TermIndex order,
                                          const EvalConfig& cfg,
                                          ComplexScalar offset, TermIndex extra_terms) {
  const std::size_t l = static_cast<std::size_t>(order);
  std::vector<ComplexScalar> q(l + 1), next(l + 1);
  // n = 1: p^(0) = 1-z, p^(1) = -1, higher orders vanish; scale 1/(1*1!) = 1.
  q[0] = 1.0 - zr;
  if (l >= 1) q[1] = {-1.0, 0.0};
  const TermIndex hump =
      static_cast<TermIndex>(std::ceil(std::abs(zr.real()))) + 2;

  SeriesResult res;
  KahanComplex sum;
  TermIndex n = 1;
  bool tol_met = false;
  // A single small |q^(l)_n| can be a sign-change zero crossing, not decay;
  // stop only after two consecutive below-tolerance tail estimates.
  double prev_tail = std::numeric_limits<double>::infinity();
  for (;;) {
    sum.add(q[l]);
    const double nd = static_cast<double>(n);
    if (n >= hump) {
      const double tail = std::abs(q[l]) * nd / zr.real();
      if (tail <= cfg.abs_tol && prev_tail <= cfg.abs_tol) {
        tol_met = true;
        break;
      }
      prev_tail = tail;
    }
    if (n >= cfg.max_terms) break;
    // q^(j)_{n+1} = [(1+n-z) q^(j)_n - j q^(j-1)_n] * n/(n+1)^2
    const ComplexScalar factor = 1.0 + nd - zr;
    const double scale = nd / ((nd + 1.0) * (nd + 1.0));
    bool all_zero = true;
    for (std::size_t j = 0; j <= l; ++j) {
      ComplexScalar v = factor * q[j];
      if (j > 0) v -= static_cast<double>(j) * q[j - 1];
      next[j] = v * scale;
      if (next[j] != ComplexScalar{}) all_zero = false;
    }
    if (all_zero) {
      res.terms_used = n + extra_terms;
      res.last_term_mag = 0.0;
      res.tail_estimate = 0.0;
      res.converged = true;
      res.value = -sum.value() + offset;
      return res;
    }
    q.swap(next);
    ++n;
  }
  // Tail estimate reuses the digamma exponent Re(z); conservative for l >= 1
  // since the derivative terms carry extra logarithmic factors.
  res.last_term_mag = std::abs(q[l]);
  res.tail_estimate = std::abs(q[l]) * static_cast<double>(n) / zr.real();
  res.converged = tol_met;
  ComplexScalar correction{};
  if (cfg.tail_correction) correction = q[l] * static_cast<double>(n) / zr;
  res.terms_used = n + extra_terms;
  res.value = -(sum.value() + correction) + offset;
  require_finite(res.value, "polygamma");
  return res;
}

}  // namespace detail

/// psi^(l)(z): order 0 is digamma; l >= 1 is the exact l-th derivative of
/// the Pochhammer series, with the same truncation policy and the
/// derivative of the recurrence for argument reduction.
inline SeriesResult polygamma(ComplexScalar z, TermIndex order,
                              const EvalConfig& cfg = {}) {
  if (order < 0 || order > kMaxPolygammaOrder)
    throw UnsupportedOrderError("polygamma: order must be in [0, 8]");
  if (order == 0) return digamma(z, cfg);
  cfg.validate();
  if (!is_finite(z)) throw DomainError("polygamma: non-finite argument");
  if (!(z.real() > 0.0)) throw DomainError("polygamma: requires Re(z) > 0");

  double factorial = 1.0;
  for (TermIndex j = 2; j <= order; ++j) factorial *= static_cast<double>(j);
  const double sign = (order % 2 == 0) ? 1.0 : -1.0;  // (-1)^l

  ComplexScalar zr = z;
  ComplexScalar offset{};
  TermIndex reduction_steps = 0;
  if (cfg.argument_reduction) {
    while (zr.real() > cfg.reduction_high) {
      zr -= 1.0;  // psi^(l)(z) = psi^(l)(z-1) + (-1)^l l! (z-1)^{-(l+1)}
      if (is_nonpositive_integer(zr))
        throw DomainError("polygamma: pole reached during argument reduction");
      offset += sign * factorial * std::pow(zr, -static_cast<double>(order + 1));
      ++reduction_steps;
    }
  }
  return detail::polygamma_series_core(zr, order, cfg, offset, reduction_steps);
}

}  // namespace derivgamma

#endif  // DERIVGAMMA_POLYGAMMA_HPP
