#ifndef DERIVGAMMA_POCHHAMMER_HPP
#define DERIVGAMMA_POCHHAMMER_HPP

#include <derivgamma/core.hpp>

namespace derivgamma {

/// Rising factorial (a)_n = a(a+1)...(a+n-1), with (a)_0 = 1.
inline ComplexScalar pochhammer(ComplexScalar a, TermIndex n) {
  if (n < 0) throw DomainError("pochhammer: n must be >= 0");
  ComplexScalar p{1.0, 0.0};
  for (TermIndex i = 0; i < n; ++i) p *= a + static_cast<double>(i);
  require_finite(p, "pochhammer");
  return p;
}

/// Falling product prod_{i=1..n} (z - i).
/// Satisfies prod = -(-1)^{n+1} (1-z)_n in exact arithmetic.
inline ComplexScalar falling_product(ComplexScalar z, TermIndex n) {
  if (n < 1) throw DomainError("falling_product: n must be >= 1");
  ComplexScalar p{1.0, 0.0};
  for (TermIndex i = 1; i <= n; ++i) p *= z - static_cast<double>(i);
  require_finite(p, "falling_product");
  return p;
}

/// Main-series term t_n = (1-z)_n / (n * n!), computed by the ratio
/// recurrence t_1 = 1-z, t_{n+1} = t_n * (n+1-z) * n / (n+1)^2.
/// No factorial is ever formed, so there is no overflow near n ~ 170.
inline ComplexScalar series_term(ComplexScalar z, TermIndex n) {
  if (n < 1) throw DomainError("series_term: n must be >= 1");
  ComplexScalar t = 1.0 - z;
  for (TermIndex k = 1; k < n; ++k) {
    const double kd = static_cast<double>(k);
    t *= (static_cast<double>(k + 1) - z) * (kd / ((kd + 1.0) * (kd + 1.0)));
  }
  require_finite(t, "series_term");
  return t;
}

/// t_{n+1}/t_n = (n+1-z) * n / (n+1)^2; |ratio| < 1 once n >= Re(z).
inline ComplexScalar term_ratio(ComplexScalar z, TermIndex n) {
  if (n < 1) throw DomainError("term_ratio: n must be >= 1");
  const double nd = static_cast<double>(n);
  return (nd + 1.0 - z) * (nd / ((nd + 1.0) * (nd + 1.0)));
}

}  // namespace derivgamma

#endif  // DERIVGAMMA_POCHHAMMER_HPP
