#ifndef DERIVGAMMA_BETA_GAMMA_HPP
#define DERIVGAMMA_BETA_GAMMA_HPP

#include <derivgamma/core.hpp>
#include <derivgamma/oracle.hpp>

namespace derivgamma {

/// Parameters of the finite-h limit machinery.
struct LimitProbe {
  ComplexScalar h{1e-4, 0.0};
  TermIndex product_factors = 1'000'000;
  TermIndex expansion_terms = 1'000'000;
};

/// B(z, h) = Gamma(z) Gamma(h) / Gamma(z+h), via the reference Gamma.
inline ComplexScalar beta_exact(ComplexScalar z, ComplexScalar h) {
  if (is_nonpositive_integer(z) || is_nonpositive_integer(h) ||
      is_nonpositive_integer(z + h))
    throw DomainError("beta_exact: argument at a Gamma pole");
  return reference_gamma(z) * reference_gamma(h) / reference_gamma(z + h);
}

/// Truncated coefficient series for B(z, h):
/// sum_{k=0..terms-1} (1-z)_k / (k! (h+k)), coefficients by ratio recurrence.
inline ComplexScalar beta_series(ComplexScalar z, ComplexScalar h, TermIndex terms) {
  if (!(z.real() > 0.0)) throw DomainError("beta_series: requires Re(z) > 0");
  if (!(h.real() > 0.0)) throw DomainError("beta_series: requires Re(h) > 0");
  if (terms < 1) throw DomainError("beta_series: terms must be >= 1");
  KahanComplex sum;
  ComplexScalar c{1.0, 0.0};  // (1-z)_k / k!
  for (TermIndex k = 0; k < terms; ++k) {
    const double kd = static_cast<double>(k);
    sum.add(c / (h + kd));
    c *= (1.0 - z + kd) / (kd + 1.0);
    if (c == ComplexScalar{}) break;  // terminating: integer z
  }
  return sum.value();
}

/// Truncated coefficient series for B(z, h+1):
/// sum_{k=0..terms-1} (-h)_k / (k! (z+k)).
inline ComplexScalar beta_series_shifted(ComplexScalar z, ComplexScalar h,
                                         TermIndex terms) {
  if (!(z.real() > 0.0)) throw DomainError("beta_series_shifted: requires Re(z) > 0");
  if (!(h.real() > -1.0)) throw DomainError("beta_series_shifted: requires Re(h) > -1");
  if (terms < 1) throw DomainError("beta_series_shifted: terms must be >= 1");
  KahanComplex sum;
  ComplexScalar c{1.0, 0.0};  // (-h)_k / k!
  for (TermIndex k = 0; k < terms; ++k) {
    const double kd = static_cast<double>(k);
    sum.add(c / (z + kd));
    c *= (-h + kd) / (kd + 1.0);
    if (c == ComplexScalar{}) break;  // terminating: integer h >= 0
  }
  return sum.value();
}

/// Relative residual of the recurrence B(z,h) = ((z+h)/h) B(z,h+1),
/// both sides through beta_exact.
inline double beta_recurrence_residual(ComplexScalar z, ComplexScalar h) {
  const ComplexScalar lhs = beta_exact(z, h);
  const ComplexScalar rhs = (z + h) / h * beta_exact(z, h + 1.0);
  return std::abs(lhs - rhs) / std::abs(lhs);
}

/// Truncated Weierstrass product for Gamma(h):
/// (1/h) e^{-gamma h} prod_{n=1..N} (1 + h/n)^{-1} e^{h/n}.
/// Factors are multiplied in increasing n with the exponential compensation
/// applied per factor, keeping intermediate magnitudes bounded.
inline ComplexScalar gamma_small(ComplexScalar h, TermIndex product_factors) {
  if (is_nonpositive_integer(h)) throw DomainError("gamma_small: pole at non-positive integer");
  if (product_factors < 1) throw DomainError("gamma_small: product_factors must be >= 1");
  ComplexScalar p = std::exp(-constants::euler_gamma * h) / h;
  for (TermIndex n = 1; n <= product_factors; ++n) {
    const double nd = static_cast<double>(n);
    const ComplexScalar f = 1.0 + h / nd;
    if (f == ComplexScalar{}) throw DomainError("gamma_small: pole factor");
    p *= std::exp(h / nd) / f;
  }
  require_finite(p, "gamma_small");
  return p;
}

/// Finite-h realization of the derivative-definition limit:
/// [Gamma(h) - B(z,h)] / ((z+h) B(z,h+1)) -> psi(z) with error O(h).
inline ComplexScalar psi_via_limit(ComplexScalar z, ComplexScalar h) {
  if (!(z.real() > 0.0)) throw DomainError("psi_via_limit: requires Re(z) > 0");
  const double hm = std::abs(h);
  if (!(hm > 0.0 && hm <= 0.1))
    throw DomainError("psi_via_limit: requires 0 < |h| <= 0.1");
  if (is_nonpositive_integer(z + h)) throw DomainError("psi_via_limit: z + h at a pole");
  const ComplexScalar num = reference_gamma(h) - beta_exact(z, h);
  const ComplexScalar den = (z + h) * beta_exact(z, h + 1.0);
  return num / den;
}

}  // namespace derivgamma

#endif  // DERIVGAMMA_BETA_GAMMA_HPP
