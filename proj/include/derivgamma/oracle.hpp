#ifndef DERIVGAMMA_ORACLE_HPP
#define DERIVGAMMA_ORACLE_HPP

#include <derivgamma/core.hpp>

#include <array>
#include <vector>

namespace derivgamma {

// Reference constants, 16 significant digits. These are never recomputed at
// runtime; every module that needs gamma et al. reads them from here.
namespace constants {
inline constexpr double euler_gamma = 0.5772156649015329;  // OEIS A001620
inline constexpr double ln2 = 0.6931471805599453;          // OEIS A002162
inline constexpr double pi = 3.141592653589793;            // OEIS A000796
inline constexpr double sqrt_pi = 1.772453850905516;       // Gamma(1/2)
inline constexpr double zeta3 = 1.202056903159594;         // OEIS A002117
// Even Bernoulli numbers B_2..B_12, used by the asymptotic digamma expansion.
inline constexpr std::array<double, 6> bernoulli_even = {
    1.0 / 6.0,  -1.0 / 30.0, 1.0 / 42.0,
    -1.0 / 30.0, 5.0 / 66.0, -691.0 / 2730.0};
}  // namespace constants

namespace detail {
// Lanczos coefficients, g = 7, n = 9 (Godfrey). Relative error below 1e-13
// over the right half-plane.
inline constexpr std::array<double, 9> lanczos_g7 = {
    0.99999999999980993,      676.5203681218851,     -1259.1392167224028,
    771.32342877765313,       -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,     9.9843695780195716e-6, 1.5056327351493116e-7};
}  // namespace detail

/// Reference Gamma(z), Lanczos approximation with reflection for Re(z) < 0.5.
/// Relative accuracy ~1e-12 for |z| <= 50.
inline ComplexScalar reference_gamma(ComplexScalar z) {
  if (is_nonpositive_integer(z))
    throw DomainError("reference_gamma: pole at non-positive integer");
  if (z.real() < 0.5) {
    // Gamma(z) = pi / (sin(pi z) Gamma(1-z))
    const ComplexScalar s = std::sin(constants::pi * z);
    if (s == ComplexScalar{})
      throw DomainError("reference_gamma: pole at non-positive integer");
    return constants::pi / (s * reference_gamma(1.0 - z));
  }
  const ComplexScalar zs = z - 1.0;
  ComplexScalar acc = detail::lanczos_g7[0];
  for (std::size_t i = 1; i < detail::lanczos_g7.size(); ++i)
    acc += detail::lanczos_g7[i] / (zs + static_cast<double>(i));
  const ComplexScalar t = zs + 7.5;
  const ComplexScalar r = std::sqrt(2.0 * constants::pi) *
                          std::pow(t, zs + 0.5) * std::exp(-t) * acc;
  require_finite(r, "reference_gamma");
  return r;
}

/// Classical series for psi, rewritten for argument z:
/// psi(z) = -gamma + sum_{n>=1} (z-1)/(n(n+z-1)), truncated at `terms` with
/// the first-order integral tail correction (z-1)/terms.
inline ComplexScalar digamma_classical(ComplexScalar z, TermIndex terms) {
  if (!(z.real() > 0.0)) throw DomainError("digamma_classical: requires Re(z) > 0");
  if (terms < 1) throw DomainError("digamma_classical: terms must be >= 1");
  const ComplexScalar w = z - 1.0;
  KahanComplex sum;
  for (TermIndex n = 1; n <= terms; ++n) {
    const double nd = static_cast<double>(n);
    sum.add(w / (nd * (nd + w)));
  }
  return -constants::euler_gamma + sum.value() + w / static_cast<double>(terms);
}

/// High-accuracy reference digamma: recurrence lift to Re(z) >= 10, then the
/// asymptotic expansion ln z - 1/(2z) - sum B_{2k}/(2k z^{2k}), k = 1..6.
/// Absolute accuracy better than 1e-14 for Re(z) >= 0.1.
inline ComplexScalar reference_digamma(ComplexScalar z) {
  if (!(z.real() > 0.0)) throw DomainError("reference_digamma: requires Re(z) > 0");
  ComplexScalar shift{};
  while (z.real() < 10.0) {
    shift -= 1.0 / z;  // psi(z) = psi(z+1) - 1/z
    z += 1.0;
  }
  const ComplexScalar inv = 1.0 / z;
  const ComplexScalar inv2 = inv * inv;
  ComplexScalar asym = std::log(z) - 0.5 * inv;
  ComplexScalar p = inv2;
  for (std::size_t k = 0; k < constants::bernoulli_even.size(); ++k) {
    asym -= constants::bernoulli_even[k] / (2.0 * (static_cast<double>(k) + 1.0)) * p;
    p *= inv2;
  }
  return asym + shift;
}

/// Reference polygamma psi^(l)(z), 1 <= l <= 8, by direct summation of
/// (-1)^{l+1} l! sum_k (z+k)^{-(l+1)} with a two-term Euler-Maclaurin tail.
/// Absolute error <= 1e-10 on the tested range.
inline ComplexScalar reference_polygamma(ComplexScalar z, TermIndex order) {
  if (!(z.real() > 0.0)) throw DomainError("reference_polygamma: requires Re(z) > 0");
  if (order < 1 || order > 8)
    throw UnsupportedOrderError("reference_polygamma: order must be in [1, 8]");
  const double l = static_cast<double>(order);
  const TermIndex cutoff = 2000;
  KahanComplex sum;
  for (TermIndex k = 0; k < cutoff; ++k)
    sum.add(std::pow(z + static_cast<double>(k), -(l + 1.0)));
  // Euler-Maclaurin: sum_{k>=K} f(k) = int_K f + f(K)/2 - f'(K)/12 + ...
  const ComplexScalar zk = z + static_cast<double>(cutoff);
  ComplexScalar tail = std::pow(zk, -l) / l + 0.5 * std::pow(zk, -(l + 1.0)) +
                       (l + 1.0) / 12.0 * std::pow(zk, -(l + 2.0));
  double factorial = 1.0;
  for (TermIndex j = 2; j <= order; ++j) factorial *= static_cast<double>(j);
  const double sign = (order % 2 == 0) ? -1.0 : 1.0;  // (-1)^{l+1}
  return sign * factorial * (sum.value() + tail);
}

/// Golden fixture entry; every entry is reproducible by the reference
/// operations above within 1e-12.
struct KnownValue {
  ComplexScalar argument;
  TermIndex order;
  ComplexScalar value;
  const char* provenance;
};

inline std::vector<KnownValue> known_values() {
  using namespace constants;
  return {
      {{1.0, 0.0}, 0, {-euler_gamma, 0.0}, "psi(1) = -gamma"},
      {{2.0, 0.0}, 0, {1.0 - euler_gamma, 0.0}, "psi(2) = 1 - gamma"},
      {{3.0, 0.0}, 0, {1.5 - euler_gamma, 0.0}, "psi(3) = 3/2 - gamma"},
      {{0.5, 0.0}, 0, {-euler_gamma - 2.0 * ln2, 0.0}, "psi(1/2) = -gamma - 2 ln 2"},
      {{1.0, 0.0}, 1, {pi * pi / 6.0, 0.0}, "psi'(1) = pi^2/6"},
      {{1.0, 0.0}, 2, {-2.0 * zeta3, 0.0}, "psi''(1) = -2 zeta(3)"},
  };
}

}  // namespace derivgamma

#endif  // DERIVGAMMA_ORACLE_HPP
