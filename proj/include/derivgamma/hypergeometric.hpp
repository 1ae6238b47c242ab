#ifndef DERIVGAMMA_HYPERGEOMETRIC_HPP
#define DERIVGAMMA_HYPERGEOMETRIC_HPP

#include <derivgamma/core.hpp>
#include <derivgamma/oracle.hpp>

#include <algorithm>
#include <array>

namespace derivgamma {

/// Parameters of a 3F2 series at unit argument.
struct Hyp3F2Params {
  ComplexScalar a1, a2, a3;
  ComplexScalar b1, b2;

  /// b1 + b2 - a1 - a2 - a3; Re > 0 is the convergence margin at z = 1.
  ComplexScalar margin() const { return b1 + b2 - a1 - a2 - a3; }

  /// Exact integer test; near-integer parameters are deliberately not rounded.
  bool terminating() const {
    return is_nonpositive_integer(a1) || is_nonpositive_integer(a2) ||
           is_nonpositive_integer(a3);
  }

  void validate() const {
    if (is_nonpositive_integer(b1) || is_nonpositive_integer(b2))
      throw DomainError("hyp3f2_unit: denominator parameter at a pole");
    if (!terminating() && !(margin().real() > 0.0))
      throw DomainError("hyp3f2_unit: divergent, Re(b1+b2-a1-a2-a3) <= 0");
  }
};

/// 3F2(a1,a2,a3; b1,b2; 1) = sum_n (a1)_n(a2)_n(a3)_n / ((b1)_n(b2)_n n!),
/// terms by ratio recurrence. Terminates exactly when a numerator parameter
/// is a non-positive integer; otherwise stops once the integral-comparison
/// tail estimate |t_n| n / Re(s) drops below abs_tol.
inline SeriesResult hyp3f2_unit(const Hyp3F2Params& params, const EvalConfig& cfg = {}) {
  params.validate();
  cfg.validate();
  const ComplexScalar s = params.margin();
  const double hump_base = std::max(
      {0.0, std::abs(params.a1.real()), std::abs(params.a2.real()),
       std::abs(params.a3.real())});
  const TermIndex hump = static_cast<TermIndex>(std::ceil(hump_base)) + 2;
  const bool terminating = params.terminating();

  SeriesResult res;
  KahanComplex sum;
  ComplexScalar t{1.0, 0.0};  // term at n
  TermIndex n = 0;
  bool terminated = false;
  bool tol_met = false;
  for (;;) {
    sum.add(t);
    const double nd = static_cast<double>(n);
    const ComplexScalar next = t * (params.a1 + nd) * (params.a2 + nd) *
                               (params.a3 + nd) /
                               ((params.b1 + nd) * (params.b2 + nd) * (nd + 1.0));
    if (next == ComplexScalar{}) {
      terminated = true;
      break;
    }
    if (!terminating && n >= hump) {
      const double tail = std::abs(t) * nd / s.real();
      if (tail <= cfg.abs_tol) {
        tol_met = true;
        break;
      }
    }
    if (n + 1 >= cfg.max_terms) break;  // n counts from 0; max_terms terms total
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
    res.tail_estimate = std::abs(t) * static_cast<double>(n) / s.real();
    res.converged = tol_met;
    if (cfg.tail_correction) correction = t * static_cast<double>(n) / s;
  }
  res.terms_used = n + 1;  // number of summed terms
  res.value = sum.value() + correction;
  require_finite(res.value, "hyp3f2_unit");
  return res;
}

/// Digamma through psi(z) = -gamma - (1-z) 3F2(2-z,1,1; 2,2; 1).
/// Convergence margin of the underlying series is s = z.
inline SeriesResult digamma_via_3f2(ComplexScalar z, const EvalConfig& cfg = {}) {
  if (!(z.real() > 0.0)) throw DomainError("digamma_via_3f2: requires Re(z) > 0");
  const ComplexScalar pre = 1.0 - z;
  if (pre == ComplexScalar{}) {
    // prefactor kills the series; psi(1) = -gamma exactly
    return SeriesResult{{-constants::euler_gamma, 0.0}, 1, 0.0, 0.0, true};
  }
  const Hyp3F2Params params{2.0 - z, {1.0, 0.0}, {1.0, 0.0}, {2.0, 0.0}, {2.0, 0.0}};
  SeriesResult f = hyp3f2_unit(params, cfg);
  f.value = -constants::euler_gamma - pre * f.value;
  f.last_term_mag *= std::abs(pre);
  f.tail_estimate *= std::abs(pre);
  return f;
}

}  // namespace derivgamma

#endif  // DERIVGAMMA_HYPERGEOMETRIC_HPP
