#ifndef DERIVGAMMA_CORE_HPP
#define DERIVGAMMA_CORE_HPP

#include <cmath>
#include <complex>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace derivgamma {

using ComplexScalar = std::complex<double>;
using TermIndex = std::int64_t;

/// Argument outside the domain an operation is defined on (poles, Re(z) <= 0, ...).
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// An intermediate quantity left the representable range of double precision.
class OverflowError : public std::range_error {
 public:
  explicit OverflowError(const std::string& what) : std::range_error(what) {}
};

/// Requested derivative order above the supported maximum.
class UnsupportedOrderError : public DomainError {
 public:
  explicit UnsupportedOrderError(const std::string& what) : DomainError(what) {}
};

inline bool is_finite(ComplexScalar v) {
  return std::isfinite(v.real()) && std::isfinite(v.imag());
}

inline void require_finite(ComplexScalar v, const char* what) {
  if (!is_finite(v)) throw OverflowError(std::string(what) + ": magnitude overflow");
}

/// True when z is exactly 0, -1, -2, ... (a pole of Gamma).
inline bool is_nonpositive_integer(ComplexScalar z) {
  return z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::floor(z.real());
}

/// True when z is exactly a positive integer.
inline bool is_positive_integer(ComplexScalar z) {
  return z.imag() == 0.0 && z.real() > 0.0 && z.real() == std::floor(z.real());
}

/// Compensated (Kahan) accumulator; keeps sums with heavy sign variation
/// near one ulp of the true value.
template <typename Value>
struct KahanAccumulator {
  Value sum{};
  Value compensation{};

  void add(Value v) {
    const Value y = v - compensation;
    const Value t = sum + y;
    compensation = (t - sum) - y;
    sum = t;
  }

  Value value() const { return sum; }
};

using KahanComplex = KahanAccumulator<ComplexScalar>;

/// Truncation and accuracy controls shared by all adaptive series evaluators.
struct EvalConfig {
  TermIndex max_terms = 1'000'000;
  double abs_tol = 1e-10;
  bool tail_correction = true;
  bool argument_reduction = true;
  double reduction_low = 4.0;   // band lower edge; reduced arguments land in (low, high]
  double reduction_high = 8.0;

  void validate() const {
    if (max_terms < 1) throw DomainError("EvalConfig: max_terms must be >= 1");
    if (!(abs_tol >= 0.0)) throw DomainError("EvalConfig: abs_tol must be >= 0");
    if (!(0.0 < reduction_low && reduction_low < reduction_high))
      throw DomainError("EvalConfig: reduction band requires 0 < low < high");
  }
};

/// Value plus convergence diagnostics for an adaptive series evaluation.
///
/// terms_used counts terms that contributed to the result, including the
/// harmonic correction terms spent on argument reduction; for positive
/// integer z the terminating series therefore reports z-1 (minimum 1).
struct SeriesResult {
  ComplexScalar value{};
  TermIndex terms_used = 0;
  double last_term_mag = 0.0;
  double tail_estimate = 0.0;
  bool converged = false;
};

}  // namespace derivgamma

#endif  // DERIVGAMMA_CORE_HPP
