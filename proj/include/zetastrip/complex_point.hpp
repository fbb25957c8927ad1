#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <string>
#include <tuple>

#include "zetastrip/errors.hpp"

namespace zetastrip {

using Complex = std::complex<double>;

/// A point s = sigma + i t of the complex plane.
struct ComplexPoint {
  double sigma = 0.0;
  double t = 0.0;

  constexpr ComplexPoint() = default;
  constexpr ComplexPoint(double sigma_, double t_) : sigma(sigma_), t(t_) {}
  constexpr ComplexPoint(Complex s) : sigma(s.real()), t(s.imag()) {}  // NOLINT

  constexpr Complex value() const { return {sigma, t}; }
  constexpr ComplexPoint conj() const { return {sigma, -t}; }
  /// 1 - s
  constexpr ComplexPoint reflect() const { return {1.0 - sigma, -t}; }

  bool finite() const { return std::isfinite(sigma) && std::isfinite(t); }

  friend constexpr bool operator==(const ComplexPoint&, const ComplexPoint&) = default;
};

/// Lexicographic (sigma, t) order; used to normalize report ordering.
struct PointLess {
  bool operator()(const ComplexPoint& a, const ComplexPoint& b) const {
    return std::tie(a.sigma, a.t) < std::tie(b.sigma, b.t);
  }
};

inline void require_finite(ComplexPoint s, const char* what) {
  if (!s.finite()) {
    throw DomainError(std::string(what) + ": non-finite argument");
  }
}

/// Accuracy and work limits shared by the evaluators. Immutable once built.
struct EvalConfig {
  double target_abs_error = 1e-12;
  /// Cap on series length and on the truncation depth of slow products.
  std::size_t max_terms = 10000;
  /// When set, gamma_half_ratio also evaluates the Gauss product route and
  /// throws TruncationError if the two disagree.
  bool cross_check_gamma = false;

  void validate() const {
    if (!(target_abs_error > 0.0) || !std::isfinite(target_abs_error)) {
      throw DomainError("EvalConfig: target_abs_error must be positive");
    }
    if (max_terms < 1) {
      throw DomainError("EvalConfig: max_terms must be at least 1");
    }
  }
};

}  // namespace zetastrip
