#pragma once

// The functional-equation factor
//   g(s) = pi^{1/2-s} Gamma(s/2) / Gamma(1/2 - s/2),   zeta(1-s) = g(s) zeta(s),
// and its product decomposition g = f h1 h2 with
//   |f(s)| = 2^{1-2 sigma},  h1(s) = (1-s)/s,
//   h2(s) = prod_n (2n/(2n+1))^{1-2s} (2n+1-s)/(2n+s).
// On 0 < sigma < 1/2, t >= 0 every factor h_{2,n} has modulus below one and
// the factors increase with n, so the partial products h_N bound |h| from
// above and decrease with N.

#include <algorithm>
#include <cmath>
#include <cstddef>

#include "zetastrip/complex_point.hpp"
#include "zetastrip/errors.hpp"
#include "zetastrip/special_functions.hpp"

namespace zetastrip {

/// Snapshot of the factors of |g(s)| at one point, truncated at depth N.
struct ChiDecomposition {
  double f_abs = 0.0;       ///< 2^{1-2 sigma}
  double h1_abs = 0.0;      ///< |(1-s)/s|
  double h2_partial = 0.0;  ///< prod_{n<=N} h_{2,n}(sigma, t)
  std::size_t n_terms = 0;

  /// f_abs * h1_abs * h2_partial, an upper bound for |g(s)| on the left half-strip.
  double bound() const { return f_abs * h1_abs * h2_partial; }
};

/// g(s), evaluated through log-gamma.
inline Complex chi(ComplexPoint s, const EvalConfig& cfg = {}) {
  require_finite(s, "chi");
  detail::require_gamma_half_args(s, "chi");
  if (cfg.cross_check_gamma) {
    return std::exp((0.5 - s.value()) * detail::kLnPi) * gamma_half_ratio(s, cfg);
  }
  return std::exp(detail::log_chi(s.value()));
}

inline double f_abs(double sigma) { return std::exp2(1.0 - 2.0 * sigma); }

inline double h1_abs(ComplexPoint s) {
  require_finite(s, "h1_abs");
  const Complex v = s.value();
  if (std::abs(v) < kPoleGuard) throw DomainError("h1_abs: s = 0");
  return std::abs(1.0 - v) / std::abs(v);
}

/// h_{2,n}(sigma, t) = (2n/(2n+1))^{1-2 sigma} |(2n+1-s)/(2n+s)|.
/// Real n > 0 is admitted so monotonicity in n can be probed on a continuum.
inline double h2_term(double n, double sigma, double t) {
  if (!std::isfinite(n) || !std::isfinite(sigma) || !std::isfinite(t)) {
    throw DomainError("h2_term: non-finite argument");
  }
  if (!(n > 0.0)) throw DomainError("h2_term: n must be positive");
  const double den = (2.0 * n + sigma) * (2.0 * n + sigma) + t * t;
  if (!(den > 0.0)) throw DomainError("h2_term: denominator vanishes");
  const double num = (2.0 * n + 1.0 - sigma) * (2.0 * n + 1.0 - sigma) + t * t;
  return std::pow(2.0 * n / (2.0 * n + 1.0), 1.0 - 2.0 * sigma) * std::sqrt(num / den);
}

/// |h_N(s)| = |(1-s)/s| prod_{n<=N} h_{2,n}(sigma, t).
inline double h_partial(std::size_t n_terms, ComplexPoint s) {
  if (n_terms < 1) throw DomainError("h_partial: N must be at least 1");
  double product = h1_abs(s);
  for (std::size_t n = 1; n <= n_terms; ++n) {
    product *= h2_term(static_cast<double>(n), s.sigma, s.t);
  }
  return product;
}

inline ChiDecomposition decompose(ComplexPoint s, std::size_t n_terms) {
  if (n_terms < 1) throw DomainError("decompose: N must be at least 1");
  ChiDecomposition d;
  d.f_abs = f_abs(s.sigma);
  d.h1_abs = h1_abs(s);
  d.h2_partial = 1.0;
  for (std::size_t n = 1; n <= n_terms; ++n) {
    d.h2_partial *= h2_term(static_cast<double>(n), s.sigma, s.t);
  }
  d.n_terms = n_terms;
  return d;
}

/// Floor under |zeta(s)| in the relative functional-equation residual.
inline constexpr double kResidualFloor = 1e-30;

/// |zeta(1-s) - g(s) zeta(s)| / max(|zeta(s)|, 1e-30).
inline double chi_identity_residual(ComplexPoint s, const EvalConfig& cfg = {}) {
  require_finite(s, "chi_identity_residual");
  const Complex v = s.value();
  if (std::abs(v) < kPoleGuard || std::abs(v - 1.0) < kPoleGuard) {
    throw PoleError("chi_identity_residual: s must avoid 0 and 1");
  }
  const Complex zs = zeta(s, cfg);
  const Complex zr = zeta(s.reflect(), cfg);
  const Complex g = chi(s, cfg);
  return std::abs(zr - g * zs) / std::max(std::abs(zs), kResidualFloor);
}

/// f_abs(sigma) h_partial(N, s) - |g(s)|. Non-negative up to rounding on the
/// left half-strip and shrinking as N grows.
inline double chi_vs_product_residual(ComplexPoint s, std::size_t n_terms, const EvalConfig& cfg = {}) {
  return f_abs(s.sigma) * h_partial(n_terms, s) - std::abs(chi(s, cfg));
}

}  // namespace zetastrip
