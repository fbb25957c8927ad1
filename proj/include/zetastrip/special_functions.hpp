#pragma once

// Complex log-gamma, the Riemann zeta function and its derivative, and the
// classical finite products (Wallis, Gauss) the decomposition of the
// functional-equation factor is built from.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <limits>
#include <numbers>
#include <string>
#include <utility>

#include "zetastrip/complex_point.hpp"
#include "zetastrip/errors.hpp"

namespace zetastrip {

inline constexpr double kPoleGuard = 1e-12;

namespace detail {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kLn2 = std::numbers::ln2;
inline constexpr Complex kI{0.0, 1.0};

inline const double kLnPi = std::log(kPi);
inline const double kHalfLn2Pi = 0.5 * std::log(2.0 * kPi);

/// True when z lies within `guard` of 0, -1, -2, ...
inline bool near_nonpositive_integer(Complex z, double guard = kPoleGuard) {
  const double n = std::round(z.real());
  if (n > 0.0) return false;
  return std::abs(z - Complex(n, 0.0)) < guard;
}

// Lanczos approximation, g = 7, nine coefficients. Relative error in Gamma
// is about 1e-15 for Re z >= 1/2.
inline Complex ln_gamma_lanczos(Complex z) {
  static constexpr double g = 7.0;
  static constexpr std::array<double, 9> c = {
      0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
      771.32342877765313,      -176.61502916214059,   12.507343278686905,
      -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};
  z -= 1.0;
  Complex series = c[0];
  for (std::size_t i = 1; i < c.size(); ++i) {
    series += c[i] / (z + static_cast<double>(i));
  }
  const Complex shifted = z + g + 0.5;
  return kHalfLn2Pi + (z + 0.5) * std::log(shifted) - shifted + std::log(series);
}

// Reflection for Re z < 1/2 and Im z >= 0. log sin(pi z) is written as
//   -i pi z + log(1 - e^{2 pi i z}) - log 2 + i pi / 2,
// which is analytic on the closed upper half-plane away from the poles and
// agrees with the principal log-gamma at z = 1/2.
inline Complex ln_gamma_reflected_upper(Complex z) {
  const Complex w = std::exp(2.0 * kPi * kI * z);
  const Complex log_sin = -kI * kPi * z + std::log(1.0 - w) - kLn2 + kI * (0.5 * kPi);
  return kLnPi - log_sin - ln_gamma_lanczos(1.0 - z);
}

/// e^w - 1 without cancellation for small |w|.
inline Complex expm1(Complex w) {
  if (std::abs(w) < 1e-3) {
    // Horner form of the Taylor series through w^6; remainder < 1e-21.
    return w * (1.0 + w / 2.0 * (1.0 + w / 3.0 * (1.0 + w / 4.0 * (1.0 + w / 5.0 * (1.0 + w / 6.0)))));
  }
  return std::exp(w) - 1.0;
}

}  // namespace detail

/// Principal branch of log Gamma(z): analytic off the cut (-inf, 0], real on
/// the positive axis, and equal to the limit from above on the cut.
///
/// Throws PoleError within kPoleGuard of 0, -1, -2, ...
inline Complex ln_gamma(Complex z) {
  require_finite(z, "ln_gamma");
  if (detail::near_nonpositive_integer(z)) {
    throw PoleError("ln_gamma: argument at a pole of Gamma");
  }
  if (z.real() >= 0.5) return detail::ln_gamma_lanczos(z);
  if (z.imag() >= 0.0) return detail::ln_gamma_reflected_upper(z);
  return std::conj(detail::ln_gamma_reflected_upper(std::conj(z)));
}

namespace detail {

inline void require_gamma_half_args(ComplexPoint s, const char* what) {
  const Complex v = s.value();
  if (near_nonpositive_integer(v / 2.0) || near_nonpositive_integer((1.0 - v) / 2.0)) {
    throw PoleError(std::string(what) + ": Gamma(s/2) or Gamma(1/2 - s/2) at a pole");
  }
}

/// log of pi^{1/2-s} Gamma(s/2) / Gamma(1/2 - s/2), up to a multiple of 2 pi i.
inline Complex log_chi(Complex s) {
  return (0.5 - s) * kLnPi + ln_gamma(s / 2.0) - ln_gamma((1.0 - s) / 2.0);
}

}  // namespace detail

/// Result of an accelerated product evaluation with its error estimate.
struct ProductEstimate {
  Complex value;
  double error_estimate = 0.0;
  std::size_t terms = 0;
};

/// The truncated Gauss product for Gamma(s/2)/Gamma(1/2 - s/2):
///   ((1-s)/s) prod_{n<=N} (1+1/n)^{-(1/2-s)} (1 + (1-s)/(2n)) / (1 + s/(2n)).
/// The log of the remainder decays like (1-2s)/(8N), so this converges slowly.
inline Complex gamma_half_ratio_product(ComplexPoint s, std::size_t n_terms) {
  require_finite(s, "gamma_half_ratio_product");
  const Complex v = s.value();
  if (std::abs(v) < kPoleGuard) throw DomainError("gamma_half_ratio_product: s = 0");
  if (n_terms < 1) throw DomainError("gamma_half_ratio_product: N must be at least 1");
  Complex log_sum = std::log((1.0 - v) / v);
  for (std::size_t n = 1; n <= n_terms; ++n) {
    const double dn = static_cast<double>(n);
    log_sum += -(0.5 - v) * std::log1p(1.0 / dn) + std::log(2.0 * dn + 1.0 - v) - std::log(2.0 * dn + v);
  }
  return std::exp(log_sum);
}

/// Gauss product route with Richardson extrapolation in 1/N. The summand of
/// the log-product is analytic in 1/n with no 1/n term, so its tail has a
/// pure power expansion in 1/N. Uses depths N0, 2 N0, ..., 16 N0 with
/// 16 N0 <= max_terms.
inline ProductEstimate gamma_half_ratio_product_extrapolated(ComplexPoint s, std::size_t max_terms) {
  require_finite(s, "gamma_half_ratio_product_extrapolated");
  const Complex v = s.value();
  if (std::abs(v) < kPoleGuard) throw DomainError("gamma_half_ratio_product_extrapolated: s = 0");
  constexpr std::size_t kLevels = 5;
  const std::size_t base = std::max<std::size_t>(1, max_terms >> (kLevels - 1));

  std::array<std::array<Complex, kLevels>, kLevels> table{};
  Complex log_sum = std::log((1.0 - v) / v);
  std::size_t n = 0;
  for (std::size_t level = 0; level < kLevels; ++level) {
    const std::size_t depth = base << level;
    while (n < depth) {
      const double dn = static_cast<double>(++n);
      log_sum += -(0.5 - v) * std::log1p(1.0 / dn) + std::log(2.0 * dn + 1.0 - v) - std::log(2.0 * dn + v);
    }
    table[level][0] = log_sum;
    double factor = 1.0;
    for (std::size_t m = 1; m <= level; ++m) {
      factor *= 2.0;
      table[level][m] = table[level][m - 1] + (table[level][m - 1] - table[level - 1][m - 1]) / (factor - 1.0);
    }
  }
  const Complex best = table[kLevels - 1][kLevels - 1];
  const double est = std::abs(best - table[kLevels - 2][kLevels - 2]);
  const Complex value = std::exp(best);
  return {value, est * std::abs(value), base << (kLevels - 1)};
}

/// Gamma(s/2) / Gamma(1/2 - s/2) from log-gamma differences.
///
/// With cfg.cross_check_gamma the extrapolated Gauss product is evaluated at
/// depth cfg.max_terms as well; disagreement above 1e-9 relative raises
/// TruncationError.
inline Complex gamma_half_ratio(ComplexPoint s, const EvalConfig& cfg = {}) {
  require_finite(s, "gamma_half_ratio");
  detail::require_gamma_half_args(s, "gamma_half_ratio");
  const Complex v = s.value();
  const Complex value = std::exp(ln_gamma(v / 2.0) - ln_gamma((1.0 - v) / 2.0));
  if (cfg.cross_check_gamma) {
    const ProductEstimate product = gamma_half_ratio_product_extrapolated(s, cfg.max_terms);
    const double tolerance = 1e-9 * std::max(1.0, std::abs(value));
    if (!(std::abs(product.value - value) <= tolerance)) {
      throw TruncationError("gamma_half_ratio: Gauss product and log-gamma routes disagree");
    }
  }
  return value;
}

namespace detail {

/// Number of Cohen-Villegas-Zagier terms for eta(s). The a-priori bound for
/// complex s is roughly 3 (1 + 2|t|) e^{pi |t| / 2} (3 + sqrt 8)^{-n}.
inline std::size_t eta_term_count(double t, double target) {
  const double at = std::abs(t);
  const double needed = kPi * at / 2.0 + std::log(3.0 * (1.0 + 2.0 * at)) + std::log(1.0 / target);
  return static_cast<std::size_t>(std::ceil(needed / std::log(3.0 + std::sqrt(8.0)))) + 2;
}

// (3 + sqrt 8)^n overflows binary64 past this.
inline constexpr std::size_t kMaxEtaTerms = 400;

struct EtaValues {
  Complex eta;
  Complex eta_prime;
};

/// Accelerated alternating sum eta(s) = sum_{k>=1} (-1)^{k-1} k^{-s}, and
/// optionally eta'(s) (terms gain a -log k factor).
inline EtaValues eta_series(Complex s, std::size_t n, bool with_derivative) {
  const double nd = static_cast<double>(n);
  double d = std::pow(3.0 + std::sqrt(8.0), nd);
  d = (d + 1.0 / d) / 2.0;
  double b = -1.0;
  double c = -d;
  Complex sum = 0.0;
  Complex dsum = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    const double kd = static_cast<double>(k);
    c = b - c;
    const double log_k = std::log(kd + 1.0);
    const Complex term = std::exp(-s * log_k);
    sum += c * term;
    if (with_derivative) dsum -= c * log_k * term;
    b = (kd + nd) * (kd - nd) * b / ((kd + 0.5) * (kd + 1.0));
  }
  return {sum / d, dsum / d};
}

struct ZetaValues {
  Complex zeta;
  Complex zeta_prime;
};

/// zeta from eta on sigma > 0, away from the zeros of 1 - 2^{1-s}.
inline ZetaValues zeta_from_eta(Complex s, const EvalConfig& cfg, bool with_derivative) {
  std::size_t n = eta_term_count(s.imag(), cfg.target_abs_error);
  if (with_derivative) n += 4;
  if (n > cfg.max_terms || n > kMaxEtaTerms) {
    throw TruncationError("zeta: eta series needs " + std::to_string(n) + " terms, over budget");
  }
  const EtaValues e = eta_series(s, n, with_derivative);
  const Complex w = (1.0 - s) * kLn2;
  const Complex denom = -expm1(w);  // 1 - 2^{1-s}
  const Complex z = e.eta / denom;
  Complex zp = 0.0;
  if (with_derivative) {
    const Complex ddenom = kLn2 * std::exp(w);
    zp = (e.eta_prime - z * ddenom) / denom;
  }
  return {z, zp};
}

// 1 - 2^{1-s} vanishes at s = 1 + 2 pi i k / log 2, k != 0. Within this
// distance of such a point zeta is taken as a circle mean.
inline constexpr double kEtaFactorZeroRadius = 0.1;
inline constexpr double kCircleMeanRadius = 0.25;
inline constexpr int kCircleMeanPoints = 32;

inline bool near_eta_factor_zero(Complex s) {
  const double period = 2.0 * kPi / kLn2;
  const double k = std::round(s.imag() / period);
  if (k == 0.0) return false;
  return std::abs(s - Complex(1.0, k * period)) < kEtaFactorZeroRadius;
}

/// zeta (and zeta') for sigma > 0. Near the zeros of the eta denominator the
/// mean-value property is used: the trapezoid rule on a circle of radius
/// 0.25 is exact up to (0.25 / 9)^32 since the nearest singularity (s = 1)
/// is at least 2 pi / log 2 - 0.1 away.
inline ZetaValues zeta_right(Complex s, const EvalConfig& cfg, bool with_derivative) {
  if (!near_eta_factor_zero(s)) return zeta_from_eta(s, cfg, with_derivative);
  ZetaValues acc{0.0, 0.0};
  for (int j = 0; j < kCircleMeanPoints; ++j) {
    const double angle = 2.0 * kPi * (j + 0.5) / kCircleMeanPoints;
    const Complex p = s + kCircleMeanRadius * Complex(std::cos(angle), std::sin(angle));
    const ZetaValues v = zeta_from_eta(p, cfg, with_derivative);
    acc.zeta += v.zeta;
    acc.zeta_prime += v.zeta_prime;
  }
  acc.zeta /= static_cast<double>(kCircleMeanPoints);
  acc.zeta_prime /= static_cast<double>(kCircleMeanPoints);
  return acc;
}

inline void require_not_zeta_pole(Complex s, const char* what) {
  if (std::abs(s - 1.0) < kPoleGuard) {
    throw PoleError(std::string(what) + ": s = 1 is the pole of zeta");
  }
}

}  // namespace detail

/// Riemann zeta function.
///
/// sigma > 0: accelerated Dirichlet eta series divided by 1 - 2^{1-s}.
/// sigma <= 0: one application of the functional equation,
/// zeta(s) = chi(1-s) zeta(1-s), with 1-s evaluated on the eta path.
inline Complex zeta(ComplexPoint s, const EvalConfig& cfg = {}) {
  require_finite(s, "zeta");
  cfg.validate();
  const Complex v = s.value();
  detail::require_not_zeta_pole(v, "zeta");
  if (v.real() > 0.0) return detail::zeta_right(v, cfg, false).zeta;

  if (std::abs(v) < kPoleGuard) return -0.5;
  const double n = std::round(v.real() / 2.0);
  if (n < 0.0 && std::abs(v - Complex(2.0 * n, 0.0)) < kPoleGuard) return 0.0;  // trivial zeros
  const Complex u = 1.0 - v;
  return std::exp(detail::log_chi(u)) * detail::zeta_right(u, cfg, false).zeta;
}

/// zeta together with zeta' for sigma > 0 (shares the eta powers).
inline std::pair<Complex, Complex> zeta_and_derivative(ComplexPoint s, const EvalConfig& cfg = {}) {
  require_finite(s, "zeta_deriv");
  cfg.validate();
  const Complex v = s.value();
  detail::require_not_zeta_pole(v, "zeta_deriv");
  if (!(v.real() > 0.0)) {
    throw DomainError("zeta_deriv: only implemented for sigma > 0");
  }
  const detail::ZetaValues r = detail::zeta_right(v, cfg, true);
  return {r.zeta, r.zeta_prime};
}

/// zeta'(s) for sigma > 0, from the termwise differentiated eta series.
inline Complex zeta_deriv(ComplexPoint s, const EvalConfig& cfg = {}) {
  return zeta_and_derivative(s, cfg).second;
}

/// Partial Wallis product prod_{n<=N} (2n)^2 / ((2n-1)(2n+1)); increases to pi/2.
inline double wallis_partial(std::size_t n_terms) {
  if (n_terms < 1) throw DomainError("wallis_partial: N must be at least 1");
  long double product = 1.0L;
  for (std::size_t n = 1; n <= n_terms; ++n) {
    const long double four_n2 = 4.0L * static_cast<long double>(n) * static_cast<long double>(n);
    product *= four_n2 / (four_n2 - 1.0L);
  }
  return static_cast<double>(product);
}

/// Literal product prod_{n<=N} (2n+1) n / ((2n-1)(n+1)).
inline double telescoping_partial(std::size_t n_terms) {
  if (n_terms < 1) throw DomainError("telescoping_partial: N must be at least 1");
  long double product = 1.0L;
  for (std::size_t n = 1; n <= n_terms; ++n) {
    const long double nl = static_cast<long double>(n);
    product *= ((2.0L * nl + 1.0L) * nl) / ((2.0L * nl - 1.0L) * (nl + 1.0L));
  }
  return static_cast<double>(product);
}

/// Closed form (2N+1)/(N+1) of telescoping_partial.
inline double telescoping_closed_form(std::size_t n_terms) {
  if (n_terms < 1) throw DomainError("telescoping_closed_form: N must be at least 1");
  const double n = static_cast<double>(n_terms);
  return (2.0 * n + 1.0) / (n + 1.0);
}

}  // namespace zetastrip
