#pragma once

// Checkers for the elementary inequalities behind the bound |g(s)| < 1:
// two-sided logarithm bounds, power inequalities in an exponent parameter,
// and the rational bounds on the strip that close the argument at N = 3.
//
// Every checker returns a MarginResult normalized so that `lhs` is the side
// claimed to be smaller and margin = rhs - lhs; margin >= 0 means the
// inequality holds at that point. The exponent parameter of the power
// inequalities is called `exponent_t` to keep it apart from Im s.

#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <string_view>

namespace zetastrip {

struct MarginResult {
  double lhs = 0.0;
  double rhs = 0.0;
  double margin = 0.0;
  /// False exactly on a stated equality case of the inequality.
  bool strict_expected = true;
  /// False when the arguments are outside the inequality's domain; the
  /// margin is then meaningless.
  bool domain_ok = true;

  static MarginResult make(double smaller, double larger, bool strict = true) {
    return {smaller, larger, larger - smaller, strict, true};
  }
  static MarginResult out_of_domain() {
    const double nan = std::numeric_limits<double>::quiet_NaN();
    return {nan, nan, nan, true, false};
  }
};

/// Logarithm bounds:
///   eq3: 1/(x+1) < log(1+1/x) < 1/x         (x < -1 or x > 0)
///   eq4: 1/(x+1/2) < log(1+1/x) < 1/x       (x > 0)
///   eq5: 2x/(2+x) < log(1+x) < x(2+x)/(2(1+x))   (x > 0)
///   eq6: x(2+x)/(2(1+x)) < log(1+x) < 2x/(2+x)   (-1 < x < 0)
enum class LogBound { eq3_lo, eq3_hi, eq4_lo, eq4_hi, eq5_lo, eq5_hi, eq6_lo, eq6_hi };

inline constexpr std::array<LogBound, 8> kAllLogBounds = {
    LogBound::eq3_lo, LogBound::eq3_hi, LogBound::eq4_lo, LogBound::eq4_hi,
    LogBound::eq5_lo, LogBound::eq5_hi, LogBound::eq6_lo, LogBound::eq6_hi};

inline constexpr std::string_view name(LogBound v) {
  switch (v) {
    case LogBound::eq3_lo: return "eq3_lo";
    case LogBound::eq3_hi: return "eq3_hi";
    case LogBound::eq4_lo: return "eq4_lo";
    case LogBound::eq4_hi: return "eq4_hi";
    case LogBound::eq5_lo: return "eq5_lo";
    case LogBound::eq5_hi: return "eq5_hi";
    case LogBound::eq6_lo: return "eq6_lo";
    case LogBound::eq6_hi: return "eq6_hi";
  }
  return "?";
}

inline MarginResult log_bound(LogBound variant, double x) {
  if (!std::isfinite(x)) return MarginResult::out_of_domain();
  switch (variant) {
    case LogBound::eq3_lo:
    case LogBound::eq3_hi: {
      if (!(x < -1.0 || x > 0.0)) return MarginResult::out_of_domain();
      const double mid = std::log1p(1.0 / x);
      return variant == LogBound::eq3_lo ? MarginResult::make(1.0 / (x + 1.0), mid)
                                         : MarginResult::make(mid, 1.0 / x);
    }
    case LogBound::eq4_lo:
    case LogBound::eq4_hi: {
      if (!(x > 0.0)) return MarginResult::out_of_domain();
      const double mid = std::log1p(1.0 / x);
      return variant == LogBound::eq4_lo ? MarginResult::make(1.0 / (x + 0.5), mid)
                                         : MarginResult::make(mid, 1.0 / x);
    }
    case LogBound::eq5_lo:
    case LogBound::eq5_hi: {
      if (!(x > 0.0)) return MarginResult::out_of_domain();
      const double mid = std::log1p(x);
      return variant == LogBound::eq5_lo ? MarginResult::make(2.0 * x / (2.0 + x), mid)
                                         : MarginResult::make(mid, x * (2.0 + x) / (2.0 * (1.0 + x)));
    }
    case LogBound::eq6_lo:
    case LogBound::eq6_hi: {
      if (!(x > -1.0 && x < 0.0)) return MarginResult::out_of_domain();
      const double mid = std::log1p(x);
      return variant == LogBound::eq6_lo ? MarginResult::make(x * (2.0 + x) / (2.0 * (1.0 + x)), mid)
                                         : MarginResult::make(mid, 2.0 * x / (2.0 + x));
    }
  }
  return MarginResult::out_of_domain();
}

/// (1 + 1/(tx + t - 1))^t <= 1 + 1/x for t >= 1 and x <= -1 or x > 0.
/// Equality at t = 1, and at x = -1 where both sides vanish.
inline MarginResult power_ineq_7(double exponent_t, double x) {
  const double t = exponent_t;
  if (!std::isfinite(t) || !std::isfinite(x)) return MarginResult::out_of_domain();
  if (!(t >= 1.0) || !(x <= -1.0 || x > 0.0)) return MarginResult::out_of_domain();
  const double d = t * x + (t - 1.0);
  const double base = 1.0 + 1.0 / d;
  if (!(base >= 0.0)) return MarginResult::out_of_domain();
  const double lhs = std::exp(t * std::log1p(1.0 / d));
  return MarginResult::make(lhs, 1.0 + 1.0 / x, !(t == 1.0 || x == -1.0));
}

/// (1 + x/t)^t <= 1 + 2tx / ((1-t)x + 2t) for t >= 1, 0 <= x <= 2.
/// Equality at x = 0 or t = 1.
inline MarginResult power_ineq_8(double exponent_t, double x) {
  const double t = exponent_t;
  if (!std::isfinite(t) || !std::isfinite(x)) return MarginResult::out_of_domain();
  if (!(t >= 1.0) || !(x >= 0.0 && x <= 2.0)) return MarginResult::out_of_domain();
  const double lhs = std::exp(t * std::log1p(x / t));
  const double rhs = 1.0 + 2.0 * t * x / ((1.0 - t) * x + 2.0 * t);
  return MarginResult::make(lhs, rhs, !(x == 0.0 || t == 1.0));
}

/// Fractional-power bounds, 0 <= a <= 1:
///   eq9:  (1+1/x)^a >= 1 + a/(x+1-a)       (x <= -1 or x > 0); equality a in {0,1} or x = -1
///   eq10: (1+1/x)^a >= 1 + a/(x+(1-a)/2)   (x > 0); equality a in {0,1}
///   eq11: (1+1/x)^a <= 1 + a/(x+(1-a)/2)   (x <= -1); equality a in {0,1}
enum class PowerBound { eq9, eq10, eq11 };

inline constexpr std::string_view name(PowerBound v) {
  switch (v) {
    case PowerBound::eq9: return "eq9";
    case PowerBound::eq10: return "eq10";
    case PowerBound::eq11: return "eq11";
  }
  return "?";
}

inline MarginResult power_ineq_a(PowerBound variant, double a, double x) {
  if (!std::isfinite(a) || !std::isfinite(x)) return MarginResult::out_of_domain();
  if (!(a >= 0.0 && a <= 1.0)) return MarginResult::out_of_domain();
  const bool negative_branch = x <= -1.0;
  switch (variant) {
    case PowerBound::eq9:
      if (!(negative_branch || x > 0.0)) return MarginResult::out_of_domain();
      break;
    case PowerBound::eq10:
      if (!(x > 0.0)) return MarginResult::out_of_domain();
      break;
    case PowerBound::eq11:
      if (!negative_branch) return MarginResult::out_of_domain();
      break;
  }
  // (1 + 1/x)^a; 0^0 taken as 1.
  const double power = a == 0.0 ? 1.0 : std::exp(a * std::log1p(1.0 / x));
  const double shift = variant == PowerBound::eq9 ? (1.0 - a) : (1.0 - a) / 2.0;
  const double bound = a == 0.0 ? 1.0 : 1.0 + a / (x + shift);
  const bool equality = a == 0.0 || a == 1.0 || (variant == PowerBound::eq9 && x == -1.0);
  if (variant == PowerBound::eq11) return MarginResult::make(power, bound, !equality);
  return MarginResult::make(bound, power, !equality);
}

/// Smallest x admitted by the strip rectangle bound, (1 + sqrt 3)/4.
inline const double kLemma2MinX = (1.0 + std::numbers::sqrt3) / 4.0;

namespace detail {

/// sigma (sigma - 1) + t^2
inline double strip_q(double sigma, double t) { return (sigma - 1.0) * sigma + t * t; }

inline bool open_half_strip(double sigma) { return sigma > 0.0 && sigma < 0.5; }

/// ((2x+1-sigma)^2 + t^2) / ((2x+sigma)^2 + t^2)
inline double shifted_ratio(double x, double sigma, double t) {
  return ((2.0 * x + 1.0 - sigma) * (2.0 * x + 1.0 - sigma) + t * t) /
         ((2.0 * x + sigma) * (2.0 * x + sigma) + t * t);
}

/// 1 - (1+4n) q / ((1+2n)^2 (q + 4n^2))
inline double reduced_factor(double n, double q) {
  return 1.0 - (1.0 + 4.0 * n) * q / ((1.0 + 2.0 * n) * (1.0 + 2.0 * n) * (q + 4.0 * n * n));
}

}  // namespace detail

/// For 0 < sigma < 1/2, x >= (1+sqrt 3)/4, real t:
///   ((2x+1-sigma)^2+t^2)/((2x+sigma)^2+t^2)
///     < { ((2x+1)/(2x))^2 (1 - (1+4x) q / ((1+2x)^2 (q+4x^2))) }^{1-2 sigma},
/// with q = sigma(sigma-1) + t^2.
inline MarginResult lemma2_rect(double x, double sigma, double t) {
  if (!std::isfinite(x) || !std::isfinite(sigma) || !std::isfinite(t)) return MarginResult::out_of_domain();
  if (!detail::open_half_strip(sigma) || !(x >= kLemma2MinX)) return MarginResult::out_of_domain();
  const double q = detail::strip_q(sigma, t);
  const double lift = (2.0 * x + 1.0) / (2.0 * x);
  const double base = lift * lift * detail::reduced_factor(x, q);
  if (!(base > 0.0)) return MarginResult::out_of_domain();
  return MarginResult::make(detail::shifted_ratio(x, sigma, t), std::pow(base, 1.0 - 2.0 * sigma));
}

/// The same inequality after substituting 1 - 2 sigma = 1/y and raising both
/// sides to the power y:
///   (1 + 4(1+4x) / (y((-1/y+1+4x)^2 + 4t^2)))^y < 1 + 4(1+4x) y^2 / (1 + (-1+4t^2+16x^2) y^2).
inline MarginResult lemma2_rect_substituted(double x, double sigma, double t) {
  if (!std::isfinite(x) || !std::isfinite(sigma) || !std::isfinite(t)) return MarginResult::out_of_domain();
  if (!detail::open_half_strip(sigma) || !(x >= kLemma2MinX)) return MarginResult::out_of_domain();
  const double y = 1.0 / (1.0 - 2.0 * sigma);
  const double shifted = -1.0 / y + 1.0 + 4.0 * x;
  const double inner = 4.0 * (1.0 + 4.0 * x) / (y * (shifted * shifted + 4.0 * t * t));
  const double lhs = std::exp(y * std::log1p(inner));
  const double rhs = 1.0 + 4.0 * (1.0 + 4.0 * x) * y * y / (1.0 + (-1.0 + 4.0 * t * t + 16.0 * x * x) * y * y);
  return MarginResult::make(lhs, rhs);
}

/// 4(1+4x) / ((-1/y+1+4x)^2 + 4t^2) with y = 1/(1-2 sigma): the argument
/// handed to power_ineq_8 (with exponent y). Lies in (0, 2] on the lemma domain.
inline double lemma2_aux_factor(double x, double sigma, double t) {
  if (!std::isfinite(x) || !std::isfinite(sigma) || !std::isfinite(t) || !(sigma < 0.5)) {
    return std::numeric_limits<double>::quiet_NaN();
  }
  const double y = 1.0 / (1.0 - 2.0 * sigma);
  const double shifted = -1.0 / y + 1.0 + 4.0 * x;
  return 4.0 * (1.0 + 4.0 * x) / (shifted * shifted + 4.0 * t * t);
}

/// ((1-sigma)^2+t^2)/(sigma^2+t^2) < (1 + 1/(sigma(sigma-1)+t^2))^{1-2 sigma}
/// for 0 < sigma < 1/2, t >= 1/2.
inline MarginResult lemma2_h1(double sigma, double t) {
  if (!std::isfinite(sigma) || !std::isfinite(t)) return MarginResult::out_of_domain();
  if (!detail::open_half_strip(sigma) || !(t >= 0.5)) return MarginResult::out_of_domain();
  const double q = detail::strip_q(sigma, t);
  const double lhs = ((1.0 - sigma) * (1.0 - sigma) + t * t) / (sigma * sigma + t * t);
  const double rhs = std::exp((1.0 - 2.0 * sigma) * std::log1p(1.0 / q));
  return MarginResult::make(lhs, rhs);
}

/// ((1-sigma)^2+t^2)/(sigma^2+t^2) prod_{n=1}^{3} ((2n+1-sigma)^2+t^2)/((2n+sigma)^2+t^2)
///   < (1/4 prod_{n=1}^{3} ((2n+1)/(2n))^2)^{1-2 sigma}     for 0 < sigma < 1/2, t >= 12.
inline MarginResult lemma2_product(double sigma, double t) {
  if (!std::isfinite(sigma) || !std::isfinite(t)) return MarginResult::out_of_domain();
  if (!detail::open_half_strip(sigma) || !(t >= 12.0)) return MarginResult::out_of_domain();
  double lhs = ((1.0 - sigma) * (1.0 - sigma) + t * t) / (sigma * sigma + t * t);
  double base = 0.25;
  for (int n = 1; n <= 3; ++n) {
    lhs *= detail::shifted_ratio(n, sigma, t);
    const double lift = (2.0 * n + 1.0) / (2.0 * n);
    base *= lift * lift;
  }
  return MarginResult::make(lhs, std::pow(base, 1.0 - 2.0 * sigma));
}

/// (1 + 1/q) prod_{n=1}^{3} (1 - (1+4n) q / ((1+2n)^2 (q+4n^2))) < 1/4,
/// q = sigma(sigma-1) + t^2, for 0 < sigma <= 1/2 and t >= 12. The closed
/// end sigma = 1/2 is the extremal point of the bound.
inline MarginResult lemma2_reduced(double sigma, double t) {
  if (!std::isfinite(sigma) || !std::isfinite(t)) return MarginResult::out_of_domain();
  if (!(sigma > 0.0 && sigma <= 0.5) || !(t >= 12.0)) return MarginResult::out_of_domain();
  const double q = detail::strip_q(sigma, t);
  double lhs = 1.0 + 1.0 / q;
  for (int n = 1; n <= 3; ++n) lhs *= detail::reduced_factor(n, q);
  return MarginResult::make(lhs, 0.25);
}

}  // namespace zetastrip
