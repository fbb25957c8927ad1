#pragma once

// Grid sweeps over rectangles of the left half of the critical strip.
//
// Each scan evaluates a signed margin per sample (positive = the claimed
// inequality holds), refines cells whose corner margins fall below a
// threshold, and merges per-row partial results into a report whose content
// does not depend on the number of workers.

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstddef>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <limits>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "zetastrip/chi_factor.hpp"
#include "zetastrip/complex_point.hpp"
#include "zetastrip/errors.hpp"
#include "zetastrip/parallel.hpp"
#include "zetastrip/special_functions.hpp"

namespace zetastrip {

/// [sigma_min, sigma_max] x [t_min, t_max]
struct StripRect {
  double sigma_min = 0.0;
  double sigma_max = 0.5;
  double t_min = 12.0;
  double t_max = 50.0;

  void validate() const {
    if (!std::isfinite(sigma_min) || !std::isfinite(sigma_max) || !std::isfinite(t_min) || !std::isfinite(t_max)) {
      throw DomainError("StripRect: non-finite bound");
    }
    if (sigma_min < 0.0 || sigma_max > 1.0) throw DomainError("StripRect: sigma must lie in [0, 1]");
    if (!(sigma_min < sigma_max)) throw DomainError("StripRect: sigma_min must be below sigma_max");
    if (!(t_min < t_max)) throw DomainError("StripRect: t_min must be below t_max");
    const bool spans_real_axis = t_min <= kPoleGuard && t_max >= -kPoleGuard;
    if (spans_real_axis && (sigma_min <= kPoleGuard || sigma_max >= 1.0 - kPoleGuard)) {
      throw DomainError("StripRect: rectangle contains s = 0 or s = 1");
    }
  }
};

struct GridSpec {
  double d_sigma = 0.01;
  double d_t = 0.05;
  /// Cells with a corner margin below this are split 2 x 2.
  double refine_threshold = 0.01;
  int max_refine_depth = 4;

  void validate() const {
    if (!(d_sigma > 0.0) || !(d_t > 0.0) || !std::isfinite(d_sigma) || !std::isfinite(d_t)) {
      throw DomainError("GridSpec: steps must be positive");
    }
    if (!std::isfinite(refine_threshold)) throw DomainError("GridSpec: refine_threshold must be finite");
    if (max_refine_depth < 0 || max_refine_depth > 6) {
      throw DomainError("GridSpec: max_refine_depth must be in [0, 6]");
    }
  }
};

enum class ScanQuantity { chi_modulus, theorem, hN_bound, condition_A };

inline constexpr std::string_view name(ScanQuantity q) {
  switch (q) {
    case ScanQuantity::chi_modulus: return "chi_modulus";
    case ScanQuantity::theorem: return "theorem";
    case ScanQuantity::hN_bound: return "hN_bound";
    case ScanQuantity::condition_A: return "condition_A";
  }
  return "?";
}

/// violation: negative margin where the inequality is claimed to hold.
/// finding: negative margin in a conjectural or unclaimed region.
enum class Severity { violation, finding };

inline constexpr std::string_view name(Severity s) {
  return s == Severity::violation ? "violation" : "finding";
}

struct ScanSample {
  ComplexPoint at;
  double margin = 0.0;
  Severity severity = Severity::violation;
};

struct Diagnostic {
  ComplexPoint at;
  std::string message;
};

/// Analytic d/dsigma |zeta|^2 against a central difference on a subsample.
struct DerivativeAudit {
  std::size_t points = 0;
  double max_abs_deviation = 0.0;
  double tolerance = 1e-6;
  bool passed() const { return max_abs_deviation <= tolerance; }
};

/// Location of the |g| = 1 crossing found by a chi_modulus scan.
struct Crossing {
  double t_star = 0.0;
  double sigma = 0.0;
};

/// Negative-margin samples listed in a report; counts are always complete.
inline constexpr std::size_t kMaxListedSamples = 1000;

/// Claimed regions of the chi and theorem scans.
inline constexpr double kProvedFloor = 12.0;
inline constexpr double kSimulationFloor = 6.5;

/// Theorem samples with |zeta(s)| and |margin| both below this are counted
/// as near-zero equalities rather than violations.
inline constexpr double kNearZeroTolerance = 1e-6;

struct ScanReport {
  ScanQuantity quantity = ScanQuantity::chi_modulus;
  std::string region;
  StripRect rect;
  GridSpec grid;
  std::size_t product_depth = 0;  ///< hN_bound only
  std::size_t sigma_steps = 0;    ///< hN_bound only
  std::size_t samples = 0;
  double min_margin = std::numeric_limits<double>::quiet_NaN();
  ComplexPoint argmin{std::numeric_limits<double>::quiet_NaN(), std::numeric_limits<double>::quiet_NaN()};
  std::vector<ScanSample> violations;  ///< sorted by (sigma, t), at most kMaxListedSamples
  std::size_t violation_count = 0;
  std::size_t finding_count = 0;
  std::size_t near_zero_equalities = 0;
  std::vector<Diagnostic> diagnostics;
  std::size_t refined_cells = 0;
  double wall_time_s = 0.0;
  std::optional<DerivativeAudit> audit;
  std::optional<Crossing> crossing;
  EvalConfig config;

  /// 0 clean, 1 violations in a claimed region, 2 findings only.
  int exit_code() const {
    if (violation_count > 0) return 1;
    if (finding_count > 0) return 2;
    return 0;
  }
};

namespace detail {

inline constexpr double kOpenEdge = 1e-12;

inline bool in_open_half_strip(ComplexPoint p) {
  return p.sigma > kOpenEdge && p.sigma < 0.5 - kOpenEdge;
}

/// lo, lo + step, ... up to hi (inclusive when hi is on the lattice).
inline std::vector<double> lattice(double lo, double hi, double step) {
  const auto n = static_cast<std::size_t>(std::floor((hi - lo) / step + 1e-9));
  std::vector<double> v(n + 1);
  for (std::size_t i = 0; i <= n; ++i) v[i] = lo + static_cast<double>(i) * step;
  if (std::abs(v[n] - hi) < 1e-9 * step) v[n] = hi;
  return v;
}

struct PointOutcome {
  double margin = 0.0;
  bool equality = false;
};

struct ScanProblem {
  std::function<PointOutcome(ComplexPoint)> eval;
  std::function<Severity(ComplexPoint)> severity;
  std::function<bool(ComplexPoint)> admitted;
};

struct ScanAccumulator {
  std::size_t samples = 0;
  std::size_t refined_cells = 0;
  double min_margin = std::numeric_limits<double>::infinity();
  ComplexPoint argmin{std::numeric_limits<double>::quiet_NaN(), std::numeric_limits<double>::quiet_NaN()};
  std::map<ComplexPoint, ScanSample, PointLess> negatives;
  std::set<ComplexPoint, PointLess> equalities;
  std::map<ComplexPoint, std::string, PointLess> diagnostics;

  void consider(ComplexPoint p, double margin) {
    if (margin < min_margin || (margin == min_margin && PointLess{}(p, argmin))) {
      min_margin = margin;
      argmin = p;
    }
  }

  void merge(const ScanAccumulator& o) {
    samples += o.samples;
    refined_cells += o.refined_cells;
    if (o.samples > 0 && !std::isnan(o.argmin.sigma)) consider(o.argmin, o.min_margin);
    negatives.insert(o.negatives.begin(), o.negatives.end());
    equalities.insert(o.equalities.begin(), o.equalities.end());
    diagnostics.insert(o.diagnostics.begin(), o.diagnostics.end());
  }
};

/// Evaluates one sample into `acc`. Returns its margin, or NaN when the
/// point is excluded or its evaluation failed.
inline double visit(const ScanProblem& pb, ComplexPoint p, ScanAccumulator& acc) {
  constexpr double nan = std::numeric_limits<double>::quiet_NaN();
  if (!pb.admitted(p)) return nan;
  ++acc.samples;
  try {
    const PointOutcome o = pb.eval(p);
    if (o.equality) {
      acc.equalities.insert(p);
      return o.margin;
    }
    acc.consider(p, o.margin);
    if (o.margin < 0.0) acc.negatives[p] = {p, o.margin, pb.severity(p)};
    return o.margin;
  } catch (const Error& e) {
    acc.diagnostics[p] = std::string(e.kind()) + ": " + e.what();
    return nan;
  }
}

/// corners: margins at (s0,t0), (s0,t1), (s1,t0), (s1,t1).
inline void refine_cell(const ScanProblem& pb, const GridSpec& grid, double s0, double s1, double t0, double t1,
                        const std::array<double, 4>& corners, int depth, ScanAccumulator& acc) {
  double lowest = std::numeric_limits<double>::infinity();
  for (double c : corners) {
    if (!std::isnan(c)) lowest = std::min(lowest, c);
  }
  if (depth >= grid.max_refine_depth || !(lowest < grid.refine_threshold)) return;
  ++acc.refined_cells;
  const double sm = 0.5 * (s0 + s1);
  const double tm = 0.5 * (t0 + t1);
  const double m_s0_tm = visit(pb, {s0, tm}, acc);
  const double m_s1_tm = visit(pb, {s1, tm}, acc);
  const double m_sm_t0 = visit(pb, {sm, t0}, acc);
  const double m_sm_t1 = visit(pb, {sm, t1}, acc);
  const double m_mid = visit(pb, {sm, tm}, acc);
  refine_cell(pb, grid, s0, sm, t0, tm, {corners[0], m_s0_tm, m_sm_t0, m_mid}, depth + 1, acc);
  refine_cell(pb, grid, s0, sm, tm, t1, {m_s0_tm, corners[1], m_mid, m_sm_t1}, depth + 1, acc);
  refine_cell(pb, grid, sm, s1, t0, tm, {m_sm_t0, m_mid, corners[2], m_s1_tm}, depth + 1, acc);
  refine_cell(pb, grid, sm, s1, tm, t1, {m_mid, m_sm_t1, m_s1_tm, corners[3]}, depth + 1, acc);
}

/// Samples the base lattice (rows of constant sigma spread over workers),
/// then refines every lattice cell, and merges row results in row order.
inline ScanAccumulator run_grid(const ScanProblem& pb, const StripRect& rect, const GridSpec& grid,
                                unsigned workers) {
  const std::vector<double> sig = lattice(rect.sigma_min, rect.sigma_max, grid.d_sigma);
  const std::vector<double> ts = lattice(rect.t_min, rect.t_max, grid.d_t);
  const std::size_t ns = sig.size();
  const std::size_t nt = ts.size();
  std::vector<double> margins(ns * nt);
  std::vector<ScanAccumulator> rows(ns);
  parallel_for(ns, workers, [&](std::size_t i) {
    for (std::size_t j = 0; j < nt; ++j) margins[i * nt + j] = visit(pb, {sig[i], ts[j]}, rows[i]);
  });
  std::vector<ScanAccumulator> cells(ns > 0 ? ns - 1 : 0);
  parallel_for(cells.size(), workers, [&](std::size_t i) {
    for (std::size_t j = 0; j + 1 < nt; ++j) {
      const std::array<double, 4> corners = {margins[i * nt + j], margins[i * nt + j + 1],
                                             margins[(i + 1) * nt + j], margins[(i + 1) * nt + j + 1]};
      refine_cell(pb, grid, sig[i], sig[i + 1], ts[j], ts[j + 1], corners, 0, cells[i]);
    }
  });
  ScanAccumulator total;
  for (const auto& r : rows) total.merge(r);
  for (const auto& c : cells) total.merge(c);
  return total;
}

inline void fill_report(ScanReport& report, const ScanAccumulator& acc) {
  report.samples = acc.samples;
  report.refined_cells = acc.refined_cells;
  if (!std::isnan(acc.argmin.sigma)) {
    report.min_margin = acc.min_margin;
    report.argmin = acc.argmin;
  }
  for (const auto& [p, sample] : acc.negatives) {
    (sample.severity == Severity::violation ? report.violation_count : report.finding_count)++;
    if (report.violations.size() < kMaxListedSamples) report.violations.push_back(sample);
  }
  report.near_zero_equalities = acc.equalities.size();
  for (const auto& [p, msg] : acc.diagnostics) report.diagnostics.push_back({p, msg});
}

inline Severity claimed_beyond_simulation_floor(ComplexPoint p) {
  return p.t > kSimulationFloor ? Severity::violation : Severity::finding;
}

inline std::string strip_region_label(const StripRect& rect) {
  if (rect.t_min >= kProvedFloor) return "proved";
  if (rect.t_min >= kSimulationFloor) return "simulation";
  return "exploratory";
}

inline void require_left_half_strip(const StripRect& rect, const char* what, double t_floor) {
  rect.validate();
  if (rect.sigma_min < 0.0 || rect.sigma_max > 0.5) {
    throw DomainError(std::string(what) + ": rectangle must lie in 0 <= sigma <= 1/2");
  }
  if (rect.t_min < t_floor) {
    throw DomainError(std::string(what) + ": t_min below the scan floor");
  }
}

template <class Clock = std::chrono::steady_clock>
double seconds_since(typename Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

/// Bisects 1 - |g| in t upward from the highest-t negative sample (taken in
/// the smallest-sigma column when tied) to the |g| = 1 crossing.
inline std::optional<Crossing> bisect_crossing(const ScanAccumulator& acc, double d_t, const EvalConfig& cfg) {
  const ScanSample* top = nullptr;
  for (const auto& [p, v] : acc.negatives) {
    if (!top || v.at.t > top->at.t) top = &v;
  }
  if (!top) return std::nullopt;
  const double sigma = top->at.sigma;
  double lo = top->at.t;
  double hi = lo + d_t;
  auto margin = [&](double t) { return 1.0 - std::abs(chi(ComplexPoint{sigma, t}, cfg)); };
  if (margin(hi) < 0.0) return std::nullopt;
  for (int k = 0; k < 80 && hi - lo > 1e-13 * hi; ++k) {
    const double mid = 0.5 * (lo + hi);
    (margin(mid) < 0.0 ? lo : hi) = mid;
  }
  return Crossing{0.5 * (lo + hi), sigma};
}

}  // namespace detail

/// 1 - |g(s)| over the rectangle. Negative margins above t = 6.5 are
/// violations; below they are findings, and the |g| = 1 crossing is located.
inline ScanReport scan_chi_modulus(const StripRect& rect, const GridSpec& grid, const EvalConfig& cfg = {},
                                   unsigned workers = 1) {
  const auto start = std::chrono::steady_clock::now();
  detail::require_left_half_strip(rect, "scan_chi_modulus", kPoleGuard);
  grid.validate();
  cfg.validate();
  detail::ScanProblem pb{
      [&cfg](ComplexPoint p) { return detail::PointOutcome{1.0 - std::abs(chi(p, cfg)), false}; },
      detail::claimed_beyond_simulation_floor, detail::in_open_half_strip};
  ScanReport report;
  report.quantity = ScanQuantity::chi_modulus;
  report.region = detail::strip_region_label(rect);
  report.rect = rect;
  report.grid = grid;
  report.config = cfg;
  const detail::ScanAccumulator acc = detail::run_grid(pb, rect, grid, workers);
  detail::fill_report(report, acc);
  report.crossing = detail::bisect_crossing(acc, grid.d_t, cfg);
  report.wall_time_s = detail::seconds_since(start);
  return report;
}

/// |zeta(s)| - |zeta(1-s)| over the rectangle.
inline ScanReport scan_theorem(const StripRect& rect, const GridSpec& grid, const EvalConfig& cfg = {},
                               unsigned workers = 1) {
  const auto start = std::chrono::steady_clock::now();
  detail::require_left_half_strip(rect, "scan_theorem", 0.5);
  grid.validate();
  cfg.validate();
  detail::ScanProblem pb{
      [&cfg](ComplexPoint p) {
        const double zs = std::abs(zeta(p, cfg));
        const double zr = std::abs(zeta(p.reflect(), cfg));
        const double margin = zs - zr;
        return detail::PointOutcome{margin, zs < kNearZeroTolerance && std::abs(margin) < kNearZeroTolerance};
      },
      detail::claimed_beyond_simulation_floor, detail::in_open_half_strip};
  ScanReport report;
  report.quantity = ScanQuantity::theorem;
  report.region = detail::strip_region_label(rect);
  report.rect = rect;
  report.grid = grid;
  report.config = cfg;
  detail::fill_report(report, detail::run_grid(pb, rect, grid, workers));
  report.wall_time_s = detail::seconds_since(start);
  return report;
}

/// 2^{2 sigma - 1} - |h_N(sigma + i t)| at sigma = k / (2 (steps + 1)), k = 1..steps.
/// Only N >= 3 at t >= 12 is a claimed region.
inline ScanReport scan_hN_bound(std::size_t n_terms, double t_fixed, std::size_t sigma_steps) {
  const auto start = std::chrono::steady_clock::now();
  if (n_terms < 1) throw DomainError("scan_hN_bound: N must be at least 1");
  if (!(t_fixed > 0.0) || !std::isfinite(t_fixed)) throw DomainError("scan_hN_bound: t must be positive");
  if (sigma_steps < 1) throw DomainError("scan_hN_bound: at least one sigma sample required");
  const bool claimed = n_terms >= 3 && t_fixed >= kProvedFloor;
  ScanReport report;
  report.quantity = ScanQuantity::hN_bound;
  report.region = claimed ? "proved" : "exploratory";
  report.rect = {0.0, 0.5, t_fixed, t_fixed};
  report.grid = {0.5 / static_cast<double>(sigma_steps + 1), 0.0, 0.0, 0};
  report.product_depth = n_terms;
  report.sigma_steps = sigma_steps;
  detail::ScanAccumulator acc;
  const Severity severity = claimed ? Severity::violation : Severity::finding;
  detail::ScanProblem pb{
      [n_terms](ComplexPoint p) {
        return detail::PointOutcome{std::exp2(2.0 * p.sigma - 1.0) - h_partial(n_terms, p), false};
      },
      [severity](ComplexPoint) { return severity; }, [](ComplexPoint) { return true; }};
  for (std::size_t k = 1; k <= sigma_steps; ++k) {
    const double sigma = 0.5 * static_cast<double>(k) / static_cast<double>(sigma_steps + 1);
    detail::visit(pb, {sigma, t_fixed}, acc);
  }
  detail::fill_report(report, acc);
  report.wall_time_s = detail::seconds_since(start);
  return report;
}

/// d/dsigma |zeta(s)|^2 = 2 Re(zeta'(s) conj(zeta(s))).
inline double sigma_derivative_of_modulus_squared(ComplexPoint s, const EvalConfig& cfg = {}) {
  const auto [z, zp] = zeta_and_derivative(s, cfg);
  return 2.0 * std::real(zp * std::conj(z));
}

/// Central difference of |zeta|^2 in sigma, the independent route.
inline double sigma_difference_of_modulus_squared(ComplexPoint s, double h, const EvalConfig& cfg = {}) {
  const double up = std::norm(zeta(ComplexPoint{s.sigma + h, s.t}, cfg));
  const double down = std::norm(zeta(ComplexPoint{s.sigma - h, s.t}, cfg));
  return (up - down) / (2.0 * h);
}

inline constexpr std::size_t kAuditPoints = 100;
inline constexpr double kAuditStep = 1e-5;

/// -d/dsigma |zeta(s)|^2 over the rectangle (t_min >= 6.5). Negative margins
/// are findings. The report carries a derivative audit on up to 100 lattice
/// points.
inline ScanReport scan_condition_a(const StripRect& rect, const GridSpec& grid, const EvalConfig& cfg = {},
                                   unsigned workers = 1) {
  const auto start = std::chrono::steady_clock::now();
  detail::require_left_half_strip(rect, "scan_condition_a", kSimulationFloor);
  grid.validate();
  cfg.validate();
  detail::ScanProblem pb{
      [&cfg](ComplexPoint p) { return detail::PointOutcome{-sigma_derivative_of_modulus_squared(p, cfg), false}; },
      [](ComplexPoint) { return Severity::finding; }, detail::in_open_half_strip};
  ScanReport report;
  report.quantity = ScanQuantity::condition_A;
  report.region = "conjectural";
  report.rect = rect;
  report.grid = grid;
  report.config = cfg;
  detail::fill_report(report, detail::run_grid(pb, rect, grid, workers));

  std::vector<ComplexPoint> admitted;
  for (double s : detail::lattice(rect.sigma_min, rect.sigma_max, grid.d_sigma)) {
    for (double t : detail::lattice(rect.t_min, rect.t_max, grid.d_t)) {
      if (detail::in_open_half_strip({s, t}) && s - kAuditStep > 0.0) admitted.push_back({s, t});
    }
  }
  DerivativeAudit audit;
  const std::size_t m = std::min(kAuditPoints, admitted.size());
  for (std::size_t k = 0; k < m; ++k) {
    const std::size_t idx = m == 1 ? 0 : k * (admitted.size() - 1) / (m - 1);
    const ComplexPoint p = admitted[idx];
    const double analytic = sigma_derivative_of_modulus_squared(p, cfg);
    const double fd = sigma_difference_of_modulus_squared(p, kAuditStep, cfg);
    audit.max_abs_deviation = std::max(audit.max_abs_deviation, std::abs(analytic - fd));
    ++audit.points;
  }
  report.audit = audit;
  report.wall_time_s = detail::seconds_since(start);
  return report;
}

/// Z(t) = Re(e^{i theta(t)} zeta(1/2 + i t)), real on the critical line,
/// theta(t) = arg Gamma(1/4 + i t/2) - (t/2) log pi.
inline double rotated_zeta(double t, const EvalConfig& cfg = {}) {
  const double theta = ln_gamma(Complex(0.25, 0.5 * t)).imag() - 0.5 * t * detail::kLnPi;
  return std::real(std::exp(Complex(0.0, theta)) * zeta(ComplexPoint{0.5, t}, cfg));
}

/// Ordinate of a zero on the critical line within t_guess +- 0.5, found by
/// bisection on a sign change of the rotated zeta. The bracket nearest to
/// t_guess is used.
inline double locate_zero(double t_guess, double tol = 1e-10, const EvalConfig& cfg = {}) {
  if (!std::isfinite(t_guess) || !(tol > 0.0)) throw DomainError("locate_zero: bad arguments");
  constexpr int kSteps = 100;
  const double lo_edge = t_guess - 0.5;
  double best_lo = 0.0;
  double best_hi = 0.0;
  double best_dist = std::numeric_limits<double>::infinity();
  double prev_t = lo_edge;
  double prev_z = rotated_zeta(prev_t, cfg);
  for (int k = 1; k <= kSteps; ++k) {
    const double t = lo_edge + static_cast<double>(k) / kSteps;
    const double z = rotated_zeta(t, cfg);
    if ((prev_z < 0.0) != (z < 0.0) || z == 0.0) {
      const double dist = std::abs(0.5 * (prev_t + t) - t_guess);
      if (dist < best_dist) {
        best_dist = dist;
        best_lo = prev_t;
        best_hi = t;
      }
    }
    prev_t = t;
    prev_z = z;
  }
  if (!std::isfinite(best_dist)) {
    throw NoBracketError("locate_zero: no sign change within t_guess +- 0.5");
  }
  double z_lo = rotated_zeta(best_lo, cfg);
  double mid = 0.5 * (best_lo + best_hi);
  for (int k = 0; k < 200; ++k) {
    mid = 0.5 * (best_lo + best_hi);
    const double z_mid = rotated_zeta(mid, cfg);
    if (z_mid == 0.0) break;
    if ((z_mid < 0.0) == (z_lo < 0.0)) {
      best_lo = mid;
      z_lo = z_mid;
    } else {
      best_hi = mid;
    }
    if (best_hi - best_lo <= 4.0 * std::numeric_limits<double>::epsilon() * std::abs(mid)) break;
  }
  if (!(std::abs(zeta(ComplexPoint{0.5, mid}, cfg)) < tol)) {
    throw TruncationError("locate_zero: bracket collapsed above the requested tolerance");
  }
  return mid;
}

/// One row of the |g| surface.
struct FigureRow {
  double sigma = 0.0;
  double t = 0.0;
  double abs_g = 0.0;
  double margin = 0.0;  ///< 1 - abs_g
};

inline std::vector<FigureRow> figure_rows(const StripRect& rect, const GridSpec& grid, const EvalConfig& cfg = {},
                                          unsigned workers = 1) {
  rect.validate();
  grid.validate();
  cfg.validate();
  const std::vector<double> sig = detail::lattice(rect.sigma_min, rect.sigma_max, grid.d_sigma);
  const std::vector<double> ts = detail::lattice(rect.t_min, rect.t_max, grid.d_t);
  std::vector<FigureRow> rows(sig.size() * ts.size());
  detail::parallel_for(sig.size(), workers, [&](std::size_t i) {
    for (std::size_t j = 0; j < ts.size(); ++j) {
      const double a = std::abs(chi(ComplexPoint{sig[i], ts[j]}, cfg));
      rows[i * ts.size() + j] = {sig[i], ts[j], a, 1.0 - a};
    }
  });
  return rows;
}

inline constexpr std::string_view kFigureCsvHeader = "sigma,t,abs_g,margin";

/// Writes the CSV surface (header, then sigma-major rows, 17 significant
/// digits, LF endings). Returns the number of data rows.
inline std::size_t emit_figure_grid(const StripRect& rect, const GridSpec& grid, const EvalConfig& cfg,
                                    std::ostream& sink, unsigned workers = 1) {
  const std::vector<FigureRow> rows = figure_rows(rect, grid, cfg, workers);
  sink << kFigureCsvHeader << '\n';
  char buf[128];
  for (const FigureRow& r : rows) {
    std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,%.17g\n", r.sigma, r.t, r.abs_g, r.margin);
    sink << buf;
  }
  if (!sink) throw IoError("emit_figure_grid: write failed");
  return rows.size();
}

/// Writes `content` to `path` through a temporary sibling that is renamed
/// into place; on failure no file is left behind.
inline void write_file_atomically(const std::filesystem::path& path, const std::function<void(std::ostream&)>& writer) {
  std::filesystem::path tmp = path;
  tmp += ".partial";
  try {
    {
      std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
      if (!out) throw IoError("cannot open " + tmp.string() + " for writing");
      writer(out);
      out.flush();
      if (!out) throw IoError("write to " + tmp.string() + " failed");
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) throw IoError("cannot move output into place at " + path.string() + ": " + ec.message());
  } catch (...) {
    std::error_code ignored;
    std::filesystem::remove(tmp, ignored);
    throw;
  }
}

}  // namespace zetastrip
