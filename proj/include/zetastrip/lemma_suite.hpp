#pragma once

// Randomized property suite over the lemma inequalities. Samples are drawn
// in fixed-size chunks, each from its own stream seeded by (seed, case,
// chunk), so the sample set depends only on the seed and never on how the
// chunks are spread over workers.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <random>
#include <string>
#include <vector>

#include "zetastrip/lemma_inequalities.hpp"
#include "zetastrip/parallel.hpp"

namespace zetastrip {

inline constexpr std::uint64_t kDefaultSeed = 20130710ULL;

/// Within this distance of an equality manifold the strict check is relaxed.
inline constexpr double kEqualityBand = 1e-6;
/// Inside the band a sample only fails below this margin.
inline constexpr double kBandTolerance = 1e-12;
/// Margins within this fraction of the compared magnitudes are below what
/// binary64 resolves and are tallied as unresolved rather than strict.
inline constexpr double kStrictRelative = 1e-14;

using LemmaParams = std::array<double, 3>;

struct InequalityTally {
  std::string name;
  std::vector<std::string> param_names;
  std::size_t samples = 0;
  std::size_t strict = 0;
  std::size_t unresolved = 0;
  std::size_t equality_band = 0;
  std::size_t violations = 0;
  std::size_t out_of_domain = 0;
  double worst_margin = std::numeric_limits<double>::infinity();
  LemmaParams worst_at{};

  bool passed() const { return violations == 0 && out_of_domain == 0; }
};

struct EqualityCheck {
  std::string name;
  std::size_t samples = 0;
  double max_abs_margin = 0.0;
  bool passed = true;
};

struct FixedVector {
  std::string name;
  std::vector<std::string> param_names;
  LemmaParams params{};
  MarginResult result;
  bool passed = true;
};

struct AuxiliaryCheck {
  std::string name;
  std::size_t samples = 0;
  std::size_t failures = 0;
  double worst = 0.0;  ///< largest deviation or smallest slack, per check
  bool passed() const { return failures == 0; }
};

struct LemmaSuiteReport {
  std::uint64_t seed = kDefaultSeed;
  std::size_t samples_per_inequality = 0;
  std::vector<InequalityTally> inequalities;
  std::vector<EqualityCheck> equality_checks;
  std::vector<FixedVector> fixed_vectors;
  std::vector<AuxiliaryCheck> auxiliary;

  bool passed() const {
    return std::all_of(inequalities.begin(), inequalities.end(), [](const auto& x) { return x.passed(); }) &&
           std::all_of(equality_checks.begin(), equality_checks.end(), [](const auto& x) { return x.passed; }) &&
           std::all_of(fixed_vectors.begin(), fixed_vectors.end(), [](const auto& x) { return x.passed; }) &&
           std::all_of(auxiliary.begin(), auxiliary.end(), [](const auto& x) { return x.passed(); });
  }
};

struct LemmaSuiteOptions {
  std::size_t samples = 100000;
  std::uint64_t seed = kDefaultSeed;
  unsigned workers = 1;
  std::size_t equality_samples = 1000;
  std::size_t auxiliary_samples = 1000;
};

namespace detail {

using Rng = std::mt19937_64;

inline double uniform(Rng& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}
inline double log_uniform(Rng& rng, double lo, double hi) {
  return std::exp(uniform(rng, std::log(lo), std::log(hi)));
}
inline double exponential(Rng& rng, double mean) {
  return std::exponential_distribution<double>(1.0 / mean)(rng);
}
/// x > 0 across six decades.
inline double draw_positive_x(Rng& rng) { return log_uniform(rng, 1e-3, 1e3); }
/// x < -1, with the distance to -1 across six decades.
inline double draw_below_minus_one(Rng& rng) { return -1.0 - log_uniform(rng, 1e-3, 1e3); }
inline double draw_two_branch_x(Rng& rng) {
  return std::bernoulli_distribution(0.5)(rng) ? draw_positive_x(rng) : draw_below_minus_one(rng);
}
inline double draw_exponent(Rng& rng) { return 1.0 + exponential(rng, 4.0); }
/// sigma in the open interval (0, 1/2).
inline double draw_sigma(Rng& rng) {
  return uniform(rng, std::nextafter(0.0, 1.0), 0.5);
}

inline bool near(double a, double b) { return std::abs(a - b) < kEqualityBand; }

struct LemmaCase {
  std::string name;
  std::vector<std::string> param_names;
  std::function<LemmaParams(Rng&)> draw;
  std::function<MarginResult(const LemmaParams&)> eval;
  std::function<bool(const LemmaParams&)> in_band;
};

inline std::vector<LemmaCase> lemma_cases() {
  std::vector<LemmaCase> cases;
  auto no_band = [](const LemmaParams&) { return false; };
  for (LogBound variant : kAllLogBounds) {
    const bool two_branch = variant == LogBound::eq3_lo || variant == LogBound::eq3_hi;
    const bool unit_interval = variant == LogBound::eq6_lo || variant == LogBound::eq6_hi;
    const bool small_x_contact = variant == LogBound::eq5_lo || variant == LogBound::eq5_hi || unit_interval;
    LemmaCase c;
    c.name = "log_bound." + std::string(name(variant));
    c.param_names = {"x"};
    c.draw = [two_branch, unit_interval](Rng& rng) -> LemmaParams {
      if (two_branch) return {draw_two_branch_x(rng), 0, 0};
      if (unit_interval) return {-uniform(rng, std::nextafter(0.0, 1.0), 1.0), 0, 0};
      return {draw_positive_x(rng), 0, 0};
    };
    c.eval = [variant](const LemmaParams& p) { return log_bound(variant, p[0]); };
    if (small_x_contact) {
      c.in_band = [](const LemmaParams& p) { return near(p[0], 0.0); };
    } else {
      c.in_band = no_band;
    }
    cases.push_back(std::move(c));
  }

  cases.push_back({"power_ineq_7", {"exponent_t", "x"},
                   [](Rng& rng) -> LemmaParams { return {draw_exponent(rng), draw_two_branch_x(rng), 0}; },
                   [](const LemmaParams& p) { return power_ineq_7(p[0], p[1]); },
                   [](const LemmaParams& p) { return near(p[0], 1.0) || near(p[1], -1.0); }});
  cases.push_back({"power_ineq_8", {"exponent_t", "x"},
                   [](Rng& rng) -> LemmaParams { return {draw_exponent(rng), uniform(rng, 0.0, 2.0), 0}; },
                   [](const LemmaParams& p) { return power_ineq_8(p[0], p[1]); },
                   [](const LemmaParams& p) { return near(p[0], 1.0) || near(p[1], 0.0); }});

  auto a_band = [](const LemmaParams& p) { return near(p[0], 0.0) || near(p[0], 1.0); };
  cases.push_back({"power_ineq_a.eq9", {"a", "x"},
                   [](Rng& rng) -> LemmaParams { return {uniform(rng, 0.0, 1.0), draw_two_branch_x(rng), 0}; },
                   [](const LemmaParams& p) { return power_ineq_a(PowerBound::eq9, p[0], p[1]); },
                   [a_band](const LemmaParams& p) { return a_band(p) || near(p[1], -1.0); }});
  cases.push_back({"power_ineq_a.eq10", {"a", "x"},
                   [](Rng& rng) -> LemmaParams { return {uniform(rng, 0.0, 1.0), draw_positive_x(rng), 0}; },
                   [](const LemmaParams& p) { return power_ineq_a(PowerBound::eq10, p[0], p[1]); },
                   a_band});
  cases.push_back({"power_ineq_a.eq11", {"a", "x"},
                   [](Rng& rng) -> LemmaParams { return {uniform(rng, 0.0, 1.0), draw_below_minus_one(rng), 0}; },
                   [](const LemmaParams& p) { return power_ineq_a(PowerBound::eq11, p[0], p[1]); },
                   a_band});

  auto half_band = [](const LemmaParams& p) { return near(p[0], 0.5); };
  cases.push_back({"lemma2_rect", {"x", "sigma", "t"},
                   [](Rng& rng) -> LemmaParams {
                     return {kLemma2MinX + exponential(rng, 5.0), draw_sigma(rng), uniform(rng, -50.0, 50.0)};
                   },
                   [](const LemmaParams& p) { return lemma2_rect(p[0], p[1], p[2]); },
                   [](const LemmaParams& p) { return near(p[1], 0.5); }});
  cases.push_back({"lemma2_h1", {"sigma", "t"},
                   [](Rng& rng) -> LemmaParams { return {draw_sigma(rng), 0.5 + exponential(rng, 10.0), 0}; },
                   [](const LemmaParams& p) { return lemma2_h1(p[0], p[1]); },
                   half_band});
  cases.push_back({"lemma2_product", {"sigma", "t"},
                   [](Rng& rng) -> LemmaParams { return {draw_sigma(rng), 12.0 + exponential(rng, 20.0), 0}; },
                   [](const LemmaParams& p) { return lemma2_product(p[0], p[1]); },
                   half_band});
  cases.push_back({"lemma2_reduced", {"sigma", "t"},
                   [](Rng& rng) -> LemmaParams { return {draw_sigma(rng), 12.0 + exponential(rng, 20.0), 0}; },
                   [](const LemmaParams& p) { return lemma2_reduced(p[0], p[1]); },
                   no_band});
  return cases;
}

inline constexpr std::size_t kChunkSize = 4096;

inline Rng stream(std::uint64_t seed, std::uint64_t case_index, std::uint64_t chunk) {
  return Rng(mix64(seed ^ mix64((case_index << 32) ^ chunk)));
}

/// Tallies one sample into `tally`.
inline void classify(InequalityTally& tally, const LemmaParams& p, const MarginResult& r, bool in_band) {
  ++tally.samples;
  if (!r.domain_ok || std::isnan(r.margin)) {
    ++tally.out_of_domain;
    return;
  }
  if (in_band) {
    if (r.margin < -kBandTolerance) {
      ++tally.violations;
    } else {
      ++tally.equality_band;
    }
    return;
  }
  const double resolution = kStrictRelative * std::max(std::abs(r.lhs), std::abs(r.rhs));
  if (r.margin < -resolution) {
    ++tally.violations;
  } else if (r.margin > resolution) {
    ++tally.strict;
  } else {
    ++tally.unresolved;
  }
  if (r.margin < tally.worst_margin) {
    tally.worst_margin = r.margin;
    tally.worst_at = p;
  }
}

inline void merge_into(InequalityTally& into, const InequalityTally& part) {
  into.samples += part.samples;
  into.strict += part.strict;
  into.unresolved += part.unresolved;
  into.equality_band += part.equality_band;
  into.violations += part.violations;
  into.out_of_domain += part.out_of_domain;
  if (part.worst_margin < into.worst_margin) {
    into.worst_margin = part.worst_margin;
    into.worst_at = part.worst_at;
  }
}

inline std::vector<EqualityCheck> run_equality_checks(std::uint64_t seed, std::size_t n) {
  struct Spec {
    std::string name;
    std::function<MarginResult(Rng&)> eval;
  };
  const std::vector<Spec> specs = {
      {"power_ineq_7@t=1", [](Rng& r) { return power_ineq_7(1.0, draw_two_branch_x(r)); }},
      {"power_ineq_7@x=-1", [](Rng& r) { return power_ineq_7(draw_exponent(r), -1.0); }},
      {"power_ineq_8@x=0", [](Rng& r) { return power_ineq_8(draw_exponent(r), 0.0); }},
      {"power_ineq_8@t=1", [](Rng& r) { return power_ineq_8(1.0, uniform(r, 0.0, 2.0)); }},
      {"power_ineq_a.eq9@a=0", [](Rng& r) { return power_ineq_a(PowerBound::eq9, 0.0, draw_two_branch_x(r)); }},
      {"power_ineq_a.eq9@a=1", [](Rng& r) { return power_ineq_a(PowerBound::eq9, 1.0, draw_two_branch_x(r)); }},
      {"power_ineq_a.eq9@x=-1", [](Rng& r) { return power_ineq_a(PowerBound::eq9, uniform(r, 0.0, 1.0), -1.0); }},
      {"power_ineq_a.eq10@a=0", [](Rng& r) { return power_ineq_a(PowerBound::eq10, 0.0, draw_positive_x(r)); }},
      {"power_ineq_a.eq10@a=1", [](Rng& r) { return power_ineq_a(PowerBound::eq10, 1.0, draw_positive_x(r)); }},
      {"power_ineq_a.eq11@a=0", [](Rng& r) { return power_ineq_a(PowerBound::eq11, 0.0, draw_below_minus_one(r)); }},
      {"power_ineq_a.eq11@a=1", [](Rng& r) { return power_ineq_a(PowerBound::eq11, 1.0, draw_below_minus_one(r)); }},
  };
  std::vector<EqualityCheck> out;
  for (std::size_t k = 0; k < specs.size(); ++k) {
    Rng rng = stream(seed ^ 0xE0E0E0E0ULL, k, 0);
    EqualityCheck check{specs[k].name, n, 0.0, true};
    for (std::size_t i = 0; i < n; ++i) {
      const MarginResult r = specs[k].eval(rng);
      if (!r.domain_ok || r.strict_expected) {
        check.passed = false;
        continue;
      }
      check.max_abs_margin = std::max(check.max_abs_margin, std::abs(r.margin));
    }
    check.passed = check.passed && check.max_abs_margin <= kBandTolerance;
    out.push_back(std::move(check));
  }
  return out;
}

inline std::vector<FixedVector> run_fixed_vectors() {
  std::vector<FixedVector> out;
  auto add = [&](std::string name, std::vector<std::string> names, LemmaParams p, MarginResult r) {
    const bool ok = r.domain_ok && r.margin > 0.0;
    out.push_back({std::move(name), std::move(names), p, r, ok});
  };
  // Extremal point of the reduced bound: the left side must stay below 1/4.
  add("lemma2_reduced@sigma=1/2,t=12", {"sigma", "t"}, {0.5, 12.0, 0}, lemma2_reduced(0.5, 12.0));
  add("lemma2_product@sigma=0.49,t=12", {"sigma", "t"}, {0.49, 12.0, 0}, lemma2_product(0.49, 12.0));
  add("lemma2_h1@sigma=0.01,t=1/2", {"sigma", "t"}, {0.01, 0.5, 0}, lemma2_h1(0.01, 0.5));
  add("lemma2_rect@x=x_min,sigma=0.1,t=5", {"x", "sigma", "t"}, {kLemma2MinX, 0.1, 5.0},
      lemma2_rect(kLemma2MinX, 0.1, 5.0));
  return out;
}

inline std::vector<AuxiliaryCheck> run_auxiliary_checks(std::uint64_t seed, std::size_t n) {
  std::vector<AuxiliaryCheck> out;

  // The argument handed to power_ineq_8 stays in (0, 2] for x >= x_min,
  // real t and y >= 1 (sigma in [0, 1/2)).
  {
    Rng rng = stream(seed ^ 0xA0A0A0A0ULL, 0, 0);
    AuxiliaryCheck c{"aux_factor_in_(0,2]", n, 0, 2.0};
    for (std::size_t i = 0; i < n; ++i) {
      const double x = kLemma2MinX + exponential(rng, 2.0);
      const double sigma = uniform(rng, 0.0, 0.5);
      const double t = uniform(rng, -20.0, 20.0);
      const double f = lemma2_aux_factor(x, sigma, t);
      if (!(f > 0.0 && f <= 2.0)) ++c.failures;
      c.worst = std::min(c.worst, 2.0 - f);
    }
    out.push_back(c);
  }
  // Raising the rectangle bound to the power y = 1/(1 - 2 sigma) reproduces
  // the substituted arrangement on both sides.
  {
    Rng rng = stream(seed ^ 0xA0A0A0A0ULL, 1, 0);
    AuxiliaryCheck c{"substitution_consistency", n, 0, 0.0};
    for (std::size_t i = 0; i < n; ++i) {
      const double x = kLemma2MinX + exponential(rng, 5.0);
      const double sigma = uniform(rng, 1e-3, 0.45);
      const double t = uniform(rng, -50.0, 50.0);
      const double y = 1.0 / (1.0 - 2.0 * sigma);
      const MarginResult direct = lemma2_rect(x, sigma, t);
      const MarginResult sub = lemma2_rect_substituted(x, sigma, t);
      const double dl = std::abs(std::pow(direct.lhs, y) - sub.lhs) / std::max(1.0, std::abs(sub.lhs));
      const double dr = std::abs(std::pow(direct.rhs, y) - sub.rhs) / std::max(1.0, std::abs(sub.rhs));
      const double dev = std::max(dl, dr);
      if (!(dev <= 1e-12)) ++c.failures;
      c.worst = std::max(c.worst, dev);
    }
    out.push_back(c);
  }
  // The closing bound factors into the h1 bound times three rectangle bounds.
  {
    Rng rng = stream(seed ^ 0xA0A0A0A0ULL, 2, 0);
    AuxiliaryCheck c{"chain_h1_times_rect", n, 0, std::numeric_limits<double>::infinity()};
    for (std::size_t i = 0; i < n; ++i) {
      const double sigma = draw_sigma(rng);
      const double t = 12.0 + exponential(rng, 20.0);
      const MarginResult whole = lemma2_product(sigma, t);
      const MarginResult h1 = lemma2_h1(sigma, t);
      double lhs = h1.lhs;
      double rhs = h1.rhs;
      for (int k = 1; k <= 3; ++k) {
        const MarginResult rect = lemma2_rect(k, sigma, t);
        lhs *= rect.lhs;
        rhs *= rect.rhs;
      }
      const bool same_lhs = std::abs(lhs - whole.lhs) <= 1e-12 * whole.lhs;
      const bool composed = lhs <= rhs;
      const bool closes = rhs <= whole.rhs * (1.0 + 1e-14);
      if (!(same_lhs && composed && closes)) ++c.failures;
      c.worst = std::min(c.worst, whole.rhs - rhs);
    }
    out.push_back(c);
  }
  return out;
}

}  // namespace detail

inline LemmaSuiteReport run_lemma_suite(const LemmaSuiteOptions& opt = {}) {
  const std::vector<detail::LemmaCase> cases = detail::lemma_cases();
  const std::size_t chunks = (opt.samples + detail::kChunkSize - 1) / detail::kChunkSize;
  std::vector<InequalityTally> parts(cases.size() * chunks);

  detail::parallel_for(parts.size(), opt.workers, [&](std::size_t task) {
    const std::size_t k = task / chunks;
    const std::size_t chunk = task % chunks;
    const std::size_t begin = chunk * detail::kChunkSize;
    const std::size_t end = std::min(opt.samples, begin + detail::kChunkSize);
    detail::Rng rng = detail::stream(opt.seed, k, chunk);
    InequalityTally& tally = parts[task];
    for (std::size_t i = begin; i < end; ++i) {
      const LemmaParams p = cases[k].draw(rng);
      detail::classify(tally, p, cases[k].eval(p), cases[k].in_band(p));
    }
  });

  LemmaSuiteReport report;
  report.seed = opt.seed;
  report.samples_per_inequality = opt.samples;
  for (std::size_t k = 0; k < cases.size(); ++k) {
    InequalityTally total;
    total.name = cases[k].name;
    total.param_names = cases[k].param_names;
    for (std::size_t c = 0; c < chunks; ++c) detail::merge_into(total, parts[k * chunks + c]);
    report.inequalities.push_back(std::move(total));
  }
  report.equality_checks = detail::run_equality_checks(opt.seed, opt.equality_samples);
  report.fixed_vectors = detail::run_fixed_vectors();
  report.auxiliary = detail::run_auxiliary_checks(opt.seed, opt.auxiliary_samples);
  return report;
}

}  // namespace zetastrip
