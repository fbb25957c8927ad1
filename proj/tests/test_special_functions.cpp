#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "oracles.hpp"
#include "zetastrip/special_functions.hpp"

namespace zs = zetastrip;
using zs::Complex;
using zs::ComplexPoint;

namespace {

constexpr double kPi = std::numbers::pi;

// Frozen mpmath values (50 digits, rounded).
const Complex kZetaAt03_20i{0.268994415753992, -1.288423418048309};
const Complex kZetaPrimeAt03_20i{0.901540324277627, 1.245486646663861};
const Complex kZetaAtMinus55_3i{-0.0690232555877981, -0.0730518716362788};
const Complex kRatioAt03_12i{-0.5312374555972149, 0.4540855022268509};
constexpr double kFirstZero = 14.1347251417346937905;
constexpr double kZetaPrime2 = -0.93754825431584375370;

double rel_err(Complex a, Complex b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); }

}  // namespace

TEST(LnGamma, ClosedForms) {
  EXPECT_NEAR(zs::ln_gamma(0.5).real(), 0.5 * std::log(kPi), 1e-14);
  EXPECT_NEAR(zs::ln_gamma(5.0).real(), std::log(24.0), 1e-14);
  EXPECT_NEAR(zs::ln_gamma(1.0).real(), 0.0, 1e-15);
  EXPECT_NEAR(zs::ln_gamma(2.0).real(), 0.0, 1e-15);
  EXPECT_NEAR(zs::ln_gamma(0.25).real(), 1.28802252469807745737, 1e-13);
}

TEST(LnGamma, PrincipalBranchOnNegativeAxis) {
  const Complex v = zs::ln_gamma(-0.5);
  EXPECT_NEAR(v.real(), std::log(2.0 * std::sqrt(kPi)), 1e-13);
  EXPECT_NEAR(v.imag(), -kPi, 1e-13);
  const Complex w = zs::ln_gamma(-2.5);
  EXPECT_NEAR(w.real(), std::log(8.0 * std::sqrt(kPi) / 15.0), 1e-13);
  EXPECT_NEAR(w.imag(), -3.0 * kPi, 1e-12);
}

TEST(LnGamma, MatchesStirlingOracle) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> re(-6.0, 40.0);
  std::uniform_real_distribution<double> im(-100.0, 100.0);
  double worst = 0.0;
  for (int k = 0; k < 2000; ++k) {
    const Complex z{re(rng), im(rng)};
    if (std::abs(z.imag()) < 0.05 && z.real() < 0.5) continue;
    worst = std::max(worst, rel_err(zs::ln_gamma(z), oracle::ln_gamma(z)));
  }
  EXPECT_LT(worst, 1e-12);
}

TEST(LnGamma, RecurrenceAndConjugation) {
  std::mt19937_64 rng(12);
  std::uniform_real_distribution<double> re(-8.0, 20.0);
  std::uniform_real_distribution<double> im(0.1, 60.0);
  for (int k = 0; k < 500; ++k) {
    const Complex z{re(rng), im(rng)};
    const Complex lhs = zs::ln_gamma(z + 1.0);
    const Complex rhs = zs::ln_gamma(z) + std::log(z);
    EXPECT_LT(std::abs(lhs - rhs), 1e-11 * std::max(1.0, std::abs(lhs))) << z;
    const Complex c = zs::ln_gamma(std::conj(z));
    EXPECT_LT(std::abs(c - std::conj(zs::ln_gamma(z))), 1e-13 * std::max(1.0, std::abs(c)));
  }
}

TEST(LnGamma, PolesThrow) {
  EXPECT_THROW(zs::ln_gamma(0.0), zs::PoleError);
  EXPECT_THROW(zs::ln_gamma(-3.0), zs::PoleError);
  EXPECT_THROW(zs::ln_gamma(Complex(-2.0 + 5e-13, 0.0)), zs::PoleError);
  EXPECT_NO_THROW(zs::ln_gamma(Complex(-2.0 + 1e-6, 0.0)));
  EXPECT_THROW(zs::ln_gamma(Complex(std::nan(""), 0.0)), zs::DomainError);
}

TEST(GammaHalfRatio, ClosedForms) {
  EXPECT_LT(std::abs(zs::gamma_half_ratio(ComplexPoint{0.5, 0.0}) - 1.0), 1e-14);
  EXPECT_LT(std::abs(zs::gamma_half_ratio(ComplexPoint{2.0, 0.0}) + 1.0 / (2.0 * std::sqrt(kPi))), 1e-14);
  EXPECT_THROW(zs::gamma_half_ratio(ComplexPoint{0.0, 0.0}), zs::PoleError);
  EXPECT_THROW(zs::gamma_half_ratio(ComplexPoint{3.0, 0.0}), zs::PoleError);
}

TEST(GammaHalfRatio, ProductRouteAgrees) {
  const ComplexPoint s{0.3, 12.0};
  EXPECT_LT(std::abs(zs::gamma_half_ratio(s) - kRatioAt03_12i), 1e-12);
  zs::EvalConfig cfg;
  cfg.cross_check_gamma = true;
  EXPECT_LT(std::abs(zs::gamma_half_ratio(s, cfg) - kRatioAt03_12i), 1e-12);
  const zs::ProductEstimate est = zs::gamma_half_ratio_product_extrapolated(s, cfg.max_terms);
  EXPECT_LT(std::abs(est.value - kRatioAt03_12i), 1e-9);
  EXPECT_LT(std::abs(est.value - kRatioAt03_12i), 10.0 * est.error_estimate + 1e-12);
}

TEST(GammaHalfRatio, TruncatedProductConverges) {
  const ComplexPoint s{0.3, 12.0};
  double prev = INFINITY;
  for (std::size_t n : {100u, 400u, 1600u, 6400u}) {
    const double err = std::abs(zs::gamma_half_ratio_product(s, n) - kRatioAt03_12i);
    EXPECT_LT(err, prev);
    prev = err;
  }
}

TEST(GammaHalfRatio, DisagreementAtShortDepthThrows) {
  zs::EvalConfig cfg;
  cfg.cross_check_gamma = true;
  cfg.max_terms = 16;
  EXPECT_THROW(zs::gamma_half_ratio(ComplexPoint{0.3, 12.0}, cfg), zs::TruncationError);
}

TEST(Zeta, ClosedForms) {
  EXPECT_NEAR(zs::zeta(ComplexPoint{2.0, 0.0}).real(), kPi * kPi / 6.0, 1e-14);
  EXPECT_NEAR(zs::zeta(ComplexPoint{4.0, 0.0}).real(), std::pow(kPi, 4) / 90.0, 1e-14);
  EXPECT_NEAR(zs::zeta(ComplexPoint{0.0, 0.0}).real(), -0.5, 1e-15);
  EXPECT_NEAR(zs::zeta(ComplexPoint{-1.0, 0.0}).real(), -1.0 / 12.0, 1e-14);
  EXPECT_NEAR(zs::zeta(ComplexPoint{-3.0, 0.0}).real(), 1.0 / 120.0, 1e-14);
  EXPECT_EQ(std::abs(zs::zeta(ComplexPoint{-2.0, 0.0})), 0.0);
  EXPECT_EQ(std::abs(zs::zeta(ComplexPoint{-8.0, 0.0})), 0.0);
}

TEST(Zeta, PoleThrows) {
  EXPECT_THROW(zs::zeta(ComplexPoint{1.0, 0.0}), zs::PoleError);
  EXPECT_THROW(zs::zeta(ComplexPoint{1.0 + 1e-13, 0.0}), zs::PoleError);
  EXPECT_NO_THROW(zs::zeta(ComplexPoint{1.0 + 1e-6, 0.0}));
}

TEST(Zeta, MatchesEulerMaclaurinOnStrip) {
  std::mt19937_64 rng(21);
  std::uniform_real_distribution<double> sig(0.001, 2.0);
  std::uniform_real_distribution<double> tt(-100.0, 100.0);
  double worst = 0.0;
  for (int k = 0; k < 3000; ++k) {
    const ComplexPoint s{sig(rng), tt(rng)};
    if (std::abs(s.value() - 1.0) < 0.05) continue;
    worst = std::max(worst, std::abs(zs::zeta(s) - oracle::zeta(s.value())));
  }
  EXPECT_LT(worst, 1e-11);
}

TEST(Zeta, NearZerosOfEtaFactor) {
  // 1 - 2^{1-s} vanishes at s = 1 + 2 pi i k / ln 2.
  for (int k : {1, 2, -3}) {
    const double tk = 2.0 * kPi * k / std::numbers::ln2;
    for (double ds : {0.0, 0.03, -0.07}) {
      for (double dt : {0.0, 0.05}) {
        const Complex s{1.0 + ds, tk + dt};
        EXPECT_LT(std::abs(zs::zeta(s) - oracle::zeta(s)), 1e-11) << s;
      }
    }
  }
}

TEST(Zeta, LeftHalfPlaneByFunctionalEquation) {
  EXPECT_LT(std::abs(zs::zeta(ComplexPoint{-5.5, 3.0}) - kZetaAtMinus55_3i), 1e-13);
  std::mt19937_64 rng(22);
  std::uniform_real_distribution<double> sig(-1.0, 0.0);
  std::uniform_real_distribution<double> tt(1.0, 60.0);
  for (int k = 0; k < 300; ++k) {
    const ComplexPoint s{sig(rng), tt(rng)};
    EXPECT_LT(rel_err(zs::zeta(s), oracle::zeta(s.value())), 1e-10) << s.value();
  }
}

TEST(Zeta, SpotValuesAndSymmetry) {
  EXPECT_LT(std::abs(zs::zeta(ComplexPoint{0.3, 20.0}) - kZetaAt03_20i), 1e-13);
  EXPECT_LT(std::abs(zs::zeta(ComplexPoint{0.5, kFirstZero})), 1e-8);
  const ComplexPoint s{0.2, 33.0};
  EXPECT_LT(std::abs(zs::zeta(s.conj()) - std::conj(zs::zeta(s))), 1e-15);
}

TEST(Zeta, ShortSeriesCapThrows) {
  zs::EvalConfig cfg;
  cfg.max_terms = 10;
  EXPECT_THROW(zs::zeta(ComplexPoint{0.3, 50.0}, cfg), zs::TruncationError);
  EXPECT_THROW(zs::zeta(ComplexPoint{0.3, 1000.0}), zs::TruncationError);
}

TEST(ZetaDeriv, ClosedFormAndOracle) {
  EXPECT_NEAR(zs::zeta_deriv(ComplexPoint{2.0, 0.0}).real(), kZetaPrime2, 1e-13);
  EXPECT_LT(std::abs(zs::zeta_deriv(ComplexPoint{0.3, 20.0}) - kZetaPrimeAt03_20i), 1e-12);
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> sig(0.01, 2.0);
  std::uniform_real_distribution<double> tt(-100.0, 100.0);
  double worst = 0.0;
  for (int k = 0; k < 2000; ++k) {
    const ComplexPoint s{sig(rng), tt(rng)};
    if (std::abs(s.value() - 1.0) < 0.05) continue;
    worst = std::max(worst, rel_err(zs::zeta_deriv(s), oracle::zeta_deriv(s.value())));
  }
  EXPECT_LT(worst, 1e-10);
}

TEST(ZetaDeriv, CentralDifference) {
  const double h = 1e-4;
  for (ComplexPoint s : {ComplexPoint{0.3, 20.0}, ComplexPoint{0.1, 7.0}, ComplexPoint{1.5, -40.0}}) {
    const Complex fd = (zs::zeta(ComplexPoint{s.sigma + h, s.t}) - zs::zeta(ComplexPoint{s.sigma - h, s.t})) / (2.0 * h);
    EXPECT_LT(std::abs(zs::zeta_deriv(s) - fd), 1e-6);
  }
}

TEST(ZetaDeriv, SymmetryAndDomain) {
  const ComplexPoint s{0.3, 20.0};
  EXPECT_LT(std::abs(zs::zeta_deriv(s.conj()) - std::conj(zs::zeta_deriv(s))), 1e-15);
  EXPECT_THROW(zs::zeta_deriv(ComplexPoint{1.0, 0.0}), zs::PoleError);
  EXPECT_THROW(zs::zeta_deriv(ComplexPoint{-0.5, 3.0}), zs::DomainError);
  EXPECT_THROW(zs::zeta_deriv(ComplexPoint{0.0, 3.0}), zs::DomainError);
  const auto [z, zp] = zs::zeta_and_derivative(s);
  EXPECT_LT(std::abs(z - zs::zeta(s)), 1e-13);
  EXPECT_EQ(zp, zs::zeta_deriv(s));
}

TEST(Products, Wallis) {
  EXPECT_NEAR(zs::wallis_partial(1), 4.0 / 3.0, 1e-15);
  EXPECT_NEAR(zs::wallis_partial(2), 64.0 / 45.0, 1e-15);
  double prev = 0.0;
  for (std::size_t n = 1; n <= 200; ++n) {
    const double v = zs::wallis_partial(n);
    EXPECT_GT(v, prev);
    EXPECT_LT(v, kPi / 2.0);
    prev = v;
  }
  EXPECT_NEAR(zs::wallis_partial(1000000), kPi / 2.0, 1e-6);
}

TEST(Products, Telescoping) {
  EXPECT_DOUBLE_EQ(zs::telescoping_partial(1), 1.5);
  EXPECT_DOUBLE_EQ(zs::telescoping_partial(3), 1.75);
  for (std::size_t n : {1u, 2u, 7u, 50u, 999u, 123456u}) {
    const double closed = (2.0 * n + 1.0) / (n + 1.0);
    EXPECT_NEAR(zs::telescoping_partial(n), closed, 1e-14 * closed);
    EXPECT_DOUBLE_EQ(zs::telescoping_closed_form(n), closed);
    EXPECT_LT(zs::telescoping_partial(n), 2.0);
  }
  EXPECT_NEAR(zs::telescoping_partial(1000000), 2.0, 2e-6);
}

TEST(Products, ZeroDepthRejected) {
  EXPECT_THROW(zs::wallis_partial(0), zs::DomainError);
  EXPECT_THROW(zs::telescoping_partial(0), zs::DomainError);
}

TEST(EvalConfig, Validation) {
  zs::EvalConfig cfg;
  EXPECT_NO_THROW(cfg.validate());
  cfg.target_abs_error = 0.0;
  EXPECT_THROW(cfg.validate(), zs::DomainError);
  cfg = {};
  cfg.max_terms = 0;
  EXPECT_THROW(cfg.validate(), zs::DomainError);
}
