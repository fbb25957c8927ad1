#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "oracles.hpp"
#include "zetastrip/chi_factor.hpp"

namespace zs = zetastrip;
using zs::Complex;
using zs::ComplexPoint;

namespace {

constexpr double kPi = std::numbers::pi;
const Complex kChiAt025_12i{0.257717213798691, 0.810716780262057};
constexpr double kFirstZero = 14.1347251417346937905;

}  // namespace

TEST(Chi, ClosedForms) {
  EXPECT_LT(std::abs(zs::chi(ComplexPoint{0.5, 0.0}) - 1.0), 1e-15);
  const Complex g2 = zs::chi(ComplexPoint{2.0, 0.0});
  EXPECT_NEAR(g2.real(), -1.0 / (2.0 * kPi * kPi), 1e-15);
  EXPECT_NEAR(g2.imag(), 0.0, 1e-15);
  EXPECT_NEAR((g2 * (kPi * kPi / 6.0)).real(), -1.0 / 12.0, 1e-15);
  EXPECT_LT(std::abs(zs::chi(ComplexPoint{0.25, 12.0}) - kChiAt025_12i), 1e-13);
  EXPECT_LT(std::abs(zs::chi(ComplexPoint{0.25, 12.0})), 1.0);
}

TEST(Chi, MatchesStirlingOracle) {
  std::mt19937_64 rng(41);
  std::uniform_real_distribution<double> sig(-1.0, 2.0);
  std::uniform_real_distribution<double> tt(0.5, 100.0);
  for (int k = 0; k < 1000; ++k) {
    const ComplexPoint s{sig(rng), (k % 2 ? 1.0 : -1.0) * tt(rng)};
    const Complex ref = oracle::chi(s.value());
    EXPECT_LT(std::abs(zs::chi(s) - ref), 1e-11 * std::max(1.0, std::abs(ref))) << s.value();
  }
}

TEST(Chi, CrossCheckedRouteAgrees) {
  zs::EvalConfig cfg;
  cfg.cross_check_gamma = true;
  for (ComplexPoint s : {ComplexPoint{0.25, 12.0}, ComplexPoint{0.1, 30.0}, ComplexPoint{0.45, 7.0}}) {
    EXPECT_LT(std::abs(zs::chi(s, cfg) - zs::chi(s)), 1e-11);
  }
}

TEST(Chi, PairingAndCriticalLine) {
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> sig(0.0, 1.0);
  std::uniform_real_distribution<double> tt(-80.0, 80.0);
  for (int k = 0; k < 500; ++k) {
    const ComplexPoint s{sig(rng), tt(rng)};
    if (std::abs(s.t) < 0.5) continue;
    EXPECT_LT(std::abs(zs::chi(s) * zs::chi(s.reflect()) - 1.0), 1e-11);
    EXPECT_LT(std::abs(std::abs(zs::chi(ComplexPoint{0.5, s.t})) - 1.0), 1e-12);
    EXPECT_LT(std::abs(zs::chi(s.conj()) - std::conj(zs::chi(s))), 1e-14);
  }
}

TEST(Chi, Poles) {
  EXPECT_THROW(zs::chi(ComplexPoint{0.0, 0.0}), zs::PoleError);
  EXPECT_THROW(zs::chi(ComplexPoint{3.0, 0.0}), zs::PoleError);
  EXPECT_THROW(zs::chi(ComplexPoint{-4.0, 0.0}), zs::PoleError);
  EXPECT_NO_THROW(zs::chi(ComplexPoint{-1.0, 0.0}));
}

TEST(Factors, FAbs) {
  EXPECT_DOUBLE_EQ(zs::f_abs(0.5), 1.0);
  EXPECT_DOUBLE_EQ(zs::f_abs(0.0), 2.0);
  EXPECT_NEAR(zs::f_abs(0.25), std::sqrt(2.0), 1e-15);
}

TEST(Factors, H1) {
  EXPECT_NEAR(zs::h1_abs(ComplexPoint{0.5, 3.0}), 1.0, 1e-15);
  EXPECT_NEAR(zs::h1_abs(ComplexPoint{0.25, 1.0}), std::sqrt(1.5625 / 1.0625), 1e-15);
  EXPECT_THROW(zs::h1_abs(ComplexPoint{0.0, 0.0}), zs::DomainError);
}

TEST(Factors, H2TermExamples) {
  EXPECT_NEAR(zs::h2_term(1, 0.25, 0.0), std::sqrt(2.0 / 3.0) * (2.75 / 2.25), 1e-15);
  EXPECT_NEAR(zs::h2_term(1, 0.25, 0.0), 0.99794027, 1e-8);
  EXPECT_LT(zs::h2_term(1, 0.25, 0.0), 1.0);
  for (double n : {1.0, 2.0, 17.0, 0.3}) {
    for (double t : {0.0, 5.0, -40.0}) EXPECT_NEAR(zs::h2_term(n, 0.5, t), 1.0, 1e-15);
  }
  EXPECT_LT(zs::h2_term(1, 0.25, 12.0), zs::h2_term(1, 0.25, 0.0));
  EXPECT_THROW(zs::h2_term(0.0, 0.25, 1.0), zs::DomainError);
  EXPECT_THROW(zs::h2_term(-1.0, 0.25, 1.0), zs::DomainError);
  EXPECT_THROW(zs::h2_term(1.0, std::nan(""), 1.0), zs::DomainError);
}

TEST(Factors, H2TermBelowOneOnLeftHalfStrip) {
  std::mt19937_64 rng(43);
  std::uniform_real_distribution<double> sig(1e-9, 0.5 - 1e-9);
  std::uniform_real_distribution<double> tt(0.0, 100.0);
  for (int k = 0; k < 5000; ++k) {
    EXPECT_LT(zs::h2_term(1 + k % 100, sig(rng), tt(rng)), 1.0);
  }
}

TEST(Factors, HPartial) {
  // At sigma = 1/2 every factor has modulus one.
  EXPECT_NEAR(zs::h_partial(3, ComplexPoint{0.5, 12.0}), 1.0, 1e-15);
  const ComplexPoint s{0.25, 12.0};
  EXPECT_LT(zs::h_partial(2, s), zs::h_partial(1, s));
  EXPECT_THROW(zs::h_partial(0, s), zs::DomainError);
  const zs::ChiDecomposition d = zs::decompose(s, 3);
  EXPECT_NEAR(d.h1_abs * d.h2_partial, zs::h_partial(3, s), 1e-15);
  EXPECT_NEAR(d.bound(), zs::f_abs(0.25) * zs::h_partial(3, s), 1e-15);
  EXPECT_EQ(d.n_terms, 3u);
}

TEST(Factors, ProductBoundsChiAndConverges) {
  const ComplexPoint s{0.25, 12.0};
  const double gap3 = zs::chi_vs_product_residual(s, 3);
  const double gap100 = zs::chi_vs_product_residual(s, 100);
  EXPECT_GE(gap3, 0.0);
  EXPECT_GE(gap100, 0.0);
  EXPECT_LT(gap100, gap3);
  EXPECT_LT(std::abs(zs::chi_vs_product_residual(s, 100000)), 1e-8);
  const ComplexPoint half{0.5, 20.0};
  EXPECT_NEAR(std::abs(zs::chi(half)), 1.0, 1e-13);
  EXPECT_GE(zs::decompose(half, 10).bound(), 1.0 - 1e-15);
}

TEST(Residual, FunctionalEquation) {
  EXPECT_LT(zs::chi_identity_residual(ComplexPoint{2.0, 0.0}), 1e-12);
  EXPECT_LT(zs::chi_identity_residual(ComplexPoint{0.3, 20.0}), 1e-9);
  EXPECT_LT(zs::chi_identity_residual(ComplexPoint{0.5, 14.1347251}), 1e-6);
  // At the zero itself the relative residual is meaningless; the absolute one is not.
  const ComplexPoint z0{0.5, kFirstZero};
  EXPECT_LT(std::abs(zs::zeta(z0.reflect()) - zs::chi(z0) * zs::zeta(z0)), 1e-13);
  EXPECT_THROW(zs::chi_identity_residual(ComplexPoint{1.0, 0.0}), zs::PoleError);
  EXPECT_THROW(zs::chi_identity_residual(ComplexPoint{0.0, 0.0}), zs::PoleError);
}
