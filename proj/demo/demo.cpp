// Small tour: zeta and |g| at a few points, the first zero, and a coarse
// chi scan of the region t >= 12.

#include <cstdio>

#include "zetastrip/zetastrip.hpp"

int main() {
  using namespace zetastrip;

  for (ComplexPoint s : {ComplexPoint{0.25, 12.0}, ComplexPoint{0.1, 30.0}, ComplexPoint{0.45, 6.0}}) {
    const Complex z = zeta(s);
    const Complex zr = zeta(s.reflect());
    std::printf("s = %.2f + %.2fi   |zeta(s)| = %.6f   |zeta(1-s)| = %.6f   |g(s)| = %.6f\n", s.sigma, s.t,
                std::abs(z), std::abs(zr), std::abs(chi(s)));
  }

  const double t1 = locate_zero(14.0);
  std::printf("first zero on the critical line: t = %.12f\n", t1);

  const ScanReport report = scan_chi_modulus({0.0, 0.5, 12.0, 20.0}, {0.05, 0.5, 0.01, 2});
  std::printf("chi scan on (0, 0.5) x [12, 20]: %zu samples, min 1-|g| = %.3e at %.3f + %.3fi, %zu violations\n",
              report.samples, report.min_margin, report.argmin.sigma, report.argmin.t, report.violation_count);
  return report.exit_code();
}
