#pragma once

#include <complex>

namespace elasto::specfun {

/// Bessel functions of the first kind, orders 0 and 1, real x >= 0.
/// Throws DomainError for x < 0, non-finite x, or an order other than 0/1.
double bessel_j(int order, double x);

/// Bessel functions of the second kind, orders 0 and 1, real x > 0.
double bessel_y(int order, double x);

/// H^(1)_order(x) = J_order(x) + i Y_order(x).
std::complex<double> hankel1(int order, double x);

/// All four of J0, J1, Y0, Y1 at one argument. The kernels need J1 and Y1
/// together and the potentials need J0 and Y0; evaluating jointly shares the
/// series / recurrence work.
struct BesselSet {
  double j0, j1, y0, y1;
};
BesselSet bessel_all(double x);

/// Regime boundaries of the implementation (exposed for the overlap tests).
inline constexpr double kSeriesLimit = 8.0;
inline constexpr double kAsymptoticLimit = 25.0;

/// Euler-Mascheroni constant, 20 significant digits.
inline constexpr long double kEulerGamma = 0.57721566490153286061L;

}  // namespace elasto::specfun
