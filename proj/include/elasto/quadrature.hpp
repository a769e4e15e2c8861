#pragma once

#include <complex>
#include <span>
#include <vector>

namespace elasto {

/// Weights against the 2n equidistant nodes pi j / n for one target t.
struct WeightRow {
  std::vector<double> values;
  double target = 0.0;
};

/// R_j(t): integral of ln(4 sin^2((t-s)/2)) f(s) over a period,
///   R_j(t) = -(2pi/n) sum_{m=1}^{n-1} cos(m(t - s_j))/m - (pi/n^2) cos(n(t - s_j)).
WeightRow log_weights(int n, double t);

/// U_j(t): (1/2pi) PV integral of cot((s-t)/2) f(s),
///   U_j(t) = (1/2n) [1 - cos(n(s_j - t))] cot((s_j - t)/2),  zero at s_j = t.
WeightRow cauchy_weights(int n, double t);

/// V_j(t): integral of ln(4 sin^2((t-s)/2)) sin(t-s) f(s),
///   V_j(t) = -(pi/2n) sin(s_j - t) + (2pi/n) sum_{m=2}^{n-1} sin(m(s_j - t))/(m^2 - 1)
///            + 2pi sin(n(s_j - t)) / (n(n^2 - 1)).
WeightRow sinlog_weights(int n, double t);

/// (pi/n) sum of 2n equidistant samples.
std::complex<double> trapezoid(std::span<const std::complex<double>> samples);

}  // namespace elasto
