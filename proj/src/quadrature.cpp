#include "elasto/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "elasto/errors.hpp"

namespace elasto {

namespace {

constexpr double kPi = std::numbers::pi;

void require_order(int n, const char* who) {
  if (n < 2) throw ConfigError(std::string(who) + " requires n >= 2");
}

}  // namespace

WeightRow log_weights(int n, double t) {
  require_order(n, "log_weights");
  WeightRow row{std::vector<double>(2 * std::size_t(n)), t};
  for (int j = 0; j < 2 * n; ++j) {
    const double d = t - kPi * j / n;
    double sum = 0.0;
    for (int m = n - 1; m >= 1; --m) sum += std::cos(m * d) / m;
    row.values[j] = -(2.0 * kPi / n) * sum - (kPi / (double(n) * n)) * std::cos(n * d);
  }
  return row;
}

WeightRow cauchy_weights(int n, double t) {
  require_order(n, "cauchy_weights");
  WeightRow row{std::vector<double>(2 * std::size_t(n)), t};
  for (int j = 0; j < 2 * n; ++j) {
    const double d = kPi * j / n - t;
    const double s = std::sin(d / 2.0);
    if (s == 0.0) {
      row.values[j] = 0.0;
      continue;
    }
    // 1 - cos(n d) = 2 sin^2(n d / 2)
    const double sn = std::sin(n * d / 2.0);
    row.values[j] = (sn * sn / n) * std::cos(d / 2.0) / s;
  }
  return row;
}

WeightRow sinlog_weights(int n, double t) {
  require_order(n, "sinlog_weights");
  WeightRow row{std::vector<double>(2 * std::size_t(n)), t};
  const double nn = n;
  for (int j = 0; j < 2 * n; ++j) {
    const double d = kPi * j / n - t;
    double sum = 0.0;
    for (int m = n - 1; m >= 2; --m) sum += std::sin(m * d) / (double(m) * m - 1.0);
    row.values[j] = -(kPi / (2.0 * nn)) * std::sin(d) + (2.0 * kPi / nn) * sum +
                    2.0 * kPi * std::sin(nn * d) / (nn * (nn * nn - 1.0));
  }
  return row;
}

std::complex<double> trapezoid(std::span<const std::complex<double>> samples) {
  if (samples.empty() || samples.size() % 2 != 0)
    throw ConfigError("trapezoid expects 2n samples");
  const double n = double(samples.size()) / 2.0;
  std::complex<double> sum = 0.0;
  for (const auto& v : samples) sum += v;
  return (kPi / n) * sum;
}

}  // namespace elasto
