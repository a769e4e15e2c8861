#include "elasto/specfun.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "elasto/errors.hpp"

namespace elasto::specfun {

namespace {

using Real = long double;

constexpr Real kPi = std::numbers::pi_v<long double>;

// Ascending series about x = 0. The Y series carry the explicit logarithm:
//   Y0 = (2/pi) [ (ln(x/2) + gamma) J0 - sum_k H_k t_k ]
//   Y1 = -2/(pi x) + (2/pi)(ln(x/2) + gamma) J1 - (1/pi) sum_k (H_k + H_{k+1}) u_k
// with t_k, u_k the J0 and J1 series terms and H_k the harmonic numbers.
BesselSet series(double xd) {
  const Real x = xd;
  const Real q = x * x / 4;
  Real t = 1, u = x / 2;
  Real j0 = t, j1 = u;
  Real s0 = 0, s1 = u;  // H_0 + H_1 = 1 for the k = 0 term of the Y1 sum
  Real harmonic = 0;    // H_k
  for (int k = 1; k < 200; ++k) {
    t *= -q / (Real(k) * k);
    u *= -q / (Real(k) * (k + 1));
    harmonic += Real(1) / k;
    const Real next_harmonic = harmonic + Real(1) / (k + 1);
    j0 += t;
    j1 += u;
    s0 += harmonic * t;
    s1 += (harmonic + next_harmonic) * u;
    if (k > q && std::fabs(t) < 1e-24L && std::fabs(u) < 1e-24L) break;
  }
  const Real log_term = std::log(x / 2) + kEulerGamma;
  const Real y0 = (2 / kPi) * (log_term * j0 - s0);
  const Real y1 = -2 / (kPi * x) + (2 / kPi) * log_term * j1 - s1 / kPi;
  return {double(j0), double(j1), double(y0), double(y1)};
}

// Miller backward recurrence for J_k, normalized by J0 + 2 sum J_2k = 1, with
// the Neumann series
//   Y0 = (2/pi)(ln(x/2) + gamma) J0 - (4/pi) sum_{k>=1} (-1)^k J_2k / k
//   Y1 = -Y0' = -(2/pi) J0/x + (2/pi)(ln(x/2) + gamma) J1
//              + (2/pi) sum_{k>=1} (-1)^k (J_{2k-1} - J_{2k+1}) / k.
BesselSet recurrence(double xd) {
  const Real x = xd;
  constexpr int kMaxOrder = 96;
  int top = static_cast<int>(xd) + 50;
  top += top % 2;  // even start keeps the normalization sum aligned
  if (top > kMaxOrder - 2) top = kMaxOrder - 2;

  std::array<Real, kMaxOrder> j{};
  j[top + 1] = 0;
  j[top] = 1e-30L;
  for (int k = top; k >= 1; --k) j[k - 1] = (2 * k / x) * j[k] - j[k + 1];

  Real norm = 0;
  for (int k = top; k >= 2; k -= 2) norm += j[k];
  norm = j[0] + 2 * norm;
  for (int k = 0; k <= top + 1; ++k) j[k] /= norm;

  Real s0 = 0, s1 = 0;
  for (int k = top / 2; k >= 1; --k) {
    const Real sign = (k % 2 == 0) ? 1 : -1;
    s0 += sign * j[2 * k] / k;
    s1 += sign * (j[2 * k - 1] - j[2 * k + 1]) / k;
  }
  const Real log_term = std::log(x / 2) + kEulerGamma;
  const Real y0 = (2 / kPi) * log_term * j[0] - (4 / kPi) * s0;
  const Real y1 = -(2 / kPi) * j[0] / x + (2 / kPi) * log_term * j[1] + (2 / kPi) * s1;
  return {double(j[0]), double(j[1]), double(y0), double(y1)};
}

// Hankel asymptotic expansion; J = A (P cos chi - Q sin chi),
// Y = A (P sin chi + Q cos chi), A = sqrt(2/(pi x)), chi = x - nu pi/2 - pi/4.
void asymptotic_pq(int order, Real x, Real& p, Real& q) {
  const Real mu = 4.0L * order * order;
  Real term = 1;
  p = 1;
  q = 0;
  Real last = 2;
  for (int k = 1; k < 400; ++k) {
    const Real odd = 2 * k - 1;
    term *= (mu - odd * odd) / (k * 8 * x);
    const Real mag = std::fabs(term);
    if (mag > last) break;  // past the smallest term
    last = mag;
    // k even -> P with sign (-1)^(k/2); k odd -> Q with sign (-1)^((k-1)/2)
    if (k % 2 == 0) {
      p += ((k / 2) % 2 == 0 ? term : -term);
    } else {
      q += (((k - 1) / 2) % 2 == 0 ? term : -term);
    }
    if (mag < 1e-22L) break;
  }
}

BesselSet asymptotic(double xd) {
  const Real x = xd;
  const Real amp = std::sqrt(2 / (kPi * x));
  const Real c = std::cos(x), s = std::sin(x);
  const Real r2 = std::numbers::sqrt2_v<long double> / 2;

  Real p0, q0, p1, q1;
  asymptotic_pq(0, x, p0, q0);
  asymptotic_pq(1, x, p1, q1);
  // chi0 = x - pi/4, chi1 = x - 3pi/4, expanded without forming chi.
  const Real cos0 = r2 * (c + s), sin0 = r2 * (s - c);
  const Real cos1 = r2 * (s - c), sin1 = -r2 * (s + c);
  return {double(amp * (p0 * cos0 - q0 * sin0)), double(amp * (p1 * cos1 - q1 * sin1)),
          double(amp * (p0 * sin0 + q0 * cos0)), double(amp * (p1 * sin1 + q1 * cos1))};
}

void check_order(int order) {
  if (order != 0 && order != 1)
    throw DomainError("Bessel order must be 0 or 1, got " + std::to_string(order));
}

}  // namespace

BesselSet bessel_all(double x) {
  if (!std::isfinite(x) || x <= 0.0)
    throw DomainError("bessel_all requires finite x > 0, got " + std::to_string(x));
  if (x < kSeriesLimit) return series(x);
  if (x < kAsymptoticLimit) return recurrence(x);
  return asymptotic(x);
}

double bessel_j(int order, double x) {
  check_order(order);
  if (!std::isfinite(x) || x < 0.0)
    throw DomainError("bessel_j requires finite x >= 0, got " + std::to_string(x));
  if (x == 0.0) return order == 0 ? 1.0 : 0.0;
  const BesselSet b = bessel_all(x);
  return order == 0 ? b.j0 : b.j1;
}

double bessel_y(int order, double x) {
  check_order(order);
  if (!std::isfinite(x) || x <= 0.0)
    throw DomainError("bessel_y requires finite x > 0, got " + std::to_string(x));
  const BesselSet b = bessel_all(x);
  return order == 0 ? b.y0 : b.y1;
}

std::complex<double> hankel1(int order, double x) {
  check_order(order);
  if (!std::isfinite(x) || x <= 0.0)
    throw DomainError("hankel1 requires finite x > 0, got " + std::to_string(x));
  const BesselSet b = bessel_all(x);
  return order == 0 ? std::complex<double>(b.j0, b.y0) : std::complex<double>(b.j1, b.y1);
}

}  // namespace elasto::specfun
