#include "elasto/kernels.hpp"

#include <cmath>
#include <numbers>

#include "elasto/errors.hpp"
#include "elasto/specfun.hpp"

namespace elasto {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr Complex kI{0.0, 1.0};

Vec2 normal_of(const CurvePoint& p) { return {p.dz.y(), -p.dz.x()}; }

}  // namespace

ElasticMedium ElasticMedium::create(double lambda, double mu, double omega) {
  if (!std::isfinite(lambda) || !std::isfinite(mu) || !std::isfinite(omega))
    throw ConfigError("Lame constants and frequency must be finite");
  if (!(mu > 0.0)) throw ConfigError("mu must be positive");
  if (!(lambda + mu > 0.0)) throw ConfigError("lambda + mu must be positive");
  if (!(omega > 0.0)) throw ConfigError("omega must be positive");
  ElasticMedium m;
  m.lambda = lambda;
  m.mu = mu;
  m.omega = omega;
  m.kappa_p = omega / std::sqrt(lambda + 2.0 * mu);
  m.kappa_s = omega / std::sqrt(mu);
  return m;
}

double h1_tilde_diagonal(const CurvePoint& point) {
  return -point.dz.dot(point.ddz) / (2.0 * kPi * point.dz.squaredNorm());
}

KernelSplit split_kernels(double kappa, const CurvePoint& at_t, const CurvePoint& at_s,
                          double t_minus_s) {
  KernelSplit out{};
  const double d = std::remainder(t_minus_s, 2.0 * kPi);
  if (d == 0.0) {
    const double speed2 = at_t.dz.squaredNorm();
    out.k.k1 = 0.0;
    out.k.k2 = normal_of(at_t).dot(at_t.ddz) / (2.0 * kPi * speed2);
    out.h.h1 = 1.0 / (2.0 * kPi);
    out.h.h2 = 0.0;
    out.h.h3 = 0.0;
    out.h.h1_tilde = h1_tilde_diagonal(at_t);
    return out;
  }

  const Vec2 delta = at_s.z - at_t.z;  // z(s) - z(t)
  const double r = delta.norm();
  const double nd = normal_of(at_t).dot(delta);
  const double td = at_t.dz.dot(delta);
  const specfun::BesselSet b = specfun::bessel_all(kappa * r);
  const Complex h1k(b.j1, b.y1);

  const double log_factor = std::log(4.0 * std::pow(std::sin(d / 2.0), 2));
  const double half = -d / 2.0;  // (s - t)/2
  const double cot_half = std::cos(half) / std::sin(half);

  const Complex k_full = (kI * kappa / 2.0) * nd * h1k / r;
  const double k1 = (kappa / (2.0 * kPi)) * (-nd) * b.j1 / r;
  out.k.k1 = k1;
  out.k.k2 = k_full - k1 * log_factor;

  // h1 cot((s-t)/2) collapses to n_perp.(z(s)-z(t)) / (pi r^2); using that
  // form avoids the tan/cot product near s - t = pi.
  const Complex h_full = (kI * kappa / 2.0) * td * h1k / r;
  const double h2 = (kappa / (2.0 * kPi)) * (-td) * b.j1 / r;
  const double singular = td / (kPi * r * r);
  out.h.h1 = singular * std::tan(half);
  out.h.h2 = h2;
  out.h.h3 = h_full - singular - h2 * log_factor;
  out.h.h1_tilde = singular - cot_half / (2.0 * kPi);
  return out;
}

KernelK kernel_k(const ElasticMedium& medium, const BoundaryCurve& curve, Wave sigma, double t,
                 double s) {
  return split_kernels(medium.kappa(sigma), curve.eval(t), curve.eval(s), t - s).k;
}

KernelH kernel_h(const ElasticMedium& medium, const BoundaryCurve& curve, Wave sigma, double t,
                 double s) {
  return split_kernels(medium.kappa(sigma), curve.eval(t), curve.eval(s), t - s).h;
}

Complex kernel_k_unsplit(double kappa, const CurvePoint& at_t, const CurvePoint& at_s) {
  const Vec2 delta = at_s.z - at_t.z;
  const double r = delta.norm();
  return (kI * kappa / 2.0) * normal_of(at_t).dot(delta) * specfun::hankel1(1, kappa * r) / r;
}

Complex kernel_h_unsplit(double kappa, const CurvePoint& at_t, const CurvePoint& at_s) {
  const Vec2 delta = at_s.z - at_t.z;
  const double r = delta.norm();
  return (kI * kappa / 2.0) * at_t.dz.dot(delta) * specfun::hankel1(1, kappa * r) / r;
}

}  // namespace elasto
