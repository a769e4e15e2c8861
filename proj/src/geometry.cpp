#include "elasto/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "elasto/errors.hpp"

namespace elasto {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

struct Radial {
  double r, dr, ddr;
};

// z = r (cos t, sin t) and its derivatives.
CurvePoint from_radial(double t, const Radial& rad) {
  const double c = std::cos(t), s = std::sin(t);
  const Vec2 e(c, s), e_perp(-s, c);
  return {rad.r * e, rad.dr * e + rad.r * e_perp, (rad.ddr - rad.r) * e + 2.0 * rad.dr * e_perp};
}

Radial apple_radius(double t) {
  const double c = std::cos(t), s = std::sin(t);
  const double s2 = std::sin(2 * t), c2 = std::cos(2 * t);
  const double num = 0.55 * (1 + 0.9 * c + 0.1 * s2);
  const double dnum = 0.55 * (-0.9 * s + 0.2 * c2);
  const double ddnum = 0.55 * (-0.9 * c - 0.4 * s2);
  const double den = 1 + 0.75 * c, dden = -0.75 * s, ddden = -0.75 * c;
  const double r = num / den;
  const double dr = (dnum * den - num * dden) / (den * den);
  const double ddr = (ddnum * den - num * ddden) / (den * den) - 2 * dden * dr / den;
  return {r, dr, ddr};
}

// r = 0.22 (cos^2 t sqrt(1 - sin t) + 2). With u = 1 - sin t the bracket is
// g = 2u^{3/2} - u^{5/2}; g'' is written without u^{-1/2} so it stays finite
// at t = pi/2 where the curve is only C^2.
Radial peach_radius(double t) {
  const double c = std::cos(t), s = std::sin(t);
  const double u = std::max(0.0, 1.0 - s);
  const double su = std::sqrt(u);
  const double g = (2.0 - u) * u * su;
  const double a = 3.0 * su - 2.5 * u * su;  // dg/du
  const double dg = -a * c;
  const double ddg = su * (1.5 - 3.75 * u) * (2.0 - u) + a * s;
  return {0.22 * (g + 2.0), 0.22 * dg, 0.22 * ddg};
}

Radial fourier_radius(double t, const std::vector<FourierPair>& coeffs) {
  Radial out{0, 0, 0};
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    const double kk = double(k);
    const double c = std::cos(kk * t), s = std::sin(kk * t);
    out.r += coeffs[k].a * c + coeffs[k].b * s;
    out.dr += kk * (-coeffs[k].a * s + coeffs[k].b * c);
    out.ddr += -kk * kk * (coeffs[k].a * c + coeffs[k].b * s);
  }
  return out;
}

}  // namespace

double reduce_period(double t) {
  double r = std::fmod(t, kTwoPi);
  if (r < 0) r += kTwoPi;
  if (r >= kTwoPi) r = 0.0;
  return r;
}

BoundaryCurve BoundaryCurve::apple() { return {Shape::Apple, "apple"}; }
BoundaryCurve BoundaryCurve::peach() { return {Shape::Peach, "peach"}; }
BoundaryCurve BoundaryCurve::drop() { return {Shape::Drop, "drop"}; }
BoundaryCurve BoundaryCurve::heart() { return {Shape::Heart, "heart"}; }

BoundaryCurve BoundaryCurve::circle(double radius) {
  if (!(radius > 0.0) || !std::isfinite(radius)) throw ConfigError("circle radius must be positive");
  BoundaryCurve c(Shape::Circle, "circle");
  c.radius_ = radius;
  return c;
}

BoundaryCurve BoundaryCurve::custom(std::string name, std::vector<FourierPair> coeffs) {
  if (coeffs.empty()) throw ConfigError("custom shape needs at least one coefficient pair");
  BoundaryCurve c(Shape::Custom, std::move(name));
  c.coeffs_ = std::move(coeffs);
  for (int j = 0; j < 256; ++j) {
    const double r = fourier_radius(kTwoPi * j / 256.0, c.coeffs_).r;
    if (!(r > 0.0)) throw ConfigError("custom shape radius must stay positive");
  }
  if (c.signed_area() < 0.0) c.reversed_ = true;
  return c;
}

BoundaryCurve BoundaryCurve::from_name(const std::string& name) {
  if (name == "apple") return apple();
  if (name == "peach") return peach();
  if (name == "drop") return drop();
  if (name == "heart") return heart();
  if (name == "circle") return circle(1.0);
  throw ConfigError("unknown shape '" + name + "'");
}

BoundaryCurve BoundaryCurve::graded(double p) const {
  if (!(p >= 2.0) || !std::isfinite(p)) throw ConfigError("grading exponent must be >= 2");
  BoundaryCurve c = *this;
  c.grading_ = p;
  return c;
}

BoundaryCurve BoundaryCurve::ungraded() const {
  BoundaryCurve c = *this;
  c.grading_.reset();
  return c;
}

CurvePoint BoundaryCurve::eval_base(double t) const {
  switch (shape_) {
    case Shape::Apple:
      return from_radial(t, apple_radius(t));
    case Shape::Peach:
      return from_radial(t, peach_radius(t));
    case Shape::Circle:
      return from_radial(t, {radius_, 0.0, 0.0});
    case Shape::Custom:
      return from_radial(t, fourier_radius(t, coeffs_));
    case Shape::Drop: {
      const double sh = std::sin(t / 2), ch = std::cos(t / 2);
      const double s = std::sin(t), c = std::cos(t);
      return {Vec2(2 * sh - 1, -s), Vec2(ch, -c), Vec2(-0.5 * sh, s)};
    }
    case Shape::Heart: {
      const double s3 = std::sin(1.5 * t), c3 = std::cos(1.5 * t);
      const double s = std::sin(t), c = std::cos(t);
      return {Vec2(1.5 * s3, s), Vec2(2.25 * c3, c), Vec2(-3.375 * s3, -s)};
    }
  }
  return {};
}

CurvePoint BoundaryCurve::eval(double t) const {
  double param = reduce_period(t);
  double dw = 1.0, ddw = 0.0;
  if (grading_) {
    const GradedMap g = graded_map(*grading_, param);
    param = g.w;
    dw = g.dw;
    ddw = g.ddw;
  }
  CurvePoint p;
  if (reversed_) {
    const double mirrored = param == 0.0 ? 0.0 : kTwoPi - param;
    p = eval_base(mirrored);
    p.dz = -p.dz;
  } else {
    p = eval_base(param);
  }
  if (grading_) {
    p.ddz = p.ddz * (dw * dw) + p.dz * ddw;
    p.dz = p.dz * dw;
  }
  return p;
}

double BoundaryCurve::signed_area(int samples) const {
  double area = 0.0;
  for (int j = 0; j < samples; ++j) {
    const CurvePoint p = eval(kTwoPi * j / samples);
    area += p.z.x() * p.dz.y() - p.z.y() * p.dz.x();
  }
  return 0.5 * area * kTwoPi / samples;
}

CurvePoint curve_eval(const BoundaryCurve& curve, double t) { return curve.eval(t); }

Frame frame(const CurvePoint& point) {
  const double speed = point.dz.norm();
  if (!(speed >= 1e-14))
    throw DegenerateCurveError("degenerate parametrization: |z'| = " + std::to_string(speed));
  return {Vec2(point.dz.y(), -point.dz.x()), point.dz, speed};
}

Frame frame(const BoundaryCurve& curve, double t) { return frame(curve.eval(t)); }

GradedMap graded_map(double p, double s) {
  const double c = 1.0 / p - 0.5;
  auto v = [&](double x) {
    const double y = (kPi - x) / kPi;
    return std::max(0.0, c * y * y * y + (x - kPi) / (p * kPi) + 0.5);
  };
  auto dv = [&](double x) {
    const double y = (kPi - x) / kPi;
    return -3.0 * c * y * y / kPi + 1.0 / (p * kPi);
  };
  auto ddv = [&](double x) {
    const double y = (kPi - x) / kPi;
    return 6.0 * c * y / (kPi * kPi);
  };
  // a = v(s)^p and b = v(2pi - s)^p with their s-derivatives.
  const double v1 = v(s), v2 = v(kTwoPi - s);
  const double d1 = dv(s), d2 = -dv(kTwoPi - s);
  const double dd1 = ddv(s), dd2 = ddv(kTwoPi - s);
  const double a = std::pow(v1, p), b = std::pow(v2, p);
  const double da = p * std::pow(v1, p - 1) * d1;
  const double db = p * std::pow(v2, p - 1) * d2;
  const double dda = p * (p - 1) * std::pow(v1, p - 2) * d1 * d1 + p * std::pow(v1, p - 1) * dd1;
  const double ddb = p * (p - 1) * std::pow(v2, p - 2) * d2 * d2 + p * std::pow(v2, p - 1) * dd2;
  const double sum = a + b;
  const double numer = da * b - a * db;
  const double w = kTwoPi * a / sum;
  const double dw = kTwoPi * numer / (sum * sum);
  const double ddw = kTwoPi * ((dda * b - a * ddb) * sum - 2.0 * numer * (da + db)) / (sum * sum * sum);
  return {w, dw, ddw};
}

double boundary_distance(const BoundaryCurve& curve, const Vec2& x, int samples) {
  double best = std::numeric_limits<double>::infinity();
  Vec2 prev = curve.eval(0.0).z;
  for (int j = 1; j <= samples; ++j) {
    const Vec2 next = curve.eval(kTwoPi * j / samples).z;
    const Vec2 seg = next - prev;
    const double len2 = seg.squaredNorm();
    const double along = len2 > 0.0 ? std::clamp((x - prev).dot(seg) / len2, 0.0, 1.0) : 0.0;
    best = std::min(best, (prev + along * seg - x).norm());
    prev = next;
  }
  return best;
}

bool contains(const BoundaryCurve& curve, const Vec2& x, int samples) {
  double winding = 0.0;
  Vec2 prev = curve.eval(0.0).z - x;
  for (int j = 1; j <= samples; ++j) {
    const Vec2 next = curve.eval(kTwoPi * j / samples).z - x;
    winding += std::atan2(prev.x() * next.y() - prev.y() * next.x(), prev.dot(next));
    prev = next;
  }
  return std::abs(winding) > kPi;
}

std::vector<double> collocation_nodes(int n, bool shifted) {
  if (n < 1) throw ConfigError("collocation_nodes requires n >= 1");
  std::vector<double> nodes(2 * std::size_t(n));
  const double offset = shifted ? kPi / (2.0 * n) : 0.0;
  for (int j = 0; j < 2 * n; ++j) nodes[j] = kPi * j / n + offset;
  return nodes;
}

}  // namespace elasto
