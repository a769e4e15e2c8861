#pragma once

#include <Eigen/Core>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace elasto {

using Vec2 = Eigen::Vector2d;

/// Position and first two parameter derivatives of a boundary curve.
struct CurvePoint {
  Vec2 z, dz, ddz;
};

/// Unnormalized normal n = (z2', -z1') and tangent n_perp = z'; both have
/// length |z'|. For counterclockwise curves n points out of the obstacle.
struct Frame {
  Vec2 n, n_perp;
  double speed;
};

struct GradedMap {
  double w, dw, ddw;
};

enum class Shape { Apple, Peach, Drop, Heart, Circle, Custom };

/// One cosine/sine coefficient pair of a star-shaped custom boundary,
/// r(t) = sum_k a_k cos(kt) + b_k sin(kt), z(t) = r(t) (cos t, sin t).
struct FourierPair {
  double a, b;
};

/// A closed 2pi-periodic boundary parametrization, optionally composed with
/// the corner-grading substitution t = w(s). Immutable after construction.
class BoundaryCurve {
 public:
  static BoundaryCurve apple();
  static BoundaryCurve peach();
  static BoundaryCurve drop();
  static BoundaryCurve heart();
  static BoundaryCurve circle(double radius);
  /// Coefficients index k = 0, 1, ...; the curve is reversed on construction
  /// if it comes out clockwise.
  static BoundaryCurve custom(std::string name, std::vector<FourierPair> coeffs);

  /// Parses "apple", "peach", "drop", "heart", "circle" (unit radius).
  static BoundaryCurve from_name(const std::string& name);

  /// Same curve seen through t = w(s) with grading exponent p >= 2.
  BoundaryCurve graded(double p) const;
  BoundaryCurve ungraded() const;

  Shape shape() const { return shape_; }
  const std::string& name() const { return name_; }
  std::optional<double> grading() const { return grading_; }
  double radius() const { return radius_; }
  bool reversed() const { return reversed_; }
  /// Drop and heart have a single corner at parameter 0.
  bool has_corner() const { return shape_ == Shape::Drop || shape_ == Shape::Heart; }

  CurvePoint eval(double t) const;

  /// Enclosed area from a fine trapezoid rule on (x dy - y dx)/2; positive
  /// for counterclockwise orientation.
  double signed_area(int samples = 2048) const;

 private:
  BoundaryCurve(Shape shape, std::string name) : shape_(shape), name_(std::move(name)) {}
  CurvePoint eval_base(double t) const;

  Shape shape_;
  std::string name_;
  double radius_ = 1.0;
  std::vector<FourierPair> coeffs_;
  std::optional<double> grading_;
  bool reversed_ = false;
};

/// Reduces t to [0, 2pi).
double reduce_period(double t);

CurvePoint curve_eval(const BoundaryCurve& curve, double t);

/// Throws DegenerateCurveError if |z'(t)| < 1e-14.
Frame frame(const BoundaryCurve& curve, double t);
Frame frame(const CurvePoint& point);

/// w(s) = 2pi v(s)^p / (v(s)^p + v(2pi - s)^p) with the cubic
/// v(s) = (1/p - 1/2)((pi - s)/pi)^3 + (1/p)(s - pi)/pi + 1/2.
GradedMap graded_map(double p, double s);

/// Distance from x to a dense polyline through the curve.
double boundary_distance(const BoundaryCurve& curve, const Vec2& x, int samples = 4096);

/// Winding-number test for x lying inside the obstacle.
bool contains(const BoundaryCurve& curve, const Vec2& x, int samples = 4096);

/// 2n equidistant parameters pi j/n, shifted by pi/(2n) when requested.
std::vector<double> collocation_nodes(int n, bool shifted);

}  // namespace elasto
