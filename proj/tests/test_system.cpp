#include <doctest.h>

#include <boost/math/special_functions/hankel.hpp>
#include <cmath>
#include <numbers>

#include "elasto/errors.hpp"
#include "elasto/quadrature.hpp"
#include "elasto/system.hpp"

using namespace elasto;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr Complex kI{0.0, 1.0};

ElasticMedium test_medium() { return ElasticMedium::create(3.88, 2.56, kPi); }

// Y block built from the unreduced weights: Cauchy weights, the E H2 term with
// sin-log weights, R times h2_tilde, h3_tilde, h1_tilde and both mean terms.
Eigen::MatrixXcd unreduced_y(const BoundaryCurve& curve, int n, bool shifted, double kappa) {
  const std::vector<double> nodes = collocation_nodes(n, shifted);
  const double shift = nodes[0];
  const int m = 2 * n;
  Eigen::MatrixXcd y(m, m);
  for (int i = 0; i < m; ++i) {
    const double t = nodes[i];
    const WeightRow r = log_weights(n, t - shift);
    const WeightRow u = cauchy_weights(n, t - shift);
    const WeightRow v = sinlog_weights(n, t - shift);
    const CurvePoint pt = curve.eval(t);
    const double e = kappa * kappa * pt.dz.squaredNorm();
    for (int j = 0; j < m; ++j) {
      const KernelSplit sp = split_kernels(kappa, pt, curve.eval(nodes[j]), t - nodes[j]);
      const Complex h2_tilde = sp.h.h2 - e / (4 * kPi) * std::sin(t - nodes[j]);
      const Complex h3_tilde = sp.h.h3 - kI * (e + 1) / (2 * kPi);
      const Complex mean = kI / (2.0 * n);  // (i/2pi) times the trapezoid weight pi/n
      y(i, j) = u.values[j] + mean + e * (v.values[j] / (4 * kPi) + mean) +
                r.values[j] * h2_tilde + (kPi / n) * (h3_tilde + sp.h.h1_tilde);
    }
  }
  return y;
}

}  // namespace

TEST_CASE("assembly preconditions and layout") {
  const ElasticMedium m = test_medium();
  const BoundaryCurve c = BoundaryCurve::apple();
  CHECK_THROWS_AS(assemble(m, c, 3, false), ConfigError);
  CHECK_THROWS_AS(assemble(m, BoundaryCurve::drop().graded(2.0), 8, false), DegenerateCurveError);

  const int n = 8;
  const DiscreteSystem sys = assemble(m, c, n, false);
  REQUIRE(sys.matrix.rows() == 4 * n);
  CHECK(sys.matrix.allFinite());
  for (int i = 0; i < 2 * n; ++i) {
    const CurvePoint p = c.eval(sys.nodes[i]);
    const Complex k2 = split_kernels(m.kappa_p, p, p, 0.0).k.k2;
    CHECK(std::abs(sys.matrix(i, i) - (-1.0 + (kPi / n) * k2)) < 1e-14);
  }
}

TEST_CASE("reduced Y equals the unreduced form") {
  const ElasticMedium m = test_medium();
  for (bool shifted : {false, true}) {
    const BoundaryCurve c = shifted ? BoundaryCurve::heart().graded(2.0) : BoundaryCurve::apple();
    const int n = 8;
    const DiscreteSystem sys = assemble(m, c, n, shifted);
    const Eigen::MatrixXcd yp = unreduced_y(c, n, shifted, m.kappa_p);
    const Eigen::MatrixXcd ys = unreduced_y(c, n, shifted, m.kappa_s);
    const int k = 2 * n;
    const double scale = sys.matrix.cwiseAbs().maxCoeff();
    CHECK((sys.matrix.block(k, 0, k, k) - yp).cwiseAbs().maxCoeff() < 1e-14 * scale);
    CHECK((sys.matrix.block(0, k, k, k) - ys).cwiseAbs().maxCoeff() < 1e-14 * scale);
  }
}

TEST_CASE("X row sums match a dense oracle of the unsplit kernel on the unit circle") {
  // On the unit circle k(t, s) depends only on t - s, so every row sum of X
  // approximates the same integral of k over one period. The kernel is only
  // weakly singular there (r ln r), so a fine midpoint rule is an adequate oracle.
  const ElasticMedium m = test_medium();
  const BoundaryCurve c = BoundaryCurve::circle(1.0);
  const int n = 32;
  const DiscreteSystem sys = assemble(m, c, n, false);
  const double kappa = m.kappa_p;

  // Oracle: k(t, s) = (i kappa/2) n.(z(s)-z(t)) H1(kappa r)/r on the unit
  // circle with t = 0, d = s; n.(z(s)-z(t)) = cos s - 1 = -r^2/2.
  const int fine = 1 << 20;
  Complex oracle = 0.0;
  for (int i = 0; i < fine; ++i) {
    const double s = 2 * kPi * (i + 0.5) / fine;
    const double r = 2 * std::sin(s / 2);
    oracle += (kI * kappa / 2.0) * (-r * r / 2) * boost::math::cyl_hankel_1(1, kappa * r) / r;
  }
  oracle *= 2 * kPi / fine;

  for (int i = 0; i < 2 * n; i += 7) {
    Complex row = 0.0;
    for (int j = 0; j < 2 * n; ++j) row += sys.matrix(i, j);
    row += 1.0;  // remove the -I
    CHECK(std::abs(row - oracle) < 1e-8);
  }
}

TEST_CASE("solve consistency, linearity and zero data") {
  const ElasticMedium m = test_medium();
  const BoundaryCurve c = BoundaryCurve::peach();
  const int n = 16;
  const DiscreteSystem sys = assemble(m, c, n, false);

  Eigen::VectorXcd x(4 * n);
  for (int i = 0; i < 4 * n; ++i) x[i] = Complex(std::sin(1.3 * i + 0.2), std::cos(0.7 * i));
  const Eigen::VectorXcd w = sys.matrix * x;
  BoundaryData data{w.head(2 * n), w.tail(2 * n)};
  const DensitySolution sol = solve(sys, data);
  Eigen::VectorXcd got(4 * n);
  got << sol.phi1, sol.phi2;
  CHECK((got - x).norm() / x.norm() < 1e-11);
  CHECK(sol.residual < 1e-10);
  CHECK(sol.cond_estimate > 1.0);

  const BoundaryData a = boundary_rhs(IncidentField::plane_p(0.3), m, c, sys.nodes);
  const BoundaryData b = boundary_rhs(IncidentField::plane_s(1.1), m, c, sys.nodes);
  const Complex alpha(0.5, -2.0), beta(1.5, 0.25);
  const BoundaryData mix{alpha * a.w1 + beta * b.w1, alpha * a.w2 + beta * b.w2};
  const DensitySolution sa = solve(sys, a), sb = solve(sys, b), sm = solve(sys, mix);
  CHECK((sm.phi1 - (alpha * sa.phi1 + beta * sb.phi1)).norm() < 1e-11 * sm.phi1.norm());
  CHECK((sm.phi2 - (alpha * sa.phi2 + beta * sb.phi2)).norm() < 1e-11 * sm.phi2.norm());

  const BoundaryData zero{Eigen::VectorXcd::Zero(2 * n), Eigen::VectorXcd::Zero(2 * n)};
  const DensitySolution s0 = solve(sys, zero);
  CHECK(s0.phi1.norm() == 0.0);
  CHECK(s0.phi2.norm() == 0.0);

  CHECK_THROWS_AS(solve(sys, BoundaryData{a.w1.head(3), a.w2}), ConfigError);
}

TEST_CASE("singular systems are reported with a condition estimate") {
  DiscreteSystem sys;
  sys.n = 4;
  sys.nodes = collocation_nodes(4, false);
  sys.matrix = Eigen::MatrixXcd::Identity(16, 16);
  sys.matrix.row(3) = sys.matrix.row(5);
  const BoundaryData d{Eigen::VectorXcd::Ones(8), Eigen::VectorXcd::Ones(8)};
  try {
    solve(sys, d);
    FAIL("expected a singular-system error");
  } catch (const SingularSystemError& e) {
    CHECK(e.cond_estimate() > 1e13);
  }
}

TEST_CASE("conditioning grows near an interior Dirichlet eigenvalue") {
  // Unit circle: kappa_p = 2.404825557695773 (first zero of J0) is an interior
  // Dirichlet eigenvalue; with lambda + 2 mu = 9 that is omega = 3 * j01.
  const BoundaryCurve c = BoundaryCurve::circle(1.0);
  const double j01 = 2.404825557695773;
  const auto cond_at = [&](double omega) {
    const ElasticMedium m = ElasticMedium::create(3.88, 2.56, omega);
    const DiscreteSystem sys = assemble(m, c, 32, false);
    try {
      return solve(sys, boundary_rhs(IncidentField::plane_p(0.0), m, c, sys.nodes)).cond_estimate;
    } catch (const SingularSystemError& e) {
      return e.cond_estimate();
    }
  };
  CHECK(cond_at(3 * j01) > 1e3 * cond_at(3 * j01 + 0.5));
}

TEST_CASE("boundary data for plane waves") {
  const ElasticMedium m = test_medium();
  const BoundaryCurve c = BoundaryCurve::circle(1.0);
  const std::vector<double> nodes = {0.0, kPi / 2};
  // Evaluate at z = (1, 0) where nu = (1, 0), tau = (0, 1); phase e^{i kappa}.
  const BoundaryData p = boundary_rhs(IncidentField::plane_p(0.0), m, c, nodes);
  const Complex ph_p = std::exp(kI * m.kappa_p);
  CHECK(std::abs(p.w1[0] / 2.0 - (-ph_p)) < 1e-15);
  CHECK(std::abs(p.w2[0]) < 1e-15);
  const BoundaryData s = boundary_rhs(IncidentField::plane_s(0.0), m, c, nodes);
  const Complex ph_s = std::exp(kI * m.kappa_s);
  CHECK(std::abs(s.w1[0]) < 1e-15);
  CHECK(std::abs(s.w2[0] / 2.0 - (-ph_s)) < 1e-15);
  // |z'| scaling.
  const BoundaryData big = boundary_rhs(IncidentField::plane_p(0.0), m,
                                        BoundaryCurve::circle(2.0), {kPi});
  CHECK(std::abs(std::abs(big.w1[0]) - 4.0) < 1e-14);
}

TEST_CASE("manufactured boundary data against finite differences") {
  const ElasticMedium m = test_medium();
  const BoundaryCurve c = BoundaryCurve::apple();
  const Vec2 xbar(0.1, 0.2);
  const std::vector<double> nodes = collocation_nodes(8, false);
  const BoundaryData d = boundary_rhs(IncidentField::point_source(xbar), m, c, nodes);
  const double h = 1e-6;
  auto phi = [&](double kappa, const Vec2& x) {
    return Complex(boost::math::cyl_hankel_1(0, kappa * (x - xbar).norm()));
  };
  for (std::size_t j = 0; j < nodes.size(); ++j) {
    const CurvePoint p = c.eval(nodes[j]);
    const Frame f = frame(p);
    const Vec2 nu = f.n / f.speed, tau = f.n_perp / f.speed;
    auto dir = [&](double kappa, const Vec2& e) {
      return (phi(kappa, p.z + h * e) - phi(kappa, p.z - h * e)) / (2 * h);
    };
    const Complex f1 = dir(m.kappa_p, nu) + dir(m.kappa_s, tau);
    const Complex f2 = dir(m.kappa_p, tau) - dir(m.kappa_s, nu);
    CHECK(std::abs(d.w1[j] - 2.0 * f1 * f.speed) < 1e-6);
    CHECK(std::abs(d.w2[j] - 2.0 * f2 * f.speed) < 1e-6);
  }
  CHECK_THROWS_AS(boundary_rhs(IncidentField::point_source(Vec2(2, 0)), m, c, nodes),
                  ConfigError);
}
