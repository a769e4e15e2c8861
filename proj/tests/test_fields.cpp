#include <doctest.h>

#include <boost/math/special_functions/hankel.hpp>
#include <cmath>
#include <numbers>

#include "elasto/errors.hpp"
#include "elasto/fields.hpp"
#include "support/properties.hpp"

using namespace elasto;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr Complex kI{0.0, 1.0};

ElasticMedium test_medium() { return ElasticMedium::create(3.88, 2.56, kPi); }

DensitySolution solve_for(const ElasticMedium& m, const BoundaryCurve& c, int n,
                          const IncidentField& inc, bool shifted = false) {
  const DiscreteSystem sys = assemble(m, c, n, shifted);
  return solve(sys, boundary_rhs(inc, m, c, sys.nodes));
}

}  // namespace

TEST_CASE("zero densities give zero fields") {
  const ElasticMedium m = test_medium();
  const BoundaryCurve c = BoundaryCurve::apple();
  DensitySolution sol;
  sol.n = 16;
  sol.nodes = collocation_nodes(16, false);
  sol.phi1 = sol.phi2 = Eigen::VectorXcd::Zero(32);
  const auto [phi, psi] = eval_potentials(sol, m, c, Vec2(3, 0));
  CHECK(phi == Complex(0.0));
  CHECK(psi == Complex(0.0));
  CHECK(eval_displacement(sol, m, c, Vec2(0, 3)).norm() == 0.0);
  const FarField f = far_field(sol, m, c, Vec2(0, 1));
  CHECK(f.phi_inf == Complex(0.0));
  CHECK(f.vs_inf.norm() == 0.0);
}

TEST_CASE("linearity in the densities") {
  const ElasticMedium m = test_medium();
  const BoundaryCurve c = BoundaryCurve::apple();
  DensitySolution sol = solve_for(m, c, 16, IncidentField::plane_s(0.5));
  const Vec2 x(2.0, -2.5);
  const auto [p1, s1] = eval_potentials(sol, m, c, x);
  sol.phi1 *= 2.0;
  sol.phi2 *= 2.0;
  const auto [p2, s2] = eval_potentials(sol, m, c, x);
  CHECK(std::abs(p2 - 2.0 * p1) < 1e-15 * std::abs(p1) * 4);
  CHECK(std::abs(s2 - 2.0 * s1) < 1e-15 * std::abs(s1) * 4);
}

TEST_CASE("analytic gradient matches finite differences") {
  CHECK(props::potential_gradient_fd_error() < 1e-7);
}

TEST_CASE("manufactured point-source problem") {
  const ElasticMedium m = test_medium();
  const BoundaryCurve c = BoundaryCurve::apple();
  const Vec2 xbar(0.1, 0.2);
  const DensitySolution sol = solve_for(m, c, 64, IncidentField::point_source(xbar));
  double worst_pot = 0.0, worst_disp = 0.0;
  for (int i = 0; i < 32; ++i) {
    const double a = kPi * i / 16;
    const Vec2 x = 3.0 * Vec2(std::cos(a), std::sin(a));
    const Vec2 d = x - xbar;
    const double r = d.norm();
    const Complex phi_star = boost::math::cyl_hankel_1(0, m.kappa_p * r);
    const Complex psi_star = boost::math::cyl_hankel_1(0, m.kappa_s * r);
    const auto [phi, psi] = eval_potentials(sol, m, c, x);
    worst_pot = std::max({worst_pot, std::abs(phi - phi_star), std::abs(psi - psi_star)});

    // grad H0(kappa r) = -kappa H1(kappa r) (x - xbar)/r.
    const Complex gp = -m.kappa_p * boost::math::cyl_hankel_1(1, m.kappa_p * r) / r;
    const Complex gs = -m.kappa_s * boost::math::cyl_hankel_1(1, m.kappa_s * r) / r;
    const Vec2c expect(gp * d.x() + gs * d.y(), gp * d.y() - gs * d.x());
    worst_disp = std::max(worst_disp, (eval_displacement(sol, m, c, x) - expect).norm());
  }
  CHECK(worst_pot < 1e-9);
  CHECK(worst_disp < 1e-8);
}

TEST_CASE("far-field structure") {
  const ElasticMedium m = test_medium();
  const BoundaryCurve c = BoundaryCurve::peach();
  const DensitySolution sol = solve_for(m, c, 32, IncidentField::plane_p(1.0));
  for (int k = 0; k < 12; ++k) {
    const double a = 2 * kPi * k / 12;
    const Vec2 xhat(std::cos(a), std::sin(a)), xperp(-xhat.y(), xhat.x());
    const FarField f = far_field(sol, m, c, xhat);
    // Zero up to the rounding of the dot product itself.
    CHECK(std::abs(f.vp_inf.dot(xperp.cast<Complex>())) <= 1e-15 * f.vp_inf.norm());
    CHECK(std::abs(f.vs_inf.dot(xhat.cast<Complex>())) <= 1e-15 * f.vs_inf.norm());
    CHECK(std::abs(f.vp_inf.x() - kI * m.kappa_p * f.phi_inf * xhat.x()) <=
          1e-15 * f.vp_inf.norm());
  }
  CHECK_THROWS_AS(far_field(sol, m, c, Vec2(1.0, 1e-5)), DomainError);
}

TEST_CASE("far field is the large-distance limit of the near field") {
  const double slope = props::far_field_decay_slope();
  CHECK(slope == doctest::Approx(-1.5).epsilon(0.2));
}

TEST_CASE("rotational equivariance on a circle") {
  // Rotating the incident direction by alpha rotates the pattern by alpha.
  const ElasticMedium m = test_medium();
  const BoundaryCurve c = BoundaryCurve::circle(0.9);
  const double alpha = 0.7;
  const DensitySolution a = solve_for(m, c, 64, IncidentField::plane_p(0.3));
  const DensitySolution b = solve_for(m, c, 64, IncidentField::plane_p(0.3 + alpha));
  for (int k = 0; k < 16; ++k) {
    const double th = 2 * kPi * k / 16;
    const FarField fa = far_field(a, m, c, Vec2(std::cos(th), std::sin(th)));
    const FarField fb = far_field(b, m, c, Vec2(std::cos(th + alpha), std::sin(th + alpha)));
    CHECK(std::abs(fa.phi_inf - fb.phi_inf) < 1e-10);
    CHECK(std::abs(fa.psi_inf - fb.psi_inf) < 1e-10);
  }
}

TEST_CASE("points near the boundary are rejected") {
  const ElasticMedium m = test_medium();
  const BoundaryCurve c = BoundaryCurve::circle(1.0);
  const DensitySolution sol = solve_for(m, c, 16, IncidentField::plane_p(0.0));
  // Node spacing on the unit circle is 2 sin(pi/32) ~ 0.196, so the
  // clearance is about 0.59.
  CHECK(node_spacing(c, sol.nodes) == doctest::Approx(2 * std::sin(kPi / 32)));
  CHECK_THROWS_AS(eval_potentials(sol, m, c, Vec2(1.2, 0.0)), NearBoundaryError);
  CHECK_THROWS_AS(eval_displacement(sol, m, c, Vec2(0.0, -1.1)), NearBoundaryError);
  CHECK_NOTHROW(eval_potentials(sol, m, c, Vec2(1.7, 0.0)));
}
