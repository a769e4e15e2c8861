#include "elasto/fields.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "elasto/errors.hpp"
#include "elasto/specfun.hpp"

namespace elasto {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr Complex kI{0.0, 1.0};
constexpr double kExclusionSpacings = 3.0;

struct NodeSample {
  Vec2 z;
  Complex g1, g2;
};

// Node positions paired with the parametrized densities; the trapezoid weight
// pi/n is applied by the callers.
std::vector<NodeSample> samples(const DensitySolution& sol, const BoundaryCurve& curve) {
  std::vector<NodeSample> out(sol.nodes.size());
  for (std::size_t j = 0; j < sol.nodes.size(); ++j)
    out[j] = {curve.eval(sol.nodes[j]).z, sol.phi1[Eigen::Index(j)], sol.phi2[Eigen::Index(j)]};
  return out;
}

void require_clearance(const DensitySolution& sol, const BoundaryCurve& curve, const Vec2& x) {
  const double limit = kExclusionSpacings * node_spacing(curve, sol.nodes);
  const double dist = boundary_distance(curve, x);
  if (dist <= limit) {
    std::ostringstream msg;
    msg << "evaluation point (" << x.x() << ", " << x.y() << ") lies within " << dist
        << " of the boundary; minimum clearance is " << limit;
    throw NearBoundaryError(msg.str());
  }
}

}  // namespace

double node_spacing(const BoundaryCurve& curve, const std::vector<double>& nodes) {
  double gap = 0.0;
  const std::size_t m = nodes.size();
  for (std::size_t j = 0; j < m; ++j) {
    const Vec2 a = curve.eval(nodes[j]).z;
    const Vec2 b = curve.eval(nodes[(j + 1) % m]).z;
    gap = std::max(gap, (b - a).norm());
  }
  return gap;
}

std::pair<Complex, Complex> eval_potentials(const DensitySolution& solution,
                                            const ElasticMedium& medium,
                                            const BoundaryCurve& curve, const Vec2& x,
                                            Clearance clearance) {
  if (clearance == Clearance::Enforce) require_clearance(solution, curve, x);
  Complex phi = 0.0, psi = 0.0;
  for (const NodeSample& s : samples(solution, curve)) {
    const double r = (x - s.z).norm();
    phi += specfun::hankel1(0, medium.kappa_p * r) * s.g1;
    psi += specfun::hankel1(0, medium.kappa_s * r) * s.g2;
  }
  const Complex scale = (kI / 4.0) * (kPi / solution.n);
  return {scale * phi, scale * psi};
}

Vec2c eval_displacement(const DensitySolution& solution, const ElasticMedium& medium,
                        const BoundaryCurve& curve, const Vec2& x) {
  require_clearance(solution, curve, x);
  Vec2c grad_phi = Vec2c::Zero(), grad_psi = Vec2c::Zero();
  for (const NodeSample& s : samples(solution, curve)) {
    const Vec2 delta = x - s.z;
    const double r = delta.norm();
    // grad_x Phi = -(i kappa/4) H1(kappa r) (x - y)/r; constants applied below.
    const Complex cp = medium.kappa_p * specfun::hankel1(1, medium.kappa_p * r) / r * s.g1;
    const Complex cs = medium.kappa_s * specfun::hankel1(1, medium.kappa_s * r) / r * s.g2;
    grad_phi += cp * delta.cast<Complex>();
    grad_psi += cs * delta.cast<Complex>();
  }
  const Complex scale = -(kI / 4.0) * (kPi / solution.n);
  grad_phi *= scale;
  grad_psi *= scale;
  return {grad_phi.x() + grad_psi.y(), grad_phi.y() - grad_psi.x()};
}

FarField far_field(const DensitySolution& solution, const ElasticMedium& medium,
                   const BoundaryCurve& curve, const Vec2& xhat) {
  if (!(std::abs(xhat.norm() - 1.0) <= 1e-12))
    throw DomainError("far-field direction must be a unit vector");
  Complex phi = 0.0, psi = 0.0;
  for (const NodeSample& s : samples(solution, curve)) {
    const double proj = xhat.dot(s.z);
    phi += std::exp(-kI * medium.kappa_p * proj) * s.g1;
    psi += std::exp(-kI * medium.kappa_s * proj) * s.g2;
  }
  const Complex phase = std::exp(kI * kPi / 4.0);
  const Complex gamma_p = phase / std::sqrt(8.0 * medium.kappa_p * kPi);
  const Complex gamma_s = phase / std::sqrt(8.0 * medium.kappa_s * kPi);

  FarField f;
  f.direction = xhat;
  f.phi_inf = gamma_p * (kPi / solution.n) * phi;
  f.psi_inf = gamma_s * (kPi / solution.n) * psi;
  const Vec2 xperp(-xhat.y(), xhat.x());
  f.vp_inf = (kI * medium.kappa_p * f.phi_inf) * xhat.cast<Complex>();
  f.vs_inf = (-kI * medium.kappa_s * f.psi_inf) * xperp.cast<Complex>();
  return f;
}

}  // namespace elasto
