#include "elasto/system.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "elasto/errors.hpp"
#include "elasto/quadrature.hpp"
#include "elasto/specfun.hpp"

namespace elasto {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr Complex kI{0.0, 1.0};

using Vec2c = Eigen::Vector2cd;

// Gradient of H0(kappa |x - xbar|) = -kappa H1(kappa r) (x - xbar)/r.
Vec2c hankel_source_gradient(double kappa, const Vec2& xbar, const Vec2& x) {
  const Vec2 delta = x - xbar;
  const double r = delta.norm();
  const Complex scale = -kappa * specfun::hankel1(1, kappa * r) / r;
  return Vec2c(scale * delta.x(), scale * delta.y());
}

Complex dot(const Vec2& a, const Vec2c& b) { return a.x() * b.x() + a.y() * b.y(); }

}  // namespace

IncidentField IncidentField::plane_p(double theta, Complex amplitude) {
  IncidentField f;
  f.kind = Kind::PlaneP;
  f.theta = theta;
  f.amplitude = amplitude;
  return f;
}

IncidentField IncidentField::plane_s(double theta, Complex amplitude) {
  IncidentField f = plane_p(theta, amplitude);
  f.kind = Kind::PlaneS;
  return f;
}

IncidentField IncidentField::point_source(const Vec2& xbar, Complex amplitude) {
  IncidentField f;
  f.kind = Kind::PointSource;
  f.source = xbar;
  f.amplitude = amplitude;
  return f;
}

DiscreteSystem assemble(const ElasticMedium& medium, const BoundaryCurve& curve, int n,
                        bool shifted) {
  if (n < 4) throw ConfigError("assemble requires n >= 4");
  DiscreteSystem sys;
  sys.n = n;
  sys.shifted = shifted;
  sys.nodes = collocation_nodes(n, shifted);
  const int m = 2 * n;

  std::vector<CurvePoint> points(m);
  for (int j = 0; j < m; ++j) {
    points[j] = curve.eval(sys.nodes[j]);
    frame(points[j]);  // rejects degenerate parametrizations
  }

  // R_j(t_i) and U_j(t_i) depend only on (j - i) mod 2n.
  const std::vector<double> log_row = log_weights(n, 0.0).values;
  const std::vector<double> cot_row = cauchy_weights(n, 0.0).values;
  const double h = kPi / n;

  sys.matrix.resize(2 * m, 2 * m);
  auto& a = sys.matrix;
  for (int j = 0; j < m; ++j) {
    for (int i = 0; i < m; ++i) {
      const int offset = ((j - i) % m + m) % m;
      const double r = log_row[offset];
      const double u = cot_row[offset];
      const double dt = sys.nodes[i] - sys.nodes[j];
      const KernelSplit p = split_kernels(medium.kappa_p, points[i], points[j], dt);
      const KernelSplit s = split_kernels(medium.kappa_s, points[i], points[j], dt);

      const Complex xp = r * p.k.k1 + h * p.k.k2;
      const Complex xs = r * s.k.k1 + h * s.k.k2;
      const Complex yp = u + r * p.h.h2 + h * (p.h.h3 + p.h.h1_tilde);
      const Complex ys = u + r * s.h.h2 + h * (s.h.h3 + s.h.h1_tilde);
      const double delta = (i == j) ? 1.0 : 0.0;

      a(i, j) = -delta + xp;
      a(i, m + j) = ys;
      a(m + i, j) = yp;
      a(m + i, m + j) = delta - xs;
    }
  }
  return sys;
}

DensitySolution solve(const DiscreteSystem& system, const BoundaryData& rhs) {
  const Eigen::Index m = 2 * Eigen::Index(system.n);
  if (system.matrix.rows() != 2 * m || rhs.w1.size() != m || rhs.w2.size() != m)
    throw ConfigError("right-hand side does not match the assembled system");

  Eigen::VectorXcd w(2 * m);
  w << rhs.w1, rhs.w2;

  const Eigen::PartialPivLU<Eigen::MatrixXcd> lu(system.matrix);
  // PartialPivLU does not guard against zero pivots, and its rcond estimate is
  // meaningless once one appears; the pivot spread is a cheap lower bound.
  const Eigen::VectorXd pivots = lu.matrixLU().diagonal().cwiseAbs();
  const double spread = pivots.minCoeff() / pivots.maxCoeff();
  const double rcond = std::min(lu.rcond(), spread);
  const double cond = rcond > 0.0 ? 1.0 / rcond : std::numeric_limits<double>::infinity();
  if (!(rcond >= kSingularRcond)) {
    std::ostringstream msg;
    msg << "collocation matrix is numerically singular (cond estimate " << cond
        << "); kappa_p or kappa_s may be an interior Dirichlet eigenvalue";
    throw SingularSystemError(msg.str(), cond);
  }

  const Eigen::VectorXcd x = lu.solve(w);
  DensitySolution sol;
  sol.n = system.n;
  sol.shifted = system.shifted;
  sol.nodes = system.nodes;
  sol.phi1 = x.head(m);
  sol.phi2 = x.tail(m);
  sol.cond_estimate = cond;
  const double wnorm = w.cwiseAbs().maxCoeff();
  const double rnorm = (system.matrix * x - w).cwiseAbs().maxCoeff();
  sol.residual = wnorm > 0.0 ? rnorm / wnorm : rnorm;
  return sol;
}

BoundaryData boundary_rhs(const IncidentField& incident, const ElasticMedium& medium,
                          const BoundaryCurve& curve, const std::vector<double>& nodes) {
  if (incident.kind == IncidentField::Kind::PointSource) {
    const Vec2& xbar = incident.source;
    if (!contains(curve, xbar) || boundary_distance(curve, xbar) <= 1e-6)
      throw ConfigError("point source must lie strictly inside the obstacle");
  }

  const Eigen::Index m = Eigen::Index(nodes.size());
  BoundaryData out{Eigen::VectorXcd(m), Eigen::VectorXcd(m)};
  const Vec2 d(std::cos(incident.theta), std::sin(incident.theta));
  const Vec2 d_perp(-d.y(), d.x());

  for (Eigen::Index j = 0; j < m; ++j) {
    const CurvePoint p = curve.eval(nodes[j]);
    const Frame fr = frame(p);
    const Vec2 nu = fr.n / fr.speed;
    const Vec2 tau = fr.n_perp / fr.speed;

    Complex f1, f2;
    switch (incident.kind) {
      case IncidentField::Kind::PlaneP: {
        const Complex phase = std::exp(kI * medium.kappa_p * d.dot(p.z));
        f1 = -nu.dot(d) * phase;
        f2 = -tau.dot(d) * phase;
        break;
      }
      case IncidentField::Kind::PlaneS: {
        const Complex phase = std::exp(kI * medium.kappa_s * d.dot(p.z));
        f1 = -nu.dot(d_perp) * phase;
        f2 = -tau.dot(d_perp) * phase;
        break;
      }
      case IncidentField::Kind::PointSource: {
        const Vec2c gp = hankel_source_gradient(medium.kappa_p, incident.source, p.z);
        const Vec2c gs = hankel_source_gradient(medium.kappa_s, incident.source, p.z);
        f1 = dot(nu, gp) + dot(tau, gs);
        f2 = dot(tau, gp) - dot(nu, gs);
        break;
      }
    }
    out.w1[j] = 2.0 * incident.amplitude * f1 * fr.speed;
    out.w2[j] = 2.0 * incident.amplitude * f2 * fr.speed;
  }
  return out;
}

}  // namespace elasto
