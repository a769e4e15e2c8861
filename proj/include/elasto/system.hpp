#pragma once

#include <Eigen/Dense>
#include <vector>

#include "elasto/geometry.hpp"
#include "elasto/kernels.hpp"

namespace elasto {

/// Dense collocation system for the coupled boundary equations,
///   [ -I + X_p    Y_s   ] [phi1]   [w1]
///   [  Y_p      I - X_s ] [phi2] = [w2],
/// with unknowns phi_l = (g_l o z)|z'| at the 2n nodes.
struct DiscreteSystem {
  int n = 0;
  bool shifted = false;
  std::vector<double> nodes;
  Eigen::MatrixXcd matrix;
};

/// w_l = 2 f_l(z) |z'| at the nodes.
struct BoundaryData {
  Eigen::VectorXcd w1, w2;
};

struct DensitySolution {
  int n = 0;
  bool shifted = false;
  std::vector<double> nodes;
  Eigen::VectorXcd phi1, phi2;
  double cond_estimate = 0.0;  // one-norm estimate of cond(A)
  double residual = 0.0;       // |A phi - w|_inf / |w|_inf
};

/// Exciting field on the obstacle.
struct IncidentField {
  enum class Kind { PlaneP, PlaneS, PointSource };
  Kind kind = Kind::PlaneP;
  double theta = 0.0;  // propagation angle for plane waves
  Vec2 source = Vec2::Zero();
  Complex amplitude = 1.0;

  static IncidentField plane_p(double theta, Complex amplitude = 1.0);
  static IncidentField plane_s(double theta, Complex amplitude = 1.0);
  /// Manufactured data whose exact scattered potentials are
  /// H0(kappa_p |x - xbar|) and H0(kappa_s |x - xbar|).
  static IncidentField point_source(const Vec2& xbar, Complex amplitude = 1.0);
};

/// Entries follow the fully discrete collocation scheme:
///   X_ij = R_j(t_i) k1(t_i, t_j) + (pi/n) k2(t_i, t_j)
///   Y_ij = U_j(t_i) + R_j(t_i) h2(t_i, t_j) + (pi/n) (h3 + h1_tilde)(t_i, t_j).
/// Shifted nodes move collocation and quadrature points together, so the
/// weights only depend on the integer offset i - j. Requires n >= 4.
DiscreteSystem assemble(const ElasticMedium& medium, const BoundaryCurve& curve, int n,
                        bool shifted);

/// Dense LU with partial pivoting. Throws SingularSystemError when the
/// reciprocal condition estimate drops below kSingularRcond.
DensitySolution solve(const DiscreteSystem& system, const BoundaryData& rhs);

inline constexpr double kSingularRcond = 1e-13;

/// Samples w_l = 2 f_l |z'| with f1 = -nu.u_inc, f2 = -tau.u_inc (plane waves)
/// or f1 = d_nu phi* + d_tau psi*, f2 = d_tau phi* - d_nu psi* (point source).
BoundaryData boundary_rhs(const IncidentField& incident, const ElasticMedium& medium,
                          const BoundaryCurve& curve, const std::vector<double>& nodes);

}  // namespace elasto
