#pragma once

#include <Eigen/Core>
#include <utility>

#include "elasto/geometry.hpp"
#include "elasto/kernels.hpp"
#include "elasto/system.hpp"

namespace elasto {

using Vec2c = Eigen::Vector2cd;

/// Far-field amplitudes in one observation direction. The elastic patterns are
/// vp_inf = i kappa_p phi_inf xhat and vs_inf = -i kappa_s psi_inf xhat_perp.
struct FarField {
  Vec2 direction;
  Complex phi_inf, psi_inf;
  Vec2c vp_inf, vs_inf;
};

/// Largest parameter-space node gap mapped to arc length. Points closer than
/// three of these to the boundary are rejected by the evaluators below.
double node_spacing(const BoundaryCurve& curve, const std::vector<double>& nodes);

/// Convergence studies measure the error at coarse n on purpose, so they skip
/// the clearance guard; every other caller keeps it.
enum class Clearance { Enforce, Skip };

/// Scattered potentials phi = S_p g1, psi = S_s g2 at a point away from the
/// boundary, by the trapezoid rule in the parameter.
std::pair<Complex, Complex> eval_potentials(const DensitySolution& solution,
                                            const ElasticMedium& medium,
                                            const BoundaryCurve& curve, const Vec2& x,
                                            Clearance clearance = Clearance::Enforce);

/// v = grad phi + curl psi, with curl psi = (d2 psi, -d1 psi).
Vec2c eval_displacement(const DensitySolution& solution, const ElasticMedium& medium,
                        const BoundaryCurve& curve, const Vec2& x);

/// Throws DomainError unless |xhat| = 1 within 1e-12.
FarField far_field(const DensitySolution& solution, const ElasticMedium& medium,
                   const BoundaryCurve& curve, const Vec2& xhat);

}  // namespace elasto
