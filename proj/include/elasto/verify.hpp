#pragma once

#include <chrono>
#include <numbers>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "elasto/fields.hpp"
#include "elasto/geometry.hpp"
#include "elasto/kernels.hpp"
#include "elasto/system.hpp"

namespace elasto {

/// Exact exterior fields phi* = H0(kappa_p |x - xbar|), psi* = H0(kappa_s |x - xbar|)
/// and their gradients.
struct ReferenceFields {
  Complex phi_star, psi_star;
  Vec2c grad_phi_star, grad_psi_star;
};

ReferenceFields reference_fields(const ElasticMedium& medium, const Vec2& xbar, const Vec2& x);

/// sqrt((2 pi R / N) sum |numeric - reference|^2) for N equispaced points on
/// a circle of radius R.
double l2_error(std::span<const Complex> numeric, std::span<const Complex> reference,
                double radius);

/// x_i = R (cos(pi i / count), sin(pi i / count)), i = 0..2 count - 1.
std::vector<Vec2> observation_points(double radius, int count);

struct StudyConfig {
  std::string shape = "apple";
  /// Star-shaped coefficients when shape == "custom".
  std::vector<FourierPair> custom_coeffs;
  double lambda = 3.88, mu = 2.56, omega = std::numbers::pi;
  IncidentField incident = IncidentField::point_source(Vec2(0.1, 0.2));
  std::vector<int> n_values;
  std::optional<double> grading_p;
  bool shifted = false;
  double obs_radius = 3.0;
  int obs_count = 16;
  /// Reference resolution for self-convergence; required for plane waves.
  std::optional<int> ref_n;

  BoundaryCurve curve() const;
  ElasticMedium medium() const;
  /// Throws ConfigError on a malformed study.
  void validate() const;
};

struct ErrorReport {
  int n = 0;
  double err_phi = 0.0, err_psi = 0.0;
  double cond_estimate = 0.0;
  std::chrono::duration<double, std::milli> wall_time{0};
  /// Set when this resolution failed (singular system); errors are then NaN.
  std::optional<std::string> failure;
};

/// Point-source data is compared with the exact fields; plane-wave data is
/// compared with the run at ref_n. A failing n produces a report with
/// `failure` set and the study continues.
std::vector<ErrorReport> run_study(const StudyConfig& config);

/// Default interior source used for manufactured data on the named shapes.
Vec2 default_source(const std::string& shape);

/// Grading defaults for the corner shapes: p = 2 with shifted nodes.
inline constexpr double kDefaultGrading = 2.0;

}  // namespace elasto
