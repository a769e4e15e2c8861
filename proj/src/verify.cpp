#include "elasto/verify.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "elasto/errors.hpp"
#include "elasto/specfun.hpp"

namespace elasto {

namespace {

constexpr double kPi = std::numbers::pi;

struct PotentialSamples {
  std::vector<Complex> phi, psi;
};

PotentialSamples sample_potentials(const DensitySolution& sol, const ElasticMedium& medium,
                                   const BoundaryCurve& curve, const std::vector<Vec2>& points) {
  PotentialSamples out;
  out.phi.reserve(points.size());
  out.psi.reserve(points.size());
  for (const Vec2& x : points) {
    const auto [phi, psi] = eval_potentials(sol, medium, curve, x, Clearance::Skip);
    out.phi.push_back(phi);
    out.psi.push_back(psi);
  }
  return out;
}

DensitySolution solve_at(const StudyConfig& cfg, const ElasticMedium& medium,
                         const BoundaryCurve& curve, int n) {
  const DiscreteSystem sys = assemble(medium, curve, n, cfg.shifted);
  return solve(sys, boundary_rhs(cfg.incident, medium, curve, sys.nodes));
}

}  // namespace

ReferenceFields reference_fields(const ElasticMedium& medium, const Vec2& xbar, const Vec2& x) {
  const Vec2 delta = x - xbar;
  const double r = delta.norm();
  if (!(r > 0.0)) throw DomainError("reference fields are singular at the source point");
  ReferenceFields out;
  out.phi_star = specfun::hankel1(0, medium.kappa_p * r);
  out.psi_star = specfun::hankel1(0, medium.kappa_s * r);
  const Complex dp = -medium.kappa_p * specfun::hankel1(1, medium.kappa_p * r) / r;
  const Complex ds = -medium.kappa_s * specfun::hankel1(1, medium.kappa_s * r) / r;
  out.grad_phi_star = dp * delta.cast<Complex>();
  out.grad_psi_star = ds * delta.cast<Complex>();
  return out;
}

double l2_error(std::span<const Complex> numeric, std::span<const Complex> reference,
                double radius) {
  if (numeric.size() != reference.size() || numeric.empty())
    throw ConfigError("l2_error expects two non-empty sequences of equal length");
  double sum = 0.0;
  for (std::size_t i = 0; i < numeric.size(); ++i) sum += std::norm(numeric[i] - reference[i]);
  return std::sqrt(2.0 * kPi * radius / double(numeric.size()) * sum);
}

std::vector<Vec2> observation_points(double radius, int count) {
  if (count < 1) throw ConfigError("observation count must be positive");
  std::vector<Vec2> pts(2 * std::size_t(count));
  for (int i = 0; i < 2 * count; ++i) {
    const double a = kPi * i / count;
    pts[i] = radius * Vec2(std::cos(a), std::sin(a));
  }
  return pts;
}

Vec2 default_source(const std::string& shape) {
  return shape == "heart" ? Vec2(-0.5, 0.2) : Vec2(0.1, 0.2);
}

BoundaryCurve StudyConfig::curve() const {
  BoundaryCurve base = shape == "custom" ? BoundaryCurve::custom("custom", custom_coeffs)
                                         : BoundaryCurve::from_name(shape);
  return grading_p ? base.graded(*grading_p) : base;
}

ElasticMedium StudyConfig::medium() const { return ElasticMedium::create(lambda, mu, omega); }

void StudyConfig::validate() const {
  if (n_values.empty()) throw ConfigError("study needs at least one n");
  for (std::size_t i = 0; i < n_values.size(); ++i) {
    if (n_values[i] < 4) throw ConfigError("every n must be at least 4");
    if (i > 0 && n_values[i] <= n_values[i - 1])
      throw ConfigError("n values must be strictly increasing");
  }
  if (obs_count < 1) throw ConfigError("observation count must be positive");
  if (!(obs_radius > 0.0)) throw ConfigError("observation radius must be positive");
  if (incident.kind != IncidentField::Kind::PointSource && !ref_n)
    throw ConfigError("plane-wave studies need a reference n for self-convergence");
  if (ref_n && !n_values.empty() && *ref_n <= n_values.back())
    throw ConfigError("reference n must exceed every study n");

  medium();
  const BoundaryCurve c = curve();
  for (const Vec2& x : observation_points(obs_radius, obs_count))
    if (contains(c, x) || boundary_distance(c, x) <= 0.0)
      throw ConfigError("observation circle must lie strictly outside the obstacle");
  if (incident.kind == IncidentField::Kind::PointSource &&
      (!contains(c, incident.source) || boundary_distance(c, incident.source) <= 1e-6))
    throw ConfigError("point source must lie strictly inside the obstacle");
}

std::vector<ErrorReport> run_study(const StudyConfig& config) {
  config.validate();
  const ElasticMedium medium = config.medium();
  const BoundaryCurve curve = config.curve();
  const std::vector<Vec2> points = observation_points(config.obs_radius, config.obs_count);

  PotentialSamples reference;
  if (config.incident.kind == IncidentField::Kind::PointSource) {
    for (const Vec2& x : points) {
      const ReferenceFields rf = reference_fields(medium, config.incident.source, x);
      reference.phi.push_back(config.incident.amplitude * rf.phi_star);
      reference.psi.push_back(config.incident.amplitude * rf.psi_star);
    }
  } else {
    // A failing reference run leaves nothing to compare against; let it throw.
    reference = sample_potentials(solve_at(config, medium, curve, *config.ref_n), medium, curve,
                                  points);
  }

  std::vector<ErrorReport> reports;
  for (int n : config.n_values) {
    ErrorReport rep;
    rep.n = n;
    const auto start = std::chrono::steady_clock::now();
    try {
      const DensitySolution sol = solve_at(config, medium, curve, n);
      const PotentialSamples num = sample_potentials(sol, medium, curve, points);
      rep.err_phi = l2_error(num.phi, reference.phi, config.obs_radius);
      rep.err_psi = l2_error(num.psi, reference.psi, config.obs_radius);
      rep.cond_estimate = sol.cond_estimate;
    } catch (const SingularSystemError& e) {
      rep.err_phi = rep.err_psi = std::numeric_limits<double>::quiet_NaN();
      rep.cond_estimate = e.cond_estimate();
      rep.failure = e.what();
    }
    rep.wall_time = std::chrono::steady_clock::now() - start;
    reports.push_back(rep);
  }
  return reports;
}

}  // namespace elasto
