#include "elasto/cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <ostream>
#include <sstream>

#include "elasto/errors.hpp"
#include "elasto/fields.hpp"
#include "elasto/system.hpp"

namespace elasto::cli {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr int kDefaultSingleN = 64;

std::string num(double v) {
  if (std::isnan(v)) return "nan";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.16e", v);
  return buf;
}

std::ofstream open_output(const RunManifest& m, const char* file) {
  std::filesystem::create_directories(m.out_dir);
  std::ofstream os(m.out_dir / file, std::ios::binary);
  if (!os) throw ConfigError("cannot write to " + (m.out_dir / file).string());
  return os;
}

DensitySolution solve_single(const RunManifest& m, const ElasticMedium& medium,
                             const BoundaryCurve& curve) {
  const StudyConfig& s = m.study;
  const int n = s.n_values.empty() ? kDefaultSingleN : s.n_values.back();
  const DiscreteSystem sys = assemble(medium, curve, n, s.shifted);
  return solve(sys, boundary_rhs(s.incident, medium, curve, sys.nodes));
}

std::vector<Vec2> grid_points(const GridSpec& g) {
  std::vector<Vec2> pts;
  if (g.kind == GridSpec::Kind::Circle) {
    if (g.count < 1) throw ConfigError("grid count must be positive");
    for (int i = 0; i < g.count; ++i) {
      const double a = 2.0 * kPi * i / g.count;
      pts.emplace_back(g.radius * std::cos(a), g.radius * std::sin(a));
    }
    return pts;
  }
  if (g.nx < 1 || g.ny < 1) throw ConfigError("grid count must be positive");
  for (int iy = 0; iy < g.ny; ++iy) {
    const double y = g.ny == 1 ? g.ymin : g.ymin + (g.ymax - g.ymin) * iy / (g.ny - 1);
    for (int ix = 0; ix < g.nx; ++ix) {
      const double x = g.nx == 1 ? g.xmin : g.xmin + (g.xmax - g.xmin) * ix / (g.nx - 1);
      pts.emplace_back(x, y);
    }
  }
  return pts;
}

std::vector<FourierPair> parse_coeffs(const std::string& text) {
  std::vector<FourierPair> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ';')) {
    if (item.find_first_not_of(" \t") == std::string::npos) continue;
    const auto comma = item.find(',');
    if (comma == std::string::npos) throw ConfigError("coefficient pairs are written a,b;a,b");
    try {
      out.push_back({std::stod(item.substr(0, comma)), std::stod(item.substr(comma + 1))});
    } catch (const std::logic_error&) {
      throw ConfigError("bad coefficient pair '" + item + "'");
    }
  }
  return out;
}

}  // namespace

int cmd_study(const RunManifest& m, std::ostream& log) {
  const std::vector<ErrorReport> reports = run_study(m.study);
  std::ofstream os = open_output(m, "study.csv");
  os << "n,err_phi,err_psi,cond_estimate,wall_ms\n";
  bool failed = false;
  for (const ErrorReport& r : reports) {
    const double ms = m.wall_clock ? r.wall_time.count() : 0.0;
    os << r.n << ',' << num(r.err_phi) << ',' << num(r.err_psi) << ',' << num(r.cond_estimate)
       << ',' << num(ms) << '\n';
    if (r.failure) {
      failed = true;
      log << "n = " << r.n << ": " << *r.failure << '\n';
    } else {
      log << "n = " << r.n << ": err_phi " << num(r.err_phi) << ", err_psi " << num(r.err_psi)
          << ", cond " << num(r.cond_estimate) << '\n';
    }
  }
  return failed ? kExitNumerical : kExitOk;
}

int cmd_farfield(const RunManifest& m, std::ostream& log) {
  if (m.directions < 1) throw ConfigError("direction count must be positive");
  const ElasticMedium medium = m.study.medium();
  const BoundaryCurve curve = m.study.curve();
  const DensitySolution sol = solve_single(m, medium, curve);
  log << "n = " << sol.n << ", cond " << num(sol.cond_estimate) << '\n';

  std::ofstream os = open_output(m, "farfield.csv");
  os << "theta,phi_inf_re,phi_inf_im,psi_inf_re,psi_inf_im\n";
  for (int k = 0; k < m.directions; ++k) {
    const double theta = 2.0 * kPi * k / m.directions;
    const FarField f = far_field(sol, medium, curve, Vec2(std::cos(theta), std::sin(theta)));
    os << num(theta) << ',' << num(f.phi_inf.real()) << ',' << num(f.phi_inf.imag()) << ','
       << num(f.psi_inf.real()) << ',' << num(f.psi_inf.imag()) << '\n';
  }
  return kExitOk;
}

int cmd_solve(const RunManifest& m, std::ostream& log) {
  const std::vector<Vec2> pts = grid_points(m.grid);
  const ElasticMedium medium = m.study.medium();
  const BoundaryCurve curve = m.study.curve();
  const DensitySolution sol = solve_single(m, medium, curve);
  log << "n = " << sol.n << ", cond " << num(sol.cond_estimate) << '\n';

  std::ofstream os = open_output(m, "field.csv");
  os << "x,y,phi_re,phi_im,psi_re,psi_im,v1_re,v1_im,v2_re,v2_im,excluded\n";
  std::size_t excluded = 0;
  for (const Vec2& x : pts) {
    Complex phi = 0.0, psi = 0.0;
    Vec2c v = Vec2c::Zero();
    bool skip = contains(curve, x);
    if (!skip) {
      try {
        std::tie(phi, psi) = eval_potentials(sol, medium, curve, x);
        v = eval_displacement(sol, medium, curve, x);
      } catch (const NearBoundaryError&) {
        skip = true;
      }
    }
    if (skip) {
      ++excluded;
      phi = psi = 0.0;
      v.setZero();
    }
    os << num(x.x()) << ',' << num(x.y()) << ',' << num(phi.real()) << ',' << num(phi.imag())
       << ',' << num(psi.real()) << ',' << num(psi.imag()) << ',' << num(v.x().real()) << ','
       << num(v.x().imag()) << ',' << num(v.y().real()) << ',' << num(v.y().imag()) << ','
       << (skip ? 1 : 0) << '\n';
  }
  if (excluded == pts.size())
    log << "warning: every grid point lies inside or too close to the obstacle\n";
  else if (excluded > 0)
    log << excluded << " grid points excluded near or inside the obstacle\n";
  return kExitOk;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Boundary-integral solver for 2D elastic scattering by a rigid obstacle"};
  app.set_config("--config", "", "flat key=value file; flags given on the command line win");

  std::string command;
  app.add_option("command", command, "solve | study | farfield")
      ->required()
      ->check(CLI::IsMember({"solve", "study", "farfield"}));

  RunManifest m;
  StudyConfig& s = m.study;
  std::string incident = "point-source";
  std::optional<double> source_x, source_y, grading_p;
  double theta = 0.0, amplitude = 1.0;
  std::string coeffs, grid_kind = "circle";
  std::string out_dir = ".";

  app.add_option("--shape", s.shape, "apple | peach | drop | heart | circle | custom")
      ->check(CLI::IsMember({"apple", "peach", "drop", "heart", "circle", "custom"}));
  app.add_option("--radial-coeffs", coeffs, "custom shape r(t) Fourier pairs 'a0,b0;a1,b1;...'");
  app.add_option("--omega", s.omega, "angular frequency");
  app.add_option("--lambda", s.lambda, "Lame lambda");
  app.add_option("--mu", s.mu, "Lame mu");
  app.add_option("--incident", incident, "plane-p | plane-s | point-source")
      ->check(CLI::IsMember({"plane-p", "plane-s", "point-source"}));
  app.add_option("--theta", theta, "plane-wave propagation angle");
  app.add_option("--amplitude", amplitude, "incident amplitude");
  app.add_option("--source-x", source_x, "point-source x");
  app.add_option("--source-y", source_y, "point-source y");
  app.add_option("--n", s.n_values, "collocation order (repeatable)");
  app.add_option("--grading-p", grading_p, "graded-mesh exponent; 0 disables");
  app.add_flag("--shifted", s.shifted, "shift nodes by pi/(2n)");
  app.add_option("--obs-radius", s.obs_radius, "observation circle radius");
  app.add_option("--obs-count", s.obs_count, "half the number of observation points");
  app.add_option("--ref-n", s.ref_n, "reference order for self-convergence");
  app.add_option("--directions", m.directions, "far-field direction count");
  app.add_option("--grid", grid_kind, "circle | rect")->check(CLI::IsMember({"circle", "rect"}));
  app.add_option("--grid-radius", m.grid.radius, "circle grid radius");
  app.add_option("--grid-count", m.grid.count, "circle grid point count");
  app.add_option("--grid-xmin", m.grid.xmin, "rect grid x range");
  app.add_option("--grid-xmax", m.grid.xmax, "rect grid x range");
  app.add_option("--grid-ymin", m.grid.ymin, "rect grid y range");
  app.add_option("--grid-ymax", m.grid.ymax, "rect grid y range");
  app.add_option("--grid-nx", m.grid.nx, "rect grid points along x");
  app.add_option("--grid-ny", m.grid.ny, "rect grid points along y");
  app.add_flag("--wall-clock", m.wall_clock, "record wall time in study.csv");
  app.add_option("--out", out_dir, "output directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    m.command = command == "solve"   ? Command::Solve
                : command == "study" ? Command::Study
                                     : Command::Farfield;
    m.out_dir = out_dir;
    if (auto* cfg = app.get_config_ptr(); cfg && cfg->count() > 0)
      m.config_path = cfg->as<std::string>();
    m.grid.kind = grid_kind == "rect" ? GridSpec::Kind::Rect : GridSpec::Kind::Circle;
    if (s.shape == "custom") s.custom_coeffs = parse_coeffs(coeffs);

    // Corner shapes default to the graded, shifted discretization.
    const bool corner = s.shape == "drop" || s.shape == "heart";
    if (grading_p) {
      if (*grading_p != 0.0) s.grading_p = *grading_p;
    } else if (corner) {
      s.grading_p = kDefaultGrading;
      s.shifted = true;
    }

    if (incident == "point-source") {
      const Vec2 def = default_source(s.shape);
      s.incident = IncidentField::point_source(Vec2(source_x.value_or(def.x()),
                                                    source_y.value_or(def.y())),
                                               amplitude);
    } else if (incident == "plane-p") {
      s.incident = IncidentField::plane_p(theta, amplitude);
    } else {
      s.incident = IncidentField::plane_s(theta, amplitude);
    }

    switch (m.command) {
      case Command::Study: return cmd_study(m, out);
      case Command::Farfield: return cmd_farfield(m, out);
      case Command::Solve: return cmd_solve(m, out);
    }
  } catch (const SingularSystemError& e) {
    err << "error: " << e.what() << '\n';
    return kExitNumerical;
  } catch (const ConfigError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return kExitOk;
}

}  // namespace elasto::cli
