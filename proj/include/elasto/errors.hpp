#pragma once

#include <stdexcept>
#include <string>

namespace elasto {

/// Argument outside the domain of a special function.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// |z'(t)| vanished where a frame was requested.
class DegenerateCurveError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The collocation matrix is numerically singular. Usually means kappa_p or
/// kappa_s sits on an interior Dirichlet eigenvalue of the obstacle.
class SingularSystemError : public std::runtime_error {
 public:
  SingularSystemError(const std::string& what, double cond_estimate)
      : std::runtime_error(what), cond_estimate_(cond_estimate) {}
  double cond_estimate() const noexcept { return cond_estimate_; }

 private:
  double cond_estimate_;
};

/// Field evaluation requested too close to the boundary for the trapezoid
/// rule to be trusted.
class NearBoundaryError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid user configuration (bad shape name, non-positive parameters, ...).
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace elasto
