#pragma once

#include <complex>

#include "elasto/geometry.hpp"

namespace elasto {

using Complex = std::complex<double>;

/// Compressional (P) or shear (S) part of the Helmholtz decomposition.
enum class Wave { P, S };

/// Homogeneous isotropic medium of unit density.
struct ElasticMedium {
  double lambda = 0, mu = 0, omega = 0;
  double kappa_p = 0, kappa_s = 0;

  /// Validates mu > 0, lambda + mu > 0, omega > 0.
  static ElasticMedium create(double lambda, double mu, double omega);
  double kappa(Wave wave) const { return wave == Wave::P ? kappa_p : kappa_s; }
};

/// Normal-derivative kernel k = k1 ln(4 sin^2((t-s)/2)) + k2.
struct KernelK {
  Complex k1, k2;
};

/// Tangential-derivative kernel h = h1 cot((s-t)/2) + h2 ln(4 sin^2((t-s)/2)) + h3,
/// together with h1_tilde = cot((s-t)/2) (h1 - 1/(2pi)).
struct KernelH {
  double h1;
  Complex h2, h3, h1_tilde;
};

/// Every split component for one wavenumber at one (t, s) pair. This is what
/// assembly consumes; kernel_k / kernel_h are thin wrappers.
struct KernelSplit {
  KernelK k;
  KernelH h;
};

/// t_minus_s is only used for the periodic factors ln(4 sin^2) and cot; the
/// pair is treated as diagonal when it is a multiple of 2pi.
KernelSplit split_kernels(double kappa, const CurvePoint& at_t, const CurvePoint& at_s,
                          double t_minus_s);

KernelK kernel_k(const ElasticMedium& medium, const BoundaryCurve& curve, Wave sigma, double t,
                 double s);
KernelH kernel_h(const ElasticMedium& medium, const BoundaryCurve& curve, Wave sigma, double t,
                 double s);

/// Unsplit kernels (i kappa/2) m(t).(z(s) - z(t)) H1(kappa r)/r with m = n or
/// n_perp. Singular on the diagonal; only meaningful for t != s.
Complex kernel_k_unsplit(double kappa, const CurvePoint& at_t, const CurvePoint& at_s);
Complex kernel_h_unsplit(double kappa, const CurvePoint& at_t, const CurvePoint& at_s);

/// Diagonal value of h1_tilde: -(z'.z'') / (2pi |z'|^2).
double h1_tilde_diagonal(const CurvePoint& point);

}  // namespace elasto
