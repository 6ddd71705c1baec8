#pragma once

// Flat-space limit R -> infinity: the Legendre -> Bessel degeneration,
// the free radial kernel in polar coordinates, the asymptotic winding
// propagator K_n, and the two-path interference terms I_nl.
//
// Everything here is closed form, so real time is allowed (no
// oscillatory quadrature is ever needed).

#include "hypab/core.hpp"

namespace hypab {

// Geometry of a two-path interference measurement in the flat limit.
// tau1/tau2 are pseudosphere coordinates; the physical radii are
// r = R * tau.
struct InterferenceGeometry {
  double tau1 = 0.02;
  double tau2 = 0.02;
  double phi1 = 0.0;
  double phi2 = 0.0;
  double R = 50.0;  // curvature radius re-introduced by r = R tau
  double T = 1.0;   // real time
  PhysicalParams params{};

  double delta_phi() const { return phi2 - phi1; }
  void check() const;  // throws std::invalid_argument
};

struct LimitCheckResult {
  double lhs;      // nu^mu P^{-mu}_nu(cosh(z/nu))
  double rhs;      // I_mu(z)
  double rel_dev;  // |lhs - rhs| / |rhs|
};

// Degeneration lim_{nu->inf} nu^mu P^{-mu}_nu(cosh(z/nu)) = I_mu(z),
// evaluated at finite nu >= 10 with both sides reported.
LimitCheckResult legendre_bessel_limit_check(double mu, double z, double nu,
                                             const SeriesControls& ctl = {});

// Free radial kernel in polar coordinates,
//   K_lam = (m / 2 pi i hbar T) exp(i m (r1^2 + r2^2) / 2 hbar T)
//             * I_{|lam|}(m r1 r2 / (i hbar T)).
// Euclidean evaluation via time = -i beta.
Complex flat_radial_kernel(double lam, double r1, double r2, Complex time,
                           const PhysicalParams& params = {},
                           const SeriesControls& ctl = {});

// Asymptotic winding propagator in the flat limit,
//   K_n = (m / 2 pi i hbar T) exp(i [ m R^2 (tau2 - tau1)^2 / 2 hbar T
//           + hbar T / (8 m R^2 tau1 tau2) + xi Theta_n
//           + (m R^2 tau1 tau2 / 2 hbar T) Theta_n^2 ]),
// with Theta_n = phi2 - phi1 + 2 pi n.  The winding angle enters
// quadratically: that is what the stationary-phase (Gaussian) lambda
// integral over the asymptotic Bessel shape produces.
Complex partial_propagator_flat(int n, const InterferenceGeometry& g,
                                double xi);

// Two-path interference term, signed as printed:
//   I_nl = 2 (m / 2 pi i hbar T)^2
//            cos[ 2 pi (l-n) (xi + kappa (dphi - pi))
//                 + 2 pi^2 kappa (l-n)(l+n+1) ],
// kappa = m R^2 tau1 tau2 / (hbar T).  The squared prefactor is the
// negative real number -(m / 2 pi hbar T)^2.
double interference_term(int n, int l, const InterferenceGeometry& g,
                         double xi);

// The cosine factor of interference_term alone (prefactor-free
// contrast; this is what the CLI reports by default).
double interference_contrast(int n, int l, const InterferenceGeometry& g,
                             double xi);

// Maximal interference term I_{0,-1} = 2 (m / 2 pi i hbar T)^2 cos(2 pi xi),
// signed as printed.
double max_interference(double xi, double time,
                        const PhysicalParams& params = {});

// Contrast variant of the above: cos(2 pi xi).
double max_interference_contrast(double xi);

}  // namespace hypab
