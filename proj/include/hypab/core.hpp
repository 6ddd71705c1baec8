#pragma once

// Core model types for a charged particle on the pseudosphere (the
// hyperbolic plane of constant negative curvature -1/R^2) threaded by a
// single flux line through the "tip" tau = 0, optionally with a constant
// perpendicular magnetic field.
//
// Units: hbar, mass, c and R are carried explicitly so that every energy
// below comes out in the caller's unit system; all defaults are 1.

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace hypab {

using Complex = std::complex<double>;

inline constexpr double pi = 3.14159265358979323846;

struct PhysicalParams {
  double hbar = 1.0;
  double mass = 1.0;
  double light_speed = 1.0;
  double curvature_radius = 1.0;  // R

  void check() const {
    if (!(hbar > 0.0) || !(mass > 0.0) || !(light_speed > 0.0) ||
        !(curvature_radius > 0.0))
      throw std::invalid_argument("PhysicalParams: all scales must be > 0");
  }

  // hbar^2 / (2 m R^2), the natural energy quantum of the radial problems.
  double energy_scale() const {
    return hbar * hbar / (2.0 * mass * curvature_radius * curvature_radius);
  }
};

// Flux through the tip and (optionally) a homogeneous field, both kept in
// the dimensionless combinations that enter the spectra:
//   xi = e*Phi / (2*pi*hbar*c)     (flux in units of the flux quantum)
//   b  = e*B*R^2 / (2*hbar*c)      (field strength parameter, >= 0)
struct FluxParams {
  double xi = 0.0;
  double b = 0.0;

  void check() const {
    if (!(b >= 0.0)) throw std::invalid_argument("FluxParams: b must be >= 0");
  }

  // Physical flux for a given parameter set; informational only.
  double flux_phi(const PhysicalParams& p) const {
    return xi * 2.0 * pi * p.hbar * p.light_speed;  // times 1/e with e = 1
  }
};

// Point on the pseudosphere in geodesic polar coordinates about the tip:
// ds^2 = R^2 (dtau^2 + sinh^2(tau) dphi^2), tau > 0, phi in [0, 2*pi).
struct PseudospherePoint {
  double tau = 1.0;
  double phi = 0.0;

  static PseudospherePoint make(double tau, double phi);
};

struct QuantumNumbers {
  std::int64_t l = 0;   // angular momentum quantum number
  std::int64_t N = 0;   // radial (band / principal) quantum number
};

// The flux line shifts the angular quantum number: the radial equations all
// depend on l and xi only through lambda = |l - xi| >= 0.
struct EffectiveAngularMomentum {
  double lam = 0.0;
};

EffectiveAngularMomentum effective_channel(std::int64_t l, double xi);

// Relative azimuth reduced to (-pi, pi] plus the geodesic-distance cosh,
// cosh(d/R) = cosh tau1 cosh tau2 - sinh tau1 sinh tau2 cos(dphi),
// clamped to >= 1 against rounding for coincident points.
struct GeodesicInvariants {
  double delta_phi = 0.0;
  double cosh_distance = 1.0;
};

GeodesicInvariants geodesic_invariants(const PseudospherePoint& a,
                                       const PseudospherePoint& b);

// Shared truncation control for the hypergeometric-type series.
struct SeriesControls {
  double rel_tol = 1e-12;
  std::uint64_t max_terms = 1000000;
};

// Thrown when an iteration or series fails to reach its tolerance.
struct ConvergenceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace hypab
