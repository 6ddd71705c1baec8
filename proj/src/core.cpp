#include "hypab/core.hpp"

#include <cmath>

namespace hypab {

PseudospherePoint PseudospherePoint::make(double tau, double phi) {
  if (!(tau > 0.0) || !std::isfinite(tau))
    throw std::invalid_argument("PseudospherePoint: tau must be finite and > 0");
  if (!std::isfinite(phi))
    throw std::invalid_argument("PseudospherePoint: phi must be finite");
  double w = std::fmod(phi, 2.0 * pi);
  if (w < 0.0) w += 2.0 * pi;
  // fmod can round back up to the period itself
  if (w >= 2.0 * pi) w = 0.0;
  return PseudospherePoint{tau, w};
}

EffectiveAngularMomentum effective_channel(std::int64_t l, double xi) {
  if (!std::isfinite(xi))
    throw std::invalid_argument("effective_channel: xi must be finite");
  return EffectiveAngularMomentum{std::fabs(static_cast<double>(l) - xi)};
}

GeodesicInvariants geodesic_invariants(const PseudospherePoint& a,
                                       const PseudospherePoint& b) {
  double d = b.phi - a.phi;
  // reduce to (-pi, pi]
  d = std::remainder(d, 2.0 * pi);
  if (d <= -pi) d = pi;
  double c = std::cosh(a.tau) * std::cosh(b.tau) -
             std::sinh(a.tau) * std::sinh(b.tau) * std::cos(d);
  if (c < 1.0) c = 1.0;
  return GeodesicInvariants{d, c};
}

}  // namespace hypab
