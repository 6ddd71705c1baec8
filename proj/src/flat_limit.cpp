#include "hypab/flat_limit.hpp"

#include <cmath>
#include <stdexcept>

#include "hypab/specfun.hpp"

namespace hypab {

void InterferenceGeometry::check() const {
  params.check();
  if (!(tau1 > 0.0) || !(tau2 > 0.0))
    throw std::invalid_argument("InterferenceGeometry: tau must be > 0");
  if (!(R > 0.0))
    throw std::invalid_argument("InterferenceGeometry: R must be > 0");
  if (!(T > 0.0))
    throw std::invalid_argument("InterferenceGeometry: T must be > 0");
}

LimitCheckResult legendre_bessel_limit_check(double mu, double z, double nu,
                                             const SeriesControls& ctl) {
  if (!(mu >= 0.0) || !(z > 0.0))
    throw std::invalid_argument(
        "legendre_bessel_limit_check: need mu >= 0 and z > 0");
  if (!(nu >= 10.0))
    throw std::invalid_argument("legendre_bessel_limit_check: nu must be >= 10");
  // legendre_p indexes the degree as nu - 1/2, so degree nu needs nu + 1/2.
  const Complex p = legendre_p(mu, Complex(nu + 0.5, 0.0), z / nu, ctl);
  LimitCheckResult r;
  r.lhs = std::pow(nu, mu) * p.real();
  r.rhs = bessel_i(mu, z, ctl);
  r.rel_dev = std::fabs(r.lhs - r.rhs) / std::fabs(r.rhs);
  return r;
}

Complex flat_radial_kernel(double lam, double r1, double r2, Complex time,
                           const PhysicalParams& params,
                           const SeriesControls& ctl) {
  params.check();
  if (!(r1 > 0.0) || !(r2 > 0.0))
    throw std::invalid_argument("flat_radial_kernel: radii must be > 0");
  if (time == Complex(0.0, 0.0))
    throw std::invalid_argument("flat_radial_kernel: time must be nonzero");
  const Complex iht = Complex(0.0, 1.0) * params.hbar * time;
  const Complex pref = params.mass / (2.0 * pi * iht);
  // exp(i m (r1^2+r2^2) / (2 hbar T)); note i/T = -1/(iT)
  const Complex expo =
      std::exp(-params.mass * (r1 * r1 + r2 * r2) / (2.0 * iht));
  const Complex z = params.mass * r1 * r2 / iht;
  return pref * expo * bessel_i_complex(std::fabs(lam), z, ctl);
}

Complex partial_propagator_flat(int n, const InterferenceGeometry& g,
                                double xi) {
  g.check();
  const double m = g.params.mass;
  const double hb = g.params.hbar;
  const double theta = g.delta_phi() + 2.0 * pi * n;
  const double rsq = m * g.R * g.R / (hb * g.T);
  const double phase = 0.5 * rsq * (g.tau2 - g.tau1) * (g.tau2 - g.tau1) +
                       g.T * hb / (8.0 * m * g.R * g.R * g.tau1 * g.tau2) +
                       xi * theta +
                       0.5 * rsq * g.tau1 * g.tau2 * theta * theta;
  const Complex pref = m / (2.0 * pi * Complex(0.0, 1.0) * hb * g.T);
  return pref * std::exp(Complex(0.0, phase));
}

namespace {

double interference_argument(int n, int l, const InterferenceGeometry& g,
                             double xi) {
  const double kappa =
      g.params.mass * g.R * g.R * g.tau1 * g.tau2 / (g.params.hbar * g.T);
  const double d = static_cast<double>(l - n);
  return 2.0 * pi * d * (xi + kappa * (g.delta_phi() - pi)) +
         2.0 * pi * pi * kappa * d * static_cast<double>(l + n + 1);
}

}  // namespace

double interference_term(int n, int l, const InterferenceGeometry& g,
                         double xi) {
  g.check();
  const double a = g.params.mass / (2.0 * pi * g.params.hbar * g.T);
  // (m / 2 pi i hbar T)^2 = -(m / 2 pi hbar T)^2, negative real
  return -2.0 * a * a * std::cos(interference_argument(n, l, g, xi));
}

double interference_contrast(int n, int l, const InterferenceGeometry& g,
                             double xi) {
  g.check();
  return std::cos(interference_argument(n, l, g, xi));
}

double max_interference(double xi, double time, const PhysicalParams& params) {
  params.check();
  if (!(time > 0.0))
    throw std::invalid_argument("max_interference: time must be > 0");
  const double a = params.mass / (2.0 * pi * params.hbar * time);
  return -2.0 * a * a * std::cos(2.0 * pi * xi);
}

double max_interference_contrast(double xi) {
  return std::cos(2.0 * pi * xi);
}

}  // namespace hypab
