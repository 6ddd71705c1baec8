#include "hypab/potentials.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

#include "hypab/quadrature.hpp"
#include "hypab/specfun.hpp"

namespace hypab {

HiggsParams HiggsParams::from_omega(double omega,
                                    const PhysicalParams& params) {
  params.check();
  if (!(omega > 0.0)) {
    throw std::invalid_argument("HiggsParams: omega must be > 0");
  }
  double r2 = params.curvature_radius * params.curvature_radius;
  HiggsParams h;
  h.omega = omega;
  h.nu = std::hypot(params.mass * omega * r2 / params.hbar, 0.5);
  return h;
}

void HiggsParams::check(const PhysicalParams& params) const {
  params.check();
  if (!(omega > 0.0) || !(nu >= 0.5)) {
    throw std::invalid_argument("HiggsParams: need omega > 0 and nu >= 1/2");
  }
  double r2 = params.curvature_radius * params.curvature_radius;
  double rhs = params.mass * omega * r2 / params.hbar;
  rhs *= rhs;
  if (std::fabs(nu * nu - 0.25 - rhs) > 1e-9 * (0.25 + rhs)) {
    throw std::invalid_argument(
        "HiggsParams: nu inconsistent with omega (nu^2 - 1/4 != (m w R^2/hbar)^2)");
  }
}

CoulombParams CoulombParams::from_alpha(double alpha,
                                        const PhysicalParams& params) {
  params.check();
  if (!(alpha > 0.0)) {
    throw std::invalid_argument("CoulombParams: alpha must be > 0");
  }
  CoulombParams c;
  c.alpha = alpha;
  c.bohr_radius = params.hbar * params.hbar / (params.mass * alpha);
  return c;
}

void CoulombParams::check(const PhysicalParams& params) const {
  params.check();
  if (!(alpha > 0.0) || !(bohr_radius > 0.0)) {
    throw std::invalid_argument(
        "CoulombParams: need alpha > 0 and bohr_radius > 0");
  }
  double a = params.hbar * params.hbar / (params.mass * alpha);
  if (std::fabs(bohr_radius - a) > 1e-9 * a) {
    throw std::invalid_argument(
        "CoulombParams: bohr_radius inconsistent with alpha");
  }
}

namespace {

double potential_shift(const HiggsParams& h, const PhysicalParams& params) {
  double r2 = params.curvature_radius * params.curvature_radius;
  return 0.5 * params.mass * h.omega * h.omega * r2;
}

double higgs_level(const HiggsParams& h, double lam, std::int64_t n,
                   const PhysicalParams& params) {
  double s = 2.0 * static_cast<double>(n) + lam - h.nu + 1.0;
  return -params.energy_scale() * (s * s - 0.25) + potential_shift(h, params);
}

// decay exponent of S_n at large tau; > 0 iff the state is normalizable
double bound_sigma(const HiggsParams& h, double lam, std::int64_t n) {
  return h.nu - lam - 2.0 * static_cast<double>(n) - 1.0;
}

// log of the normalization constant C_n (printed_form swaps in the
// Gamma(nu - lam) variant)
double bound_log_const(const HiggsParams& h, double lam, std::int64_t n,
                       const PhysicalParams& params, bool printed_form) {
  double nn = static_cast<double>(n);
  double sig = bound_sigma(h, lam, n);
  double num = std::log(2.0 * sig) + std::lgamma(nn + lam + 1.0) +
               (printed_form ? std::lgamma(h.nu - lam) : std::lgamma(h.nu - nn));
  double den = 2.0 * std::log(params.curvature_radius) +
               std::lgamma(h.nu - lam - nn) + std::lgamma(nn + 1.0);
  return 0.5 * (num - den) - std::lgamma(lam + 1.0);
}

// normalized bound radial function S_n(tau)
double bound_radial(const HiggsParams& h, double lam, std::int64_t n,
                    double tau, const PhysicalParams& params,
                    const SeriesControls& ctl, bool printed_form) {
  double nn = static_cast<double>(n);
  double t = std::tanh(tau);
  Complex first = printed_form ? Complex(-lam, 0.0) : Complex(-nn, 0.0);
  double f = hyp2f1(first, Complex(h.nu - nn, 0.0), Complex(1.0 + lam, 0.0),
                    t * t, ctl)
                 .real();
  double cosh_pow = (printed_form ? nn : 2.0 * nn) + 0.5 - h.nu;
  double logmag = bound_log_const(h, lam, n, params, printed_form) +
                  (lam + 0.5) * std::log(std::sinh(tau)) +
                  cosh_pow * std::log(std::cosh(tau));
  return std::exp(logmag) * f;
}

// log of k sinh(pi k) / (2 pi^2 R^2), stable for all k > 0
double log_continuum_density(double k, const PhysicalParams& params) {
  double log_sinh = pi * k + std::log1p(-std::exp(-2.0 * pi * k)) -
                    std::log(2.0);
  double r2 = params.curvature_radius * params.curvature_radius;
  return std::log(k) + log_sinh - std::log(2.0 * pi * pi * r2);
}

// Re[(cosh tau)^{ik} 2F1(a, b; 1+lam; tanh^2 tau)] * (tanh tau)^{lam+1/2};
// the bracket is real analytically, its conjugate being the Euler
// transform of itself.
double continuum_radial_shape(double k, double lam, double tau,
                              const HiggsParams& h,
                              const SeriesControls& ctl) {
  double t = std::tanh(tau);
  Complex a(0.5 * (h.nu + lam + 1.0), -0.5 * k);
  Complex b(0.5 * (lam - h.nu + 1.0), -0.5 * k);
  Complex f = hyp2f1(a, b, Complex(1.0 + lam, 0.0), t * t, ctl);
  double arg = k * std::log(std::cosh(tau));
  Complex phase(std::cos(arg), std::sin(arg));
  return std::pow(t, lam + 0.5) * (phase * f).real();
}

// log |Gamma(a)|^2 |Gamma(b)|^2 / Gamma(1+lam)^2 of the channel at k
double log_continuum_gammas(double k, double lam, const HiggsParams& h) {
  Complex a(0.5 * (h.nu + lam + 1.0), -0.5 * k);
  Complex b(0.5 * (lam - h.nu + 1.0), -0.5 * k);
  return 2.0 * log_gamma(a).real() + 2.0 * log_gamma(b).real() -
         2.0 * std::lgamma(1.0 + lam);
}

}  // namespace

std::vector<double> higgs_bound_spectrum(const HiggsParams& h, std::int64_t l,
                                         double xi,
                                         const PhysicalParams& params) {
  h.check(params);
  double lam = effective_channel(l, xi).lam;
  double window = h.nu - lam - 1.0;
  std::vector<double> out;
  if (window < 0.0) return out;
  auto n_max = static_cast<std::int64_t>(std::floor(window));
  out.reserve(static_cast<std::size_t>(n_max) + 1);
  for (std::int64_t n = 0; n <= n_max; ++n) {
    out.push_back(higgs_level(h, lam, n, params));
  }
  return out;
}

Complex higgs_bound_wavefunction(std::int64_t n, std::int64_t l, double xi,
                                 const HiggsParams& h,
                                 const PseudospherePoint& p,
                                 const PhysicalParams& params,
                                 const SeriesControls& ctl,
                                 bool printed_form) {
  h.check(params);
  if (!(p.tau > 0.0)) {
    throw std::invalid_argument("higgs_bound_wavefunction: need tau > 0");
  }
  double lam = effective_channel(l, xi).lam;
  if (n < 0 || static_cast<double>(n) > h.nu - lam - 1.0) {
    throw std::invalid_argument(
        "higgs_bound_wavefunction: n outside the bound window");
  }
  if (!(bound_sigma(h, lam, n) > 0.0)) {
    throw std::invalid_argument(
        "higgs_bound_wavefunction: window-edge state with 2n+|l-xi|+1 >= nu "
        "is not square integrable");
  }
  double s = bound_radial(h, lam, n, p.tau, params, ctl, printed_form);
  double radial = s / std::sqrt(2.0 * pi * std::sinh(p.tau));
  double a = static_cast<double>(l) * p.phi;
  return Complex(std::cos(a), std::sin(a)) * radial;
}

HiggsScatteringState higgs_scattering_state(double k, std::int64_t l,
                                            double xi, const HiggsParams& h,
                                            const PseudospherePoint& p,
                                            const PhysicalParams& params,
                                            const SeriesControls& ctl,
                                            bool printed_form) {
  h.check(params);
  if (!(k > 0.0)) {
    throw std::invalid_argument("higgs_scattering_state: need k > 0");
  }
  if (!(p.tau > 0.0)) {
    throw std::invalid_argument("higgs_scattering_state: need tau > 0");
  }
  double lam = effective_channel(l, xi).lam;

  HiggsScatteringState st;
  st.energy = params.energy_scale() * (k * k + 0.25) + potential_shift(h, params);

  double log_density = 0.5 * log_continuum_density(k, params);
  Complex radial;
  if (printed_form) {
    // verbatim variant: complex Gamma((nu-lam+1-ik)/2) Gamma((lam-nu+1-ik)/2)
    // constant and no projection onto the real bracket
    double t = std::tanh(p.tau);
    Complex a(0.5 * (h.nu + lam + 1.0), -0.5 * k);
    Complex b(0.5 * (lam - h.nu + 1.0), -0.5 * k);
    Complex g1(0.5 * (h.nu - lam + 1.0), -0.5 * k);
    Complex f = hyp2f1(a, b, Complex(1.0 + lam, 0.0), t * t, ctl);
    double arg = k * std::log(std::cosh(p.tau));
    Complex phase(std::cos(arg), std::sin(arg));
    Complex c = std::exp(log_gamma(g1) + log_gamma(b) +
                         Complex(log_density - std::lgamma(1.0 + lam), 0.0));
    radial = c * std::pow(t, lam + 0.5) * phase * f;
  } else {
    double logc = log_density + 0.5 * log_continuum_gammas(k, lam, h);
    radial = Complex(std::exp(logc) *
                         continuum_radial_shape(k, lam, p.tau, h, ctl),
                     0.0);
  }
  double a = static_cast<double>(l) * p.phi;
  st.value = Complex(std::cos(a), std::sin(a)) * radial /
             std::sqrt(2.0 * pi * std::sinh(p.tau));
  return st;
}

std::vector<double> coulomb_bound_spectrum(const CoulombParams& c,
                                           std::int64_t l, double xi,
                                           const PhysicalParams& params) {
  c.check(params);
  double lam = effective_channel(l, xi).lam;
  double R = params.curvature_radius;
  double window = std::sqrt(R / c.bohr_radius) - lam - 0.5;
  std::vector<double> out;
  if (window < 0.0) return out;
  auto n_max = static_cast<std::int64_t>(std::floor(window));
  out.reserve(static_cast<std::size_t>(n_max) + 1);
  double es = params.energy_scale();
  double ryd = params.mass * c.alpha * c.alpha /
               (2.0 * params.hbar * params.hbar);
  for (std::int64_t n = 0; n <= n_max; ++n) {
    double nt = static_cast<double>(n) + lam + 0.5;
    out.push_back(c.alpha / R - es * (nt * nt - 0.25) - ryd / (nt * nt));
  }
  return out;
}

double higgs_radial_kernel(double lam, double tau1, double tau2, double beta,
                           const HiggsParams& h, const KernelRequest& req) {
  req.check();
  h.check(req.params);
  if (lam < 0.0 || !(tau1 > 0.0) || !(tau2 > 0.0)) {
    throw std::invalid_argument(
        "higgs_radial_kernel: need lam >= 0 and tau > 0");
  }
  double es = req.params.energy_scale();
  double vshift = potential_shift(h, req.params);

  // square-integrable bound states; the window-edge state with sigma < 0
  // does not belong to the spectral decomposition
  double bound = 0.0;
  for (std::int64_t n = 0; bound_sigma(h, lam, n) > 0.0; ++n) {
    double s1 = bound_radial(h, lam, n, tau1, req.params, req.series, false);
    double s2 = bound_radial(h, lam, n, tau2, req.params, req.series, false);
    bound += s1 * s2 * std::exp(-beta * higgs_level(h, lam, n, req.params));
  }

  double kmax = req.resolved_k_max();
  // Boltzmann weight alone is below 1e-20 past this point
  double k_cut = std::min(kmax, std::sqrt(46.0 / (beta * es)) + 3.0);
  auto f = [&](double k) {
    if (!(k > 0.0)) return 0.0;
    double logw = log_continuum_density(k, req.params) +
                  log_continuum_gammas(k, lam, h) -
                  beta * (es * (k * k + 0.25) + vshift);
    double w = std::exp(logw);
    if (w == 0.0) return 0.0;
    // shape product first, so the result is bitwise symmetric in tau1, tau2
    double uu = continuum_radial_shape(k, lam, tau1, h, req.series) *
                continuum_radial_shape(k, lam, tau2, h, req.series);
    return w * uu;
  };
  // far from the weight's peak the integrand is roundoff noise around
  // zero, which a purely relative goal can never certify; anchor the
  // absolute goal to the sampled peak instead
  double fmax = 0.0;
  for (int i = 1; i <= 24; ++i) {
    fmax = std::max(fmax,
                    std::fabs(f(k_cut * static_cast<double>(i) / 24.0)));
  }
  auto q = integrate_gk(f, 0.0, k_cut, req.quad_rel_tol,
                        1e-2 * req.quad_rel_tol * fmax * k_cut,
                        req.quad_max_subdiv);
  if (!q.converged) {
    throw ConvergenceError("higgs_radial_kernel: quadrature failure");
  }
  if (k_cut >= kmax - 1e-12 * kmax) {
    // cut by the caller's k_max, not by the underflowing weight: bound the
    // Laplace tail by endpoint samples against a quarter oscillation
    double env = std::max({std::fabs(f(k_cut)), std::fabs(f(k_cut - 0.25)),
                           std::fabs(f(k_cut - 0.5))});
    double tail = env / (2.0 * beta * es * k_cut);
    double scale = std::max(std::fabs(bound + q.value), 1e-300);
    if (tail > req.truncation_tol * scale) {
      throw ConvergenceError("higgs_radial_kernel: k_max tail bound violation");
    }
  }
  return (bound + q.value) / std::sqrt(std::sinh(tau1) * std::sinh(tau2));
}

Complex ab_partial_wave_assembly(PotentialKind problem,
                                 const KernelRequest& req,
                                 const HiggsParams& h) {
  if (problem == PotentialKind::free) {
    return partial_wave_kernel(req);
  }
  if (problem == PotentialKind::coulomb) {
    throw std::invalid_argument(
        "ab_partial_wave_assembly: coulomb is spectrum-only (no bound or "
        "continuum wave functions are modeled), so its channel kernels "
        "cannot be assembled");
  }
  req.check();
  h.check(req.params);

  // dedupe lambda = |l - xi| over the l ring, as in partial_wave_kernel
  std::vector<double> lams;
  std::vector<std::size_t> index_of_l(2 * req.l_max + 1);
  {
    std::map<double, std::size_t> seen;
    for (std::int64_t l = -req.l_max; l <= req.l_max; ++l) {
      double lam = effective_channel(l, req.xi).lam;
      auto it = seen.find(lam);
      if (it == seen.end()) {
        it = seen.emplace(lam, lams.size()).first;
        lams.push_back(lam);
      }
      index_of_l[static_cast<std::size_t>(l + req.l_max)] = it->second;
    }
  }
  std::vector<double> g =
      map_indexed(req.exec, lams.size(), [&](std::size_t i) {
        return higgs_radial_kernel(lams[i], req.p1.tau, req.p2.tau, req.beta,
                                   h, req);
      });

  double dphi = req.delta_phi();
  Complex acc(0.0, 0.0);
  for (std::int64_t l = -req.l_max; l <= req.l_max; ++l) {
    double a = static_cast<double>(l) * dphi;
    double gl = g[index_of_l[static_cast<std::size_t>(l + req.l_max)]];
    acc += Complex(std::cos(a), std::sin(a)) * gl;
  }
  acc /= 2.0 * pi;

  double est = 0.0;
  for (std::int64_t l = req.l_max - 2; l <= req.l_max; ++l) {
    est += g[index_of_l[static_cast<std::size_t>(l + req.l_max)]];
    est += g[index_of_l[static_cast<std::size_t>(-l + req.l_max)]];
  }
  est /= 2.0 * pi;
  if (est > req.truncation_tol * (std::abs(acc) + est)) {
    throw ConvergenceError(
        "ab_partial_wave_assembly: truncation not converged");
  }
  return acc;
}

}  // namespace hypab
