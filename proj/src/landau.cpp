#include "hypab/landau.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "hypab/specfun.hpp"

namespace hypab {

namespace {

double half_l(std::int64_t l) { return static_cast<double>(std::llabs(l)); }

// log of sqrt(k sinh(pi k) / 2 pi^2), written to survive large k where
// sinh(pi k) overflows.
double log_continuum_prefactor(double k) {
  // sinh(pi k) = e^{pi k} (1 - e^{-2 pi k}) / 2
  double log_sinh = pi * k + std::log1p(-std::exp(-2.0 * pi * k)) -
                    std::log(2.0);
  return 0.5 * (std::log(k) + log_sinh - std::log(2.0) - 2.0 * std::log(pi));
}

}  // namespace

std::int64_t landau_bound_count(double b) {
  if (!(b > 0.5)) return -1;
  // largest integer strictly below b - 1/2
  double edge = b - 0.5;
  double fl = std::floor(edge);
  std::int64_t n = static_cast<std::int64_t>(fl);
  if (fl == edge) --n;  // boundary excluded
  return n;
}

std::vector<double> landau_levels(double b, const PhysicalParams& params) {
  params.check();
  if (b < 0.0) throw std::invalid_argument("landau_levels: b must be >= 0");
  std::vector<double> out;
  std::int64_t nmax = landau_bound_count(b);
  double es = params.hbar * params.hbar / (2.0 * params.mass);
  for (std::int64_t N = 0; N <= nmax; ++N) {
    double shift = b - static_cast<double>(N) - 0.5;
    out.push_back(es * (b * b + 0.25 - shift * shift));
  }
  return out;
}

BoundState landau_bound_state(std::int64_t N, std::int64_t l, double b,
                              const PhysicalParams& params) {
  params.check();
  if (N < 0 || static_cast<double>(N) >= b - 0.5) {
    throw std::invalid_argument(
        "landau_bound_state: N outside the bound window N < b - 1/2 (N=" +
        std::to_string(N) + ", b=" + std::to_string(b) + ")");
  }
  double al = half_l(l);
  double n = static_cast<double>(N);
  // log-space gamma ratios: Gamma(2b-N+|l|)/Gamma(2b-N) overflows already at
  // moderate b if formed directly.
  double log_c2 = std::lgamma(n + 1.0) + std::log(2.0 * b - 2.0 * n - 1.0) +
                  std::lgamma(2.0 * b - n + al) - std::log(4.0 * pi) -
                  std::lgamma(n + al + 1.0) - std::lgamma(2.0 * b - n);
  double es = params.hbar * params.hbar / (2.0 * params.mass);
  double shift = b - n - 0.5;
  BoundState s;
  s.N = N;
  s.l = l;
  s.energy = es * (b * b + 0.25 - shift * shift);
  s.normalization_constant = std::exp(0.5 * log_c2);
  return s;
}

Complex landau_bound_wavefunction(std::int64_t N, std::int64_t l, double b,
                                  const PseudospherePoint& p,
                                  const PhysicalParams& params) {
  BoundState s = landau_bound_state(N, l, b, params);
  double al = half_l(l);
  double t = std::tanh(0.5 * p.tau);
  double t2 = t * t;
  // (1-t^2) = sech^2(tau/2), evaluated in logs to stay finite deep in the
  // exponential tail.
  double log_sech2 = -2.0 * std::log(std::cosh(0.5 * p.tau));
  double n = static_cast<double>(N);
  double log_t_pow = (al == 0.0) ? 0.0 : al * std::log(t);
  double radial = s.normalization_constant *
                  std::exp(log_t_pow + (b - n) * log_sech2) *
                  jacobi_poly(static_cast<int>(N), al, 2.0 * b - 2.0 * n - 1.0,
                              1.0 - 2.0 * t2);
  double lphi = static_cast<double>(l) * p.phi;
  return radial * Complex(std::cos(lphi), std::sin(lphi));
}

ScatteringState landau_scattering_state(double k, std::int64_t l, double b,
                                        const PhysicalParams& params) {
  params.check();
  if (!(k > 0.0)) {
    throw std::invalid_argument("landau_scattering_state: k must be > 0");
  }
  double es = params.hbar * params.hbar / (2.0 * params.mass);
  ScatteringState s;
  s.k = k;
  s.l = l;
  s.b = b;
  s.energy = es * (k * k + b * b + 0.25);
  return s;
}

Complex landau_scattering_wavefunction(double k, std::int64_t l, double b,
                                       const PseudospherePoint& p,
                                       const PhysicalParams& params,
                                       const SeriesControls& ctl) {
  (void)landau_scattering_state(k, l, b, params);  // validates k
  double al = half_l(l);
  Complex ik(0.0, k);
  Complex a1 = 0.5 + ik + b + al;
  Complex a2 = 0.5 + ik - b;
  double c = 1.0 + al;

  double t = std::tanh(0.5 * p.tau);
  double t2 = t * t;
  double log_sech2 = -2.0 * std::log(std::cosh(0.5 * p.tau));

  // log of the full radial prefactor; the Gamma ratio is the delta(k-k')
  // normalization with the phase pinned by the b -> 0 reduction.
  double log_t_pow = (al == 0.0) ? 0.0 : al * std::log(t);
  Complex log_pref = log_continuum_prefactor(k) - std::lgamma(al + 1.0) +
                     log_gamma(a1) + log_gamma(a2) -
                     log_gamma(Complex(0.5, k)) + log_t_pow +
                     (0.5 + ik) * log_sech2;
  Complex f = hyp2f1(a1, a2, Complex(c, 0.0), t2, ctl);
  double lphi = static_cast<double>(l) * p.phi;
  return std::exp(log_pref + Complex(0.0, lphi)) * f;
}

Complex free_wavefunction(double k, std::int64_t l,
                          const PseudospherePoint& p,
                          const PhysicalParams& params,
                          const SeriesControls& ctl) {
  params.check();
  if (!(k > 0.0)) {
    throw std::invalid_argument("free_wavefunction: k must be > 0");
  }
  double al = half_l(l);
  Complex pref =
      std::exp(log_continuum_prefactor(k) + log_gamma(Complex(0.5 + al, k)));
  double leg = legendre_p_conical(al, k, p.tau, ctl);
  double lphi = static_cast<double>(l) * p.phi;
  return pref * leg * Complex(std::cos(lphi), std::sin(lphi));
}

double free_energy(double k, const PhysicalParams& params) {
  params.check();
  double es = params.hbar * params.hbar / (2.0 * params.mass);
  return es * (k * k + 0.25);
}

}  // namespace hypab
