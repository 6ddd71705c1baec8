#pragma once

// Constant magnetic field on the pseudosphere: discrete Landau levels,
// bound/scattering wave functions, and the zero-field (free) states.
//
// Conventions: b = eB/hbar c is the dimensionless field strength, the gauge
// is A_phi = B(cosh tau - 1), and energies are quoted in units of hbar^2/2m
// (the curvature radius does not enter these formulas). The bound window is
// N = 0, 1, ... with N < b - 1/2 strictly; no bound states exist for
// b <= 1/2.

#include <cstdint>
#include <vector>

#include "hypab/core.hpp"

namespace hypab {

struct BoundState {
  std::int64_t N = 0;
  std::int64_t l = 0;
  double energy = 0.0;                  // units hbar^2/2m
  double normalization_constant = 0.0;  // > 0
};

struct ScatteringState {
  double k = 0.0;
  std::int64_t l = 0;
  double energy = 0.0;  // (hbar^2/2m)(k^2 + b^2 + 1/4)
  double b = 0.0;
};

// Largest admissible N (strictly below b - 1/2), or -1 when no bound states
// exist.
std::int64_t landau_bound_count(double b);

// E_N = (hbar^2/2m)[b^2 + 1/4 - (b - N - 1/2)^2] for all N in the bound
// window, in increasing N order. Empty for b <= 1/2.
std::vector<double> landau_levels(double b, const PhysicalParams& params);

// Metadata (energy + normalization constant) for a single bound state.
// Throws std::invalid_argument outside the bound window.
BoundState landau_bound_state(std::int64_t N, std::int64_t l, double b,
                              const PhysicalParams& params);

// Psi^b_{N,l}(tau, phi): normalized bound eigenfunction,
//   C tanh^{|l|}(tau/2) (1 - tanh^2(tau/2))^{b-N}
//     P_N^{(|l|, 2b-2N-1)}(1 - 2 tanh^2(tau/2)) e^{il phi},
// normalized to 1 under the sinh tau dtau dphi measure.
Complex landau_bound_wavefunction(std::int64_t N, std::int64_t l, double b,
                                  const PseudospherePoint& p,
                                  const PhysicalParams& params);

ScatteringState landau_scattering_state(double k, std::int64_t l, double b,
                                        const PhysicalParams& params);

// Psi^b_{k,l}(tau, phi): continuum state, delta(k-k')-normalized under the
// sinh tau dtau dphi measure,
//   sqrt(k sinh(pi k)/2 pi^2) / |l|!
//     * Gamma(1/2+ik+b+|l|) Gamma(1/2+ik-b) / Gamma(1/2+ik)
//     * tanh^{|l|}(tau/2) (1-tanh^2(tau/2))^{1/2+ik}
//     * 2F1(1/2+ik+b+|l|, 1/2+ik-b; 1+|l|; tanh^2(tau/2)) e^{il phi}.
// The phase convention is fixed so that b -> 0 reduces exactly to
// free_wavefunction.
Complex landau_scattering_wavefunction(double k, std::int64_t l, double b,
                                       const PseudospherePoint& p,
                                       const PhysicalParams& params,
                                       const SeriesControls& ctl = {});

// Zero-field continuum state
//   sqrt(k sinh(pi k)/2 pi^2) Gamma(1/2+ik+|l|)
//     P^{-|l|}_{ik-1/2}(cosh tau) e^{il phi},
// with E_k = (hbar^2/2m)(k^2 + 1/4).
Complex free_wavefunction(double k, std::int64_t l,
                          const PseudospherePoint& p,
                          const PhysicalParams& params,
                          const SeriesControls& ctl = {});

// E_k = (hbar^2/2m)(k^2 + 1/4).
double free_energy(double k, const PhysicalParams& params);

}  // namespace hypab
