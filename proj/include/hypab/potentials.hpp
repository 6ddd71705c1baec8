#pragma once

// Higgs oscillator and Kepler-Coulomb problems on the pseudosphere with
// the AB shift l -> l - xi: discrete spectra, Higgs bound and scattering
// wave functions, and the AB-shifted partial-wave propagator assembly.
//
// Both potentials support only finitely many bound states per channel;
// the Higgs problem keeps a continuum on top of them, the Coulomb problem
// is spectrum-only here (no wave functions are modeled, so no kernel).

#include <vector>

#include "hypab/ab_kernel.hpp"
#include "hypab/core.hpp"

namespace hypab {

// V(tau) = (m/2) omega^2 R^2 tanh^2(tau); nu^2 = (m omega R^2/hbar)^2 + 1/4
// carries the full parameter dependence of spectra and wave functions.
struct HiggsParams {
  double omega = 1.0;
  double nu = 0.0;  // consistent value is installed by from_omega

  static HiggsParams from_omega(double omega, const PhysicalParams& params);
  void check(const PhysicalParams& params) const;
};

struct CoulombParams {
  double alpha = 1.0;
  double bohr_radius = 0.0;  // a = hbar^2/(m alpha); set by from_alpha

  static CoulombParams from_alpha(double alpha, const PhysicalParams& params);
  void check(const PhysicalParams& params) const;
};

// E_n = -(hbar^2/2mR^2) [(2n + lam - nu + 1)^2 - 1/4] + (m/2) omega^2 R^2
// for n = 0..floor(nu - lam - 1), lam = |l - xi|; empty when that window
// is empty. The window bound admits one state with 2n + lam + 1 > nu whose
// energy sits in the continuum range; see higgs_bound_wavefunction.
std::vector<double> higgs_bound_spectrum(const HiggsParams& h, std::int64_t l,
                                         double xi,
                                         const PhysicalParams& params = {});

// Psi_n(tau, phi) = (2 pi sinh tau)^{-1/2} S_n(tau) e^{il phi} with
//   S_n = C_n (sinh tau)^{lam+1/2} (cosh tau)^{2n+1/2-nu}
//             2F1(-n, nu - n; 1 + lam; tanh^2 tau),
//   C_n = (1/Gamma(lam+1)) sqrt(2 (nu-lam-2n-1) Gamma(n+lam+1) Gamma(nu-n)
//                                / (R^2 Gamma(nu-lam-n) n!)),
// orthonormal under the area measure R^2 sinh(tau) dtau dphi.  Requires
// sigma_n = nu - lam - 2n - 1 > 0: the spectral-window edge state with
// sigma_n < 0 is not square integrable and is rejected (invalid n).
//
// printed_form = true reproduces the (non-orthogonal) variant found in
// older references instead: first 2F1 parameter -lam in place of -n,
// cosh power n + 1/2 - nu, and Gamma(nu - lam) in the constant. Kept for
// documentation only; every consumer in this library uses the default.
Complex higgs_bound_wavefunction(std::int64_t n, std::int64_t l, double xi,
                                 const HiggsParams& h,
                                 const PseudospherePoint& p,
                                 const PhysicalParams& params = {},
                                 const SeriesControls& ctl = {},
                                 bool printed_form = false);

struct HiggsScatteringState {
  Complex value;
  double energy;  // (hbar^2/2mR^2)(k^2 + 1/4) + (m/2) omega^2 R^2
};

// Psi_k(tau, phi) = (2 pi sinh tau)^{-1/2} S_k(tau) e^{il phi} with
//   S_k = (1/Gamma(1+lam)) sqrt(k sinh(pi k)/(2 pi^2 R^2))
//         |Gamma(a) Gamma(b)| (tanh tau)^{lam+1/2}
//         Re[(cosh tau)^{ik} 2F1(a, b; 1 + lam; tanh^2 tau)],
//   a = (nu + lam + 1 - ik)/2,  b = (lam - nu + 1 - ik)/2.
// The bracket is real analytically (Euler transformation maps it to its
// conjugate); with this constant the omega -> 0 limit reduces exactly to
// the delta(k-k')-normalized free radial waves.  printed_form = true gives
// the older variant with the complex constant Gamma((nu-lam+1-ik)/2)
// Gamma((lam-nu+1-ik)/2) and no Re[] (documentation only; it is not
// delta-normalized).
HiggsScatteringState higgs_scattering_state(double k, std::int64_t l,
                                            double xi, const HiggsParams& h,
                                            const PseudospherePoint& p,
                                            const PhysicalParams& params = {},
                                            const SeriesControls& ctl = {},
                                            bool printed_form = false);

// E_N = alpha/R - (hbar^2/2mR^2)(Nt^2 - 1/4) - m alpha^2/(2 hbar^2 Nt^2),
// Nt = N + |l-xi| + 1/2, for N = 0..floor(sqrt(R/a) - |l-xi| - 1/2);
// empty when that bracket is negative.
std::vector<double> coulomb_bound_spectrum(const CoulombParams& c,
                                           std::int64_t l, double xi,
                                           const PhysicalParams& params = {});

// Radial channel kernel of the Higgs problem at lam = |l - xi|,
//   G^H_lam(tau1, tau2; beta) = [ sum_n S_n(tau1) S_n(tau2) e^{-beta E_n}
//     + Int_0^kmax dk w(k) u_k(tau1) u_k(tau2) e^{-beta E_k} ]
//     / sqrt(sinh tau1 sinh tau2),
// the bound sum running over the square-integrable window only. Uses the
// R-full energy scale hbar^2/2mR^2 of the spectra; at R = 1, omega -> 0 it
// reduces to euclidean_radial_kernel (which fixes the unit pseudosphere).
// Throws ConvergenceError on quadrature failure.
double higgs_radial_kernel(double lam, double tau1, double tau2, double beta,
                           const HiggsParams& h, const KernelRequest& req);

enum class PotentialKind { free, higgs, coulomb };

// K^AB = (1/2pi) sum_{|l| <= l_max} e^{il(phi2-phi1)} G_{|l-xi|} with the
// channel kernel of the requested problem. `free` delegates to
// partial_wave_kernel; `higgs` assembles higgs_radial_kernel channels
// (same truncation estimate and ConvergenceError as the free sum);
// `coulomb` is rejected: no Coulomb wave functions (discrete or
// continuous) are modeled, so no kernel can be assembled from the
// spectrum alone.
Complex ab_partial_wave_assembly(PotentialKind problem,
                                 const KernelRequest& req,
                                 const HiggsParams& h = {});

}  // namespace hypab
