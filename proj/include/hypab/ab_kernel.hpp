#pragma once

// Aharonov-Bohm propagator machinery on the pseudosphere, in Euclidean
// time: the radial channel kernel G_lambda as a spectral integral over the
// continuous wave number k, the partial-wave sum over integer angular
// momenta with l -> l - xi, the winding-number expansion obtained from it
// by Poisson resummation, and the flat-space AB kernel.
//
// Curved-space kernels are Euclidean only (beta > 0); the oscillatory
// real-time k-integrals have no controlled evaluation at this scale.
// flat_ab_kernel accepts complex time best-effort.

#include <cstdint>
#include <vector>

#include "hypab/core.hpp"
#include "hypab/parallel.hpp"

namespace hypab {

struct KernelRequest {
  PseudospherePoint p1;
  PseudospherePoint p2;
  double beta = 1.0;  // Euclidean time, > 0
  double xi = 0.0;    // flux parameter
  std::int64_t l_max = 40;  // partial-wave truncation
  std::int64_t n_max = 5;   // winding truncation
  double k_max = 0.0;       // spectral cutoff; 0 selects 40/sqrt(beta)
  // quadrature / truncation controls
  double quad_rel_tol = 1e-10;
  std::int64_t quad_max_subdiv = 1200;
  double truncation_tol = 1e-6;
  PhysicalParams params;
  SeriesControls series;
  Exec exec = Exec::openmp;

  void check() const;
  double resolved_k_max() const;
  double delta_phi() const { return p2.phi - p1.phi; }
};

// delta(k-k')-normalized radial spectral density under the sinh tau dtau
// measure (the angular 1/2pi is carried by the assembling sums):
//   rho_lam(k) = (k sinh(pi k)/pi) |Gamma(1/2 + ik + lam)|^2.
// rho_0(k) = k tanh(pi k), the order-0 Mehler-Fock density.
double radial_spectral_weight(double k, double lam);

// G_lam(tau1, tau2; beta)
//   = Int_0^kmax dk e^{-beta E_k} rho_lam(k)
//       P^{-lam}_{ik-1/2}(cosh tau1) P^{-lam}_{ik-1/2}(cosh tau2),
// E_k = (hbar^2/2m)(k^2 + 1/4). Throws ConvergenceError when the
// quadrature fails or the k_max tail bound exceeds truncation_tol
// relative to the value.
double euclidean_radial_kernel(double lam, double tau1, double tau2,
                               double beta, const KernelRequest& req);

// (1/2pi) sum_{|l| <= l_max} e^{il(phi2-phi1)} G_{|l-xi|}(tau1, tau2; beta).
// Truncation error estimated from the last three terms of the sum; throws
// ConvergenceError when it exceeds truncation_tol relative to the result.
Complex partial_wave_kernel(const KernelRequest& req);

// Samples G_lambda on a geometric lambda-grid (truncated where G falls
// below 1e-12 of its lambda = 0 value), interpolates with a not-a-knot
// cubic spline, and integrates the spline against cos(lambda Theta)
// exactly per interval. The grid depends only on (tau1, tau2, beta), so
// one evaluator serves every winding number and flux.
class WindingEvaluator {
 public:
  explicit WindingEvaluator(const KernelRequest& req);

  // (1/pi) Int_0^lambda_max cos(lambda theta) G_lambda dlambda
  double cosine_transform(double theta) const;

  // winding contribution K_n = e^{i xi Theta_n} cosine_transform(Theta_n)
  // with Theta_n = delta_phi + 2 pi n.
  Complex evaluate(std::int64_t n) const;

  double lambda_max() const { return nodes_.back(); }
  std::size_t node_count() const { return nodes_.size(); }

 private:
  KernelRequest req_;
  std::vector<double> nodes_;   // ascending, nodes_[0] = 0
  std::vector<double> values_;  // G at nodes
  // per-interval cubic coefficients: G(nodes_[j] + u) ~ a + b u + c u^2 + d u^3
  std::vector<double> ca_, cb_, cc_, cd_;
};

Complex winding_kernel(std::int64_t n, const KernelRequest& req);

// sum_{|n| <= n_max} winding_kernel(n), sharing one evaluator.
Complex winding_kernel_sum(const KernelRequest& req);

// Flat-plane AB kernel
//   K = (m/(2 pi i hbar T)) exp(im(r1^2+r2^2)/(2 hbar T))
//       sum_{|n| <= l_max} e^{in delta_phi} I_{|n-xi|}(m r1 r2/(i hbar T)).
// Euclidean mode is T = -i beta; real time is best-effort (series
// cancellation limits apply). Throws ConvergenceError when the last-three
// -term tail estimate exceeds truncation_tol relative to the sum.
Complex flat_ab_kernel(double r1, double r2, double delta_phi, double xi,
                       Complex time, const PhysicalParams& params,
                       const SeriesControls& ctl = {},
                       std::int64_t l_max = 40,
                       double truncation_tol = 1e-6);

}  // namespace hypab
