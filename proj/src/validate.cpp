#include "hypab/validate.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <stdexcept>

#include "hypab/ab_kernel.hpp"
#include "hypab/core.hpp"
#include "hypab/flat_limit.hpp"
#include "hypab/landau.hpp"
#include "hypab/oracle_grid.hpp"
#include "hypab/potentials.hpp"
#include "hypab/quadrature.hpp"
#include "hypab/specfun.hpp"

namespace hypab {

namespace {

double rel(double a, double b) {
  double scale = std::max({std::fabs(a), std::fabs(b), 1e-300});
  return std::fabs(a - b) / scale;
}

double rel(Complex a, Complex b) {
  double scale = std::max({std::abs(a), std::abs(b), 1e-300});
  return std::abs(a - b) / scale;
}

void push(std::vector<CheckResult>& out, const std::string& name,
          double residual, double tolerance) {
  out.push_back({name, residual, tolerance, residual < tolerance});
}

// ---- specfun ----

void suite_specfun(std::vector<CheckResult>& out) {
  // Mehler-Fock density: (k sinh(pi k)/pi)|Gamma(1/2+ik)|^2 = k tanh(pi k),
  // exercising the Lanczos path on the critical line
  double r = 0.0;
  for (int i = 1; i <= 80; ++i) {
    double k = 0.25 * i;
    r = std::max(r, rel(radial_spectral_weight(k, 0.0),
                        k * std::tanh(pi * k)));
  }
  push(out, "mehler_fock_density", r, 1e-12);

  // terminating 2F1 against the independent Jacobi recurrence:
  // P_n^{(a,b)}(x) = ((a+1)_n/n!) 2F1(-n, n+a+b+1; a+1; (1-x)/2).
  // Degrees run to 6 -- beyond that both sides carry a few 1e-12 of
  // cancellation noise in the oscillatory region, and no terminating case
  // in this library exceeds degree 4.
  r = 0.0;
  struct AB {
    double a, b;
  };
  for (AB ab : {AB{0.3, 0.7}, AB{1.5, -0.2}, AB{2.0, 3.0}}) {
    for (int n = 1; n <= 6; ++n) {
      for (double x : {-0.5, 0.2, 0.9}) {
        double poch = 1.0, fact = 1.0;
        for (int j = 0; j < n; ++j) {
          poch *= ab.a + 1.0 + j;
          fact *= j + 1.0;
        }
        double via_f = poch / fact *
                       hyp2f1(Complex(-n, 0.0),
                              Complex(n + ab.a + ab.b + 1.0, 0.0),
                              Complex(ab.a + 1.0, 0.0), 0.5 * (1.0 - x))
                           .real();
        r = std::max(r, rel(via_f, jacobi_poly(n, ab.a, ab.b, x)));
      }
    }
  }
  push(out, "hyp2f1_jacobi_terminating", r, 1e-12);

  // modified Bessel three-term recurrence I_{v-1} - I_{v+1} = (2v/z) I_v
  r = 0.0;
  for (double nu : {1.0, 1.7, 3.0, 5.5}) {
    for (double z : {0.3, 1.0, 5.0, 20.0}) {
      double lhs = bessel_i(nu - 1.0, z) - bessel_i(nu + 1.0, z);
      double rhs = 2.0 * nu / z * bessel_i(nu, z);
      r = std::max(r, rel(lhs, rhs));
    }
  }
  push(out, "bessel_recurrence", r, 1e-9);

  // conical functions are real; measure the imaginary residue of the
  // complex-degree evaluation
  r = 0.0;
  for (double mu : {0.0, 0.5, 1.3}) {
    for (double k : {0.5, 2.0, 8.0}) {
      for (double tau : {0.3, 1.0, 2.5}) {
        Complex p = legendre_p(mu, Complex(0.0, k), tau);
        r = std::max(r, std::fabs(p.imag()) /
                            std::max(std::fabs(p.real()), 1e-300));
      }
    }
  }
  push(out, "conical_reality", r, 1e-8);
}

// ---- kernel ----

void suite_kernel(std::vector<CheckResult>& out) {
  PhysicalParams params;
  KernelRequest req;
  req.p1 = PseudospherePoint::make(1.0, 0.0);
  req.p2 = PseudospherePoint::make(1.0, 0.7);
  req.beta = 0.5;

  // spectral integral vs finite-difference eigendecomposition (channels
  // with lam >= 1/2, where the Dirichlet regularization is clean)
  RadialGrid grid;
  grid.tau_min = 1e-5;
  grid.tau_max = 12.0;
  grid.points = 2000;
  double r = 0.0;
  for (double lam : {0.5, 1.0, 2.0}) {
    GridPropagator prop(lam, grid, params);
    for (double t2 : {1.0, 1.4}) {
      r = std::max(r, rel(euclidean_radial_kernel(lam, 1.0, t2, 0.5, req),
                          prop.kernel(1.0, t2, 0.5)));
    }
  }
  push(out, "grid_vs_spectral", r, 1e-3);

  // Poisson duality at the converging reference cell
  req.xi = 0.3;
  Complex pw = partial_wave_kernel(req);
  Complex wd = winding_kernel_sum(req);
  push(out, "poisson_duality", std::abs(wd - pw) / std::abs(pw), 1e-4);
}

// ---- limits ----

void suite_limits(std::vector<CheckResult>& out) {
  // nu^mu P^{-mu}_nu(cosh(z/nu)) -> I_mu(z)
  double r = 0.0;
  for (double mu : {0.0, 0.3, 0.5, 1.0}) {
    for (double z : {0.5, 2.0}) {
      r = std::max(r, legendre_bessel_limit_check(mu, z, 1000.0).rel_dev);
    }
  }
  push(out, "legendre_bessel_degeneration", r, 1e-2);

  // b -> 0 collapses the Landau continuum onto the free states
  PhysicalParams params;
  r = 0.0;
  for (double k : {0.5, 2.0}) {
    for (std::int64_t l : {0, 1, 3}) {
      for (double tau : {0.1, 1.0, 3.0}) {
        auto p = PseudospherePoint::make(tau, 0.3);
        r = std::max(r, rel(landau_scattering_wavefunction(k, l, 0.0, p, params),
                            free_wavefunction(k, l, p, params)));
      }
    }
  }
  push(out, "landau_zero_field_reduction", r, 1e-8);
}

// ---- spectra ----

double landau_radial(std::int64_t N, std::int64_t l, double b, double tau,
                     const PhysicalParams& params) {
  auto p = PseudospherePoint::make(tau, 0.0);
  return landau_bound_wavefunction(N, l, b, p, params).real();
}

double higgs_radial(std::int64_t n, const HiggsParams& h, double tau) {
  auto p = PseudospherePoint::make(tau, 0.0);
  return higgs_bound_wavefunction(n, 0, 0.0, h, p).real() *
         std::sqrt(2.0 * pi * std::sinh(tau));
}

void suite_spectra(std::vector<CheckResult>& out) {
  PhysicalParams params;

  // Higgs ground level at omega = 3, R = 1 collapses to nu - 1/2
  HiggsParams h = HiggsParams::from_omega(3.0, params);
  std::vector<double> eh = higgs_bound_spectrum(h, 0, 0.0, params);
  double r = (eh.size() == 3)
                 ? std::fabs(eh[0] - 2.5413812651491098)
                 : 1.0;
  push(out, "higgs_ground_level", r, 1e-9);

  // orthonormality of the square-integrable Higgs states by quadrature
  auto overlap = [&](std::int64_t n, std::int64_t m) {
    auto f = [&](double t) { return higgs_radial(n, h, t) * higgs_radial(m, h, t); };
    return integrate_gk(f, 1e-9, 600.0, 1e-9, 1e-10, 4000).value;
  };
  r = std::max({std::fabs(overlap(0, 0) - 1.0), std::fabs(overlap(1, 1) - 1.0),
                std::fabs(overlap(0, 1))});
  push(out, "higgs_orthonormality", r, 1e-6);

  // Coulomb ground level at alpha = 1, R = 100 is -1.99 exactly
  PhysicalParams pc;
  pc.curvature_radius = 100.0;
  CoulombParams c = CoulombParams::from_alpha(1.0, pc);
  std::vector<double> ec = coulomb_bound_spectrum(c, 0, 0.0, pc);
  r = (ec.size() == 10) ? std::fabs(ec[0] + 1.99) : 1.0;
  push(out, "coulomb_ground_level", r, 1e-12);

  // Landau ladder at b = 3 in units hbar^2/2m: {1.5, 3.5, 4.5}
  std::vector<double> el = landau_levels(3.0, params);
  r = 1.0;
  if (el.size() == 3) {
    r = std::max({std::fabs(el[0] - 1.5), std::fabs(el[1] - 3.5),
                  std::fabs(el[2] - 4.5)});
  }
  push(out, "landau_ladder", r, 1e-12);

  // Landau bound-state Gram matrix at b = 4.2 across l = -2..2
  r = 0.0;
  for (std::int64_t l = -2; l <= 2; ++l) {
    for (std::int64_t N = 0; N <= 3; ++N) {
      for (std::int64_t M = N; M <= 3; ++M) {
        auto f = [&](double t) {
          return landau_radial(N, l, 4.2, t, params) *
                 landau_radial(M, l, 4.2, t, params) * std::sinh(t);
        };
        double g = 2.0 * pi * integrate_gk(f, 1e-12, 80.0, 1e-11, 1e-14, 4000).value;
        r = std::max(r, std::fabs(g - ((N == M) ? 1.0 : 0.0)));
      }
    }
  }
  push(out, "landau_gram_identity", r, 1e-7);
}

}  // namespace

std::vector<CheckResult> run_validation_suite(const std::string& suite) {
  std::vector<CheckResult> out;
  bool all = suite == "all";
  if (all || suite == "specfun") suite_specfun(out);
  if (all || suite == "kernel") suite_kernel(out);
  if (all || suite == "limits") suite_limits(out);
  if (all || suite == "spectra") suite_spectra(out);
  if (out.empty()) {
    throw std::invalid_argument(
        "run_validation_suite: unknown suite '" + suite +
        "' (want all|specfun|kernel|limits|spectra)");
  }
  return out;
}

}  // namespace hypab
