#include "hypab/flat_limit.hpp"

#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "hypab/ab_kernel.hpp"
#include "hypab/quadrature.hpp"
#include "hypab/specfun.hpp"
#include "test_util.hpp"

using namespace hypab;
using testutil::rel_err;

namespace {

InterferenceGeometry base_geometry() {
  InterferenceGeometry g;
  g.tau1 = 0.02;
  g.tau2 = 0.02;
  g.phi1 = 0.0;
  g.phi2 = 0.3;
  g.R = 50.0;
  g.T = 1.0;
  return g;
}

}  // namespace

TEST_CASE("Legendre functions degenerate into modified Bessel functions") {
  // nu^mu P^{-mu}_nu(cosh(z/nu)) -> I_mu(z)
  auto r00 = legendre_bessel_limit_check(0.0, 0.5, 1000.0);
  CHECK(r00.rel_dev < 1e-2);
  CHECK(rel_err(r00.rhs, std::cyl_bessel_i(0.0, 0.5)) < 1e-12);

  auto r12 = legendre_bessel_limit_check(1.0, 2.0, 1000.0);
  CHECK(r12.rel_dev < 1e-2);
  CHECK(legendre_bessel_limit_check(1.0, 2.0, 2000.0).rel_dev < r12.rel_dev);

  // half-integer order: I_{1/2}(1) = sqrt(2/pi) sinh(1)
  auto rh = legendre_bessel_limit_check(0.5, 1.0, 1000.0);
  CHECK(rel_err(rh.rhs, std::sqrt(2.0 / pi) * std::sinh(1.0)) < 1e-12);
  CHECK(rh.rel_dev < 1e-2);

  SUBCASE("deviation shrinks monotonically with nu") {
    for (double mu : {0.0, 0.3, 0.5, 1.0}) {
      for (double z : {0.5, 2.0}) {
        double prev = -1.0;
        for (double nu : {500.0, 1000.0, 2000.0}) {
          double dev = legendre_bessel_limit_check(mu, z, nu).rel_dev;
          if (prev >= 0.0) CHECK(dev < prev);
          prev = dev;
        }
      }
    }
  }

  CHECK_THROWS_AS(legendre_bessel_limit_check(0.0, 1.0, 5.0),
                  std::invalid_argument);
  CHECK_THROWS_AS(legendre_bessel_limit_check(-1.0, 1.0, 100.0),
                  std::invalid_argument);
}

TEST_CASE("flat radial kernel closed forms") {
  PhysicalParams params;

  SUBCASE("Euclidean lam = 0 hand composition") {
    Complex k = flat_radial_kernel(0.0, 1.0, 1.0, Complex(0.0, -1.0), params);
    double want = std::exp(-1.0) * std::cyl_bessel_i(0.0, 1.0) / (2.0 * pi);
    CHECK(rel_err(k.real(), want) < 1e-12);
    CHECK(std::fabs(k.imag()) < 1e-18);
  }

  SUBCASE("half-integer order reduces to sinh") {
    double r1 = 0.8, r2 = 1.1, beta = 0.7;
    Complex k = flat_radial_kernel(0.5, r1, r2, Complex(0.0, -beta), params);
    double z = r1 * r2 / beta;
    double want = std::exp(-(r1 * r1 + r2 * r2) / (2.0 * beta)) *
                  std::sqrt(2.0 / (pi * z)) * std::sinh(z) / (2.0 * pi * beta);
    CHECK(rel_err(k.real(), want) < 1e-12);
  }

  SUBCASE("angular sum reproduces the free 2D kernel") {
    double r1 = 1.0, r2 = 1.0, beta = 0.5, dphi = 0.3;
    Complex sum = 0.0;
    for (int l = -40; l <= 40; ++l) {
      Complex phase(std::cos(l * dphi), std::sin(l * dphi));
      sum += phase * flat_radial_kernel(static_cast<double>(l), r1, r2,
                                        Complex(0.0, -beta), params);
    }
    double dsq = r1 * r1 + r2 * r2 - 2.0 * r1 * r2 * std::cos(dphi);
    Complex want = std::exp(-dsq / (2.0 * beta)) / (2.0 * pi * beta);
    CHECK(rel_err(sum, want) < 1e-10);
  }

  SUBCASE("order enters through its absolute value") {
    Complex a = flat_radial_kernel(0.7, 1.0, 1.2, Complex(0.0, -0.5), params);
    Complex b = flat_radial_kernel(-0.7, 1.0, 1.2, Complex(0.0, -0.5), params);
    CHECK(a == b);
  }

  CHECK_THROWS_AS(flat_radial_kernel(0.0, -1.0, 1.0, Complex(0.0, -1.0)),
                  std::invalid_argument);
  CHECK_THROWS_AS(flat_radial_kernel(0.0, 1.0, 1.0, Complex(0.0, 0.0)),
                  std::invalid_argument);
}

TEST_CASE("flat winding propagator") {
  InterferenceGeometry g = base_geometry();

  SUBCASE("modulus is flux independent") {
    double envelope = g.params.mass / (2.0 * pi * g.params.hbar * g.T);
    for (double xi : {0.0, 0.3, 0.9}) {
      for (int n : {-2, 0, 3}) {
        CHECK(rel_err(std::abs(partial_propagator_flat(n, g, xi)), envelope) <
              1e-14);
      }
    }
  }

  SUBCASE("zero winding at coincident points") {
    InterferenceGeometry c = g;
    c.phi2 = c.phi1;
    // Theta_0 = 0 kills the xi phase and the quadratic winding term; only
    // the 1/(8z) correction survives in the exponent.
    Complex k = partial_propagator_flat(0, c, 0.7);
    CHECK(k == partial_propagator_flat(0, c, 0.0));
    Complex pref =
        c.params.mass / (2.0 * pi * Complex(0.0, 1.0) * c.params.hbar * c.T);
    double corr = c.params.hbar * c.T /
                  (8.0 * c.params.mass * c.R * c.R * c.tau1 * c.tau2);
    CHECK(rel_err(k, pref * std::exp(Complex(0.0, corr))) < 1e-14);
  }

  SUBCASE("phase advances between windings as the exponent predicts") {
    double xi = 0.3;
    Complex ratio =
        partial_propagator_flat(1, g, xi) / partial_propagator_flat(0, g, xi);
    double t0 = g.delta_phi();
    double t1 = g.delta_phi() + 2.0 * pi;
    double geom = 0.5 * g.params.mass * g.R * g.R * g.tau1 * g.tau2 *
                  (t1 * t1 - t0 * t0) / (g.params.hbar * g.T);
    double predicted = 2.0 * pi * xi + geom;
    predicted = std::remainder(predicted, 2.0 * pi);
    CHECK(std::fabs(std::remainder(std::arg(ratio) - predicted, 2.0 * pi)) <
          1e-12);
  }

  InterferenceGeometry bad = g;
  bad.T = 0.0;
  CHECK_THROWS_AS(partial_propagator_flat(0, bad, 0.0), std::invalid_argument);
}

TEST_CASE("interference terms") {
  InterferenceGeometry g = base_geometry();
  const double a = g.params.mass / (2.0 * pi * g.params.hbar * g.T);

  SUBCASE("signed value is the negative-real prefactor times the contrast") {
    for (double xi : {0.0, 0.17, 0.6}) {
      CHECK(rel_err(interference_term(0, 2, g, xi),
                    -2.0 * a * a * interference_contrast(0, 2, g, xi)) <
            1e-14);
    }
  }

  SUBCASE("no flux dependence for equal winding numbers") {
    for (double xi : {0.0, 0.3, 0.77, 1.5}) {
      CHECK(interference_term(2, 2, g, xi) == -2.0 * a * a);
      CHECK(interference_term(-1, -1, g, xi) == -2.0 * a * a);
    }
  }

  SUBCASE("unit flux periodicity") {
    for (double xi : {-0.7, 0.2, 1.9}) {
      CHECK(std::fabs(interference_contrast(0, 3, g, xi + 1.0) -
                      interference_contrast(0, 3, g, xi)) < 1e-12);
    }
  }

  SUBCASE("symmetric in the two paths") {
    for (int n = -3; n <= 3; ++n)
      for (int l = -3; l <= 3; ++l)
        CHECK(interference_term(n, l, g, 0.3) ==
              interference_term(l, n, g, 0.3));
  }

  SUBCASE("opposite-arm pair at dphi = pi isolates cos(2 pi xi)") {
    InterferenceGeometry opp = g;
    opp.phi2 = opp.phi1 + pi;
    for (double xi : {0.0, 0.1, 0.25, 0.5, 0.75, 1.3}) {
      CHECK(std::fabs(interference_contrast(-1, 0, opp, xi) -
                      std::cos(2.0 * pi * xi)) < 1e-12);
      CHECK(rel_err(interference_term(-1, 0, opp, xi),
                    max_interference(xi, opp.T, opp.params)) < 1e-12);
    }
    CHECK(std::fabs(interference_contrast(-1, 0, opp, 0.25)) < 1e-12);
    CHECK(std::fabs(interference_contrast(-1, 0, opp, 0.75)) < 1e-12);
  }

  SUBCASE("depends on the windings only through l-n and l+n") {
    // generic geometry: same gap, different l+n -> different pattern
    CHECK(std::fabs(interference_contrast(0, 1, g, 0.3) -
                    interference_contrast(1, 2, g, 0.3)) > 1e-3);
    // kappa = 1/(2 pi) makes the (l+n+1) phase a multiple of 2 pi under
    // n,l -> n+c,l+c, so the pattern collapses onto the gap l-n alone
    InterferenceGeometry q = g;
    q.tau1 = q.tau2 = std::sqrt(1.0 / (2.0 * pi * q.R * q.R));
    for (int c : {1, 2, 3}) {
      CHECK(std::fabs(interference_contrast(0, 1, q, 0.3) -
                      interference_contrast(c, 1 + c, q, 0.3)) < 1e-10);
      CHECK(std::fabs(interference_contrast(-1, 1, q, 0.3) -
                      interference_contrast(-1 + c, 1 + c, q, 0.3)) < 1e-10);
    }
  }
}

TEST_CASE("maximum interference pattern") {
  PhysicalParams params;
  CHECK(max_interference_contrast(0.0) == 1.0);
  CHECK(max_interference_contrast(0.5) == std::cos(pi));
  CHECK(std::fabs(max_interference_contrast(0.25)) < 1e-15);
  CHECK(std::fabs(max_interference_contrast(0.75)) < 1e-15);

  // signed variant carries -2 (m / 2 pi hbar T)^2
  double a = 1.0 / (2.0 * pi);
  CHECK(rel_err(max_interference(0.0, 1.0, params), -2.0 * a * a) < 1e-15);
  CHECK(rel_err(max_interference(0.5, 1.0, params), 2.0 * a * a) < 1e-15);

  for (double xi = -2.0; xi <= 2.0; xi += 0.125) {
    CHECK(std::fabs(max_interference_contrast(xi + 1.0) -
                    max_interference_contrast(xi)) < 1e-12);
  }
  CHECK_THROWS_AS(max_interference(0.3, 0.0, params), std::invalid_argument);
}

TEST_CASE("hyperbolic winding kernels approach flat composites at large R") {
  // Unit-pseudosphere kernel at tau = r/R and beta_h = beta/R^2 carries
  // the area-measure factor R^2 relative to the flat kernel at r.  The
  // flat composite uses the same normalization as the curved expansion,
  //   K_n = e^{i xi Theta_n} Int_R dlam e^{i lam Theta_n} K_|lam|
  // (the 1/2pi of the curved winding expansion sits inside K_lam here).
  const double R = 50.0, beta = 0.5, xi = 0.3, dphi = 0.3;
  KernelRequest req;
  req.p1 = PseudospherePoint::make(1.0 / R, 0.0);
  req.p2 = PseudospherePoint::make(1.0 / R, dphi);
  req.beta = beta / (R * R);
  req.xi = xi;
  req.exec = Exec::serial;
  WindingEvaluator ev(req);

  for (int n : {0, 1, -1}) {
    const double theta = dphi + 2.0 * pi * n;
    auto f = [&](double lam) {
      return std::cos(lam * theta) *
             flat_radial_kernel(lam, 1.0, 1.0, Complex(0.0, -beta)).real();
    };
    auto q = integrate_gk(f, 0.0, 40.0, 1e-10, 1e-16, 2000);
    REQUIRE(q.converged);
    Complex composite =
        Complex(std::cos(xi * theta), std::sin(xi * theta)) * 2.0 * q.value;
    Complex hyp = ev.evaluate(n);
    CHECK(rel_err(hyp, R * R * composite) < 5e-2);
  }
}
