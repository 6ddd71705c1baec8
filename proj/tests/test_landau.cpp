#include <doctest.h>

#include <cmath>
#include <complex>
#include <vector>

#include "hypab/core.hpp"
#include "hypab/landau.hpp"
#include "hypab/quadrature.hpp"
#include "hypab/specfun.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

using namespace hypab;
using testutil::conical_oracle;
using testutil::rel_err;

TEST_CASE("landau_levels known values at b = 3") {
  PhysicalParams params;
  auto levels = landau_levels(3.0, params);
  REQUIRE(levels.size() == 3);  // N < 2.5
  CHECK(levels[0] == doctest::Approx(1.5).epsilon(1e-14));
  CHECK(levels[1] == doctest::Approx(3.5).epsilon(1e-14));
  CHECK(levels[2] == doctest::Approx(4.5).epsilon(1e-14));
}

TEST_CASE("landau_levels minimum field strength") {
  PhysicalParams params;
  CHECK(landau_levels(0.4, params).empty());
  CHECK(landau_levels(0.5, params).empty());  // boundary excluded
  CHECK(landau_levels(0.0, params).empty());
}

TEST_CASE("landau level count matches direct enumeration") {
  PhysicalParams params;
  for (double b : {0.0, 0.5, 0.51, 1.5, 3.0, 10.2}) {
    std::size_t count = 0;
    while (static_cast<double>(count) < b - 0.5) ++count;
    CHECK(landau_levels(b, params).size() == count);
  }
}

TEST_CASE("landau levels increase with N and stay below the continuum") {
  PhysicalParams params;
  for (double b : {0.8, 3.0, 10.2, 40.0}) {
    auto levels = landau_levels(b, params);
    double threshold = 0.5 * (b * b + 0.25);  // k -> 0 continuum edge
    for (std::size_t i = 0; i < levels.size(); ++i) {
      CHECK(levels[i] > 0.0);
      CHECK(levels[i] < threshold);
      if (i > 0) CHECK(levels[i] > levels[i - 1]);
    }
  }
}

TEST_CASE("landau_bound_state validates the quantum-number window") {
  PhysicalParams params;
  CHECK_THROWS_AS(landau_bound_state(3, 0, 3.0, params),
                  std::invalid_argument);  // 3 > 2.5
  CHECK_THROWS_AS(landau_bound_state(-1, 0, 3.0, params),
                  std::invalid_argument);
  CHECK_THROWS_AS(landau_bound_state(0, 0, 0.4, params),
                  std::invalid_argument);
  auto s = landau_bound_state(1, -2, 4.2, params);
  CHECK(s.normalization_constant > 0.0);
  CHECK(s.energy == doctest::Approx(0.5 * (4.2 * 4.2 + 0.25 - 2.7 * 2.7))
                        .epsilon(1e-14));
}

TEST_CASE("bound wavefunction frozen reference values") {
  // mpmath (30 digits) from the normalized Jacobi form with the
  // (2b-2N-1) constant, at tau = 0.8, phi = 0.6.
  PhysicalParams params;
  auto p = PseudospherePoint::make(0.8, 0.6);
  CHECK(rel_err(landau_bound_wavefunction(0, 0, 3.0, p, params),
                Complex(0.395140421575995104756, 0.0)) < 1e-11);
  CHECK(rel_err(landau_bound_wavefunction(1, 0, 3.0, p, params),
                Complex(0.0995140202400258474842, 0.0)) < 1e-11);
  CHECK(rel_err(landau_bound_wavefunction(1, -2, 4.2, p, params),
                Complex(0.110110356414362520007, -0.283220531864109682933)) <
        1e-11);
  CHECK(rel_err(landau_bound_wavefunction(2, 1, 4.2, p, params),
                Complex(0.0748786130740129858025, 0.0512272153615077586578)) <
        1e-11);
}

TEST_CASE("bound wavefunction vanishes at the origin for l != 0") {
  PhysicalParams params;
  auto p = PseudospherePoint::make(1e-6, 0.0);
  CHECK(std::abs(landau_bound_wavefunction(0, 2, 4.2, p, params)) < 1e-10);
  CHECK(std::abs(landau_bound_wavefunction(1, -1, 3.0, p, params)) < 1e-5);
}

namespace {

double bound_radial(std::int64_t N, std::int64_t l, double b, double tau) {
  PhysicalParams params;
  auto p = PseudospherePoint::make(tau, 0.0);
  return landau_bound_wavefunction(N, l, b, p, params).real();
}

// 2 pi Int_0^inf psi_N psi_M sinh(tau) dtau; the phi integral contributes
// 2 pi for equal l (different l are orthogonal exactly through the angular
// e^{i(l-l')phi} factor, which needs no quadrature).
double bound_overlap(std::int64_t N, std::int64_t M, std::int64_t l,
                     double b) {
  auto f = [&](double tau) {
    return bound_radial(N, l, b, tau) * bound_radial(M, l, b, tau) *
           std::sinh(tau);
  };
  auto q = integrate_gk(f, 1e-12, 80.0, 1e-11, 1e-14, 4000);
  return 2.0 * pi * q.value;
}

}  // namespace

TEST_CASE("bound states are normalized under the sinh measure") {
  CHECK(std::fabs(bound_overlap(0, 0, 0, 3.0) - 1.0) < 1e-8);
  CHECK(std::fabs(bound_overlap(1, 1, 0, 3.0) - 1.0) < 1e-8);
}

TEST_CASE("bound states with different N are orthogonal") {
  CHECK(std::fabs(bound_overlap(0, 1, 0, 3.0)) < 1e-8);
}

TEST_CASE("bound-state Gram matrix is the identity at b = 4.2") {
  // N in {0..3} (N < 3.7), l in {-2..2}; cross-l entries vanish exactly by
  // the angular integral, so the content is one radial Gram block per l.
  for (std::int64_t l = -2; l <= 2; ++l) {
    for (std::int64_t N = 0; N <= 3; ++N) {
      for (std::int64_t M = N; M <= 3; ++M) {
        double want = (N == M) ? 1.0 : 0.0;
        CHECK(std::fabs(bound_overlap(N, M, l, 4.2) - want) < 1e-7);
      }
    }
  }
}

TEST_CASE("scattering state energies") {
  PhysicalParams params;
  auto s = landau_scattering_state(2.0, 0, 1.0, params);
  CHECK(s.energy == doctest::Approx(2.625).epsilon(1e-14));
  CHECK(free_energy(2.0, params) == doctest::Approx(2.125).epsilon(1e-14));
  CHECK_THROWS_AS(landau_scattering_state(0.0, 0, 1.0, params),
                  std::invalid_argument);
}

TEST_CASE("scattering wavefunction frozen reference values") {
  // mpmath (30 digits) radial values at tau = 1.2, phi = 0.
  PhysicalParams params;
  auto p = PseudospherePoint::make(1.2, 0.0);
  CHECK(rel_err(landau_scattering_wavefunction(1.0, 1, 1.3, p, params),
                Complex(-0.0624348717793302005198, -0.185252671975664725008)) <
        1e-9);
  CHECK(rel_err(landau_scattering_wavefunction(2.0, -1, 0.6, p, params),
                Complex(0.214289427369976928162, 0.0649400849373419376258)) <
        1e-9);
  CHECK(rel_err(landau_scattering_wavefunction(0.7, 0, 2.0, p, params),
                Complex(0.00157916363373929015141,
                        -0.00473874356581353065259)) < 1e-9);
}

TEST_CASE("scattering wavefunction carries the e^{il phi} phase") {
  PhysicalParams params;
  auto p0 = PseudospherePoint::make(1.2, 0.0);
  auto p1 = PseudospherePoint::make(1.2, 0.9);
  Complex a = landau_scattering_wavefunction(1.0, 2, 1.3, p0, params);
  Complex b = landau_scattering_wavefunction(1.0, 2, 1.3, p1, params);
  CHECK(rel_err(b, a * std::exp(Complex(0.0, 2.0 * 0.9))) < 1e-12);
}

TEST_CASE("scattering wavefunction vanishes at the origin for l != 0") {
  PhysicalParams params;
  auto p = PseudospherePoint::make(1e-6, 0.0);
  CHECK(std::abs(landau_scattering_wavefunction(1.0, 2, 1.3, p, params)) <
        1e-10);
}

TEST_CASE("b -> 0 reduces scattering states to free states") {
  PhysicalParams params;
  for (double k : {0.8, 1.5}) {
    for (std::int64_t l : {0, 1, -2}) {
      for (double tau : {0.1, 1.0, 3.0}) {
        auto p = PseudospherePoint::make(tau, 0.3);
        Complex scat = landau_scattering_wavefunction(k, l, 0.0, p, params);
        Complex free = free_wavefunction(k, l, p, params);
        CHECK(rel_err(scat, free) < 1e-8);
      }
    }
  }
}

TEST_CASE("free wavefunction origin limit at l = 0") {
  // P^0_{ik-1/2}(cosh tau) -> 1, so the modulus tends to
  // sqrt(k sinh(pi k)/2 pi^2) |Gamma(1/2 + ik)|.
  PhysicalParams params;
  double k = 1.0;
  auto p = PseudospherePoint::make(1e-9, 0.0);
  double want = std::sqrt(k * std::sinh(pi * k) / (2.0 * pi * pi)) *
                std::sqrt(pi / std::cosh(pi * k));
  CHECK(std::fabs(std::abs(free_wavefunction(k, 0, p, params)) - want) <
        1e-6 * want);
}

TEST_CASE("free wavefunction modulus against the integral oracle") {
  PhysicalParams params;
  double k = 1.0;
  auto p = PseudospherePoint::make(1.0, 0.0);
  double gamma_mod =
      std::abs(std::exp(log_gamma(Complex(1.5, k))));
  double want = std::sqrt(k * std::sinh(pi * k) / (2.0 * pi * pi)) *
                gamma_mod * conical_oracle(1.0, k, 1.0);
  CHECK(std::fabs(std::abs(free_wavefunction(k, 1, p, params)) - want) <
        1e-7 * want);
}
