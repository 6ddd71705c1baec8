#include <doctest.h>

#include <cmath>

#include "hypab/core.hpp"
#include "hypab/quadrature.hpp"
#include "test_util.hpp"

using namespace hypab;
using testutil::rel_err;

TEST_CASE("effective channel folds l and xi together") {
  CHECK(effective_channel(3, 0.0).lam == doctest::Approx(3.0));
  CHECK(effective_channel(0, 0.3).lam == doctest::Approx(0.3));
  CHECK(effective_channel(-2, 0.3).lam == doctest::Approx(2.3));
  CHECK(effective_channel(1, 1.0).lam == doctest::Approx(0.0));
  // shifting l and xi together leaves the channel unchanged
  for (int l = -3; l <= 3; ++l)
    CHECK(effective_channel(l, 0.37).lam ==
          doctest::Approx(effective_channel(l + 5, 5.37).lam));
}

TEST_CASE("point construction normalizes phi and rejects bad tau") {
  auto p = PseudospherePoint::make(1.0, -0.5);
  CHECK(p.phi == doctest::Approx(2.0 * pi - 0.5));
  auto q = PseudospherePoint::make(2.0, 7.0);
  CHECK(q.phi == doctest::Approx(7.0 - 2.0 * pi));
  CHECK_THROWS_AS(PseudospherePoint::make(0.0, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(PseudospherePoint::make(-1.0, 0.0), std::invalid_argument);
}

TEST_CASE("geodesic invariants") {
  auto a = PseudospherePoint::make(0.7, 0.2);
  auto b = PseudospherePoint::make(1.9, 2.5);
  auto ab = geodesic_invariants(a, b);
  auto ba = geodesic_invariants(b, a);
  CHECK(ab.cosh_distance == doctest::Approx(ba.cosh_distance));
  CHECK(ab.delta_phi == doctest::Approx(-ba.delta_phi));
  CHECK(ab.cosh_distance >= 1.0);
  // coincident points
  auto aa = geodesic_invariants(a, a);
  CHECK(aa.cosh_distance == doctest::Approx(1.0));
  CHECK(aa.delta_phi == doctest::Approx(0.0));
  // same tau, antipodal phi: cosh d = cosh^2 + sinh^2 = cosh(2 tau)
  auto c = PseudospherePoint::make(0.7, 0.2 + pi);
  auto ac = geodesic_invariants(a, c);
  CHECK(rel_err(ac.cosh_distance, std::cosh(1.4)) < 1e-14);
  CHECK(ac.delta_phi == doctest::Approx(pi));
}

TEST_CASE("physical params validation and energy scale") {
  PhysicalParams p;
  p.check();
  CHECK(p.energy_scale() == doctest::Approx(0.5));
  p.curvature_radius = 2.0;
  CHECK(p.energy_scale() == doctest::Approx(0.125));
  p.mass = -1.0;
  CHECK_THROWS_AS(p.check(), std::invalid_argument);
}

TEST_CASE("gauss-kronrod quadrature on smooth and awkward integrands") {
  auto r1 = integrate_gk([](double x) { return x * x; }, 0.0, 1.0);
  CHECK(r1.converged);
  CHECK(rel_err(r1.value, 1.0 / 3.0) < 1e-14);

  auto r2 = integrate_gk([](double x) { return std::sin(x); }, 0.0, pi);
  CHECK(rel_err(r2.value, 2.0) < 1e-13);

  // integrable endpoint singularity (nodes are interior, never x = 0)
  auto r3 = integrate_gk([](double x) { return 1.0 / std::sqrt(x); }, 0.0,
                         1.0, 1e-10, 0.0, 5000);
  CHECK(rel_err(r3.value, 2.0) < 1e-8);

  // oscillatory
  auto r4 = integrate_gk([](double x) { return std::cos(x); }, 0.0,
                         10.0 * pi, 1e-12, 1e-12);
  CHECK(std::fabs(r4.value) < 1e-10);

  auto r5 = integrate_gk_complex(
      [](double x) { return std::exp(Complex(0.0, x)); }, 0.0, 1.0);
  Complex want = (std::exp(Complex(0.0, 1.0)) - 1.0) / Complex(0.0, 1.0);
  CHECK(rel_err(r5.value, want) < 1e-13);
}
