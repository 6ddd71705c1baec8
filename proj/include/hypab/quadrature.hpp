#pragma once

// Adaptive Gauss-Kronrod 15(7) quadrature on a finite interval with
// deterministic worst-first bisection.  Semi-infinite integrals in the
// library map onto finite ranges themselves (explicit cutoffs with a tail
// bound), so a finite-interval rule is all we need.

#include <functional>

#include "hypab/core.hpp"

namespace hypab {

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
  int subdivisions = 0;
  bool converged = false;
};

QuadratureResult integrate_gk(const std::function<double(double)>& f,
                              double a, double b,
                              double rel_tol = 1e-10,
                              double abs_tol = 0.0,
                              int max_subdivisions = 2000);

struct ComplexQuadratureResult {
  Complex value{0.0, 0.0};
  double error_estimate = 0.0;
  int subdivisions = 0;
  bool converged = false;
};

ComplexQuadratureResult integrate_gk_complex(
    const std::function<Complex(double)>& f, double a, double b,
    double rel_tol = 1e-10, double abs_tol = 0.0, int max_subdivisions = 2000);

}  // namespace hypab
