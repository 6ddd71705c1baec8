#pragma once

// Self-check suites behind `validate`: every check recomputes an identity
// or cross-implementation comparison whose expected outcome is pinned,
// and reports the measured residual against its tolerance.
//
//   specfun  gamma/hypergeometric/Bessel/conical identities
//   kernel   spectral kernels vs the finite-difference grid oracle and
//            the partial-wave/winding duality
//   limits   Legendre -> Bessel degeneration, Landau b -> 0 reduction
//   spectra  pinned ground levels, ladders, and normalization quadratures
//   all      everything above, in that order

#include <string>
#include <vector>

namespace hypab {

struct CheckResult {
  std::string name;
  double residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

// suite in {specfun, kernel, limits, spectra, all}; throws
// std::invalid_argument for anything else
std::vector<CheckResult> run_validation_suite(const std::string& suite);

}  // namespace hypab
