#pragma once

// Independent finite-difference oracle: the radial channel Hamiltonian
//   H_lam u = -(hbar^2/2m) u'' + [(hbar^2/2m)(lam^2 - 1/4)/sinh^2 tau
//             + hbar^2/8m] u
// discretized with standard 3-point second differences on a uniform grid
// over [tau_min, tau_max] with Dirichlet conditions at both grid ends,
// then densely eigendecomposed. e^{-beta H} kernels built from the
// eigensystem validate the spectral-integral kernels in ab_kernel without
// sharing any code with them.
//
// Validity envelope: tau_max = 12 with beta <= 2 keeps the kernel tail
// beyond the boundary below 1e-10 for interior endpoints. For lam < 1/2
// the tip is in the limit-circle case (both tau^(lam+1/2) and
// tau^(1/2-lam) are square-integrable), so a naive Dirichlet stencil
// selects a spacing-dependent extension. There the centrifugal term is
// discretized by the quotient that annihilates the regular solution
// tau^(lam+1/2) exactly, with the boundary node eliminated through the
// same ratio; this pins the extension the spectral kernel is built on.

#include <cstdint>
#include <vector>

#include "hypab/core.hpp"

namespace hypab {

struct RadialGrid {
  double tau_min = 1e-3;
  double tau_max = 12.0;
  std::int64_t points = 2000;  // total nodes including both Dirichlet ends

  void check() const;
  double spacing() const {
    return (tau_max - tau_min) / static_cast<double>(points - 1);
  }
  double node(std::int64_t i) const { return tau_min + spacing() * i; }
};

struct TridiagonalOperator {
  std::vector<double> diag;  // interior nodes, size points-2
  std::vector<double> off;   // size points-3
};

TridiagonalOperator build_radial_operator(double lam, const RadialGrid& grid,
                                          const PhysicalParams& params);

// Eigendecomposed H_lam, reusable across kernel evaluations.
class GridPropagator {
 public:
  GridPropagator(double lam, const RadialGrid& grid,
                 const PhysicalParams& params);

  // Kernel of e^{-beta H_lam} between tau1 and tau2 in the sinh tau dtau
  // measure (flat-measure kernel divided by sqrt(sinh tau1 sinh tau2)).
  // Eigenvectors are evaluated off-node with a 4-point interpolation.
  // Throws std::domain_error when an endpoint leaves (tau_min, tau_max).
  double kernel(double tau1, double tau2, double beta) const;

  const std::vector<double>& eigenvalues() const { return evals_; }
  const RadialGrid& grid() const { return grid_; }
  double lam() const { return lam_; }

 private:
  double lam_;
  RadialGrid grid_;
  std::vector<double> evals_;  // ascending, size points-2
  std::vector<double> evecs_;  // row-major (points-2)x(points-2), l2-normed
};

// One-shot convenience: eigendecomposes, evaluates, discards.
double grid_kernel(double lam, double tau1, double tau2, double beta,
                   const RadialGrid& grid, const PhysicalParams& params);

// 2D oracle: (1/2pi) sum_{|l| <= l_max} e^{il(phi2-phi1)}
//            grid_kernel(|l - xi|, tau1, tau2, beta).
// Propagators are cached per distinct channel within the call.
Complex grid_2d_kernel(const PseudospherePoint& p1,
                       const PseudospherePoint& p2, double beta, double xi,
                       std::int64_t l_max, const RadialGrid& grid,
                       const PhysicalParams& params);

}  // namespace hypab
