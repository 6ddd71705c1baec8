#include "hypab/oracle_grid.hpp"

#include <lapacke.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>
#include <string>

namespace hypab {

void RadialGrid::check() const {
  if (!(tau_min > 0.0) || !(tau_min < tau_max)) {
    throw std::invalid_argument("RadialGrid: need 0 < tau_min < tau_max");
  }
  if (points < 100) {
    throw std::invalid_argument("RadialGrid: need at least 100 points");
  }
}

TridiagonalOperator build_radial_operator(double lam, const RadialGrid& grid,
                                          const PhysicalParams& params) {
  grid.check();
  params.check();
  if (lam < 0.0) {
    throw std::invalid_argument("build_radial_operator: lam must be >= 0");
  }
  double es = params.hbar * params.hbar / (2.0 * params.mass);
  double h = grid.spacing();
  double kin = es / (h * h);
  std::int64_t n = grid.points - 2;
  TridiagonalOperator op;
  op.diag.resize(n);
  op.off.assign(n - 1, -kin);
  if (lam >= 0.5) {
    for (std::int64_t i = 0; i < n; ++i) {
      double tau = grid.node(i + 1);
      double sh = std::sinh(tau);
      op.diag[i] = 2.0 * kin + es * (lam * lam - 0.25) / (sh * sh) + 0.25 * es;
    }
    return op;
  }
  // Limit-circle channel: make tau^nu an exact zero mode of the singular
  // part by the difference-quotient potential, folding the boundary node
  // in through the regular-solution ratio; the 1/sinh^2 - 1/tau^2
  // remainder is analytic and keeps the naive second-order stencil.
  double nu = lam + 0.5;
  for (std::int64_t i = 0; i < n; ++i) {
    double tau = grid.node(i + 1);
    double below = std::pow(grid.node(i) / tau, nu);
    double above = std::pow(grid.node(i + 2) / tau, nu);
    double sing = kin * (above + below - 2.0);
    if (i == 0) sing -= kin * below;
    double sh = std::sinh(tau);
    double remainder =
        es * (lam * lam - 0.25) * ((tau - sh) * (tau + sh)) / (tau * tau * sh * sh);
    op.diag[i] = 2.0 * kin + sing + remainder + 0.25 * es;
  }
  return op;
}

GridPropagator::GridPropagator(double lam, const RadialGrid& grid,
                               const PhysicalParams& params)
    : lam_(lam), grid_(grid) {
  TridiagonalOperator op = build_radial_operator(lam, grid, params);
  lapack_int n = static_cast<lapack_int>(op.diag.size());
  evals_ = std::move(op.diag);
  evecs_.assign(static_cast<std::size_t>(n) * n, 0.0);
  lapack_int info = LAPACKE_dstevd(LAPACK_ROW_MAJOR, 'V', n, evals_.data(),
                                   op.off.data(), evecs_.data(), n);
  if (info != 0) {
    throw std::runtime_error("GridPropagator: dstevd failed with info " +
                             std::to_string(info));
  }
}

namespace {

struct Stencil {
  std::int64_t first;  // first of 4 consecutive grid nodes
  double w[4];         // cubic Lagrange weights
};

Stencil make_stencil(const RadialGrid& grid, double tau) {
  if (!(tau > grid.tau_min) || !(tau < grid.tau_max)) {
    throw std::domain_error("grid kernel endpoint outside (tau_min, tau_max)");
  }
  double h = grid.spacing();
  std::int64_t i = static_cast<std::int64_t>((tau - grid.tau_min) / h);
  std::int64_t first = std::clamp<std::int64_t>(i - 1, 0, grid.points - 4);
  Stencil s;
  s.first = first;
  double x[4];
  for (int m = 0; m < 4; ++m) x[m] = grid.node(first + m);
  for (int m = 0; m < 4; ++m) {
    double w = 1.0;
    for (int j = 0; j < 4; ++j) {
      if (j != m) w *= (tau - x[j]) / (x[m] - x[j]);
    }
    s.w[m] = w;
  }
  return s;
}

}  // namespace

double GridPropagator::kernel(double tau1, double tau2, double beta) const {
  if (!(beta > 0.0)) {
    throw std::invalid_argument("GridPropagator::kernel: beta must be > 0");
  }
  Stencil sa = make_stencil(grid_, tau1);
  Stencil sb = make_stencil(grid_, tau2);
  std::size_t n = evals_.size();
  double h = grid_.spacing();

  // value of the l2-normalized eigenvector j at the stencil of tau: the
  // interior node i lives at row (i-1); Dirichlet boundary nodes are zero.
  auto interp = [&](const Stencil& s, std::size_t j) {
    double v = 0.0;
    for (int m = 0; m < 4; ++m) {
      std::int64_t node = s.first + m;
      if (node == 0 || node == grid_.points - 1) continue;
      v += s.w[m] * evecs_[static_cast<std::size_t>(node - 1) * n + j];
    }
    return v;
  };

  double acc = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    double be = beta * evals_[j];
    if (be > 745.0) break;  // eigenvalues ascend; exp underflows to 0
    // product formed before the Boltzmann weight so that tau1 <-> tau2 is
    // symmetric bitwise, not just to rounding
    double uu = interp(sa, j) * interp(sb, j);
    acc += std::exp(-be) * uu;
  }
  // flat-measure kernel is sum_j e^{-beta E_j} u_j u_j / h; convert to the
  // sinh measure.
  return acc / (h * std::sqrt(std::sinh(tau1) * std::sinh(tau2)));
}

double grid_kernel(double lam, double tau1, double tau2, double beta,
                   const RadialGrid& grid, const PhysicalParams& params) {
  return GridPropagator(lam, grid, params).kernel(tau1, tau2, beta);
}

Complex grid_2d_kernel(const PseudospherePoint& p1,
                       const PseudospherePoint& p2, double beta, double xi,
                       std::int64_t l_max, const RadialGrid& grid,
                       const PhysicalParams& params) {
  if (l_max < 1) {
    throw std::invalid_argument("grid_2d_kernel: l_max must be >= 1");
  }
  double dphi = p2.phi - p1.phi;
  // cache kernel values per distinct channel, not whole eigensystems: a
  // points=2000 eigenvector matrix is ~32 MB and channels can number ~2 l_max
  std::map<double, double> cache;
  Complex acc(0.0, 0.0);
  for (std::int64_t l = -l_max; l <= l_max; ++l) {
    double lam = effective_channel(l, xi).lam;
    auto it = cache.find(lam);
    if (it == cache.end()) {
      double g = GridPropagator(lam, grid, params).kernel(p1.tau, p2.tau, beta);
      it = cache.emplace(lam, g).first;
    }
    double a = static_cast<double>(l) * dphi;
    acc += Complex(std::cos(a), std::sin(a)) * it->second;
  }
  return acc / (2.0 * pi);
}

}  // namespace hypab
