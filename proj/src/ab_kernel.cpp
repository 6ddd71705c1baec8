#include "hypab/ab_kernel.hpp"

#include <lapacke.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

#include "hypab/quadrature.hpp"
#include "hypab/specfun.hpp"

namespace hypab {

void KernelRequest::check() const {
  params.check();
  if (!(beta > 0.0)) {
    throw std::invalid_argument("KernelRequest: beta must be > 0");
  }
  if (l_max < 1 || n_max < 1) {
    throw std::invalid_argument("KernelRequest: truncations must be >= 1");
  }
  if (k_max < 0.0 || !(truncation_tol > 0.0) || !(quad_rel_tol > 0.0)) {
    throw std::invalid_argument("KernelRequest: bad tolerance parameters");
  }
}

double KernelRequest::resolved_k_max() const {
  return k_max > 0.0 ? k_max : 40.0 / std::sqrt(beta);
}

double radial_spectral_weight(double k, double lam) {
  if (!(k > 0.0) || lam < 0.0) {
    throw std::invalid_argument(
        "radial_spectral_weight: need k > 0 and lam >= 0");
  }
  // log space: sinh(pi k) and |Gamma|^2 overflow/underflow separately but
  // their product is polynomially bounded.
  double log_sinh =
      pi * k + std::log1p(-std::exp(-2.0 * pi * k)) - std::log(2.0);
  double log_gamma2 = 2.0 * log_gamma(Complex(0.5 + lam, k)).real();
  return std::exp(std::log(k) + log_sinh - std::log(pi) + log_gamma2);
}

namespace {

// envelope of the spectral integrand near k (max over a few phases of the
// conical oscillation), used for the truncation tail bound
double integrand_envelope(double lam, double tau1, double tau2, double beta,
                          double es, double k,
                          const SeriesControls& series) {
  double env = 0.0;
  for (double f : {0.94, 0.97, 1.0}) {
    double kk = f * k;
    double v = std::exp(-beta * es * (kk * kk + 0.25)) *
               radial_spectral_weight(kk, lam) *
               std::fabs(legendre_p_conical(lam, kk, tau1, series)) *
               std::fabs(legendre_p_conical(lam, kk, tau2, series));
    env = std::max(env, v);
  }
  return env;
}

}  // namespace

double euclidean_radial_kernel(double lam, double tau1, double tau2,
                               double beta, const KernelRequest& req) {
  req.check();
  if (lam < 0.0 || !(tau1 > 0.0) || !(tau2 > 0.0)) {
    throw std::invalid_argument(
        "euclidean_radial_kernel: need lam >= 0 and tau > 0");
  }
  double es = req.params.hbar * req.params.hbar / (2.0 * req.params.mass);
  double kmax = req.resolved_k_max();
  // Boltzmann weight alone is below 1e-20 past this point; integrating
  // further adds exact zeros
  double k_cut = std::min(kmax, std::sqrt(46.0 / (beta * es)) + 3.0);

  auto f = [&](double k) {
    if (!(k > 0.0)) return 0.0;
    double w = std::exp(-beta * es * (k * k + 0.25));
    if (w == 0.0) return 0.0;
    // product of the two conical factors first: multiplication is
    // commutative, so the result is bitwise symmetric under tau1 <-> tau2
    double pp = legendre_p_conical(lam, k, tau1, req.series) *
                legendre_p_conical(lam, k, tau2, req.series);
    return w * radial_spectral_weight(k, lam) * pp;
  };
  // far from the weight's peak the integrand is roundoff noise around
  // zero, which a purely relative goal can never certify; anchor the
  // absolute goal to the sampled peak instead
  double fmax = 0.0;
  for (int i = 1; i <= 24; ++i) {
    fmax = std::max(fmax,
                    std::fabs(f(k_cut * static_cast<double>(i) / 24.0)));
  }
  auto q = integrate_gk(f, 0.0, k_cut, req.quad_rel_tol,
                        1e-2 * req.quad_rel_tol * fmax * k_cut,
                        req.quad_max_subdiv);
  if (!q.converged) {
    throw ConvergenceError("euclidean_radial_kernel: quadrature failure");
  }
  if (k_cut < kmax - 1e-12 * kmax) {
    return q.value;  // cut purely by the underflowing weight; no tail
  }
  double env =
      integrand_envelope(lam, tau1, tau2, beta, es, k_cut, req.series);
  double tail = env / (2.0 * beta * es * k_cut);
  if (tail > req.truncation_tol * std::max(std::fabs(q.value), 1e-300)) {
    throw ConvergenceError(
        "euclidean_radial_kernel: k_max tail bound violation");
  }
  return q.value;
}

namespace {

// distinct channels lambda = |l - xi| for |l| <= l_max, with the index map
// from l back into the deduplicated list
struct ChannelSet {
  std::vector<double> lams;
  std::vector<std::size_t> index_of_l;  // offset l + l_max
};

ChannelSet collect_channels(const KernelRequest& req) {
  ChannelSet cs;
  std::map<double, std::size_t> seen;
  cs.index_of_l.resize(2 * req.l_max + 1);
  for (std::int64_t l = -req.l_max; l <= req.l_max; ++l) {
    double lam = effective_channel(l, req.xi).lam;
    auto it = seen.find(lam);
    if (it == seen.end()) {
      it = seen.emplace(lam, cs.lams.size()).first;
      cs.lams.push_back(lam);
    }
    cs.index_of_l[static_cast<std::size_t>(l + req.l_max)] = it->second;
  }
  return cs;
}

}  // namespace

Complex partial_wave_kernel(const KernelRequest& req) {
  req.check();
  ChannelSet cs = collect_channels(req);
  std::vector<double> g = map_indexed(req.exec, cs.lams.size(), [&](std::size_t i) {
    return euclidean_radial_kernel(cs.lams[i], req.p1.tau, req.p2.tau,
                                   req.beta, req);
  });
  double dphi = req.delta_phi();
  Complex acc(0.0, 0.0);
  for (std::int64_t l = -req.l_max; l <= req.l_max; ++l) {
    double a = static_cast<double>(l) * dphi;
    double gl = g[cs.index_of_l[static_cast<std::size_t>(l + req.l_max)]];
    acc += Complex(std::cos(a), std::sin(a)) * gl;
  }
  acc /= 2.0 * pi;

  // tail estimate from the last three terms on each side of the sum
  double est = 0.0;
  for (std::int64_t l = req.l_max - 2; l <= req.l_max; ++l) {
    est += g[cs.index_of_l[static_cast<std::size_t>(l + req.l_max)]];
    est += g[cs.index_of_l[static_cast<std::size_t>(-l + req.l_max)]];
  }
  est /= 2.0 * pi;
  if (est > req.truncation_tol * (std::abs(acc) + est)) {
    throw ConvergenceError("partial_wave_kernel: truncation not converged");
  }
  return acc;
}

namespace {

// not-a-knot cubic spline through (x_j, y_j); returns per-interval cubic
// coefficients in the local variable u = x - x_j
void build_spline(const std::vector<double>& x, const std::vector<double>& y,
                  std::vector<double>& a, std::vector<double>& b,
                  std::vector<double>& c, std::vector<double>& d) {
  std::size_t n = x.size();
  std::vector<double> m(n, 0.0);  // second derivatives
  if (n < 4) {
    throw std::invalid_argument("build_spline: need at least 4 nodes");
  }
  // dense solve of the moment equations; row 0 / n-1 are the not-a-knot
  // third-derivative continuity conditions at the first/last interior node
  std::vector<double> A(n * n, 0.0), rhs(n, 0.0);
  auto h = [&](std::size_t j) { return x[j + 1] - x[j]; };
  A[0 * n + 0] = 1.0 / h(0);
  A[0 * n + 1] = -(1.0 / h(0) + 1.0 / h(1));
  A[0 * n + 2] = 1.0 / h(1);
  for (std::size_t j = 1; j + 1 < n; ++j) {
    A[j * n + (j - 1)] = h(j - 1);
    A[j * n + j] = 2.0 * (h(j - 1) + h(j));
    A[j * n + (j + 1)] = h(j);
    rhs[j] = 6.0 * ((y[j + 1] - y[j]) / h(j) - (y[j] - y[j - 1]) / h(j - 1));
  }
  A[(n - 1) * n + (n - 3)] = 1.0 / h(n - 3);
  A[(n - 1) * n + (n - 2)] = -(1.0 / h(n - 3) + 1.0 / h(n - 2));
  A[(n - 1) * n + (n - 1)] = 1.0 / h(n - 2);

  std::vector<lapack_int> piv(n);
  lapack_int info = LAPACKE_dgesv(LAPACK_ROW_MAJOR,
                                  static_cast<lapack_int>(n), 1, A.data(),
                                  static_cast<lapack_int>(n), piv.data(),
                                  rhs.data(), 1);
  if (info != 0) {
    throw std::runtime_error("build_spline: singular moment system");
  }
  m = rhs;

  a.resize(n - 1);
  b.resize(n - 1);
  c.resize(n - 1);
  d.resize(n - 1);
  for (std::size_t j = 0; j + 1 < n; ++j) {
    double hj = h(j);
    a[j] = y[j];
    b[j] = (y[j + 1] - y[j]) / hj - hj * (2.0 * m[j] + m[j + 1]) / 6.0;
    c[j] = 0.5 * m[j];
    d[j] = (m[j + 1] - m[j]) / (6.0 * hj);
  }
}

// moments Int_0^h u^m cos(theta u) du and Int_0^h u^m sin(theta u) du for
// m = 0..3, series branch below |theta h| = 1/2
void cos_sin_moments(double theta, double h, double C[4], double S[4]) {
  double th = theta * h;
  if (std::fabs(th) < 0.5) {
    for (int m = 0; m < 4; ++m) {
      double cs = 0.0, ss = 0.0;
      double hp = std::pow(h, m + 1);
      // cos moment: sum_j (-1)^j theta^{2j} h^{m+2j+1} / ((2j)! (m+2j+1))
      // sin moment: sum_j (-1)^j theta^{2j+1} h^{m+2j+2} / ((2j+1)! (m+2j+2))
      double num_c = hp, num_s = hp * h * theta;
      double fact_c = 1.0, fact_s = 1.0;
      for (int j = 0; j < 16; ++j) {
        double sign = (j % 2 == 0) ? 1.0 : -1.0;
        cs += sign * num_c / (fact_c * (m + 2 * j + 1));
        ss += sign * num_s / (fact_s * (m + 2 * j + 2));
        num_c *= th * th;
        num_s *= th * th;
        fact_c *= (2.0 * j + 1.0) * (2.0 * j + 2.0);
        fact_s *= (2.0 * j + 2.0) * (2.0 * j + 3.0);
      }
      C[m] = cs;
      S[m] = ss;
    }
    return;
  }
  double sn = std::sin(th), cn = std::cos(th);
  double t1 = theta, t2 = theta * theta, t3 = t2 * theta, t4 = t2 * t2;
  C[0] = sn / t1;
  S[0] = (1.0 - cn) / t1;
  C[1] = (cn - 1.0) / t2 + h * sn / t1;
  S[1] = sn / t2 - h * cn / t1;
  C[2] = h * h * sn / t1 + 2.0 * h * cn / t2 - 2.0 * sn / t3;
  S[2] = -h * h * cn / t1 + 2.0 * h * sn / t2 + 2.0 * (cn - 1.0) / t3;
  C[3] = h * h * h * sn / t1 + 3.0 * h * h * cn / t2 - 6.0 * h * sn / t3 -
         6.0 * (cn - 1.0) / t4;
  S[3] = -h * h * h * cn / t1 + 3.0 * h * h * sn / t2 + 6.0 * h * cn / t3 -
         6.0 * sn / t4;
}

}  // namespace

WindingEvaluator::WindingEvaluator(const KernelRequest& req) : req_(req) {
  req_.check();
  auto g_of = [&](double lam) {
    return euclidean_radial_kernel(lam, req_.p1.tau, req_.p2.tau, req_.beta,
                                   req_);
  };
  double g0 = g_of(0.0);
  double threshold = 1e-12 * std::fabs(g0);

  // coarse probe for the decay point of G_lambda
  double lam_max = 60.0;
  for (double lam = 2.0; lam <= 60.0; lam += 2.0) {
    if (std::fabs(g_of(lam)) < threshold) {
      lam_max = lam;
      break;
    }
  }

  // geometric ladder, fine near 0 where G curves fastest
  nodes_.clear();
  double u = 0.0, step = 0.05;
  while (u < lam_max) {
    nodes_.push_back(u);
    u += step;
    step = std::min(step * 1.13, 0.5);
  }
  if (lam_max - nodes_.back() < 0.25 * (nodes_.back() - nodes_[nodes_.size() - 2])) {
    nodes_.back() = lam_max;
  } else {
    nodes_.push_back(lam_max);
  }

  values_ = map_indexed(req_.exec, nodes_.size(), [&](std::size_t i) {
    return i == 0 ? g0 : g_of(nodes_[i]);
  });
  build_spline(nodes_, values_, ca_, cb_, cc_, cd_);
}

double WindingEvaluator::cosine_transform(double theta) const {
  double acc = 0.0;
  double C[4], S[4];
  for (std::size_t j = 0; j + 1 < nodes_.size(); ++j) {
    double h = nodes_[j + 1] - nodes_[j];
    cos_sin_moments(theta, h, C, S);
    double pc = ca_[j] * C[0] + cb_[j] * C[1] + cc_[j] * C[2] + cd_[j] * C[3];
    double ps = ca_[j] * S[0] + cb_[j] * S[1] + cc_[j] * S[2] + cd_[j] * S[3];
    double phase = theta * nodes_[j];
    acc += std::cos(phase) * pc - std::sin(phase) * ps;
  }
  return acc / pi;
}

Complex WindingEvaluator::evaluate(std::int64_t n) const {
  double theta = req_.delta_phi() + 2.0 * pi * static_cast<double>(n);
  double xt = req_.xi * theta;
  return Complex(std::cos(xt), std::sin(xt)) * cosine_transform(theta);
}

Complex winding_kernel(std::int64_t n, const KernelRequest& req) {
  return WindingEvaluator(req).evaluate(n);
}

Complex winding_kernel_sum(const KernelRequest& req) {
  WindingEvaluator ev(req);
  Complex acc(0.0, 0.0);
  for (std::int64_t n = -req.n_max; n <= req.n_max; ++n) {
    acc += ev.evaluate(n);
  }
  return acc;
}

Complex flat_ab_kernel(double r1, double r2, double delta_phi, double xi,
                       Complex time, const PhysicalParams& params,
                       const SeriesControls& ctl, std::int64_t l_max,
                       double truncation_tol) {
  params.check();
  if (!(r1 > 0.0) || !(r2 > 0.0)) {
    throw std::invalid_argument("flat_ab_kernel: need r1, r2 > 0");
  }
  if (time == Complex(0.0, 0.0)) {
    throw std::invalid_argument("flat_ab_kernel: time must be nonzero");
  }
  if (l_max < 1) {
    throw std::invalid_argument("flat_ab_kernel: l_max must be >= 1");
  }
  Complex iht = Complex(0.0, 1.0) * params.hbar * time;
  Complex pref = params.mass / (2.0 * pi * iht);
  // exp(i m (r1^2+r2^2) / (2 hbar T)); note i/T = -1/(iT)
  Complex expo =
      std::exp(-params.mass * (r1 * r1 + r2 * r2) / (2.0 * iht));
  Complex z = params.mass * r1 * r2 / iht;

  Complex acc(0.0, 0.0);
  double tail = 0.0;
  for (std::int64_t n = -l_max; n <= l_max; ++n) {
    double nu = std::fabs(static_cast<double>(n) - xi);
    Complex in = bessel_i_complex(nu, z, ctl);
    double a = static_cast<double>(n) * delta_phi;
    acc += Complex(std::cos(a), std::sin(a)) * in;
    if (n >= l_max - 2 || n <= -(l_max - 2)) tail += std::abs(in);
  }
  if (tail > truncation_tol * (std::abs(acc) + tail)) {
    throw ConvergenceError("flat_ab_kernel: truncation not converged");
  }
  return pref * expo * acc;
}

}  // namespace hypab
