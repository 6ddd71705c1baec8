#pragma once

// Complex special functions needed by the kernels: log-gamma, digamma,
// the Gauss hypergeometric function on the real interval, Jacobi
// polynomials, Legendre functions of complex degree (including conical
// ones, P^{-mu}_{ik-1/2}), and modified Bessel functions.
//
// Everything here is deterministic: fixed coefficient tables, fixed
// branch selection, no global state.

#include "hypab/core.hpp"

namespace hypab {

// Lanczos evaluation, reflected into the left half plane when needed.
// The imaginary part is only defined up to 2*pi*n there; all callers use
// exp() of linear combinations or the real part, which are branch-free.
Complex log_gamma(Complex z);

Complex digamma(Complex z);

// 2F1(a,b;c;x) for real x <= 1 (x = 1 needs Re(c-a-b) > 0).  Terminating
// cases are summed exactly; 0.5 < x < 1 goes through the 1-x connection
// formulas, with the logarithmic series when c-a-b is within 1e-9 of an
// integer.  Accuracy degrades to ~1e-7 when c-a-b sits between ~1e-9 and
// ~1e-6 from an integer without reaching it; no caller in this library
// enters that band.
Complex hyp2f1(Complex a, Complex b, Complex c, double x,
               const SeriesControls& ctl = {});

// Jacobi polynomial P_n^{(alpha,beta)}(x) by the three-term recurrence.
// Independent of hyp2f1 on purpose: it cross-checks the terminating
// hypergeometric path in the validation suite.
double jacobi_poly(int n, double alpha, double beta, double x);

// Associated Legendre function of the first kind of argument cosh(tau):
//   legendre_p(mu, nu, tau) = P^{-mu}_{nu - 1/2}(cosh tau),  mu >= 0.
// The degree offset matches the spectral use nu = i*k.
Complex legendre_p(double mu, Complex nu, double tau,
                   const SeriesControls& ctl = {});

// Conical function P^{-mu}_{ik-1/2}(cosh tau).  The result is real
// analytically; the residual imaginary part is required to satisfy
// |Im| <= 1e-8 |Re| + 1e-12 and is then dropped.
double legendre_p_conical(double mu, double k, double tau,
                          const SeriesControls& ctl = {});

// Modified Bessel function I_nu(z) for nu >= 0, z >= 0.
double bessel_i(double nu, double z, const SeriesControls& ctl = {});

// Modified Bessel function I_nu(z) for nu >= 0 and complex z, by the
// ascending series. Away from the positive real axis the series cancels;
// evaluation is refused (ConvergenceError) once the cancellation would
// cost more than ~13 digits (|z| - Re z > 30).
Complex bessel_i_complex(double nu, Complex z, const SeriesControls& ctl = {});

// Leading large-z form sqrt(1/(2 pi z)) exp(z - (nu^2 - 1/4)/(2 z)); this
// is the shape the flat-space winding expansion is built from.
double bessel_i_asymptotic(double nu, double z);

// Gaussian lambda integral of the asymptotic Bessel shape,
//   exp(z + 1/(8 z) - z theta^2 / 2),
// normalized so that (1/2pi) * result = (1/pi) Int_0^inf cos(lambda theta)
// I_lambda(z) dlambda when I_lambda is replaced by bessel_i_asymptotic.
Complex gaussian_lambda_integral(double theta, Complex z);

}  // namespace hypab
