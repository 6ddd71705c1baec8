#include "hypab/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace hypab {
namespace {

// 15-point Kronrod extension of the 7-point Gauss rule (QUADPACK dqk15).
const double kXgk[8] = {
    0.991455371120813, 0.949107912342759, 0.864864423359769,
    0.741531185599394, 0.586087235467691, 0.405845151377397,
    0.207784955007898, 0.000000000000000};
const double kWgk[8] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250,
    0.140653259715525, 0.169004726639267, 0.190350578064785,
    0.204432940075298, 0.209482141084728};
const double kWg[4] = {
    0.129484966168870, 0.279705391489277, 0.381830050505119,
    0.417959183673469};

template <typename T>
struct Panel {
  double a, b;
  T value;
  double err;
  bool splittable;
};

// One Gauss-Kronrod pass over [a,b]; returns Kronrod value and the
// QUADPACK-style error estimate.
template <typename T>
Panel<T> evaluate(const std::function<T(double)>& f, double a, double b) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  T fv[15];
  for (int j = 0; j < 7; ++j) {
    fv[j] = f(c - h * kXgk[j]);
    fv[14 - j] = f(c + h * kXgk[j]);
  }
  fv[7] = f(c);
  T resk = kWgk[7] * fv[7];
  T resg = kWg[3] * fv[7];
  double resabs = kWgk[7] * std::abs(fv[7]);
  for (int j = 0; j < 7; ++j) {
    resk += kWgk[j] * (fv[j] + fv[14 - j]);
    resabs += kWgk[j] * (std::abs(fv[j]) + std::abs(fv[14 - j]));
    if (j % 2 == 1) resg += kWg[j / 2] * (fv[j] + fv[14 - j]);
  }
  T reskh = resk * 0.5;
  double resasc = kWgk[7] * std::abs(fv[7] - reskh);
  for (int j = 0; j < 7; ++j)
    resasc += kWgk[j] * (std::abs(fv[j] - reskh) + std::abs(fv[14 - j] - reskh));
  resasc *= std::fabs(h);
  resabs *= std::fabs(h);
  double err = std::abs(resk - resg) * std::fabs(h);
  if (resasc != 0.0 && err != 0.0)
    err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
  const double eps50 = 50.0 * 1.1102230246251565e-16;
  if (resabs > 1e-300 / eps50) err = std::max(err, eps50 * resabs);
  bool splittable = std::fabs(b - a) >
                    1e-14 * (std::fabs(a) + std::fabs(b) + 1.0);
  return Panel<T>{a, b, resk * h, err, splittable};
}

template <typename T, typename R>
R run(const std::function<T(double)>& f, double a, double b, double rel_tol,
      double abs_tol, int max_subdivisions) {
  R out;
  if (a == b) {
    out.converged = true;
    return out;
  }
  std::vector<Panel<T>> panels;
  panels.push_back(evaluate(f, a, b));
  int splits = 0;
  for (;;) {
    T total{};
    double err = 0.0;
    for (const auto& p : panels) {
      total += p.value;
      err += p.err;
    }
    double goal = std::max(abs_tol, rel_tol * std::abs(total));
    if (err <= goal || splits >= max_subdivisions) {
      out.value = total;
      out.error_estimate = err;
      out.subdivisions = splits;
      out.converged = err <= goal;
      return out;
    }
    // worst panel first; lowest index wins ties, so fully deterministic
    std::size_t worst = panels.size();
    double worst_err = -1.0;
    for (std::size_t i = 0; i < panels.size(); ++i) {
      if (panels[i].splittable && panels[i].err > worst_err) {
        worst_err = panels[i].err;
        worst = i;
      }
    }
    if (worst == panels.size()) {  // everything is at rounding width
      out.value = total;
      out.error_estimate = err;
      out.subdivisions = splits;
      out.converged = false;
      return out;
    }
    Panel<T> p = panels[worst];
    double mid = 0.5 * (p.a + p.b);
    panels[worst] = evaluate(f, p.a, mid);
    panels.insert(panels.begin() + static_cast<std::ptrdiff_t>(worst) + 1,
                  evaluate(f, mid, p.b));
    ++splits;
  }
}

}  // namespace

QuadratureResult integrate_gk(const std::function<double(double)>& f,
                              double a, double b, double rel_tol,
                              double abs_tol, int max_subdivisions) {
  return run<double, QuadratureResult>(f, a, b, rel_tol, abs_tol,
                                       max_subdivisions);
}

ComplexQuadratureResult integrate_gk_complex(
    const std::function<Complex(double)>& f, double a, double b,
    double rel_tol, double abs_tol, int max_subdivisions) {
  return run<Complex, ComplexQuadratureResult>(f, a, b, rel_tol, abs_tol,
                                               max_subdivisions);
}

}  // namespace hypab
