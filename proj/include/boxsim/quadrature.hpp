#pragma once

#include <algorithm>
#include <cmath>

#include "boxsim/errors.hpp"

namespace boxsim {

struct QuadratureResult {
  double value = 0.0;
  double residual = 0.0;  // accumulated error estimate
  bool converged = true;
};

namespace detail {

template <class F>
QuadratureResult simpson_step(const F& f, double a, double m, double b, double fa, double fm,
                              double fb, double whole, double tol, int depth) {
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = f(lm);
  const double frm = f(rm);
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  const double err = (left + right - whole) / 15.0;
  if (depth <= 0 || std::abs(err) <= tol) {
    QuadratureResult r;
    r.value = left + right + err;
    r.residual = std::abs(err);
    r.converged = std::abs(err) <= tol;
    return r;
  }
  const QuadratureResult l = simpson_step(f, a, lm, m, fa, flm, fm, left, 0.5 * tol, depth - 1);
  const QuadratureResult r = simpson_step(f, m, rm, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
  return {l.value + r.value, l.residual + r.residual, l.converged && r.converged};
}

}  // namespace detail

// Adaptive composite Simpson with an absolute tolerance.  The interval is
// pre-split into `initial_intervals` panels so that oscillatory integrands
// cannot fool the first error estimate.
template <class F>
QuadratureResult adaptive_simpson(const F& f, double a, double b, double abs_tol,
                                  int initial_intervals = 8, int max_depth = 32) {
  initial_intervals = std::max(1, initial_intervals);
  QuadratureResult total;
  const double h = (b - a) / initial_intervals;
  const double tol = abs_tol / initial_intervals;
  for (int i = 0; i < initial_intervals; ++i) {
    const double x0 = a + i * h;
    const double x1 = (i + 1 == initial_intervals) ? b : x0 + h;
    const double xm = 0.5 * (x0 + x1);
    const double f0 = f(x0);
    const double f1 = f(x1);
    const double fm = f(xm);
    const double whole = (x1 - x0) / 6.0 * (f0 + 4.0 * fm + f1);
    const QuadratureResult r =
        detail::simpson_step(f, x0, xm, x1, f0, fm, f1, whole, tol, max_depth);
    total.value += r.value;
    total.residual += r.residual;
    total.converged = total.converged && r.converged;
  }
  return total;
}

template <class F>
double integrate(const F& f, double a, double b, double abs_tol, int initial_intervals = 8) {
  const QuadratureResult r = adaptive_simpson(f, a, b, abs_tol, initial_intervals);
  if (!r.converged)
    throw ConvergenceError("adaptive Simpson quadrature did not reach tolerance", r.residual);
  return r.value;
}

}  // namespace boxsim
