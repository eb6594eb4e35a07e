#include "boxsim/window.hpp"

#include <algorithm>
#include <cmath>

#include "boxsim/quadrature.hpp"

namespace boxsim {

void Window::validate(const BoxConfig& cfg) const {
  cfg.validate();
  const double slack = 1e-9 * cfg.length;  // absorbs decimal-fraction rounding
  if (width < -slack || width > cfg.length + slack)
    throw std::invalid_argument("window width must lie in [0, L]");
  const double half = 0.5 * cfg.length;
  if (lower() < -half - slack || upper() > half + slack)
    throw std::invalid_argument("window must lie inside the box");
}

namespace {

// Window endpoints in u = x/L + 1/2 coordinates, clamped to [0, 1].
std::pair<double, double> u_interval(const Window& win, const BoxConfig& cfg) {
  const double u1 = std::clamp(win.lower() / cfg.length + 0.5, 0.0, 1.0);
  const double u2 = std::clamp(win.upper() / cfg.length + 0.5, 0.0, 1.0);
  return {u1, u2};
}

double sine_term(int k, double u1, double u2) {
  return (std::sin(k * kPi * u2) - std::sin(k * kPi * u1)) / (k * kPi);
}

}  // namespace

double element_closed_form(int n, int j, const Window& win, const BoxConfig& cfg) {
  if (n < 1 || j < 1) throw std::invalid_argument("window element: levels are numbered from 1");
  win.validate(cfg);
  const auto [u1, u2] = u_interval(win, cfg);
  if (n == j) return (u2 - u1) - sine_term(2 * n, u1, u2);
  return sine_term(n - j, u1, u2) - sine_term(n + j, u1, u2);
}

double element_quadrature(int n, int j, const Window& win, const BoxConfig& cfg, double abs_tol) {
  if (n < 1 || j < 1) throw std::invalid_argument("window element: levels are numbered from 1");
  win.validate(cfg);
  const auto [u1, u2] = u_interval(win, cfg);
  auto integrand = [n, j](double u) {
    return 2.0 * std::sin(n * kPi * u) * std::sin(j * kPi * u);
  };
  return integrate(integrand, u1, u2, abs_tol, std::max(8, n + j));
}

WindowMatrix build_matrix(const Window& win, int max_level, const BoxConfig& cfg) {
  if (max_level < 1) throw std::invalid_argument("build_matrix requires max_level >= 1");
  win.validate(cfg);
  WindowMatrix m;
  m.entries.resize(max_level, max_level);
#pragma omp parallel for schedule(dynamic, 16)
  for (int n = 1; n <= max_level; ++n) {
    for (int j = n; j <= max_level; ++j) {
      const double v = element_closed_form(n, j, win, cfg);
      m.entries(n - 1, j - 1) = v;
      m.entries(j - 1, n - 1) = v;
    }
  }
  return m;
}

}  // namespace boxsim
