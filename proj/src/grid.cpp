#include "boxsim/grid.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace boxsim {

namespace {

// Integral over [a, b] (in index units) of a quadratic through the three
// unit-spaced samples f0, f1, f2 located at 0, 1, 2.
double quadratic_cell(double f0, double f1, double f2, double a, double b) {
  auto antiderivative = [&](double t) {
    const double t2 = t * t, t3 = t2 * t;
    return 0.5 * f0 * (t3 / 3.0 - 1.5 * t2 + 2.0 * t) - f1 * (t3 / 3.0 - t2) +
           0.5 * f2 * (t3 / 3.0 - 0.5 * t2);
  };
  return antiderivative(b) - antiderivative(a);
}

// Integral of sampled f over the real index range [ia, ib]; composite
// Simpson on the whole cells, quadratic interpolation on partial end cells.
double integrate_indexed(const std::vector<double>& f, double ia, double ib) {
  const int last = static_cast<int>(f.size()) - 1;
  ia = std::clamp(ia, 0.0, static_cast<double>(last));
  ib = std::clamp(ib, 0.0, static_cast<double>(last));
  if (ib <= ia) return 0.0;

  int i0 = static_cast<int>(std::ceil(ia));
  int i1 = static_cast<int>(std::floor(ib));
  if (i0 > i1) {
    // Window contained inside a single cell.
    const int base = std::clamp(i1, 0, last - 2);
    return quadratic_cell(f[base], f[base + 1], f[base + 2], ia - base, ib - base);
  }

  double total = 0.0;
  if (ia < i0) {
    const int base = std::clamp(i0 - 1, 0, last - 2);
    total += quadratic_cell(f[base], f[base + 1], f[base + 2], ia - base, i0 - base);
  }
  if (ib > i1) {
    const int base = std::clamp(i1, 0, last - 2);
    total += quadratic_cell(f[base], f[base + 1], f[base + 2], i1 - base, ib - base);
  }

  int i = i0;
  if ((i1 - i0) % 2 == 1) {
    // Odd cell count: absorb the first cell with a quadratic panel.
    const int base = std::clamp(i0, 0, last - 2);
    total += quadratic_cell(f[base], f[base + 1], f[base + 2], i0 - base, i0 + 1 - base);
    ++i;
  }
  for (; i + 2 <= i1; i += 2) total += (f[i] + 4.0 * f[i + 1] + f[i + 2]) / 3.0;
  return total;
}

std::vector<double> densities(const SpatialGrid& grid) {
  std::vector<double> f(grid.values.size());
  for (size_t i = 0; i < f.size(); ++i) f[i] = std::norm(grid.values[i]);
  return f;
}

}  // namespace

int default_grid_points(int max_level) {
  int n = std::max(4096, 8 * max_level);
  return (n % 2 == 0) ? n + 1 : n;
}

SpatialGrid synthesize(const EnergyState& state, double t, int n_points) {
  const BoxConfig& cfg = state.config;
  cfg.validate();
  if (n_points < 2 * state.max_level())
    throw std::invalid_argument("synthesize: grid undersamples the highest level");

  SpatialGrid grid;
  grid.config = cfg;
  grid.values.assign(n_points, {0.0, 0.0});

  const double s = t / cfg.recurrence_period();
  const double norm_factor = std::sqrt(2.0 / cfg.length);
  std::vector<int> levels;
  std::vector<std::complex<double>> weight;
  for (int i = 0; i < state.max_level(); ++i) {
    if (state.coeffs[i] == 0.0) continue;
    const int n = i + 1;
    // Phase reduced modulo the recurrence period, exactly as in the
    // energy-basis evaluator.
    double p = static_cast<double>(n) * n * s;
    const double lo = std::fma(static_cast<double>(n) * n, s, -p);
    double r = (p - std::floor(p)) + lo;
    r -= std::floor(r);
    const double arg = 2.0 * kPi * r;
    levels.push_back(n);
    weight.push_back(state.coeffs[i] * std::complex<double>(std::cos(arg), -std::sin(arg)));
  }

#pragma omp parallel for schedule(static)
  for (int i = 0; i < n_points; ++i) {
    const double u = static_cast<double>(i) / (n_points - 1);
    std::complex<double> acc{0.0, 0.0};
    for (size_t m = 0; m < levels.size(); ++m)
      acc += weight[m] * std::sin(levels[m] * kPi * u);
    grid.values[i] = norm_factor * acc;
  }
  return grid;
}

double grid_norm(const SpatialGrid& grid) {
  const std::vector<double> f = densities(grid);
  return integrate_indexed(f, 0.0, static_cast<double>(f.size() - 1)) * grid.dx();
}

double window_probability_grid(const SpatialGrid& grid, const Window& win) {
  win.validate(grid.config);
  const std::vector<double> f = densities(grid);
  const double dx = grid.dx();
  const double half = 0.5 * grid.config.length;
  const double ia = (win.lower() + half) / dx;
  const double ib = (win.upper() + half) / dx;
  return integrate_indexed(f, ia, ib) * dx;
}

}  // namespace boxsim
