#pragma once

#include <complex>
#include <vector>

#include "boxsim/state.hpp"
#include "boxsim/window.hpp"

namespace boxsim {

// Complex amplitude sampled on a uniform grid over [-L/2, L/2], endpoints
// included.  Independent position-space route used to cross-check the
// energy-basis computations.
struct SpatialGrid {
  BoxConfig config;
  std::vector<std::complex<double>> values;

  int n_points() const { return static_cast<int>(values.size()); }
  double dx() const { return config.length / (n_points() - 1); }
  double x(int i) const { return -0.5 * config.length + i * dx(); }
};

// max(4096, 8 * max_level), made odd so composite Simpson applies cleanly.
int default_grid_points(int max_level);

// Psi(x_i, t) = sum_n c_n e^{-i E_n t / hbar} <x_i|n>.  Requires
// n_points >= 2 * max_level (Nyquist for the highest mode).
SpatialGrid synthesize(const EnergyState& state, double t, int n_points);

// Simpson integral of |Psi|^2 over the whole box.
double grid_norm(const SpatialGrid& grid);

// Simpson integral of |Psi|^2 over the window.
double window_probability_grid(const SpatialGrid& grid, const Window& win);

}  // namespace boxsim
