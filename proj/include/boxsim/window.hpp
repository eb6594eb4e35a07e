#pragma once

#include <Eigen/Dense>

#include "boxsim/box.hpp"

namespace boxsim {

// Measurement interval [center - width/2, center + width/2] inside the box.
struct Window {
  double center = 0.0;
  double width = 0.0;

  double lower() const { return center - 0.5 * width; }
  double upper() const { return center + 0.5 * width; }

  void validate(const BoxConfig& cfg) const;

  static Window centered(double width) { return {0.0, width}; }

  // Left half of the box: asks on which side of the origin the particle is.
  static Window left_half(const BoxConfig& cfg) { return {-0.25 * cfg.length, 0.5 * cfg.length}; }
};

// Projector matrix elements <n|A|j> for all levels up to dim(); real
// symmetric, diagonal in [0, 1].
struct WindowMatrix {
  Eigen::MatrixXd entries;

  int dim() const { return static_cast<int>(entries.rows()); }
};

// Exact antiderivative of (2/L) sin(n pi u) sin(j pi u) over the window's
// interval in u = x/L + 1/2 coordinates.  The n = j diagonal is a separate
// branch (removable singularity of the off-diagonal formula).  Off-diagonal
// denominators n-j, n+j are exact integers, so no epsilon guard is needed.
double element_closed_form(int n, int j, const Window& win, const BoxConfig& cfg);

// Adaptive quadrature of the same integrand; oracle for element_closed_form.
double element_quadrature(int n, int j, const Window& win, const BoxConfig& cfg,
                          double abs_tol = 1e-10);

WindowMatrix build_matrix(const Window& win, int max_level, const BoxConfig& cfg);

}  // namespace boxsim
