#pragma once

#include <utility>
#include <vector>

#include "boxsim/box.hpp"

namespace boxsim {

// Parameters of the analytic distinguishability approximations for a
// centered half-box measurement of a gaussian packet.
struct SeriesApprox {
  double phi = 0.0;    // 2 pi sigma / L
  double tau_g = 0.0;  // m L sigma / (hbar pi)
  double nu = 0.0;     // E_1 / hbar
  int terms_p = 16;    // damped alternating series length
  int terms_kl = 0;    // cap for the (k, l) double sum

  static SeriesApprox for_gaussian(double sigma, const BoxConfig& cfg, int terms_p = 16,
                                   int terms_kl = 0);
};

// tau_G = m L sigma / (hbar pi).
double tau_gaussian(double sigma, const BoxConfig& cfg);

// tau_G / T_g = 1 / (16 sqrt(pi) d_eff).
double tau_over_recurrence(double deff);

// Time to reach the walls: (L/2)/(dp/m) = m L sigma / hbar = pi tau_G.
double tau_box(double sigma, const BoxConfig& cfg);

// tau_typical / T_g = 1 / (16 d_eff^2), the random-projector prediction.
double tau_typical_over_recurrence(double deff);

// R_p = ((-1)^p / (2p+1)) exp(-(2p+1)^2 phi^2 / 2).  Satisfies
// |R_1| = |R_0|^9 / 3 identically in phi.
double series_coefficient(int p, double phi);

// B_kl = [cos(l pi) - cos(k pi)][sin(k pi/2)/k - sin(l pi/2)/l]; zero on the
// diagonal and unless exactly one of k, l is odd.
double pair_weight(int k, int l);

// (2/pi) exp(-t^2 / 2 tau_G^2): leading-order decay.
double d_leading(double t, const SeriesApprox& approx);

// (2/pi) |sum_p R_p exp(-t^2 (2p+1)^2 / 2 tau_G^2)|.
double d_series(double t, const SeriesApprox& approx);

// (2/pi)(phi/sqrt(2 pi)) |sum_{k,l} cos(4 k l nu t) exp(-(k^2+l^2) phi^2/2) B_kl|;
// the mid-level bridge between the exact sum and the R_p series.
double d_double_sum(double t, const SeriesApprox& approx);

// S_p(gamma) = (1/sqrt(pi)) sum_j gamma^{2p+1} (j+1/2)^{2p} exp(-(j+1/2)^2 gamma^2),
// by direct summation.  S_1 -> 1/2 and S_2 -> 3/4 as gamma -> 0.
double spectral_sum(int p, double gamma);

// tr(H^p rho_G) = (2 E_1 / phi^2)^p S_p(sqrt(2) phi).
double energy_moment(int p, double sigma, const BoxConfig& cfg);

// v_E = hbar^2 / (4 sqrt(2) m sigma^2).
double energy_std(double sigma, const BoxConfig& cfg);

// g(t) = (1/(N pi)) |sin(2 N nu t)/sin(nu t) - cos(nu t)|; the removable
// singularities at nu t = q pi are handled by their limit values.
double uniform_g(double t, int n_levels, const BoxConfig& cfg);

// First zero of g: T_g / (4 N).
double uniform_first_zero(int n_levels, const BoxConfig& cfg);

struct PowerLawFit {
  double prefactor = 0.0;
  double exponent = 0.0;  // avg_D ~ prefactor * deff^-exponent
};

// Least-squares line over (log deff, log avg_D).
PowerLawFit power_law_fit(const std::vector<std::pair<double, double>>& points);

}  // namespace boxsim
