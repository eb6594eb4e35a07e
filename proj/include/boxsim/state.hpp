#pragma once

#include <vector>

#include "boxsim/box.hpp"

namespace boxsim {

enum class StateKind { gaussian, uniform };
enum class GaussianMode { analytic, quadrature };

// Pure state expanded over the box eigenstates |n>, n = 1..max_level().
// Both construction paths yield real amplitudes; complex phases enter only
// through time evolution.
struct EnergyState {
  BoxConfig config;
  StateKind kind = StateKind::uniform;
  double sigma = 0.0;   // gaussian packets only
  int level_count = 0;  // uniform states only

  // coeffs[i] = <n|Psi> with n = i + 1; normalized after truncation.
  std::vector<double> coeffs;

  int max_level() const { return static_cast<int>(coeffs.size()); }
};

// Smallest even N such that the analytic gaussian tail probability beyond
// level N is below trunc_eps.
int gaussian_level_cutoff(double sigma, double trunc_eps, const BoxConfig& cfg);

// Centered gaussian packet, width sigma.  `analytic` uses the closed-form
// overlaps; `quadrature` integrates the exact (offset-subtracted) packet
// against each eigenfunction and exists as an independent oracle.
EnergyState gaussian_state(double sigma, GaussianMode mode, double trunc_eps, const BoxConfig& cfg);
EnergyState gaussian_state(double sigma, GaussianMode mode, const BoxConfig& cfg);

// Equal weight on the lowest n_levels eigenstates.
EnergyState uniform_state(int n_levels, const BoxConfig& cfg);

// Inverse participation ratio [sum_n |c_n|^4]^-1.
double effective_dimension(const EnergyState& state);

// d_eff = L / (4 sqrt(pi) sigma), the small-sigma/L closed form.
double deff_gaussian_closed_form(double sigma, const BoxConfig& cfg);

// Inverts the closed form: sigma = L / (4 sqrt(pi) d_eff).
double sigma_for_effective_dimension(double deff, const BoxConfig& cfg);

}  // namespace boxsim
