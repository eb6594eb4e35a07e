#pragma once

#include <stdexcept>

namespace boxsim {

inline constexpr double kPi = 3.14159265358979323846;

// Infinite square well on x in [-L/2, L/2].
struct BoxConfig {
  double length = 1.0;
  double mass = 1.0;
  double hbar = 1.0;

  void validate() const {
    if (!(length > 0.0) || !(mass > 0.0) || !(hbar > 0.0))
      throw std::invalid_argument("BoxConfig: L, m and hbar must be positive");
  }

  // E_1 = hbar^2 pi^2 / (2 m L^2)
  double ground_energy() const {
    const double k = kPi / length;
    return hbar * hbar * k * k / (2.0 * mass);
  }

  // T_g = 2 pi hbar / E_1 = 4 m L^2 / (hbar pi).  The spectrum is n^2 E_1,
  // so every relative phase recurs exactly after T_g.
  double recurrence_period() const { return 4.0 * mass * length * length / (hbar * kPi); }

  // nu = E_1 / hbar
  double base_frequency() const { return ground_energy() / hbar; }
};

// E_n = hbar^2 n^2 pi^2 / (2 m L^2), levels numbered from 1.
double energy_level(int n, const BoxConfig& cfg);

// <x|n> = sqrt(2/L) sin(n pi (x/L + 1/2)); vanishes at the walls.
double eigenfunction(int n, double x, const BoxConfig& cfg);

}  // namespace boxsim
