#include "boxsim/box.hpp"

#include <cmath>

namespace boxsim {

double energy_level(int n, const BoxConfig& cfg) {
  cfg.validate();
  if (n < 1) throw std::invalid_argument("energy_level: levels are numbered from 1");
  return static_cast<double>(n) * n * cfg.ground_energy();
}

double eigenfunction(int n, double x, const BoxConfig& cfg) {
  cfg.validate();
  if (n < 1) throw std::invalid_argument("eigenfunction: levels are numbered from 1");
  const double half = 0.5 * cfg.length;
  if (x < -half || x > half) throw std::domain_error("eigenfunction: x outside the box");
  return std::sqrt(2.0 / cfg.length) * std::sin(n * kPi * (x / cfg.length + 0.5));
}

}  // namespace boxsim
