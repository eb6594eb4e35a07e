#include "boxsim/closed_form.hpp"

#include <cmath>
#include <stdexcept>

#include "boxsim/state.hpp"

namespace boxsim {

namespace {

void check_sigma(double sigma, const BoxConfig& cfg) {
  cfg.validate();
  if (!(sigma > 0.0) || !(sigma < 0.25 * cfg.length))
    throw std::invalid_argument("closed-form approximations require 0 < sigma < L/4");
}

// sin(k pi / 2) for integer k.
double sin_half(int k) {
  if (k % 2 == 0) return 0.0;
  return (((k % 4) + 4) % 4 == 1) ? 1.0 : -1.0;
}

// cos(k pi) for integer k.
double cos_pi(int k) { return (k % 2 == 0) ? 1.0 : -1.0; }

}  // namespace

SeriesApprox SeriesApprox::for_gaussian(double sigma, const BoxConfig& cfg, int terms_p,
                                        int terms_kl) {
  check_sigma(sigma, cfg);
  if (terms_p < 1) throw std::invalid_argument("terms_p must be >= 1");
  SeriesApprox a;
  a.phi = 2.0 * kPi * sigma / cfg.length;
  a.tau_g = tau_gaussian(sigma, cfg);
  a.nu = cfg.base_frequency();
  a.terms_p = terms_p;
  a.terms_kl = terms_kl > 0 ? terms_kl : 4 * gaussian_level_cutoff(sigma, 1e-12, cfg);
  return a;
}

double tau_gaussian(double sigma, const BoxConfig& cfg) {
  check_sigma(sigma, cfg);
  return cfg.mass * cfg.length * sigma / (cfg.hbar * kPi);
}

double tau_over_recurrence(double deff) {
  if (!(deff >= 1.0)) throw std::invalid_argument("effective dimension must be >= 1");
  return 1.0 / (16.0 * std::sqrt(kPi) * deff);
}

double tau_box(double sigma, const BoxConfig& cfg) {
  check_sigma(sigma, cfg);
  return cfg.mass * cfg.length * sigma / cfg.hbar;
}

double tau_typical_over_recurrence(double deff) {
  if (!(deff >= 1.0)) throw std::invalid_argument("effective dimension must be >= 1");
  return 1.0 / (16.0 * deff * deff);
}

double series_coefficient(int p, double phi) {
  if (p < 0) throw std::invalid_argument("series_coefficient: p must be >= 0");
  const double q = 2.0 * p + 1.0;
  const double sign = (p % 2 == 0) ? 1.0 : -1.0;
  return sign / q * std::exp(-0.5 * q * q * phi * phi);
}

double pair_weight(int k, int l) {
  if (k < 1 || l < 1) throw std::invalid_argument("pair_weight: indices start at 1");
  return (cos_pi(l) - cos_pi(k)) * (sin_half(k) / k - sin_half(l) / l);
}

double d_leading(double t, const SeriesApprox& approx) {
  const double u = t / approx.tau_g;
  return 2.0 / kPi * std::exp(-0.5 * u * u);
}

double d_series(double t, const SeriesApprox& approx) {
  const double u = t / approx.tau_g;
  double sum = 0.0;
  for (int p = 0; p < approx.terms_p; ++p) {
    const double q = 2.0 * p + 1.0;
    sum += series_coefficient(p, approx.phi) * std::exp(-0.5 * u * u * q * q);
  }
  return 2.0 / kPi * std::abs(sum);
}

double d_double_sum(double t, const SeriesApprox& approx) {
  if (approx.terms_kl < 2) throw std::invalid_argument("d_double_sum needs terms_kl >= 2");
  const double phi_sq = approx.phi * approx.phi;
  double sum = 0.0;
  for (int k = 1; k <= approx.terms_kl; ++k) {
    // B_kl vanishes unless exactly one index is odd.
    for (int l = 1 + (k % 2); l <= approx.terms_kl; l += 2) {
      const double damp = std::exp(-0.5 * (static_cast<double>(k) * k + static_cast<double>(l) * l) * phi_sq);
      if (damp < 1e-18) break;  // monotone in l
      sum += std::cos(4.0 * k * l * approx.nu * t) * damp * pair_weight(k, l);
    }
  }
  return 2.0 / kPi * approx.phi / std::sqrt(2.0 * kPi) * std::abs(sum);
}

double spectral_sum(int p, double gamma) {
  if (p < 0) throw std::invalid_argument("spectral_sum: p must be >= 0");
  if (!(gamma > 0.0)) throw std::invalid_argument("spectral_sum: gamma must be positive");
  // Terms are symmetric under j -> -1-j; sum j >= 0 twice.
  double sum = 0.0;
  for (int j = 0;; ++j) {
    const double h = j + 0.5;
    const double term = std::pow(h, 2 * p) * std::exp(-h * h * gamma * gamma);
    sum += term;
    if (term < sum * 1e-18 && h * gamma > std::max(1.0, std::sqrt(static_cast<double>(p)))) break;
  }
  return 2.0 / std::sqrt(kPi) * std::pow(gamma, 2 * p + 1) * sum;
}

double energy_moment(int p, double sigma, const BoxConfig& cfg) {
  check_sigma(sigma, cfg);
  const double phi = 2.0 * kPi * sigma / cfg.length;
  const double scale = 2.0 * cfg.ground_energy() / (phi * phi);
  return std::pow(scale, p) * spectral_sum(p, std::sqrt(2.0) * phi);
}

double energy_std(double sigma, const BoxConfig& cfg) {
  check_sigma(sigma, cfg);
  return cfg.hbar * cfg.hbar / (4.0 * std::sqrt(2.0) * cfg.mass * sigma * sigma);
}

double uniform_g(double t, int n_levels, const BoxConfig& cfg) {
  cfg.validate();
  if (n_levels < 2) throw std::invalid_argument("uniform_g requires N >= 2");
  const double a = cfg.base_frequency() * t;
  const double q = std::round(a / kPi);
  double ratio;
  if (std::abs(a - q * kPi) < 1e-6) {
    // Removable singularity: sin(2N nu t)/sin(nu t) -> 2N cos(2N a)/cos(a).
    ratio = 2.0 * n_levels * std::cos(2.0 * n_levels * a) / std::cos(a);
  } else {
    ratio = std::sin(2.0 * n_levels * a) / std::sin(a);
  }
  return std::abs(ratio - std::cos(a)) / (n_levels * kPi);
}

double uniform_first_zero(int n_levels, const BoxConfig& cfg) {
  cfg.validate();
  if (n_levels < 2) throw std::invalid_argument("uniform_first_zero requires N >= 2");
  return cfg.recurrence_period() / (4.0 * n_levels);
}

PowerLawFit power_law_fit(const std::vector<std::pair<double, double>>& points) {
  if (points.size() < 3) throw std::invalid_argument("power_law_fit needs at least 3 points");
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  const double count = static_cast<double>(points.size());
  for (const auto& [d, v] : points) {
    if (!(d > 0.0) || !(v > 0.0))
      throw std::invalid_argument("power_law_fit requires positive coordinates");
    const double x = std::log(d);
    const double y = std::log(v);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double var = sxx - sx * sx / count;
  if (var < 1e-12 * std::max(1.0, sxx))
    throw std::invalid_argument("power_law_fit: degenerate abscissae");
  const double slope = (sxy - sx * sy / count) / var;
  const double intercept = (sy - slope * sx) / count;
  return {std::exp(intercept), -slope};
}

}  // namespace boxsim
