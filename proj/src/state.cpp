#include "boxsim/state.hpp"

#include <cmath>
#include <vector>

#include "boxsim/quadrature.hpp"

namespace boxsim {

namespace {

constexpr double kDefaultTruncEps = 1e-12;

// Unnormalized |c_n|^2 of the analytic gaussian overlap, odd n only.
double analytic_weight(int n, double sigma_over_l) {
  const double a = n * kPi * sigma_over_l;
  return std::exp(-2.0 * a * a);
}

void normalize(std::vector<double>& coeffs) {
  double norm_sq = 0.0;
  for (double c : coeffs) norm_sq += c * c;
  const double inv = 1.0 / std::sqrt(norm_sq);
  for (double& c : coeffs) c *= inv;
}

void check_gaussian_args(double sigma, double trunc_eps, const BoxConfig& cfg) {
  cfg.validate();
  if (!(sigma > 0.0) || !(sigma < 0.25 * cfg.length))
    throw std::invalid_argument("gaussian packet requires 0 < sigma < L/4");
  if (!(trunc_eps > 0.0 && trunc_eps < 1.0))
    throw std::invalid_argument("trunc_eps must lie in (0, 1)");
}

}  // namespace

int gaussian_level_cutoff(double sigma, double trunc_eps, const BoxConfig& cfg) {
  check_gaussian_args(sigma, trunc_eps, cfg);
  const double r = sigma / cfg.length;

  // Weights for odd levels n = 2i + 1 until they stop contributing.
  std::vector<double> weights;
  double total = 0.0;
  for (int n = 1;; n += 2) {
    const double w = analytic_weight(n, r);
    weights.push_back(w);
    total += w;
    if (n > 1 && w < total * trunc_eps * 1e-6) break;
    if (n > 20'000'000)
      throw std::invalid_argument("gaussian_level_cutoff: sigma/L too small to truncate");
  }

  // Smallest k with suffix(k) < eps * total; keep levels up to N = 2k.
  double tail = 0.0;
  int k = static_cast<int>(weights.size());
  for (int i = static_cast<int>(weights.size()) - 1; i >= 1; --i) {
    tail += weights[i];
    if (tail >= trunc_eps * total) {
      k = i + 1;
      break;
    }
    k = i;
  }
  return 2 * k;
}

EnergyState gaussian_state(double sigma, GaussianMode mode, double trunc_eps,
                           const BoxConfig& cfg) {
  check_gaussian_args(sigma, trunc_eps, cfg);
  const int n_max = gaussian_level_cutoff(sigma, trunc_eps, cfg);

  EnergyState state;
  state.config = cfg;
  state.kind = StateKind::gaussian;
  state.sigma = sigma;
  state.coeffs.assign(n_max, 0.0);

  const double length = cfg.length;
  if (mode == GaussianMode::analytic) {
    for (int n = 1; n <= n_max; n += 2) {
      const double sign = (n % 4 == 1) ? 1.0 : -1.0;  // sin(n pi / 2)
      const double a = n * kPi * sigma / length;
      state.coeffs[n - 1] = sign * std::exp(-a * a);
    }
  } else {
    // Exact packet from which the analytic overlaps are derived; the
    // subtracted constant enforces the boundary condition at the walls.
    const double offset = std::exp(-(length / (4.0 * sigma)) * (length / (4.0 * sigma)));
    const double norm_factor = std::sqrt(2.0 / length);
    for (int n = 1; n <= n_max; n += 2) {
      auto integrand = [&, n](double x) {
        const double arg = x / (2.0 * sigma);
        const double packet = std::exp(-arg * arg) - offset;
        return packet * norm_factor * std::sin(n * kPi * (x / length + 0.5));
      };
      state.coeffs[n - 1] = integrate(integrand, -0.5 * length, 0.5 * length, 1e-12,
                                      std::max(16, n));
    }
    // Even overlaps vanish by the packet's parity; enforced structurally.
  }

  normalize(state.coeffs);
  return state;
}

EnergyState gaussian_state(double sigma, GaussianMode mode, const BoxConfig& cfg) {
  return gaussian_state(sigma, mode, kDefaultTruncEps, cfg);
}

EnergyState uniform_state(int n_levels, const BoxConfig& cfg) {
  cfg.validate();
  if (n_levels < 1) throw std::invalid_argument("uniform_state requires N >= 1");
  EnergyState state;
  state.config = cfg;
  state.kind = StateKind::uniform;
  state.level_count = n_levels;
  state.coeffs.assign(n_levels, 1.0 / std::sqrt(static_cast<double>(n_levels)));
  return state;
}

double effective_dimension(const EnergyState& state) {
  double fourth = 0.0;
  for (double c : state.coeffs) {
    const double p = c * c;
    fourth += p * p;
  }
  return 1.0 / fourth;
}

double deff_gaussian_closed_form(double sigma, const BoxConfig& cfg) {
  cfg.validate();
  if (!(sigma > 0.0) || !(sigma < 0.25 * cfg.length))
    throw std::invalid_argument("closed-form d_eff requires 0 < sigma < L/4");
  return cfg.length / (4.0 * std::sqrt(kPi) * sigma);
}

double sigma_for_effective_dimension(double deff, const BoxConfig& cfg) {
  cfg.validate();
  if (!(deff >= 1.0)) throw std::invalid_argument("effective dimension must be >= 1");
  return cfg.length / (4.0 * std::sqrt(kPi) * deff);
}

}  // namespace boxsim
