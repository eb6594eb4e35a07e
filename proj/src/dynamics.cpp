#include "boxsim/dynamics.hpp"

#include <algorithm>
#include <cmath>

#include "boxsim/errors.hpp"

namespace boxsim {

namespace {

// Fractional part of cycles * s with the product split exactly via fma, so
// phases stay accurate even when cycles * s is of order 1e8.
inline double phase_fraction(double cycles, double s) {
  const double p = cycles * s;
  const double lo = std::fma(cycles, s, -p);
  double r = (p - std::floor(p)) + lo;
  r -= std::floor(r);
  return r;
}

}  // namespace

EquilibriumState equilibrium(const EnergyState& state) {
  EquilibriumState eq;
  eq.config = state.config;
  eq.probs.reserve(state.coeffs.size());
  for (double c : state.coeffs) eq.probs.push_back(c * c);
  return eq;
}

DistinguishabilityEvaluator::DistinguishabilityEvaluator(const EnergyState& state,
                                                         const WindowMatrix& matrix,
                                                         double prune_threshold) {
  if (matrix.dim() < state.max_level())
    throw std::invalid_argument("window matrix is smaller than the state's level count");
  period_ = state.config.recurrence_period();

  std::vector<int> support;
  for (int i = 0; i < state.max_level(); ++i)
    if (state.coeffs[i] != 0.0) support.push_back(i);

  const int k = static_cast<int>(support.size());
  amplitude_.resize(k);
  cycles_.resize(k);
  coupling_.resize(k, k);
  for (int a = 0; a < k; ++a) {
    const int n = support[a] + 1;
    amplitude_(a) = state.coeffs[support[a]];
    cycles_(a) = static_cast<double>(n) * n;
  }
  diag_term_ = 0.0;
  for (int a = 0; a < k; ++a) {
    for (int b = 0; b < k; ++b) {
      double v = matrix.entries(support[a], support[b]);
      if (a != b && std::abs(amplitude_(a) * amplitude_(b) * v) < prune_threshold) v = 0.0;
      coupling_(a, b) = v;
    }
    diag_term_ += amplitude_(a) * amplitude_(a) * coupling_(a, a);
  }
}

std::vector<double> DistinguishabilityEvaluator::probabilities(
    const std::vector<double>& times) const {
  const int k = static_cast<int>(amplitude_.size());
  const int total = static_cast<int>(times.size());
  std::vector<double> out(total);
  constexpr int kBlock = 256;
  Eigen::MatrixXd re(k, kBlock), im(k, kBlock);
  for (int start = 0; start < total; start += kBlock) {
    const int cols = std::min(kBlock, total - start);
    for (int c = 0; c < cols; ++c) {
      const double s = times[start + c] / period_;
      for (int i = 0; i < k; ++i) {
        const double arg = 2.0 * kPi * phase_fraction(cycles_(i), s);
        re(i, c) = amplitude_(i) * std::cos(arg);
        im(i, c) = amplitude_(i) * std::sin(arg);
      }
    }
    const auto re_b = re.leftCols(cols);
    const auto im_b = im.leftCols(cols);
    const Eigen::MatrixXd pre = coupling_ * re_b;
    const Eigen::MatrixXd pim = coupling_ * im_b;
    for (int c = 0; c < cols; ++c)
      out[start + c] = re_b.col(c).dot(pre.col(c)) + im_b.col(c).dot(pim.col(c));
  }
  return out;
}

std::vector<double> DistinguishabilityEvaluator::distinguishabilities(
    const std::vector<double>& times) const {
  std::vector<double> out = probabilities(times);
  for (double& v : out) v = std::abs(v - diag_term_);
  return out;
}

double DistinguishabilityEvaluator::probability(double t) const {
  return probabilities({t}).front();
}

double DistinguishabilityEvaluator::distinguishability(double t) const {
  return std::abs(probability(t) - diag_term_);
}

double outcome_probability(const EnergyState& state, const WindowMatrix& matrix, double t) {
  return DistinguishabilityEvaluator(state, matrix).probability(t);
}

double distinguishability(const EnergyState& state, const WindowMatrix& matrix, double t) {
  return DistinguishabilityEvaluator(state, matrix).distinguishability(t);
}

TimeAverageResult time_average_distinguishability(const EnergyState& state,
                                                  const WindowMatrix& matrix, long max_samples,
                                                  double rel_tol, long initial_samples) {
  if (max_samples < 2) throw std::invalid_argument("time average requires n_samples >= 2");
  const DistinguishabilityEvaluator eval(state, matrix);
  const double period = state.config.recurrence_period();

  auto grid_sum = [&](long count, double offset_steps, double step) {
    double sum = 0.0;
    constexpr long kChunk = 1 << 16;
    std::vector<double> times;
    for (long start = 0; start < count; start += kChunk) {
      const long len = std::min(kChunk, count - start);
      times.resize(len);
      for (long i = 0; i < len; ++i) times[i] = (start + i + offset_steps) * step;
      for (double d : eval.distinguishabilities(times)) sum += d;
    }
    return sum;
  };

  long n = std::clamp(initial_samples, 2L, max_samples);
  double sum = grid_sum(n, 0.0, period / n);
  double avg = sum / n;
  bool converged = false;
  double last_change = 0.0;
  while (2 * n <= max_samples) {
    sum += grid_sum(n, 0.5, period / n);
    n *= 2;
    const double refined = sum / n;
    last_change = std::abs(refined - avg) / std::max(std::abs(refined), 1e-300);
    avg = refined;
    if (last_change < rel_tol) {
      converged = true;
      break;
    }
  }
  return {avg, n, converged, last_change};
}

double density(const EnergyState& state, double x, double t) {
  const BoxConfig& cfg = state.config;
  cfg.validate();
  const double half = 0.5 * cfg.length;
  if (x < -half || x > half) throw std::domain_error("density: x outside the box");
  const double s = t / cfg.recurrence_period();
  const double norm_factor = std::sqrt(2.0 / cfg.length);
  double re = 0.0, im = 0.0;
  for (int i = 0; i < state.max_level(); ++i) {
    const double c = state.coeffs[i];
    if (c == 0.0) continue;
    const int n = i + 1;
    const double arg = 2.0 * kPi * phase_fraction(static_cast<double>(n) * n, s);
    const double mode = norm_factor * std::sin(n * kPi * (x / cfg.length + 0.5));
    re += c * std::cos(arg) * mode;
    im -= c * std::sin(arg) * mode;
  }
  return re * re + im * im;
}

double density(const EquilibriumState& state, double x) {
  const BoxConfig& cfg = state.config;
  cfg.validate();
  const double half = 0.5 * cfg.length;
  if (x < -half || x > half) throw std::domain_error("density: x outside the box");
  const double norm_factor = std::sqrt(2.0 / cfg.length);
  double sum = 0.0;
  for (int i = 0; i < static_cast<int>(state.probs.size()); ++i) {
    if (state.probs[i] == 0.0) continue;
    const double mode = norm_factor * std::sin((i + 1) * kPi * (x / cfg.length + 0.5));
    sum += state.probs[i] * mode * mode;
  }
  return sum;
}

}  // namespace boxsim
