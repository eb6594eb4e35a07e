#pragma once

#include <Eigen/Dense>
#include <vector>

#include "boxsim/state.hpp"
#include "boxsim/window.hpp"

namespace boxsim {

// Infinite-time average of the evolving state: the initial state dephased in
// the energy basis.
struct EquilibriumState {
  BoxConfig config;
  std::vector<double> probs;  // p_n = |c_n|^2, index 0 <-> n = 1
};

EquilibriumState equilibrium(const EnergyState& state);

// Evaluates tr(A rho(t)) and D(t) = |tr A (rho(t) - omega)| from the
// energy-basis double sum.  Restricts to levels with nonzero amplitude and
// zeroes off-diagonal products |c_n c_j a_nj| below prune_threshold.
// Phases are reduced modulo the recurrence period before the cosine, which
// keeps D exactly periodic to near machine precision.
class DistinguishabilityEvaluator {
 public:
  DistinguishabilityEvaluator(const EnergyState& state, const WindowMatrix& matrix,
                              double prune_threshold = 1e-16);

  double probability(double t) const;
  double distinguishability(double t) const;
  double equilibrium_probability() const { return diag_term_; }

  // Batched variants; deterministic output ordering.
  std::vector<double> probabilities(const std::vector<double>& times) const;
  std::vector<double> distinguishabilities(const std::vector<double>& times) const;

 private:
  Eigen::MatrixXd coupling_;   // window matrix restricted to the support levels
  Eigen::VectorXd amplitude_;  // c_n per support level
  Eigen::VectorXd cycles_;     // n^2: phase cycles per recurrence period
  double period_ = 0.0;
  double diag_term_ = 0.0;  // tr(A omega)
};

// tr(A rho(t)); real by construction, in [0, 1].
double outcome_probability(const EnergyState& state, const WindowMatrix& matrix, double t);

// |tr A (rho(t) - omega)|, in [0, 1].
double distinguishability(const EnergyState& state, const WindowMatrix& matrix, double t);

struct TimeAverageResult {
  double value = 0.0;
  long samples = 0;
  bool converged = false;
  double last_change = 0.0;  // relative change of the final doubling step
};

// Uniform-grid average of D(t) over one exact period [0, T_g).  Starts from
// initial_samples and doubles the grid (reusing prior samples) until the
// average changes by less than rel_tol, or max_samples is reached, in which
// case the result is flagged as non-converged.
TimeAverageResult time_average_distinguishability(const EnergyState& state,
                                                  const WindowMatrix& matrix, long max_samples,
                                                  double rel_tol = 1e-4,
                                                  long initial_samples = 1024);

// |<x|Psi(t)>|^2 for a pure state; sum_n p_n |<x|n>|^2 for the equilibrium.
double density(const EnergyState& state, double x, double t);
double density(const EquilibriumState& state, double x);

}  // namespace boxsim
