#include <doctest.h>

#include <cmath>
#include <vector>

#include "boxsim/box.hpp"
#include "boxsim/state.hpp"

using namespace boxsim;

namespace {

const BoxConfig natural{};  // hbar = m = L = 1

// Independent tail-sum oracle for the truncation rule: smallest even N whose
// analytic tail probability drops below eps.
int cutoff_oracle(double sigma_over_l, double eps) {
  std::vector<double> w;
  double total = 0.0;
  for (int n = 1; n < 100000; n += 2) {
    const double a = n * kPi * sigma_over_l;
    w.push_back(std::exp(-2.0 * a * a));
    total += w.back();
    if (w.back() < 1e-40 * total) break;
  }
  for (int k = 1; k < static_cast<int>(w.size()); ++k) {
    double tail = 0.0;
    for (int i = k; i < static_cast<int>(w.size()); ++i) tail += w[i];
    if (tail < eps * total) return 2 * k;
  }
  return 2 * static_cast<int>(w.size());
}

double norm_sq(const EnergyState& s) {
  double t = 0.0;
  for (double c : s.coeffs) t += c * c;
  return t;
}

}  // namespace

TEST_CASE("derived scales of the box configuration") {
  CHECK(natural.ground_energy() == doctest::Approx(kPi * kPi / 2.0).epsilon(1e-15));
  for (const BoxConfig cfg : {BoxConfig{1.0, 1.0, 1.0}, BoxConfig{2.5, 0.7, 1.3}}) {
    CHECK(cfg.base_frequency() * cfg.recurrence_period() ==
          doctest::Approx(2.0 * kPi).epsilon(1e-14));
  }
  CHECK_THROWS_AS((BoxConfig{-1.0, 1.0, 1.0}.validate()), std::invalid_argument);
}

TEST_CASE("energy levels") {
  CHECK(energy_level(1, natural) == doctest::Approx(4.9348022005446793).epsilon(1e-14));
  CHECK(energy_level(2, natural) == doctest::Approx(4.0 * energy_level(1, natural)).epsilon(1e-15));
  const BoxConfig wide{2.0, 1.0, 1.0};
  CHECK(energy_level(3, wide) == doctest::Approx(9.0 * kPi * kPi / 8.0).epsilon(1e-14));
  CHECK_THROWS_AS(energy_level(0, natural), std::invalid_argument);
}

TEST_CASE("eigenfunctions vanish at the walls and obey the sine form") {
  CHECK(std::abs(eigenfunction(2, 0.0, natural)) < 1e-13);
  CHECK(std::abs(eigenfunction(1, -0.5, natural)) < 1e-13);
  CHECK(std::abs(eigenfunction(1, 0.5, natural)) < 1e-13);
  CHECK(eigenfunction(1, 0.0, natural) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
  CHECK_THROWS_AS(eigenfunction(1, 0.6, natural), std::domain_error);
}

TEST_CASE("gaussian state construction") {
  SUBCASE("parity: even levels carry exactly zero amplitude in both modes") {
    for (const auto mode : {GaussianMode::analytic, GaussianMode::quadrature}) {
      const auto s = gaussian_state(0.02, mode, natural);
      for (int i = 1; i < s.max_level(); i += 2) CHECK(s.coeffs[i] == 0.0);
    }
  }

  SUBCASE("normalization after truncation") {
    for (double sigma : {0.1, 0.01, 0.003}) {
      const auto s = gaussian_state(sigma, GaussianMode::analytic, natural);
      CHECK(std::abs(norm_sq(s) - 1.0) < 1e-12);
    }
    const auto q = gaussian_state(0.05, GaussianMode::quadrature, natural);
    CHECK(std::abs(norm_sq(q) - 1.0) < 1e-12);
  }

  SUBCASE("analytic amplitudes match the quadrature oracle at sigma/L = 0.01") {
    const auto a = gaussian_state(0.01, GaussianMode::analytic, natural);
    const auto q = gaussian_state(0.01, GaussianMode::quadrature, natural);
    REQUIRE(a.max_level() == q.max_level());
    for (int i = 0; i < a.max_level(); ++i)
      CHECK(std::abs(a.coeffs[i] - q.coeffs[i]) < 1e-8);
  }

  SUBCASE("truncation rule matches the tail-sum oracle") {
    for (double sigma : {0.1, 0.03, 0.01})
      CHECK(gaussian_level_cutoff(sigma, 1e-12, natural) == cutoff_oracle(sigma, 1e-12));
    const auto s = gaussian_state(0.1, GaussianMode::analytic, 1e-12, natural);
    CHECK(s.max_level() == cutoff_oracle(0.1, 1e-12));
  }

  SUBCASE("regime preconditions") {
    CHECK_THROWS_AS(gaussian_state(0.25, GaussianMode::analytic, natural),
                    std::invalid_argument);
    CHECK_THROWS_AS(gaussian_state(0.0, GaussianMode::analytic, natural), std::invalid_argument);
    CHECK_THROWS_AS(gaussian_state(0.01, GaussianMode::analytic, 0.0, natural),
                    std::invalid_argument);
  }
}

TEST_CASE("uniform state") {
  const auto ground = uniform_state(1, natural);
  REQUIRE(ground.max_level() == 1);
  CHECK(ground.coeffs[0] == doctest::Approx(1.0).epsilon(1e-15));

  const auto four = uniform_state(4, natural);
  for (double c : four.coeffs) CHECK(c * c == doctest::Approx(0.25).epsilon(1e-15));

  CHECK(effective_dimension(uniform_state(500, natural)) == doctest::Approx(500.0).epsilon(1e-12));
  CHECK_THROWS_AS(uniform_state(0, natural), std::invalid_argument);
}

TEST_CASE("effective dimension") {
  CHECK(effective_dimension(uniform_state(1, natural)) == doctest::Approx(1.0).epsilon(1e-15));

  const double sigma53 = sigma_for_effective_dimension(53.0, natural);
  const auto g = gaussian_state(sigma53, GaussianMode::analytic, natural);
  CHECK(effective_dimension(g) == doctest::Approx(53.0).epsilon(0.01));

  SUBCASE("closed form") {
    CHECK(deff_gaussian_closed_form(1.0 / (4.0 * std::sqrt(kPi)), natural) ==
          doctest::Approx(1.0).epsilon(1e-14));
    CHECK(deff_gaussian_closed_form(0.001, natural) ==
          doctest::Approx(141.04739588693909).epsilon(1e-12));
  }

  SUBCASE("summed value converges to the closed form as sigma/L shrinks") {
    // The gap falls off faster than exponentially until it hits the rounding
    // floor (~1e-12) around sigma/L = 0.05, so monotonicity is only checked
    // above the floor.
    double prev_gap = 1.0;
    for (double sigma : {0.12, 0.1, 0.08, 0.06}) {
      const auto s = gaussian_state(sigma, GaussianMode::analytic, natural);
      const double gap =
          std::abs(effective_dimension(s) / deff_gaussian_closed_form(sigma, natural) - 1.0);
      CHECK(gap < prev_gap);
      prev_gap = gap;
    }
    for (double sigma : {0.02, 0.01, 0.005}) {
      const auto s = gaussian_state(sigma, GaussianMode::analytic, natural);
      CHECK(std::abs(effective_dimension(s) / deff_gaussian_closed_form(sigma, natural) - 1.0) <
            1e-10);
    }
  }

  SUBCASE("truncation soundness: doubling the cutoff leaves d_eff unchanged") {
    for (double sigma : {0.05, 0.01}) {
      // Direct weight sums with explicit cutoffs, independent of EnergyState.
      auto deff_at = [&](int n_max) {
        double p2 = 0.0, p4 = 0.0;
        for (int n = 1; n <= n_max; n += 2) {
          const double a = n * kPi * sigma;
          const double w = std::exp(-2.0 * a * a);
          p2 += w;
          p4 += w * w;
        }
        return p2 * p2 / p4;
      };
      const int n_max = gaussian_level_cutoff(sigma, 1e-12, natural);
      const double base = deff_at(n_max);
      CHECK(std::abs(deff_at(2 * n_max) / base - 1.0) < 1e-10);
    }
  }
}
