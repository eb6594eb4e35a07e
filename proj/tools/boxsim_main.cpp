// Command-line front end: emits figure-ready CSV data (time traces, spatial
// densities, scaling sweeps) and scale reports for the box equilibration
// library.  All times are reported in units of the recurrence period T_g and
// positions in units of L.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "boxsim/closed_form.hpp"
#include "boxsim/dynamics.hpp"
#include "boxsim/errors.hpp"
#include "boxsim/state.hpp"
#include "boxsim/window.hpp"

namespace {

constexpr int kExitConfigError = 2;
constexpr int kExitNonConvergence = 3;

struct Options {
  double sigma_over_l = 0.0;
  double deff = 0.0;
  int uniform_n = 0;
  double window_center = 0.0;  // units of L
  double window_width = -1.0;  // units of L; negative = per-state default
  double tmin = 0.0;           // units of T_g
  double tmax = 1.0;
  int samples = 1000;
  int terms_p = 16;
  double trunc_eps = 1e-12;
  bool equilibrium = false;
  double time_point = 0.0;  // units of T_g
  int points = 1001;
  std::vector<double> sweep_deff;
  std::vector<double> sweep_n;
  std::vector<double> sweep_width;
  long avg_max_samples = 1 << 20;
  long avg_initial_samples = 1024;
  double avg_rel_tol = 1e-4;
  std::string out;
};

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

bool is_gaussian_run(const Options& o) { return o.sigma_over_l > 0.0 || o.deff > 0.0; }

boxsim::EnergyState make_state(const Options& o, const boxsim::BoxConfig& cfg) {
  const int given = (o.sigma_over_l > 0.0 ? 1 : 0) + (o.deff > 0.0 ? 1 : 0) +
                    (o.uniform_n > 0 ? 1 : 0);
  if (given != 1)
    throw std::invalid_argument(
        "specify exactly one of --sigma-over-l, --deff, --uniform-n");
  if (o.uniform_n > 0) return boxsim::uniform_state(o.uniform_n, cfg);
  const double sigma = o.sigma_over_l > 0.0
                           ? o.sigma_over_l * cfg.length
                           : boxsim::sigma_for_effective_dimension(o.deff, cfg);
  return boxsim::gaussian_state(sigma, boxsim::GaussianMode::analytic, o.trunc_eps, cfg);
}

boxsim::Window make_window(const Options& o, bool gaussian_default,
                           const boxsim::BoxConfig& cfg) {
  // Default: centered w = L/2 for gaussian runs, the left half-box for
  // uniform runs (the measurement each initial condition is studied with).
  if (o.window_width < 0.0) {
    if (gaussian_default) return boxsim::Window::centered(0.5 * cfg.length);
    return boxsim::Window::left_half(cfg);
  }
  boxsim::Window win{o.window_center * cfg.length, o.window_width * cfg.length};
  win.validate(cfg);
  return win;
}

void write_output(const Options& o, const std::string& content) {
  if (o.out.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream f(o.out, std::ios::binary | std::ios::trunc);
  if (!f) throw std::invalid_argument("cannot open output file: " + o.out);
  f << content;
}

boxsim::TimeAverageResult averaged(const boxsim::EnergyState& state,
                                   const boxsim::WindowMatrix& matrix, const Options& o) {
  const auto r = boxsim::time_average_distinguishability(
      state, matrix, o.avg_max_samples, o.avg_rel_tol, o.avg_initial_samples);
  if (!r.converged)
    throw boxsim::ConvergenceError("time average did not converge within the sample cap",
                                   r.last_change);
  return r;
}

int cmd_evolve(const Options& o) {
  const boxsim::BoxConfig cfg;
  const auto state = make_state(o, cfg);
  const bool gaussian = is_gaussian_run(o);
  const auto win = make_window(o, gaussian, cfg);
  const auto matrix = boxsim::build_matrix(win, state.max_level(), cfg);
  const boxsim::DistinguishabilityEvaluator eval(state, matrix);

  if (o.samples < 2) throw std::invalid_argument("--samples must be >= 2");
  if (!(o.tmax > o.tmin)) throw std::invalid_argument("--tmax must exceed --tmin");
  const double period = cfg.recurrence_period();
  std::vector<double> times(o.samples);
  for (int i = 0; i < o.samples; ++i)
    times[i] = (o.tmin + (o.tmax - o.tmin) * i / (o.samples - 1)) * period;
  const std::vector<double> numeric = eval.distinguishabilities(times);

  std::string csv;
  if (gaussian) {
    const auto approx =
        boxsim::SeriesApprox::for_gaussian(state.sigma, cfg, o.terms_p);
    csv = "t_over_Tg,D_numeric,D_leading,D_series,D_double_sum\n";
    for (int i = 0; i < o.samples; ++i) {
      csv += fmt(times[i] / period) + "," + fmt(numeric[i]) + "," +
             fmt(boxsim::d_leading(times[i], approx)) + "," +
             fmt(boxsim::d_series(times[i], approx)) + "," +
             fmt(boxsim::d_double_sum(times[i], approx)) + "\n";
    }
  } else {
    csv = "t_over_Tg,D_numeric,g_t\n";
    for (int i = 0; i < o.samples; ++i) {
      csv += fmt(times[i] / period) + "," + fmt(numeric[i]) + "," +
             fmt(boxsim::uniform_g(times[i], state.level_count, cfg)) + "\n";
    }
  }
  write_output(o, csv);
  return 0;
}

int cmd_density(const Options& o) {
  const boxsim::BoxConfig cfg;
  const auto state = make_state(o, cfg);
  if (o.points < 2) throw std::invalid_argument("--points must be >= 2");

  std::string csv = "x_over_L,density\n";
  const auto eq = boxsim::equilibrium(state);
  const double t = o.time_point * cfg.recurrence_period();
  for (int i = 0; i < o.points; ++i) {
    const double u = -0.5 + static_cast<double>(i) / (o.points - 1);
    const double x = u * cfg.length;
    const double d = o.equilibrium ? boxsim::density(eq, x) : boxsim::density(state, x, t);
    csv += fmt(u) + "," + fmt(d) + "\n";
  }
  write_output(o, csv);
  return 0;
}

int cmd_sweep(const Options& o) {
  const boxsim::BoxConfig cfg;
  const int kinds = (!o.sweep_deff.empty() ? 1 : 0) + (!o.sweep_n.empty() ? 1 : 0) +
                    (!o.sweep_width.empty() ? 1 : 0);
  if (kinds != 1)
    throw std::invalid_argument(
        "specify exactly one of --sweep-deff, --sweep-n, --sweep-width");

  std::string csv;
  if (!o.sweep_width.empty()) {
    const auto state = make_state(o, cfg);
    if (!is_gaussian_run(o))
      throw std::invalid_argument("width sweeps take a gaussian state (--sigma-over-l/--deff)");
    csv = "w_over_L,avg_D\n";
    for (double w : o.sweep_width) {
      const boxsim::Window win{0.0, w * cfg.length};
      win.validate(cfg);
      const auto matrix = boxsim::build_matrix(win, state.max_level(), cfg);
      csv += fmt(w) + "," + fmt(averaged(state, matrix, o).value) + "\n";
    }
  } else {
    const bool gaussian = !o.sweep_deff.empty();
    const auto& values = gaussian ? o.sweep_deff : o.sweep_n;
    std::vector<std::pair<double, double>> points;
    csv = "deff,avg_D\n";
    for (double v : values) {
      boxsim::EnergyState state =
          gaussian ? boxsim::gaussian_state(boxsim::sigma_for_effective_dimension(v, cfg),
                                            boxsim::GaussianMode::analytic, o.trunc_eps, cfg)
                   : boxsim::uniform_state(static_cast<int>(v), cfg);
      const auto win = make_window(o, gaussian, cfg);
      const auto matrix = boxsim::build_matrix(win, state.max_level(), cfg);
      const double deff = boxsim::effective_dimension(state);
      const double avg = averaged(state, matrix, o).value;
      points.emplace_back(deff, avg);
      csv += fmt(deff) + "," + fmt(avg) + "\n";
    }
    if (points.size() >= 3) {
      const auto fit = boxsim::power_law_fit(points);
      csv += "# fit prefactor=" + fmt(fit.prefactor) + " exponent=" + fmt(fit.exponent) +
             " points=" + std::to_string(points.size()) + " deff_min=" +
             fmt(points.front().first) + " deff_max=" + fmt(points.back().first) + "\n";
    }
  }
  write_output(o, csv);
  return 0;
}

int cmd_report(const Options& o) {
  const boxsim::BoxConfig cfg;
  const auto state = make_state(o, cfg);
  const double period = cfg.recurrence_period();

  std::string text;
  text += "units: hbar = m = L = 1 (natural units); times in units of T_g\n";
  text += "T_g = " + fmt(period) + "\n";
  text += "N_max = " + std::to_string(state.max_level()) + "\n";
  const double deff_sum = boxsim::effective_dimension(state);
  text += "d_eff (sum) = " + fmt(deff_sum) + "\n";
  if (is_gaussian_run(o)) {
    const double sigma = state.sigma;
    const double deff_cf = boxsim::deff_gaussian_closed_form(sigma, cfg);
    const double tau = boxsim::tau_gaussian(sigma, cfg);
    text += "sigma/L = " + fmt(sigma / cfg.length) + "\n";
    text += "d_eff (closed form) = " + fmt(deff_cf) + "\n";
    text += "tau_G = " + fmt(tau) + "\n";
    text += "tau_G/T_g = " + fmt(boxsim::tau_over_recurrence(deff_cf)) + "\n";
    text += "tau_typical/T_g = " + fmt(boxsim::tau_typical_over_recurrence(deff_cf)) + "\n";
    text += "tau_box = " + fmt(boxsim::tau_box(sigma, cfg)) + " (= pi * tau_G)\n";
    text += "v_E = " + fmt(boxsim::energy_std(sigma, cfg)) + "\n";
  } else {
    const int n = state.level_count;
    text += "uniform N = " + std::to_string(n) + " (d_eff = N exactly)\n";
    text += "tau_U/T_g = " + fmt(1.0 / (4.0 * n)) + "\n";
    text += "tau_typical/T_g = " + fmt(boxsim::tau_typical_over_recurrence(deff_sum)) + "\n";
  }
  write_output(o, text);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"particle-in-a-box equilibration data generator"};
  app.require_subcommand(1);

  // All options live on the top-level app and subcommands fall through to it,
  // so a flat key=value --config file addresses them directly; command-line
  // flags override config values.
  app.fallthrough();
  app.set_config("--config", "", "flat key=value config file; flags win");

  Options o;
  app.add_option("--sigma-over-l", o.sigma_over_l, "gaussian packet width, sigma/L")
      ->group("State");
  app.add_option("--deff", o.deff, "gaussian packet chosen by target d_eff")->group("State");
  app.add_option("--uniform-n", o.uniform_n, "uniform state over the lowest N levels")
      ->group("State");
  app.add_option("--trunc-eps", o.trunc_eps, "gaussian truncation tail probability")
      ->group("State");
  app.add_option("--window-center", o.window_center, "window center, units of L")
      ->group("Measurement");
  app.add_option("--window-width", o.window_width, "window width, units of L")
      ->group("Measurement");
  app.add_option("--tmin", o.tmin, "start time, units of T_g")->group("evolve");
  app.add_option("--tmax", o.tmax, "end time, units of T_g")->group("evolve");
  app.add_option("--samples", o.samples, "number of time samples")->group("evolve");
  app.add_option("--terms-p", o.terms_p, "series terms for the analytic columns")
      ->group("evolve");
  app.add_flag("--equilibrium", o.equilibrium, "density of the dephased state")
      ->group("density");
  app.add_option("--time", o.time_point, "evaluation time, units of T_g")->group("density");
  app.add_option("--points", o.points, "number of spatial samples")->group("density");
  app.add_option("--sweep-deff", o.sweep_deff, "gaussian d_eff values")
      ->delimiter(',')
      ->group("sweep");
  app.add_option("--sweep-n", o.sweep_n, "uniform N values")->delimiter(',')->group("sweep");
  app.add_option("--sweep-width", o.sweep_width, "window widths, units of L")
      ->delimiter(',')
      ->group("sweep");
  app.add_option("--avg-max-samples", o.avg_max_samples, "time-average sample cap")
      ->group("sweep");
  app.add_option("--avg-initial", o.avg_initial_samples, "time-average starting grid")
      ->group("sweep");
  app.add_option("--avg-rel-tol", o.avg_rel_tol, "time-average doubling tolerance")
      ->group("sweep");
  app.add_option("--out", o.out, "output file (stdout if omitted)");

  CLI::App* evolve = app.add_subcommand("evolve", "distinguishability time series as CSV");
  CLI::App* density = app.add_subcommand("density", "spatial probability density as CSV");
  CLI::App* sweep = app.add_subcommand("sweep", "time-averaged distinguishability sweeps");
  app.add_subcommand("report", "derived scales and dimensions");
  for (CLI::App* sub : app.get_subcommands(nullptr)) sub->fallthrough();

  try {
    app.parse(argc, argv);
    if (evolve->parsed()) return cmd_evolve(o);
    if (density->parsed()) return cmd_density(o);
    if (sweep->parsed()) return cmd_sweep(o);
    return cmd_report(o);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    app.exit(e);
    return kExitConfigError;
  } catch (const boxsim::ConvergenceError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNonConvergence;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfigError;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfigError;
  }
}
