#include "cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "mncs/compare.hpp"
#include "mncs/config.hpp"
#include "mncs/dimension.hpp"
#include "mncs/kinetics.hpp"
#include "mncs/lyapunov.hpp"
#include "mncs/scenarios.hpp"
#include "mncs/simulation.hpp"
#include "mncs/version.hpp"

namespace mncs::cli {
namespace {

std::string fmt(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.10g", x);
  return buf;
}

struct GlobalOptions {
  std::string config_path;
  std::string output_dir;
  std::optional<std::uint64_t> seed;
  std::optional<double> gamma;
  bool quiet = false;
};

RunConfig load(const GlobalOptions& g, bool apply_gamma = true) {
  RunConfig cfg = g.config_path.empty() ? RunConfig{} : load_config(g.config_path);
  if (!g.output_dir.empty()) cfg.output_dir = g.output_dir;
  if (g.seed) cfg.seed = *g.seed;
  if (apply_gamma && g.gamma) cfg = with_gamma(cfg, *g.gamma);
  cfg.validate();
  return cfg;
}

Eigen::MatrixXd matrix2(const std::vector<double>& v, const char* name) {
  if (v.size() != 4) throw ConfigError(std::string(name) + " expects 4 comma-separated numbers");
  Eigen::MatrixXd m(2, 2);
  m << v[0], v[1], v[2], v[3];
  return m;
}

DimensionBoundInputs bound_inputs(const RunConfig& cfg, double ka) {
  DimensionBoundInputs in;
  in.c0 = cfg.c0;
  in.omega_measure = cfg.grid.measure();
  in.d_min = cfg.d_min();
  in.ka = ka;
  in.gamma = cfg.coupling.gamma();
  in.dims = GridSpec::dims;
  in.n_components = cfg.grid.components;
  return in;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Pseudo-spectral MNCS reaction-diffusion simulator and attractor analysis", "mncs"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);

  GlobalOptions g;
  app.add_option("--config", g.config_path, "Run configuration file (key = value)");
  app.add_option("--output-dir", g.output_dir, "Override output_dir");
  app.add_option("--seed", g.seed, "Override the initial-field seed");
  app.add_option("--gamma", g.gamma, "Coupling strength override (C = -gamma I)");
  app.add_flag("--quiet", g.quiet, "Suppress summaries on stdout");

  auto* run_cmd = app.add_subcommand("run", "Integrate one configuration and write its outputs");
  auto* pair_cmd = app.add_subcommand("pair", "Uncoupled and coupled runs from one shared initial field");
  auto* sweep_cmd = app.add_subcommand("sweep", "Final variance and stabilisation over a gamma list");
  std::vector<double> gammas;
  sweep_cmd->add_option("--gammas", gammas, "Ascending comma-separated gamma values")->delimiter(',')->required();

  auto* lyap_cmd = app.add_subcommand("lyapunov", "Leading Lyapunov exponents and Kaplan-Yorke dimension");
  LyapunovOptions lyap;
  std::optional<long> lyap_steps;
  lyap_cmd->add_option("--m", lyap.m, "Number of tangent vectors")->check(CLI::PositiveNumber);
  lyap_cmd->add_option("--window", lyap.window_steps, "Steps between renormalisations")->check(CLI::PositiveNumber);
  lyap_cmd->add_option("--steps", lyap_steps, "Averaging steps (default: t_end / dt)");
  lyap_cmd->add_option("--transient", lyap.transient_steps, "Steps discarded before averaging");

  auto* bound_cmd = app.add_subcommand("bound", "Attractor dimension bound and trace probe");
  std::optional<double> ka_opt;
  long trace_m = 1;
  bound_cmd->add_option("--ka", ka_opt, "K_A value (default: estimated from a run of the config)");
  bound_cmd->add_option("--trace-m", trace_m, "Subspace dimension for the trace value")->check(CLI::PositiveNumber);

  auto* hopf_cmd = app.add_subcommand("hopf", "Zero-mode Hopf shift check for J + C");
  std::vector<double> jac;
  hopf_cmd->add_option("--jacobian", jac, "J as a,b,c,d (default: FHN Jacobian at the origin)")->delimiter(',');

  auto* conv_cmd = app.add_subcommand("converge", "Observed order of accuracy of the integrator");
  std::vector<double> dts{0.1, 0.05, 0.025, 0.0125};
  std::optional<double> conv_t_end;
  conv_cmd->add_option("--dts", dts, "Comma-separated step sizes")->delimiter(',');
  conv_cmd->add_option("--t-end", conv_t_end, "Integration horizon (default: config t_end)");

  auto* cmp_cmd = app.add_subcommand("compare", "Compare two snapshots or two series CSVs");
  std::string cmp_a, cmp_b;
  double tol = 1e-8;
  bool relative = false;
  cmp_cmd->add_option("a", cmp_a)->required();
  cmp_cmd->add_option("b", cmp_b)->required();
  cmp_cmd->add_option("--tol", tol, "Tolerance");
  cmp_cmd->add_flag("--relative", relative, "Use relative differences");

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kConfigError;
  }

  auto say = [&](const std::string& line) {
    if (!g.quiet) out << line << '\n';
  };

  try {
    if (*run_cmd) {
      const RunConfig cfg = load(g);
      const RunResult r = run_simulation(cfg);
      write_run_outputs(cfg, r, cfg.output_dir);
      const auto var = spatial_variance(r.final);
      say("steps " + std::to_string(r.steps) + "  final var_u " + fmt(var[0]) + "  var_v " + fmt(var[1]));
      say("outputs in " + cfg.output_dir.string());
    } else if (*pair_cmd) {
      const RunConfig cfg = load(g, false);
      const double control_gamma = g.gamma.value_or(cfg.control_gamma);
      const auto pair = make_scenario_pair(cfg, control_gamma, cfg.output_dir);
      const PairSummary s = run_scenario_pair(pair, cfg.output_dir);
      if (!g.quiet) write_pair_summary(out, s);
    } else if (*sweep_cmd) {
      const RunConfig cfg = load(g, false);
      const SweepTable table = gamma_sweep(cfg, gammas);
      std::filesystem::create_directories(cfg.output_dir);
      std::ofstream csv(cfg.output_dir / "sweep.csv");
      write_sweep_csv(csv, table);
      if (!g.quiet) write_sweep_csv(out, table);
      say("threshold " + (table.threshold ? fmt(*table.threshold) : std::string("none")));
    } else if (*lyap_cmd) {
      const RunConfig cfg = load(g);
      lyap.total_steps = lyap_steps.value_or(cfg.steps());
      const LyapunovSpectrum s = lyapunov_spectrum(cfg, initial_field(cfg), lyap);
      std::string line = "exponents";
      for (double x : s.exponents) line += " " + fmt(x);
      say(line);
      if (static_cast<int>(s.exponents.size()) < s.requested) {
        say("tangent collapse: kept " + std::to_string(s.exponents.size()) + " of " + std::to_string(s.requested));
      }
      const KaplanYorke ky = kaplan_yorke(s);
      say("kaplan_yorke " + fmt(ky.dimension) + (ky.saturated ? " (saturated)" : ""));
    } else if (*bound_cmd) {
      const RunConfig cfg = load(g);
      double ka = 0.0;
      if (ka_opt) {
        ka = *ka_opt;
      } else {
        const RunResult r = run_simulation(cfg);
        ka = r.series.empty() ? estimate_ka(r.initial, cfg.kinetics) : attractor_ka(r, 0.5 * cfg.t_end);
      }
      const double bound = dimension_bound(bound_inputs(cfg, ka));
      const TraceProbe probe = trace_probe(cfg.grid, cfg.d_min(), ka, cfg.coupling.gamma(), trace_m);
      say("ka " + fmt(ka) + "  gamma " + fmt(cfg.coupling.gamma()));
      say("dimension_bound " + fmt(bound));
      say("trace(" + std::to_string(trace_m) + ") " + fmt(probe.trace) + "  m_star " +
          (probe.m_star ? std::to_string(*probe.m_star) : std::string("none")));
    } else if (*hopf_cmd) {
      const RunConfig cfg = load(g);
      Eigen::MatrixXd j;
      if (!jac.empty()) {
        j = matrix2(jac, "--jacobian");
      } else if (const auto* f = std::get_if<FhnParams>(&cfg.kinetics)) {
        const Mat2 m = fhn_jacobian(0.0, 0.0, *f);
        j = matrix2({m[0][0], m[0][1], m[1][0], m[1][1]}, "jacobian");
      } else {
        throw ConfigError("hopf: --jacobian is required for non-FHN kinetics");
      }
      const HopfReport h = hopf_shift_check(j, cfg.coupling.matrix());
      say("gamma " + fmt(h.gamma) + "  lambda_max(sym J) " + fmt(h.sym_bound) + "  max Re eig(J+C) " + fmt(h.rho));
      say(h.holds ? "bound holds" : "bound VIOLATED");
      if (!h.holds) return kNumericalFailure;
    } else if (*conv_cmd) {
      const RunConfig cfg = load(g);
      const ConvergenceReport r = convergence_study(cfg, dts, conv_t_end.value_or(cfg.t_end));
      for (std::size_t i = 0; i < r.dts.size(); ++i) {
        say("dt " + fmt(r.dts[i]) + "  error " + (r.diverged[i] ? std::string("diverged") : fmt(r.errors[i])));
      }
      say(r.exact ? std::string("exact") : "order " + fmt(*r.slope));
    } else if (*cmp_cmd) {
      CompareResult r;
      try {
        r = compare_files(cmp_a, cmp_b, tol, relative);
      } catch (const std::runtime_error& e) {
        err << "compare: " << e.what() << '\n';
        return kConfigError;
      }
      say(std::string(r.match ? "match" : "MISMATCH") + "  max_diff " + fmt(r.max_diff) +
          (r.detail.empty() ? "" : "  (" + r.detail + ")"));
      return r.match ? kOk : kMismatch;
    }
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << '\n';
    return kConfigError;
  } catch (const std::invalid_argument& e) {
    err << "invalid input: " << e.what() << '\n';
    return kConfigError;
  } catch (const std::out_of_range& e) {
    err << "invalid input: " << e.what() << '\n';
    return kConfigError;
  } catch (const IntegratorDivergence& e) {
    err << "numerical failure: " << e.what() << '\n';
    return kNumericalFailure;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kNumericalFailure;
  }
  return kOk;
}

}  // namespace mncs::cli
