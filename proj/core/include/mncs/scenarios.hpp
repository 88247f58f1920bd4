#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "mncs/config.hpp"
#include "mncs/simulation.hpp"

namespace mncs {

/// Uncoupled run and a coupled control run integrated from one shared
/// initial-field snapshot. The two configs differ only in the coupling.
struct ScenarioPair {
  RunConfig base;
  RunConfig control;
  std::filesystem::path shared_ic;
};

/// base = config with gamma 0, control = config with `control_gamma`;
/// the shared snapshot lives at dir / "ic.mncs".
ScenarioPair make_scenario_pair(const RunConfig& config, double control_gamma,
                                const std::filesystem::path& dir);

struct PairSummary {
  double ic_variance_u = 0.0;
  double chaos_final_variance_u = 0.0;
  double control_final_variance_u = 0.0;
  std::optional<double> control_decay_rate;  // fitted over the second half of the run
  double ka_chaos = 0.0;                     // max K_A over the chaos run's records
  RunResult chaos;
  RunResult control;
};

/// Writes the shared IC, runs both halves into out_dir/chaos and
/// out_dir/control and writes out_dir/summary.txt. With run_control false
/// only the chaos half executes. Divergence is rethrown labelled by scenario.
PairSummary run_scenario_pair(const ScenarioPair& pair, const std::filesystem::path& out_dir,
                              bool run_control = true);

void write_pair_summary(std::ostream& out, const PairSummary& summary);

struct ConvergenceReport {
  std::vector<double> dts;
  std::vector<double> errors;      // L2 error against the reference at t_end
  std::vector<bool> diverged;
  double reference_dt = 0.0;
  bool exact = false;              // every error at roundoff level
  std::optional<double> slope;     // log-log least squares; absent when exact
};

/// Runs one initial field at each dt plus a reference at min(dts) / 4.
/// Needs >= 3 step sizes, each dividing t_end; throws ConfigError otherwise.
ConvergenceReport convergence_study(const RunConfig& config, std::vector<double> dts, double t_end);

struct SweepRow {
  double gamma = 0.0;
  bool ok = true;
  std::string error;
  double final_variance = 0.0;
  std::optional<double> decay_rate;
  double ka = 0.0;
  double dimension_bound = 0.0;
  bool stabilized = false;  // final variance of u below 1e-10
};

struct SweepTable {
  std::vector<SweepRow> rows;
  std::optional<double> threshold;  // first stabilised gamma
};

/// gammas must be ascending. Every run starts from initial_field(config).
/// K_A per row is taken over the second half of that row's records.
SweepTable gamma_sweep(const RunConfig& config, const std::vector<double>& gammas);

void write_sweep_csv(std::ostream& out, const SweepTable& table);

}  // namespace mncs
