#pragma once

#include <filesystem>
#include <functional>
#include <vector>

#include "mncs/config.hpp"
#include "mncs/diagnostics.hpp"
#include "mncs/etd.hpp"

namespace mncs {

struct RunResult {
  RealField initial;
  RealField final;
  std::vector<DiagnosticsRecord> series;
  std::vector<double> ka;  // K_A estimate of each recorded state
  long steps = 0;
};

/// Called with each recorded physical field.
using RecordObserver = std::function<void(const RealField& u, const DiagnosticsRecord& record)>;

/// Initial field for a config: the ic_path snapshot if set, otherwise
/// init_field(grid, seed, noise_sigma).
RealField initial_field(const RunConfig& config);

/// Integrates round(t_end / dt) ETD2 steps from `initial`, recording
/// diagnostics after every record_stride-th step and after the last step.
/// Throws IntegratorDivergence.
RunResult run_simulation(const RunConfig& config, const RealField& initial,
                         const RecordObserver& observer = {});

RunResult run_simulation(const RunConfig& config);

/// Writes series.csv, initial.mncs / final.mncs, final_u.pgm and run.txt
/// into `dir` according to config.emit. run.txt is always written.
void write_run_outputs(const RunConfig& config, const RunResult& result,
                       const std::filesystem::path& dir);

/// Largest K_A estimate among records with t >= t_from (all records when
/// none qualify). Zero for an empty series.
double attractor_ka(const RunResult& result, double t_from);

}  // namespace mncs
