#include "mncs/simulation.hpp"

#include <algorithm>
#include <fstream>

#include "mncs/pgm.hpp"
#include "mncs/rng.hpp"
#include "mncs/snapshot.hpp"
#include "mncs/spectral.hpp"
#include "mncs/version.hpp"

namespace mncs {

RealField initial_field(const RunConfig& config) {
  if (config.ic_path) {
    Snapshot snap = read_snapshot(*config.ic_path);
    if (!(snap.field.grid() == config.grid)) {
      throw ConfigError("config: initial snapshot grid does not match the configured grid");
    }
    return std::move(snap.field);
  }
  return init_field(config.grid, config.seed, config.noise_sigma);
}

RunResult run_simulation(const RunConfig& config, const RealField& initial, const RecordObserver& observer) {
  config.validate();
  if (!(initial.grid() == config.grid)) throw ConfigError("run: initial field grid does not match config");
  if (!all_finite(initial)) throw IntegratorDivergence(0, "run: initial field is not finite");

  RunResult result{initial, initial, {}, {}, config.steps()};
  if (result.steps == 0) return result;

  const SplitSpec split = SplitSpec::from_coupling(config.coupling);
  const EtdTables tables = precompute_tables(config.grid, config.diffusion, split, config.dt);
  const NonlinearTerm nonlinear = make_nonlinear_term(config.kinetics, split);

  SimState state = SimState::from_field(initial);
  RealField u(config.grid);
  for (long s = 1; s <= result.steps; ++s) {
    etd_step(state, tables, nonlinear);
    if (s % config.record_stride == 0 || s == result.steps) {
      dct2_inverse(state.u_hat, u);
      auto record = make_record(u, state.time, config.lp_jmax);
      result.ka.push_back(estimate_ka(u, config.kinetics));
      if (observer) observer(u, record);
      result.series.push_back(std::move(record));
    }
  }
  result.final = std::move(u);
  return result;
}

RunResult run_simulation(const RunConfig& config) {
  config.validate();
  return run_simulation(config, initial_field(config));
}

void write_run_outputs(const RunConfig& config, const RunResult& result, const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  const double t_final = result.steps * config.dt;
  if (config.emit.csv) write_series_csv(dir / "series.csv", result.series);
  if (config.emit.snapshots) {
    write_snapshot(dir / "initial.mncs", result.initial, 0.0);
    write_snapshot(dir / "final.mncs", result.final, t_final);
  }
  if (config.emit.pgm) export_pgm(result.final, 0, dir / "final_u.pgm");

  std::ofstream meta(dir / "run.txt");
  meta << "# mncs " << kVersion << '\n';
  meta << "# steps = " << result.steps << '\n';
  meta << serialize_config(config);
}

double attractor_ka(const RunResult& result, double t_from) {
  double best = 0.0;
  bool any = false;
  for (std::size_t i = 0; i < result.series.size(); ++i) {
    if (result.series[i].t >= t_from) {
      best = std::max(best, result.ka[i]);
      any = true;
    }
  }
  if (!any) {
    for (double k : result.ka) best = std::max(best, k);
  }
  return best;
}

}  // namespace mncs
