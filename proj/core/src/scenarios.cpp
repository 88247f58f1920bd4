#include "mncs/scenarios.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <ostream>

#include "mncs/dimension.hpp"
#include "mncs/snapshot.hpp"

namespace mncs {
namespace {

std::string fmt(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

double l2_distance(const RealField& a, const RealField& b) {
  double s = 0.0;
  const auto x = a.values(), y = b.values();
  for (std::size_t i = 0; i < x.size(); ++i) s += (x[i] - y[i]) * (x[i] - y[i]);
  return std::sqrt(s * a.grid().cell_area());
}

double l2_norm(const RealField& a) { return l2_distance(a, RealField(a.grid())); }

std::optional<double> second_half_rate(const RunResult& r, double t_end) {
  try {
    return fit_decay_rate(variance_series(r.series, 0), {0.5 * t_end, t_end});
  } catch (const FitError&) {
    return std::nullopt;
  }
}

RunResult run_labelled(const char* label, const RunConfig& cfg, const RealField& ic) {
  try {
    return run_simulation(cfg, ic);
  } catch (const IntegratorDivergence& e) {
    throw IntegratorDivergence(e.step(), std::string(label) + " run: " + e.what());
  }
}

}  // namespace

ScenarioPair make_scenario_pair(const RunConfig& config, double control_gamma, const std::filesystem::path& dir) {
  ScenarioPair pair{with_gamma(config, 0.0), with_gamma(config, control_gamma), dir / "ic.mncs"};
  pair.base.output_dir = dir / "chaos";
  pair.control.output_dir = dir / "control";
  return pair;
}

PairSummary run_scenario_pair(const ScenarioPair& pair, const std::filesystem::path& out_dir, bool run_control) {
  pair.base.validate();
  pair.control.validate();
  {
    RunConfig a = pair.base, b = pair.control;
    a.coupling = b.coupling;
    a.output_dir = b.output_dir;
    if (!(a == b)) throw ConfigError("pair: base and control configs may differ only in coupling");
  }

  std::filesystem::create_directories(out_dir);
  if (!pair.shared_ic.parent_path().empty()) std::filesystem::create_directories(pair.shared_ic.parent_path());
  write_snapshot(pair.shared_ic, initial_field(pair.base), 0.0);

  RunConfig base = pair.base, control = pair.control;
  base.ic_path = control.ic_path = pair.shared_ic;
  const RealField ic = read_snapshot(pair.shared_ic).field;

  PairSummary s;
  s.ic_variance_u = spatial_variance(ic)[0];
  s.chaos = run_labelled("chaos", base, ic);
  write_run_outputs(base, s.chaos, out_dir / "chaos");
  s.chaos_final_variance_u = spatial_variance(s.chaos.final)[0];
  for (double k : s.chaos.ka) s.ka_chaos = std::max(s.ka_chaos, k);

  if (run_control) {
    s.control = run_labelled("control", control, ic);
    write_run_outputs(control, s.control, out_dir / "control");
    s.control_final_variance_u = spatial_variance(s.control.final)[0];
    s.control_decay_rate = second_half_rate(s.control, control.t_end);
  }

  std::ofstream summary(out_dir / "summary.txt");
  write_pair_summary(summary, s);
  return s;
}

void write_pair_summary(std::ostream& out, const PairSummary& s) {
  out << "ic_variance_u = " << fmt(s.ic_variance_u) << '\n';
  out << "chaos_final_variance_u = " << fmt(s.chaos_final_variance_u) << '\n';
  out << "control_final_variance_u = " << fmt(s.control_final_variance_u) << '\n';
  out << "control_decay_rate = " << (s.control_decay_rate ? fmt(*s.control_decay_rate) : "none") << '\n';
  out << "ka_chaos = " << fmt(s.ka_chaos) << '\n';
}

ConvergenceReport convergence_study(const RunConfig& config, std::vector<double> dts, double t_end) {
  if (dts.size() < 3) throw ConfigError("converge: need at least three step sizes");
  if (!(t_end > 0.0)) throw ConfigError("converge: t_end must be > 0");
  for (double dt : dts) {
    if (!(dt > 0.0)) throw ConfigError("converge: step sizes must be > 0");
    const double ratio = t_end / dt;
    if (std::abs(ratio - std::round(ratio)) > 1e-9 * std::max(1.0, ratio)) {
      throw ConfigError("converge: dt = " + fmt(dt) + " does not divide t_end");
    }
  }
  std::sort(dts.begin(), dts.end(), std::greater<>());

  RunConfig base = config;
  base.t_end = t_end;
  base.record_stride = std::numeric_limits<int>::max();
  base.validate();
  const RealField ic = initial_field(base);

  ConvergenceReport report;
  report.dts = dts;
  report.reference_dt = dts.back() / 4.0;
  RunConfig ref_cfg = base;
  ref_cfg.dt = report.reference_dt;
  const RealField reference = run_simulation(ref_cfg, ic).final;
  const double ref_norm = l2_norm(reference);

  for (double dt : dts) {
    RunConfig cfg = base;
    cfg.dt = dt;
    try {
      report.errors.push_back(l2_distance(run_simulation(cfg, ic).final, reference));
      report.diverged.push_back(false);
    } catch (const IntegratorDivergence&) {
      report.errors.push_back(std::numeric_limits<double>::quiet_NaN());
      report.diverged.push_back(true);
    }
  }

  const double roundoff = 1e-10 * std::max(ref_norm, std::numeric_limits<double>::min());
  report.exact = std::all_of(report.errors.begin(), report.errors.end(),
                             [&](double e) { return std::isfinite(e) && e <= roundoff; });
  if (report.exact) return report;

  std::vector<std::pair<double, double>> pts;
  for (std::size_t i = 0; i < dts.size(); ++i) {
    if (!report.diverged[i] && report.errors[i] > 0.0) pts.emplace_back(std::log(dts[i]), std::log(report.errors[i]));
  }
  if (pts.size() < 3) throw IntegratorDivergence(0, "converge: fewer than three step sizes survived");
  double mx = 0.0, my = 0.0;
  for (const auto& [x, y] : pts) {
    mx += x;
    my += y;
  }
  mx /= pts.size();
  my /= pts.size();
  double sxx = 0.0, sxy = 0.0;
  for (const auto& [x, y] : pts) {
    sxx += (x - mx) * (x - mx);
    sxy += (x - mx) * (y - my);
  }
  report.slope = sxy / sxx;
  return report;
}

SweepTable gamma_sweep(const RunConfig& config, const std::vector<double>& gammas) {
  if (gammas.empty()) throw ConfigError("sweep: no gamma values");
  if (!std::is_sorted(gammas.begin(), gammas.end())) throw ConfigError("sweep: gamma values must be ascending");
  config.validate();
  const RealField ic = initial_field(config);

  SweepTable table;
  for (double gamma : gammas) {
    SweepRow row;
    row.gamma = gamma;
    try {
      const RunConfig cfg = with_gamma(config, gamma);
      const RunResult r = run_simulation(cfg, ic);
      row.final_variance = spatial_variance(r.final)[0];
      row.decay_rate = second_half_rate(r, cfg.t_end);
      row.ka = r.series.empty() ? estimate_ka(r.final, cfg.kinetics) : attractor_ka(r, 0.5 * cfg.t_end);
      DimensionBoundInputs in;
      in.c0 = cfg.c0;
      in.omega_measure = cfg.grid.measure();
      in.d_min = cfg.d_min();
      in.ka = row.ka;
      in.gamma = cfg.coupling.gamma();
      in.dims = GridSpec::dims;
      in.n_components = cfg.grid.components;
      row.dimension_bound = dimension_bound(in);
      row.stabilized = row.final_variance < 1e-10;
    } catch (const std::exception& e) {
      row.ok = false;
      row.error = e.what();
    }
    if (row.stabilized && !table.threshold) table.threshold = gamma;
    table.rows.push_back(std::move(row));
  }
  return table;
}

void write_sweep_csv(std::ostream& out, const SweepTable& table) {
  out << "gamma,final_var_u,decay_rate,ka,dimension_bound,stabilized,error\n";
  for (const auto& r : table.rows) {
    out << fmt(r.gamma) << ',' << fmt(r.final_variance) << ',' << (r.decay_rate ? fmt(*r.decay_rate) : "nan") << ','
        << fmt(r.ka) << ',' << fmt(r.dimension_bound) << ',' << (r.stabilized ? 1 : 0) << ',' << r.error << '\n';
  }
}

}  // namespace mncs
