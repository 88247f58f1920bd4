#include "mncs/lyapunov.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

#include "mncs/rng.hpp"
#include "mncs/spectral.hpp"

namespace mncs {
namespace {

double dot(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

void axpy(double alpha, std::span<const double> x, std::span<double> y) {
  for (std::size_t i = 0; i < x.size(); ++i) y[i] += alpha * x[i];
}

void scale(std::span<double> x, double alpha) {
  for (double& v : x) v *= alpha;
}

}  // namespace

Renormalization renormalize(std::vector<SimState>& tangents) {
  Renormalization out;
  for (std::size_t j = 0; j < tangents.size(); ++j) {
    auto wj = tangents[j].u_hat.values();
    const double before = std::sqrt(dot(wj, wj));
    for (std::size_t i = 0; i < j; ++i) {
      const double r = dot(tangents[i].u_hat.values(), wj);
      axpy(-r, tangents[i].u_hat.values(), wj);
      if (tangents[j].nu_prev) axpy(-r, tangents[i].nu_prev->values(), tangents[j].nu_prev->values());
    }
    const double norm = std::sqrt(dot(wj, wj));
    if (!(norm > 1e-12 * before) || !(norm > 1e-300) || !std::isfinite(norm)) {
      out.collapsed_at = static_cast<int>(j);
      tangents.resize(j);
      break;
    }
    scale(wj, 1.0 / norm);
    if (tangents[j].nu_prev) scale(tangents[j].nu_prev->values(), 1.0 / norm);
    out.log_scales.push_back(std::log(norm));
  }
  return out;
}

LyapunovSpectrum lyapunov_spectrum(const RunConfig& config, const RealField& initial,
                                   const LyapunovOptions& options) {
  config.validate();
  if (options.m < 1) throw std::invalid_argument("lyapunov: m must be >= 1");
  if (options.window_steps < 1) throw std::invalid_argument("lyapunov: window_steps must be >= 1");
  if (options.total_steps < 1) throw std::invalid_argument("lyapunov: total_steps must be >= 1");
  if (options.transient_steps < 0) throw std::invalid_argument("lyapunov: transient_steps must be >= 0");
  if (static_cast<std::size_t>(options.m) > config.grid.size()) {
    throw std::invalid_argument("lyapunov: m exceeds the phase-space dimension");
  }

  const SplitSpec split = SplitSpec::from_coupling(config.coupling);
  const EtdTables tables = precompute_tables(config.grid, config.diffusion, split, config.dt);
  const NonlinearTerm base_term = make_nonlinear_term(config.kinetics, split);
  const Eigen::MatrixXd residual = split.residual;
  const bool coupled_residual = split.has_residual();

  SimState base = SimState::from_field(initial);
  std::vector<SimState> tangents;
  for (int i = 0; i < options.m; ++i) {
    tangents.push_back(SimState::from_field(init_field(config.grid, options.tangent_seed + i, 1.0)));
  }
  if (renormalize(tangents).collapsed_at >= 0) throw std::runtime_error("lyapunov: degenerate initial tangents");

  const GridSpec& grid = config.grid;
  RealField u(grid), n(grid), w(grid), jw(grid);
  SpectralField jw_hat(grid);
  std::vector<double> sums(options.m, 0.0);
  LyapunovSpectrum out;
  out.requested = options.m;
  out.window = options.window_steps * config.dt;
  out.total_time = options.total_steps * config.dt;

  const long steps = options.transient_steps + options.total_steps;
  for (long s = 1; s <= steps; ++s) {
    dct2_inverse(base.u_hat, u);
    for (auto& t : tangents) {
      dct2_inverse(t.u_hat, w);
      apply_jacobian(config.kinetics, u, w, jw);
      if (coupled_residual) {
        for (int r = 0; r < grid.components; ++r) {
          for (int c = 0; c < grid.components; ++c) {
            if (residual(r, c) != 0.0) axpy(residual(r, c), w.component(c), jw.component(r));
          }
        }
      }
      dct2_forward(jw, jw_hat);
      etd_update(t, tables, jw_hat);
    }
    base_term(u, n);
    etd_update(base, tables, dct2_forward(n));
    check_divergence(base.u_hat, base.step);

    const bool measuring = s > options.transient_steps;
    const long k = measuring ? s - options.transient_steps : s;
    if (k % options.window_steps == 0 || s == options.transient_steps || s == steps) {
      const Renormalization r = renormalize(tangents);
      if (measuring) {
        for (std::size_t j = 0; j < r.log_scales.size(); ++j) sums[j] += r.log_scales[j];
      }
      if (r.collapsed_at >= 0) {
        if (r.collapsed_at == 0) throw std::runtime_error("lyapunov: leading tangent vector collapsed");
        sums.resize(r.collapsed_at);
      }
    }
  }

  for (double s : sums) out.exponents.push_back(s / out.total_time);
  std::sort(out.exponents.begin(), out.exponents.end(), std::greater<>());
  return out;
}

}  // namespace mncs
