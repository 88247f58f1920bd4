#include "mncs/etd.hpp"

#include <algorithm>
#include <cmath>

#include "mncs/spectral.hpp"

namespace mncs {

double phi1(double z) {
  if (std::abs(z) < 1e-6) return 1.0;
  return (std::exp(z) - 1.0) / z;
}

double phi2(double z) {
  if (std::abs(z) < 1e-6) return 0.5;
  return (std::exp(z) - 1.0 - z) / (z * z);
}

SplitSpec SplitSpec::from_coupling(const CouplingMatrix& coupling) {
  SplitSpec split;
  split.gamma_eff = std::max(0.0, coupling.gamma());
  split.residual = coupling.matrix();
  split.residual.diagonal().array() += split.gamma_eff;
  return split;
}

EtdTables precompute_tables(const GridSpec& grid, std::span<const double> diffusion,
                            const SplitSpec& split, double h) {
  grid.validate();
  if (!(h > 0.0) || !std::isfinite(h)) throw std::invalid_argument("etd: time step must be > 0");
  if (static_cast<int>(diffusion.size()) != grid.components) {
    throw std::invalid_argument("etd: need one diffusion coefficient per component");
  }
  const auto symbol = laplacian_symbol(grid);
  EtdTables t{grid, h, split.gamma_eff, {}, {}, {}};
  for (int c = 0; c < grid.components; ++c) {
    if (diffusion[c] < 0.0) throw std::invalid_argument("etd: diffusion must be >= 0");
    std::vector<double> e(grid.points()), q1(grid.points()), q2(grid.points());
    for (std::size_t i = 0; i < grid.points(); ++i) {
      const double z = (-diffusion[c] * symbol.k2[i] - split.gamma_eff) * h;
      e[i] = std::exp(z);
      q1[i] = h * phi1(z);
      q2[i] = h * phi2(z);
    }
    t.e.push_back(std::move(e));
    t.q1.push_back(std::move(q1));
    t.q2.push_back(std::move(q2));
  }
  return t;
}

SimState SimState::from_field(const RealField& u) { return SimState{dct2_forward(u), std::nullopt, 0, 0.0}; }

NonlinearTerm make_nonlinear_term(const Kinetics& kinetics, const SplitSpec& split) {
  if (!split.has_residual()) {
    return [kinetics](const RealField& u, RealField& out) { apply_reaction(kinetics, u, out); };
  }
  return [kinetics, residual = split.residual](const RealField& u, RealField& out) {
    apply_reaction(kinetics, u, out);
    const int nc = u.grid().components;
    if (residual.rows() != nc) throw std::invalid_argument("etd: coupling size does not match components");
    for (int r = 0; r < nc; ++r) {
      auto o = out.component(r);
      for (int c = 0; c < nc; ++c) {
        const double w = residual(r, c);
        if (w == 0.0) continue;
        auto in = u.component(c);
        for (std::size_t i = 0; i < o.size(); ++i) o[i] += w * in[i];
      }
    }
  };
}

void etd_update(SimState& state, const EtdTables& tables, SpectralField nu_hat) {
  const int nc = tables.grid.components;
  for (int c = 0; c < nc; ++c) {
    auto u = state.u_hat.component(c);
    auto nu = nu_hat.component(c);
    const auto& e = tables.e[c];
    const auto& q1 = tables.q1[c];
    if (!state.nu_prev) {
      for (std::size_t i = 0; i < u.size(); ++i) u[i] = e[i] * u[i] + q1[i] * nu[i];
    } else {
      auto prev = state.nu_prev->component(c);
      const auto& q2 = tables.q2[c];
      for (std::size_t i = 0; i < u.size(); ++i) {
        u[i] = e[i] * u[i] + q1[i] * nu[i] + q2[i] * (nu[i] - prev[i]);
      }
    }
  }
  state.nu_prev = std::move(nu_hat);
  ++state.step;
  state.time = static_cast<double>(state.step) * tables.h;
}

void check_divergence(const SpectralField& coeffs, long step) {
  for (double x : coeffs.values()) {
    if (!std::isfinite(x) || std::abs(x) > 1e12) {
      throw IntegratorDivergence(step, "integrator diverged at step " + std::to_string(step));
    }
  }
}

void etd_step(SimState& state, const EtdTables& tables, const NonlinearTerm& nonlinear) {
  if (!(state.u_hat.grid() == tables.grid)) throw std::invalid_argument("etd: state grid does not match tables");
  RealField u = dct2_inverse(state.u_hat);
  RealField n(u.grid());
  nonlinear(u, n);
  etd_update(state, tables, dct2_forward(n));
  check_divergence(state.u_hat, state.step);
}

SimState etd_step(const SimState& state, const EtdTables& tables, const Kinetics& kinetics,
                  const SplitSpec& split) {
  SimState next = state;
  etd_step(next, tables, make_nonlinear_term(kinetics, split));
  return next;
}

}  // namespace mncs
