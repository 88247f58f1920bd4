#pragma once

#include <Eigen/Dense>

#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "mncs/grid.hpp"
#include "mncs/kinetics.hpp"

namespace mncs {

/// phi1(z) = (e^z - 1) / z, with phi1 = 1 for |z| < 1e-6.
double phi1(double z);
/// phi2(z) = (e^z - 1 - z) / z^2, with phi2 = 0.5 for |z| < 1e-6.
double phi2(double z);

/// C = -gamma_eff I + residual. The scalar part is integrated exactly in the
/// exponential; the residual is treated as part of the nonlinear term.
struct SplitSpec {
  double gamma_eff = 0.0;
  Eigen::MatrixXd residual;

  /// gamma_eff = max(0, coupling_gamma(C)), residual = C + gamma_eff I.
  static SplitSpec from_coupling(const CouplingMatrix& coupling);

  bool has_residual() const { return residual.size() > 0 && !residual.isZero(0.0); }
};

/// Per-component ETD coefficients for the diagonal linear symbol
/// L = -d k^2 - gamma_eff:  e = exp(L h), q1 = h phi1(L h), q2 = h phi2(L h).
struct EtdTables {
  GridSpec grid;
  double h = 0.0;
  double gamma_eff = 0.0;
  std::vector<std::vector<double>> e;
  std::vector<std::vector<double>> q1;
  std::vector<std::vector<double>> q2;
};

/// `diffusion` holds one coefficient per component. Throws
/// std::invalid_argument for h <= 0 or a size mismatch.
EtdTables precompute_tables(const GridSpec& grid, std::span<const double> diffusion,
                            const SplitSpec& split, double h);

struct SimState {
  SpectralField u_hat;
  std::optional<SpectralField> nu_prev;  // empty before the first step
  long step = 0;
  double time = 0.0;

  static SimState from_field(const RealField& u);
};

/// Evaluates the nonlinear term N(u) in physical space.
using NonlinearTerm = std::function<void(const RealField& u, RealField& out)>;

/// N(u) = f(u) + residual u.
NonlinearTerm make_nonlinear_term(const Kinetics& kinetics, const SplitSpec& split);

class IntegratorDivergence : public std::runtime_error {
 public:
  IntegratorDivergence(long step, const std::string& what)
      : std::runtime_error(what), step_(step) {}
  long step() const { return step_; }

 private:
  long step_;
};

/// Applies one exponential update given the transformed nonlinear term:
/// ETD1 on the first step, ETD2 afterwards. Advances step and time.
void etd_update(SimState& state, const EtdTables& tables, SpectralField nu_hat);

/// Full step: inverse transform, nonlinear evaluation, forward transform,
/// update. Throws IntegratorDivergence if the new state is non-finite or
/// any coefficient exceeds 1e12 in magnitude.
void etd_step(SimState& state, const EtdTables& tables, const NonlinearTerm& nonlinear);

SimState etd_step(const SimState& state, const EtdTables& tables, const Kinetics& kinetics,
                  const SplitSpec& split);

/// Throws IntegratorDivergence when `coeffs` holds a non-finite value or
/// one beyond 1e12 in magnitude.
void check_divergence(const SpectralField& coeffs, long step);

}  // namespace mncs
