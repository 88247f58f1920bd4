#include "mncs/dimension.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "mncs/kinetics.hpp"
#include "mncs/spectral.hpp"

namespace mncs {

void DimensionBoundInputs::validate() const {
  if (!(c0 > 0.0)) throw std::invalid_argument("dimension bound: c0 must be > 0");
  if (!(omega_measure > 0.0)) throw std::invalid_argument("dimension bound: |Omega| must be > 0");
  if (!(d_min > 0.0)) throw std::invalid_argument("dimension bound: d_min must be > 0");
  if (dims < 1 || dims > 3) throw std::invalid_argument("dimension bound: dims must be 1, 2 or 3");
  if (n_components < 1) throw std::invalid_argument("dimension bound: N must be >= 1");
}

double dimension_bound(const DimensionBoundInputs& in) {
  in.validate();
  const double excess = std::max(0.0, in.ka - in.gamma);
  const double scaled = in.c0 * in.omega_measure * std::pow(excess / in.d_min, 0.5 * in.dims);
  return std::max(static_cast<double>(in.n_components), scaled);
}

TraceProbe trace_probe(const GridSpec& grid, double d_min, double k_est, double gamma, long m) {
  if (m < 1) throw std::invalid_argument("trace_probe: m must be >= 1");
  const long modes = static_cast<long>(grid.points());
  if (m > modes) {
    throw std::out_of_range("trace_probe: m = " + std::to_string(m) + " exceeds the " +
                            std::to_string(modes) + " available modes");
  }
  auto kappa = laplacian_symbol(grid).k2;
  std::sort(kappa.begin(), kappa.end());

  const double excess = k_est - gamma;
  TraceProbe out;
  double prefix = 0.0;
  for (long j = 1; j <= modes; ++j) {
    prefix += kappa[j - 1];
    const double t = -d_min * prefix + static_cast<double>(j) * excess;
    if (j == m) out.trace = t;
    if (!out.m_star && t < 0.0) out.m_star = j;
    if (out.m_star && j >= m) break;
  }
  return out;
}

KaplanYorke kaplan_yorke(const std::vector<double>& lambda) {
  for (std::size_t i = 1; i < lambda.size(); ++i) {
    if (lambda[i] > lambda[i - 1]) throw std::invalid_argument("kaplan_yorke: exponents must be descending");
  }
  if (lambda.empty() || lambda.front() < 0.0) return {0.0, false};

  double partial = 0.0;
  std::size_t j = 0;
  while (j < lambda.size() && partial + lambda[j] >= 0.0) {
    partial += lambda[j];
    ++j;
  }
  if (j == lambda.size()) return {static_cast<double>(j), true};
  return {static_cast<double>(j) + partial / std::abs(lambda[j]), false};
}

HopfReport hopf_shift_check(const Eigen::MatrixXd& j, const Eigen::MatrixXd& c) {
  if (j.rows() != j.cols() || c.rows() != c.cols() || j.rows() != c.rows()) {
    throw std::invalid_argument("hopf_shift_check: J and C must be square and of equal size");
  }
  if (!j.allFinite() || !c.allFinite()) throw std::invalid_argument("hopf_shift_check: non-finite input");

  HopfReport r;
  r.gamma = coupling_gamma(c);
  r.sym_bound = -coupling_gamma(j);

  Eigen::EigenSolver<Eigen::MatrixXd> solver(j + c, false);
  if (solver.info() != Eigen::Success) throw std::runtime_error("hopf_shift_check: eigensolver did not converge");
  r.rho = solver.eigenvalues().real().maxCoeff();
  r.holds = r.rho <= r.sym_bound - r.gamma + 1e-9;
  return r;
}

}  // namespace mncs
