#pragma once

#include <Eigen/Dense>

#include <optional>
#include <vector>

#include "mncs/grid.hpp"

namespace mncs {

struct DimensionBoundInputs {
  double c0 = 1.0;             // absorbs the Lieb-Thirring constant; uncalibrated
  double omega_measure = 1.0;  // |Omega| = L^d
  double d_min = 1.0;          // smallest positive diffusion coefficient
  double ka = 0.0;             // sup of |f'(u)|_op over the attractor
  double gamma = 0.0;          // coupling strength
  int dims = 2;
  int n_components = 2;

  void validate() const;
};

/// max{ N, c0 |Omega| (max(0, K_A - gamma) / d_min)^(d/2) }.
double dimension_bound(const DimensionBoundInputs& in);

struct TraceProbe {
  double trace = 0.0;           // T(m)
  std::optional<long> m_star;   // smallest m with T(m) < 0, if any within n^2 modes
};

/// T(m) = -d_min sum_{j<=m} kappa_j + m (k_est - gamma), with kappa_j the m
/// smallest discrete Neumann Laplacian eigenvalues (kappa_1 = 0).
/// Throws std::out_of_range when m > n^2.
TraceProbe trace_probe(const GridSpec& grid, double d_min, double k_est, double gamma, long m);

struct LyapunovSpectrum {
  std::vector<double> exponents;  // descending
  double window = 0.0;            // renormalisation interval (time)
  double total_time = 0.0;        // averaging horizon
  int requested = 0;              // tangent vectors asked for
};

struct KaplanYorke {
  double dimension = 0.0;
  bool saturated = false;  // every partial sum was >= 0; dimension = m
};

KaplanYorke kaplan_yorke(const std::vector<double>& descending_exponents);
inline KaplanYorke kaplan_yorke(const LyapunovSpectrum& s) { return kaplan_yorke(s.exponents); }

struct HopfReport {
  double gamma = 0.0;          // coupling_gamma(C)
  double sym_bound = 0.0;      // lambda_max((J + J^T) / 2)
  double rho = 0.0;            // max Re eig(J + C)
  bool holds = false;          // rho <= sym_bound - gamma + 1e-9
};

/// Field-of-values form of the zero-mode Hopf shift:
/// Re lambda(J + C) <= lambda_max(sym J) - gamma.
HopfReport hopf_shift_check(const Eigen::MatrixXd& j, const Eigen::MatrixXd& c);

}  // namespace mncs
