#pragma once

#include <Eigen/Dense>

#include <array>
#include <utility>
#include <variant>

#include "mncs/grid.hpp"

namespace mncs {

/// FitzHugh-Nagumo kinetics with a soft clamp on both state variables:
///   f_u = (u - u^3/3 - v) / eps,   f_v = eps (u + beta_kin - gamma_kin v).
struct FhnParams {
  double eps = 0.2;
  double beta_kin = 0.0;
  double gamma_kin = 0.5;
  double clamp = 5.0;

  void validate() const;
  bool operator==(const FhnParams&) const = default;
};

/// Componentwise cubic kinetics f(u) = mu u - alpha_c u^3.
struct CubicParams {
  double mu = 1.0;
  double alpha_c = 1.0;

  void validate() const;
  bool operator==(const CubicParams&) const = default;
};

/// f == 0; leaves only diffusion and coupling.
struct ZeroKinetics {
  bool operator==(const ZeroKinetics&) const = default;
};

using Kinetics = std::variant<FhnParams, CubicParams, ZeroKinetics>;

using Mat2 = std::array<std::array<double, 2>, 2>;

std::pair<double, double> fhn_reaction(double u, double v, const FhnParams& p);

/// Jacobian of fhn_reaction. Entries belonging to a saturated (clamped)
/// variable are zero, matching the flat extension outside the clamp.
Mat2 fhn_jacobian(double u, double v, const FhnParams& p);

double cubic_reaction(double u, const CubicParams& p);

/// Largest singular value, closed form.
double opnorm_2x2(const Mat2& m);

/// out = f(u), pointwise. FHN requires exactly two components.
void apply_reaction(const Kinetics& kinetics, const RealField& u, RealField& out);

/// out = f'(base) w, pointwise.
void apply_jacobian(const Kinetics& kinetics, const RealField& base, const RealField& w,
                    RealField& out);

/// max over grid points of |f'(u(x))|_op.
double estimate_ka(const RealField& field, const Kinetics& kinetics);

/// gamma = -lambda_max((C + C^T) / 2); positive iff C is negatively coupling.
double coupling_gamma(const Eigen::MatrixXd& c);

/// Square coupling matrix with its strength derived on construction.
class CouplingMatrix {
 public:
  CouplingMatrix() : CouplingMatrix(Eigen::MatrixXd::Zero(2, 2)) {}
  explicit CouplingMatrix(Eigen::MatrixXd c);

  /// -gamma * I of the given size.
  static CouplingMatrix scalar(double gamma, int size);

  const Eigen::MatrixXd& matrix() const { return c_; }
  double gamma() const { return gamma_; }
  int size() const { return static_cast<int>(c_.rows()); }

  bool operator==(const CouplingMatrix& other) const { return c_ == other.c_; }

 private:
  Eigen::MatrixXd c_;
  double gamma_;
};

struct DissipativityParams {
  double mu = 0.0;
  double alpha = 1.0;
  double beta_d = 0.0;
  double p = 4.0;

  void validate() const;
};

struct DissipativityReport {
  double min_margin = 0.0;  // min over samples of mu u^2 - alpha |u|^p + beta_d - u f(u)
  double argmin = 0.0;
  bool pass = false;
};

/// Samples u uniformly on [-range, range] (endpoints included) and checks
/// u f(u) <= mu u^2 - alpha |u|^p + beta_d for the cubic model.
DissipativityReport check_dissipativity(const CubicParams& model, const DissipativityParams& d,
                                        double sample_range, int samples);

}  // namespace mncs
