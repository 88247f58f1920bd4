#include "mncs/kinetics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace mncs {
namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};

void require_components(const RealField& u, int expected, const char* what) {
  if (u.grid().components != expected) {
    throw std::invalid_argument(std::string(what) + ": expected " + std::to_string(expected) +
                                " components");
  }
}

double clamp_to(double x, double half_width) { return std::clamp(x, -half_width, half_width); }

bool inside(double x, double half_width) { return std::abs(x) < half_width; }

}  // namespace

void FhnParams::validate() const {
  if (!(eps > 0.0)) throw std::invalid_argument("fhn: eps must be > 0");
  if (!(clamp > 0.0)) throw std::invalid_argument("fhn: clamp must be > 0");
}

void CubicParams::validate() const {
  if (!(alpha_c > 0.0)) throw std::invalid_argument("cubic: alpha_c must be > 0");
}

void DissipativityParams::validate() const {
  if (!(alpha > 0.0)) throw std::invalid_argument("dissipativity: alpha must be > 0");
  if (beta_d < 0.0) throw std::invalid_argument("dissipativity: beta_d must be >= 0");
  if (!(p > 2.0 && p <= 4.0)) throw std::invalid_argument("dissipativity: p must be in (2, 4]");
}

std::pair<double, double> fhn_reaction(double u, double v, const FhnParams& p) {
  const double uc = clamp_to(u, p.clamp);
  const double vc = clamp_to(v, p.clamp);
  const double fu = (uc - uc * uc * uc / 3.0 - vc) / p.eps;
  const double fv = p.eps * (uc + p.beta_kin - p.gamma_kin * vc);
  return {fu, fv};
}

Mat2 fhn_jacobian(double u, double v, const FhnParams& p) {
  const double uc = clamp_to(u, p.clamp);
  const bool u_live = inside(u, p.clamp);
  const bool v_live = inside(v, p.clamp);
  Mat2 j{};
  j[0][0] = u_live ? (1.0 - uc * uc) / p.eps : 0.0;
  j[0][1] = v_live ? -1.0 / p.eps : 0.0;
  j[1][0] = u_live ? p.eps : 0.0;
  j[1][1] = v_live ? -p.eps * p.gamma_kin : 0.0;
  return j;
}

double cubic_reaction(double u, const CubicParams& p) { return p.mu * u - p.alpha_c * u * u * u; }

double opnorm_2x2(const Mat2& m) {
  const double a = m[0][0], b = m[0][1], c = m[1][0], d = m[1][1];
  return 0.5 * (std::hypot(a + d, c - b) + std::hypot(a - d, b + c));
}

void apply_reaction(const Kinetics& kinetics, const RealField& u, RealField& out) {
  std::visit(overloaded{
                 [&](const FhnParams& p) {
                   require_components(u, 2, "fhn reaction");
                   auto us = u.component(0), vs = u.component(1);
                   auto fu = out.component(0), fv = out.component(1);
                   for (std::size_t i = 0; i < us.size(); ++i) {
                     const auto [a, b] = fhn_reaction(us[i], vs[i], p);
                     fu[i] = a;
                     fv[i] = b;
                   }
                 },
                 [&](const CubicParams& p) {
                   auto in = u.values();
                   auto f = out.values();
                   for (std::size_t i = 0; i < in.size(); ++i) f[i] = cubic_reaction(in[i], p);
                 },
                 [&](const ZeroKinetics&) { std::fill(out.values().begin(), out.values().end(), 0.0); },
             },
             kinetics);
}

void apply_jacobian(const Kinetics& kinetics, const RealField& base, const RealField& w,
                    RealField& out) {
  std::visit(overloaded{
                 [&](const FhnParams& p) {
                   require_components(base, 2, "fhn jacobian");
                   auto us = base.component(0), vs = base.component(1);
                   auto wu = w.component(0), wv = w.component(1);
                   auto ou = out.component(0), ov = out.component(1);
                   for (std::size_t i = 0; i < us.size(); ++i) {
                     const Mat2 j = fhn_jacobian(us[i], vs[i], p);
                     const double a = wu[i], b = wv[i];
                     ou[i] = j[0][0] * a + j[0][1] * b;
                     ov[i] = j[1][0] * a + j[1][1] * b;
                   }
                 },
                 [&](const CubicParams& p) {
                   auto u = base.values();
                   auto in = w.values();
                   auto o = out.values();
                   for (std::size_t i = 0; i < u.size(); ++i) {
                     o[i] = (p.mu - 3.0 * p.alpha_c * u[i] * u[i]) * in[i];
                   }
                 },
                 [&](const ZeroKinetics&) { std::fill(out.values().begin(), out.values().end(), 0.0); },
             },
             kinetics);
}

double estimate_ka(const RealField& field, const Kinetics& kinetics) {
  return std::visit(
      overloaded{
          [&](const FhnParams& p) {
            require_components(field, 2, "estimate_ka");
            auto us = field.component(0), vs = field.component(1);
            double best = 0.0;
            for (std::size_t i = 0; i < us.size(); ++i) {
              best = std::max(best, opnorm_2x2(fhn_jacobian(us[i], vs[i], p)));
            }
            return best;
          },
          [&](const CubicParams& p) {
            // Diagonal Jacobian per point: the norm is the largest |f'|.
            double best = 0.0;
            const int points = static_cast<int>(field.grid().points());
            for (int i = 0; i < points; ++i) {
              double point = 0.0;
              for (int c = 0; c < field.grid().components; ++c) {
                const double u = field.component(c)[i];
                point = std::max(point, std::abs(p.mu - 3.0 * p.alpha_c * u * u));
              }
              best = std::max(best, point);
            }
            return best;
          },
          [](const ZeroKinetics&) { return 0.0; },
      },
      kinetics);
}

double coupling_gamma(const Eigen::MatrixXd& c) {
  if (c.rows() != c.cols() || c.rows() == 0) {
    throw std::invalid_argument("coupling_gamma: matrix must be square and non-empty");
  }
  if (!c.allFinite()) throw std::invalid_argument("coupling_gamma: non-finite entries");
  const Eigen::MatrixXd sym = 0.5 * (c + c.transpose());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(sym, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw std::runtime_error("coupling_gamma: eigensolver failed");
  return -solver.eigenvalues().maxCoeff();
}

CouplingMatrix::CouplingMatrix(Eigen::MatrixXd c) : c_(std::move(c)), gamma_(coupling_gamma(c_)) {}

CouplingMatrix CouplingMatrix::scalar(double gamma, int size) {
  return CouplingMatrix(-gamma * Eigen::MatrixXd::Identity(size, size));
}

DissipativityReport check_dissipativity(const CubicParams& model, const DissipativityParams& d,
                                        double sample_range, int samples) {
  model.validate();
  d.validate();
  if (samples < 100) throw std::invalid_argument("check_dissipativity: samples must be >= 100");
  if (!(sample_range > 0.0)) throw std::invalid_argument("check_dissipativity: range must be > 0");

  const bool quartic = d.p == 4.0;
  DissipativityReport report{std::numeric_limits<double>::infinity(), 0.0, false};
  for (int i = 0; i < samples; ++i) {
    const double u = -sample_range + 2.0 * sample_range * i / (samples - 1);
    // Extended precision: the terms grow like u^4 while g itself may be zero.
    const long double x = u, x2 = x * x;
    const long double xp = quartic ? x2 * x2 : std::pow(std::abs(x), static_cast<long double>(d.p));
    const long double fx = model.mu * x - model.alpha_c * x2 * x;
    const double g = static_cast<double>(d.mu * x2 - d.alpha * xp + d.beta_d - x * fx);
    if (g < report.min_margin) {
      report.min_margin = g;
      report.argmin = u;
    }
  }
  report.pass = report.min_margin >= -1e-12;
  return report;
}

}  // namespace mncs
