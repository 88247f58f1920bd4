// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fail.
// Usage: mncs_acceptance [output-dir]

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "mncs/dimension.hpp"
#include "mncs/etd.hpp"
#include "mncs/kinetics.hpp"
#include "mncs/lyapunov.hpp"
#include "mncs/scenarios.hpp"
#include "mncs/spectral.hpp"
#include "oracles.hpp"

namespace {

using namespace mncs;
namespace fs = std::filesystem;

struct Verdict {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok) pass = false;
    if (!detail.empty()) detail += "; ";
    detail += (ok ? "" : "!") + what;
  }
};

std::string num(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.4g", x);
  return buf;
}

fs::path g_out = "acceptance_out";

RunConfig reference_config() {
  RunConfig c;  // defaults are the reference FHN scenario
  c.output_dir = g_out / "pair";
  return c;
}

Verdict figure_pair() {
  Verdict v;
  const RunConfig cfg = reference_config();
  const auto s = run_scenario_pair(make_scenario_pair(cfg, 6.0, cfg.output_dir), cfg.output_dir);
  double late_max = 0.0;
  for (const auto& r : s.chaos.series) {
    if (r.t >= 80.0 - 1e-9) late_max = std::max(late_max, r.variance[0]);
  }
  v.require(s.chaos_final_variance_u >= 1e-3, "chaos var_u(100) = " + num(s.chaos_final_variance_u) + " >= 1e-3");
  v.require(late_max >= 1e-2, "chaos max var_u[80,100] = " + num(late_max) + " >= 1e-2");
  v.require(s.control_final_variance_u <= 1e-12, "control var_u(100) = " + num(s.control_final_variance_u) + " <= 1e-12");
  return v;
}

Verdict zero_mode() {
  Verdict v;
  const GridSpec g{32, 16.0, 2};
  const std::vector<double> d{1.0, 0.0};
  const double gamma = 0.7, dt = 0.05, c = 1.3;
  const SplitSpec split = SplitSpec::from_coupling(CouplingMatrix::scalar(gamma, 2));
  const auto tables = precompute_tables(g, d, split, dt);
  RealField u0(g);
  for (double& x : u0.values()) x = c;
  SimState s = SimState::from_field(u0);
  for (int k = 0; k < 100; ++k) s = etd_step(s, tables, ZeroKinetics{}, split);
  const double exact = c * std::exp(-gamma * 100 * dt);
  double worst = 0.0;
  for (double m : spatial_mean(dct2_inverse(s.u_hat))) worst = std::max(worst, std::abs(m - exact) / exact);
  v.require(worst <= 1e-12, "max relative mean error " + num(worst) + " <= 1e-12");
  return v;
}

Verdict etd_order() {
  Verdict v;
  RunConfig cfg;
  cfg.grid = GridSpec{32, 64.0, 2};
  const auto r = convergence_study(cfg, {0.1, 0.05, 0.025, 0.0125}, 1.0);
  const double slope = r.slope.value_or(std::nan(""));
  v.require(!r.exact && slope >= 1.7 && slope <= 2.3, "observed order " + num(slope) + " in [1.7, 2.3]");
  return v;
}

Verdict spectral() {
  Verdict v;
  const GridSpec g{32, 10.0, 2};
  double roundtrip = 0.0, parseval = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    const auto f = oracle::random_field(g, 1000 + trial);
    const auto spec = dct2_forward(f);
    const auto back = dct2_inverse(spec);
    double e2 = 0.0, c2 = 0.0;
    for (std::size_t i = 0; i < f.values().size(); ++i) {
      roundtrip = std::max(roundtrip, std::abs(back.values()[i] - f.values()[i]));
      e2 += f.values()[i] * f.values()[i];
      c2 += spec.values()[i] * spec.values()[i];
    }
    parseval = std::max(parseval, std::abs(e2 - c2) / e2);
  }
  v.require(roundtrip <= 1e-12, "roundtrip " + num(roundtrip) + " <= 1e-12");
  v.require(parseval <= 1e-10, "Parseval " + num(parseval) + " <= 1e-10");

  const GridSpec big{128, 64.0, 1};
  RealField cosine(big);
  for (int i = 0; i < big.n; ++i)
    for (int j = 0; j < big.n; ++j) cosine(0, i, j) = std::cos(std::numbers::pi * big.coordinate(i) / big.length);
  const auto lap = apply_laplacian(cosine, 1.0);
  const double k2 = std::pow(std::numbers::pi / big.length, 2);
  double num_err = 0.0, den = 0.0;
  for (std::size_t i = 0; i < lap.values().size(); ++i) {
    num_err = std::max(num_err, std::abs(lap.values()[i] + k2 * cosine.values()[i]));
    den = std::max(den, k2 * std::abs(cosine.values()[i]));
  }
  v.require(num_err / den <= 1e-10, "eigenfunction " + num(num_err / den) + " <= 1e-10");
  return v;
}

Verdict bound_properties() {
  Verdict v;
  DimensionBoundInputs in;
  in.omega_measure = 64.0 * 64.0;
  in.ka = 15.0;
  bool monotone = true, floor_exact = true;
  double prev = INFINITY;
  for (int i = 0; i < 50; ++i) {
    in.gamma = 20.0 * i / 49.0;
    const double b = dimension_bound(in);
    monotone = monotone && b <= prev;
    if (in.gamma >= in.ka) floor_exact = floor_exact && b == 2.0;
    prev = b;
  }
  v.require(monotone, "nonincreasing over 50 gammas");
  v.require(floor_exact, "equals N for gamma >= K_A");

  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const int pts = 41;
  for (int i = 0; i < pts; ++i) {
    const double excess = 0.1 * std::pow(100.0, i / (pts - 1.0));
    in.gamma = in.ka - excess;
    const double x = std::log(excess), y = std::log(dimension_bound(in));
    sx += x, sy += y, sxx += x * x, sxy += x * y;
  }
  const double slope = (pts * sxy - sx * sy) / (pts * sxx - sx * sx);
  v.require(std::abs(slope - 1.0) <= 0.01, "log-log slope " + num(slope) + " = 1 +- 0.01");
  return v;
}

Verdict hopf() {
  Verdict v;
  std::mt19937_64 gen(6);
  std::normal_distribution<double> dist(0.0, 2.0);
  int failures = 0;
  double worst = -INFINITY;
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = 2 + trial % 3;
    Eigen::MatrixXd j(n, n), b(n, n), a(n, n);
    for (int i = 0; i < n * n; ++i) {
      j(i / n, i % n) = dist(gen);
      b(i / n, i % n) = dist(gen);
      a(i / n, i % n) = dist(gen);
    }
    // negative definite symmetric part, plus a skew part on every other draw
    Eigen::MatrixXd c = -(b * b.transpose() + 0.01 * Eigen::MatrixXd::Identity(n, n));
    if (trial % 2) c += a - a.transpose();
    const auto r = hopf_shift_check(j, c);
    worst = std::max(worst, r.rho - (r.sym_bound - r.gamma));
    if (!r.holds) ++failures;
  }
  v.require(failures == 0, std::to_string(failures) + " violations in 1000, worst excess " + num(worst));
  return v;
}

Verdict lyapunov() {
  Verdict v;
  RunConfig base = reference_config();
  const RealField ic = initial_field(base);

  LyapunovOptions control_opt;
  control_opt.m = 2;
  control_opt.total_steps = 1000;
  const auto control = lyapunov_spectrum(with_gamma(base, 6.0), ic, control_opt);
  const auto ky = kaplan_yorke(control);
  v.require(!control.exponents.empty() && control.exponents[0] < 0.0,
            "control lambda1 = " + num(control.exponents.empty() ? NAN : control.exponents[0]) + " < 0");
  v.require(ky.dimension == 0.0, "control KY = " + num(ky.dimension));

  LyapunovOptions chaos_opt;
  chaos_opt.m = 2;
  chaos_opt.transient_steps = 400;
  chaos_opt.total_steps = 1600;
  const auto chaos = lyapunov_spectrum(base, ic, chaos_opt);
  v.require(!chaos.exponents.empty() && chaos.exponents[0] > 0.0,
            "chaos lambda1 = " + num(chaos.exponents.empty() ? NAN : chaos.exponents[0]) + " > 0");

  // f = 0, C = -gamma I on [0, pi]^2 with unit diffusion: the four leading
  // exponents are -gamma (zero modes of u and v) and -gamma - 1.
  RunConfig lin;
  lin.grid = GridSpec{8, std::numbers::pi, 2};
  lin.kinetics = ZeroKinetics{};
  lin.diffusion = {1.0, 1.0};
  lin = with_gamma(lin, 0.5);
  LyapunovOptions lin_opt;
  lin_opt.m = 4;
  lin_opt.transient_steps = 400;
  lin_opt.total_steps = 1000;  // T = 50
  const auto linear = lyapunov_spectrum(lin, initial_field(lin), lin_opt);
  const double expected[] = {-0.5, -0.5, -1.5, -1.5};
  double worst = linear.exponents.size() == 4 ? 0.0 : INFINITY;
  for (std::size_t i = 0; i < linear.exponents.size() && i < 4; ++i) {
    worst = std::max(worst, std::abs(linear.exponents[i] - expected[i]));
  }
  v.require(worst <= 1e-3, "linear exponents max error " + num(worst) + " <= 1e-3");
  return v;
}

Verdict trace() {
  Verdict v;
  const GridSpec g{32, 64.0, 2};
  const double d_min = 1.0, k_est = 7.0;
  const auto strong = trace_probe(g, d_min, k_est, 8.0, 1);
  v.require(strong.m_star && *strong.m_star == 1, "m* = 1 for gamma > k_est");

  bool monotone = true;
  long prev = std::numeric_limits<long>::max();
  for (int i = 0; i <= 40; ++i) {
    const double gamma = 10.0 * i / 40.0;
    const auto p = trace_probe(g, d_min, k_est, gamma, 1);
    const long m = p.m_star.value_or(std::numeric_limits<long>::max());
    monotone = monotone && m <= prev;
    prev = m;
  }
  v.require(monotone, "m* nonincreasing in gamma");

  bool exact = true;
  for (double gamma : {0.0, 3.0, 6.0, 9.0}) {
    for (long m : {1L, 2L, 7L, 50L, 300L, 1024L}) {
      exact = exact && trace_probe(g, d_min, k_est, gamma, m).trace == oracle::trace_by_scan(g, d_min, k_est, gamma, m);
    }
  }
  v.require(exact, "T(m) equals the scan oracle");
  return v;
}

Verdict dissipativity() {
  Verdict v;
  double worst = 0.0;
  bool all_pass = true;
  for (double mu : {-2.0, -0.5, 0.0, 0.5, 1.0, 3.0}) {
    const auto r = check_dissipativity(CubicParams{mu, 1.0}, {mu, 1.0, 0.0, 4.0}, 10.0, 10001);
    all_pass = all_pass && r.pass;
    worst = std::max(worst, std::abs(r.min_margin));
  }
  v.require(all_pass && worst <= 1e-12, "equality case min |g| = " + num(worst) + " <= 1e-12");
  return v;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc > 1) g_out = argv[1];
  fs::create_directories(g_out);

  const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria{
      {"1 chaos/control pair", figure_pair},
      {"2 zero-mode exactness", zero_mode},
      {"3 ETD2 order", etd_order},
      {"4 spectral correctness", spectral},
      {"5 dimension bound properties", bound_properties},
      {"6 Hopf shift inequality", hopf},
      {"7 Lyapunov collapse", lyapunov},
      {"8 trace probe", trace},
      {"9 dissipativity equality case", dissipativity},
  };

  int failed = 0;
  for (const auto& [name, check] : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = check();
    } catch (const std::exception& e) {
      v.pass = false;
      v.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s  %-30s %s  (%.1fs)\n", v.pass ? "PASS" : "FAIL", name.c_str(), v.detail.c_str(), secs);
    std::fflush(stdout);
    if (!v.pass) ++failed;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
