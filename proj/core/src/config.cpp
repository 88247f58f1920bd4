#include "mncs/config.hpp"

#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace mncs {
namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::string fmt(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

double parse_real(const std::string& key, const std::string& value) {
  errno = 0;
  char* end = nullptr;
  const double x = std::strtod(value.c_str(), &end);
  if (value.empty() || end != value.c_str() + value.size() || errno == ERANGE || !std::isfinite(x)) {
    throw ConfigError("config: '" + key + "' expects a finite real, got '" + value + "'");
  }
  return x;
}

long long parse_int(const std::string& key, const std::string& value) {
  errno = 0;
  char* end = nullptr;
  const long long x = std::strtoll(value.c_str(), &end, 10);
  if (value.empty() || end != value.c_str() + value.size() || errno == ERANGE) {
    throw ConfigError("config: '" + key + "' expects an integer, got '" + value + "'");
  }
  return x;
}

std::uint64_t parse_u64(const std::string& key, const std::string& value) {
  errno = 0;
  char* end = nullptr;
  if (!value.empty() && value[0] == '-') throw ConfigError("config: '" + key + "' must be non-negative");
  const unsigned long long x = std::strtoull(value.c_str(), &end, 10);
  if (value.empty() || end != value.c_str() + value.size() || errno == ERANGE) {
    throw ConfigError("config: '" + key + "' expects an unsigned integer, got '" + value + "'");
  }
  return x;
}

bool parse_bool(const std::string& key, const std::string& value) {
  if (value == "true" || value == "1" || value == "yes") return true;
  if (value == "false" || value == "0" || value == "no") return false;
  throw ConfigError("config: '" + key + "' expects true/false, got '" + value + "'");
}

const std::set<std::string>& common_keys() {
  static const std::set<std::string> keys = {
      "n",           "length",        "kinetics",  "du",        "dv",       "gamma",
      "coupling",    "dt",            "t_end",     "record_stride", "seed", "noise_sigma",
      "c0",          "lp_jmax",       "control_gamma", "output_dir", "ic_path", "emit_csv",
      "emit_snapshots", "emit_pgm"};
  return keys;
}

const std::set<std::string> kFhnKeys = {"eps", "beta_kin", "gamma_kin", "clamp"};
const std::set<std::string> kCubicKeys = {"mu", "alpha_c"};

bool is_scalar_coupling(const Eigen::MatrixXd& c) {
  const Eigen::MatrixXd expected = c(0, 0) * Eigen::MatrixXd::Identity(c.rows(), c.cols());
  return c == expected;
}

}  // namespace

std::string kinetics_name(const Kinetics& kinetics) {
  switch (kinetics.index()) {
    case 0: return "fhn";
    case 1: return "cubic";
    default: return "zero";
  }
}

void RunConfig::validate() const {
  try {
    grid.validate();
  } catch (const std::invalid_argument& e) {
    throw ConfigError(std::string("config: ") + e.what());
  }
  if (grid.components != 2) throw ConfigError("config: runs use exactly two components (u, v)");
  if (static_cast<int>(diffusion.size()) != grid.components) throw ConfigError("config: need du and dv");
  for (double d : diffusion) {
    if (d < 0.0) throw ConfigError("config: diffusion coefficients must be >= 0");
  }
  if (coupling.size() != grid.components) throw ConfigError("config: coupling must be 2x2");
  if (!(dt > 0.0)) throw ConfigError("config: dt must be > 0");
  if (t_end < 0.0) throw ConfigError("config: t_end must be >= 0");
  if (record_stride < 1) throw ConfigError("config: record_stride must be >= 1");
  if (noise_sigma < 0.0) throw ConfigError("config: noise_sigma must be >= 0");
  if (!(c0 > 0.0)) throw ConfigError("config: c0 must be > 0");
  if (lp_jmax < 0 || lp_jmax > 10) throw ConfigError("config: lp_jmax must be in [0, 10]");
  try {
    if (auto* f = std::get_if<FhnParams>(&kinetics)) f->validate();
    if (auto* c = std::get_if<CubicParams>(&kinetics)) c->validate();
  } catch (const std::invalid_argument& e) {
    throw ConfigError(std::string("config: ") + e.what());
  }
}

long RunConfig::steps() const { return std::lround(t_end / dt); }

double RunConfig::d_min() const {
  double best = 0.0;
  for (double d : diffusion) {
    if (d > 0.0 && (best == 0.0 || d < best)) best = d;
  }
  if (best == 0.0) throw ConfigError("config: no diffusing component");
  return best;
}

RunConfig with_gamma(RunConfig config, double gamma) {
  config.coupling = CouplingMatrix::scalar(gamma, config.grid.components);
  return config;
}

RunConfig parse_config(const std::string& text) {
  std::map<std::string, std::string> kv;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("config: line " + std::to_string(lineno) + ": expected 'key = value'");
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty()) throw ConfigError("config: line " + std::to_string(lineno) + ": empty key");
    if (!kv.emplace(key, value).second) throw ConfigError("config: repeated key '" + key + "'");
  }

  RunConfig cfg;
  const std::string kind = kv.count("kinetics") ? kv.at("kinetics") : "fhn";
  const std::set<std::string>* extra = nullptr;
  if (kind == "fhn") {
    cfg.kinetics = FhnParams{};
    extra = &kFhnKeys;
  } else if (kind == "cubic") {
    cfg.kinetics = CubicParams{};
    extra = &kCubicKeys;
  } else if (kind == "zero") {
    cfg.kinetics = ZeroKinetics{};
  } else {
    throw ConfigError("config: unknown kinetics '" + kind + "' (fhn, cubic, zero)");
  }
  for (const auto& [key, value] : kv) {
    if (common_keys().count(key) || (extra && extra->count(key))) continue;
    if (kFhnKeys.count(key) || kCubicKeys.count(key)) {
      throw ConfigError("config: key '" + key + "' does not apply to kinetics '" + kind + "'");
    }
    throw ConfigError("config: unknown key '" + key + "'");
  }

  auto real = [&](const char* key, double& slot) {
    if (auto it = kv.find(key); it != kv.end()) slot = parse_real(key, it->second);
  };
  if (auto it = kv.find("n"); it != kv.end()) cfg.grid.n = static_cast<int>(parse_int("n", it->second));
  real("length", cfg.grid.length);
  if (auto* f = std::get_if<FhnParams>(&cfg.kinetics)) {
    real("eps", f->eps);
    real("beta_kin", f->beta_kin);
    real("gamma_kin", f->gamma_kin);
    real("clamp", f->clamp);
  }
  if (auto* c = std::get_if<CubicParams>(&cfg.kinetics)) {
    real("mu", c->mu);
    real("alpha_c", c->alpha_c);
  }
  real("du", cfg.diffusion[0]);
  real("dv", cfg.diffusion[1]);

  if (kv.count("gamma") && kv.count("coupling")) {
    throw ConfigError("config: give either 'gamma' or 'coupling', not both");
  }
  if (auto it = kv.find("gamma"); it != kv.end()) {
    cfg.coupling = CouplingMatrix::scalar(parse_real("gamma", it->second), 2);
  }
  if (auto it = kv.find("coupling"); it != kv.end()) {
    std::istringstream ss(it->second);
    std::vector<double> entries;
    std::string tok;
    while (ss >> tok) entries.push_back(parse_real("coupling", tok));
    if (entries.size() != 4) throw ConfigError("config: 'coupling' expects 4 numbers (row-major 2x2)");
    Eigen::MatrixXd c(2, 2);
    c << entries[0], entries[1], entries[2], entries[3];
    cfg.coupling = CouplingMatrix(c);
  }

  real("dt", cfg.dt);
  real("t_end", cfg.t_end);
  if (auto it = kv.find("record_stride"); it != kv.end()) {
    cfg.record_stride = static_cast<int>(parse_int("record_stride", it->second));
  }
  if (auto it = kv.find("seed"); it != kv.end()) cfg.seed = parse_u64("seed", it->second);
  real("noise_sigma", cfg.noise_sigma);
  real("c0", cfg.c0);
  if (auto it = kv.find("lp_jmax"); it != kv.end()) cfg.lp_jmax = static_cast<int>(parse_int("lp_jmax", it->second));
  real("control_gamma", cfg.control_gamma);
  if (auto it = kv.find("output_dir"); it != kv.end()) cfg.output_dir = it->second;
  if (auto it = kv.find("ic_path"); it != kv.end()) cfg.ic_path = it->second;
  if (auto it = kv.find("emit_csv"); it != kv.end()) cfg.emit.csv = parse_bool("emit_csv", it->second);
  if (auto it = kv.find("emit_snapshots"); it != kv.end()) {
    cfg.emit.snapshots = parse_bool("emit_snapshots", it->second);
  }
  if (auto it = kv.find("emit_pgm"); it != kv.end()) cfg.emit.pgm = parse_bool("emit_pgm", it->second);

  cfg.validate();
  return cfg;
}

RunConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("config: cannot open " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

std::string serialize_config(const RunConfig& c) {
  std::ostringstream out;
  out << "n = " << c.grid.n << '\n';
  out << "length = " << fmt(c.grid.length) << '\n';
  out << "kinetics = " << kinetics_name(c.kinetics) << '\n';
  if (const auto* f = std::get_if<FhnParams>(&c.kinetics)) {
    out << "eps = " << fmt(f->eps) << '\n';
    out << "beta_kin = " << fmt(f->beta_kin) << '\n';
    out << "gamma_kin = " << fmt(f->gamma_kin) << '\n';
    out << "clamp = " << fmt(f->clamp) << '\n';
  }
  if (const auto* cu = std::get_if<CubicParams>(&c.kinetics)) {
    out << "mu = " << fmt(cu->mu) << '\n';
    out << "alpha_c = " << fmt(cu->alpha_c) << '\n';
  }
  out << "du = " << fmt(c.diffusion[0]) << '\n';
  out << "dv = " << fmt(c.diffusion[1]) << '\n';
  const auto& m = c.coupling.matrix();
  if (is_scalar_coupling(m)) {
    out << "gamma = " << fmt(m(0, 0) == 0.0 ? 0.0 : -m(0, 0)) << '\n';
  } else {
    out << "coupling = " << fmt(m(0, 0)) << ' ' << fmt(m(0, 1)) << ' ' << fmt(m(1, 0)) << ' '
        << fmt(m(1, 1)) << '\n';
  }
  out << "dt = " << fmt(c.dt) << '\n';
  out << "t_end = " << fmt(c.t_end) << '\n';
  out << "record_stride = " << c.record_stride << '\n';
  out << "seed = " << c.seed << '\n';
  out << "noise_sigma = " << fmt(c.noise_sigma) << '\n';
  out << "c0 = " << fmt(c.c0) << '\n';
  out << "lp_jmax = " << c.lp_jmax << '\n';
  out << "control_gamma = " << fmt(c.control_gamma) << '\n';
  out << "output_dir = " << c.output_dir.string() << '\n';
  if (c.ic_path) out << "ic_path = " << c.ic_path->string() << '\n';
  out << "emit_csv = " << (c.emit.csv ? "true" : "false") << '\n';
  out << "emit_snapshots = " << (c.emit.snapshots ? "true" : "false") << '\n';
  out << "emit_pgm = " << (c.emit.pgm ? "true" : "false") << '\n';
  return out.str();
}

}  // namespace mncs
