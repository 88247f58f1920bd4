#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "mncs/grid.hpp"
#include "mncs/kinetics.hpp"

namespace mncs {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct EmitFlags {
  bool csv = true;
  bool snapshots = true;
  bool pgm = false;

  bool operator==(const EmitFlags&) const = default;
};

/// Full description of one experiment. Defaults reproduce the reference
/// FitzHugh-Nagumo scenario (n = 128, L = 64, dt = 0.05, T = 100, gamma = 0).
struct RunConfig {
  GridSpec grid{128, 64.0, 2};
  Kinetics kinetics = FhnParams{};
  std::vector<double> diffusion{1.0, 0.0};
  CouplingMatrix coupling = CouplingMatrix::scalar(0.0, 2);
  double dt = 0.05;
  double t_end = 100.0;
  int record_stride = 10;
  std::uint64_t seed = 42;
  double noise_sigma = 0.1;
  double c0 = 1.0;
  int lp_jmax = 3;
  double control_gamma = 6.0;
  std::filesystem::path output_dir = "mncs_out";
  std::optional<std::filesystem::path> ic_path;
  EmitFlags emit;

  /// Throws ConfigError on any violated invariant.
  void validate() const;

  /// Number of steps covering t_end (t_end / dt rounded to nearest).
  long steps() const;

  /// Smallest positive diffusion coefficient; ConfigError if none.
  double d_min() const;

  bool operator==(const RunConfig&) const = default;
};

/// Same config with coupling -gamma I.
RunConfig with_gamma(RunConfig config, double gamma);

// Text format: UTF-8 "key = value" lines, '#' starts a comment, unknown or
// repeated keys are errors. See README for the key list.
RunConfig parse_config(const std::string& text);
RunConfig load_config(const std::filesystem::path& path);
std::string serialize_config(const RunConfig& config);

std::string kinetics_name(const Kinetics& kinetics);

}  // namespace mncs
