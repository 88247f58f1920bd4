#pragma once

#include <filesystem>
#include <string>

namespace mncs {

struct CompareResult {
  bool match = false;
  double max_diff = 0.0;  // absolute, or relative when requested
  std::string detail;
};

/// Compares two MNCS1 snapshots or two series CSVs (detected from the
/// snapshot magic). Values agree when |a - b| <= tol, or with `relative`
/// when |a - b| <= tol * max(|a|, |b|). Grid, time, column or row-count
/// differences are mismatches. Throws std::runtime_error on unreadable input.
CompareResult compare_files(const std::filesystem::path& a, const std::filesystem::path& b, double tol,
                            bool relative);

}  // namespace mncs
