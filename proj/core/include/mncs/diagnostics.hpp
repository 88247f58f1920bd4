#pragma once

#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "mncs/grid.hpp"

namespace mncs {

struct DiagnosticsRecord {
  double t = 0.0;
  std::vector<double> variance;   // per component
  std::vector<double> mean;       // per component, the zero-mode amplitude / n
  std::vector<double> l2;         // per component, sqrt(int u^2 dx)
  std::vector<double> linf;       // per component
  std::vector<double> lp_ladder;  // M_2, M_4, ..., M_{2^j_max} of |u(x)|
};

/// Spatial variance per component (mean of squares minus square of mean).
std::vector<double> spatial_variance(const RealField& field);
std::vector<double> spatial_mean(const RealField& field);

/// Mean-power norms M_k = (|Omega|^-1 int |u|^k)^(1/k), k = 2, 4, ..., 2^j_max,
/// where |u| is the Euclidean norm of the state vector at each point.
std::vector<double> lp_ladder(const RealField& field, int j_max);

DiagnosticsRecord make_record(const RealField& field, double t, int j_max);

struct FitWindow {
  double t_begin;
  double t_end;
};

class FitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Least-squares slope of log(sigma^2) against t over the samples falling
/// inside `window`. Needs at least two samples, all strictly positive.
double fit_decay_rate(const std::vector<std::pair<double, double>>& series, FitWindow window);

/// (t, variance of `component`) pairs taken from a record series.
std::vector<std::pair<double, double>> variance_series(const std::vector<DiagnosticsRecord>& records,
                                                       int component);

// Time-series CSV, two components:
//   t,var_u,var_v,mean_u,mean_v,l2_u,l2_v,linf_u,linf_v[,m2,m4,...]
// 17 significant digits per value.
std::string csv_header(int ladder_size);
void write_series_csv(std::ostream& out, const std::vector<DiagnosticsRecord>& records);
void write_series_csv(const std::filesystem::path& path, const std::vector<DiagnosticsRecord>& records);

struct CsvTable {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
};

/// Parses a numeric CSV with a header row. Throws std::runtime_error.
CsvTable read_csv(const std::filesystem::path& path);

}  // namespace mncs
