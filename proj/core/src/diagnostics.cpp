#include "mncs/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>

namespace mncs {

std::vector<double> spatial_mean(const RealField& field) {
  std::vector<double> out;
  for (int c = 0; c < field.grid().components; ++c) {
    double sum = 0.0;
    for (double x : field.component(c)) sum += x;
    out.push_back(sum / static_cast<double>(field.grid().points()));
  }
  return out;
}

std::vector<double> spatial_variance(const RealField& field) {
  std::vector<double> out;
  const double count = static_cast<double>(field.grid().points());
  for (int c = 0; c < field.grid().components; ++c) {
    const auto v = field.component(c);
    // Shifting by the first sample leaves E[x^2] - E[x]^2 unchanged and keeps
    // the subtraction well conditioned when |mean| >> spread.
    const double shift = v[0];
    double sum = 0.0, sum_sq = 0.0;
    for (double x : v) {
      const double d = x - shift;
      sum += d;
      sum_sq += d * d;
    }
    const double m = sum / count;
    out.push_back(std::max(0.0, sum_sq / count - m * m));
  }
  return out;
}

std::vector<double> lp_ladder(const RealField& field, int j_max) {
  if (j_max < 1) throw std::invalid_argument("lp_ladder: j_max must be >= 1");
  const auto& g = field.grid();
  std::vector<double> magnitude(g.points(), 0.0);
  for (int c = 0; c < g.components; ++c) {
    const auto v = field.component(c);
    for (std::size_t i = 0; i < v.size(); ++i) magnitude[i] = std::hypot(magnitude[i], v[i]);
  }
  double top = 0.0;
  for (double m : magnitude) top = std::max(top, m);

  std::vector<double> ladder;
  for (int j = 1; j <= j_max; ++j) {
    const double k = std::ldexp(1.0, j);
    if (top == 0.0) {
      ladder.push_back(0.0);
      continue;
    }
    // Powers of |u| / max|u| stay in [0, 1], so nothing overflows.
    double acc = 0.0;
    for (double m : magnitude) acc += std::pow(m / top, k);
    const double value = top * std::pow(acc / static_cast<double>(g.points()), 1.0 / k);
    ladder.push_back(std::isfinite(value) ? std::min(value, top) : top);
  }
  return ladder;
}

DiagnosticsRecord make_record(const RealField& field, double t, int j_max) {
  DiagnosticsRecord r;
  r.t = t;
  r.variance = spatial_variance(field);
  r.mean = spatial_mean(field);
  const double area = field.grid().cell_area();
  for (int c = 0; c < field.grid().components; ++c) {
    double sq = 0.0, top = 0.0;
    for (double x : field.component(c)) {
      sq += x * x;
      top = std::max(top, std::abs(x));
    }
    r.l2.push_back(std::sqrt(sq * area));
    r.linf.push_back(top);
  }
  if (j_max > 0) r.lp_ladder = lp_ladder(field, j_max);
  return r;
}

double fit_decay_rate(const std::vector<std::pair<double, double>>& series, FitWindow window) {
  std::vector<std::pair<double, double>> pts;
  for (const auto& [t, s] : series) {
    if (t < window.t_begin || t > window.t_end) continue;
    if (!(s > 0.0) || !std::isfinite(s)) {
      throw FitError("fit_decay_rate: non-positive variance at t = " + std::to_string(t));
    }
    pts.emplace_back(t, std::log(s));
  }
  if (pts.size() < 2) throw FitError("fit_decay_rate: fewer than two samples in window");

  double mt = 0.0, my = 0.0;
  for (const auto& [t, y] : pts) {
    mt += t;
    my += y;
  }
  mt /= pts.size();
  my /= pts.size();
  double stt = 0.0, sty = 0.0;
  for (const auto& [t, y] : pts) {
    stt += (t - mt) * (t - mt);
    sty += (t - mt) * (y - my);
  }
  if (stt == 0.0) throw FitError("fit_decay_rate: window has zero time extent");
  return sty / stt;
}

std::vector<std::pair<double, double>> variance_series(const std::vector<DiagnosticsRecord>& records,
                                                       int component) {
  std::vector<std::pair<double, double>> out;
  out.reserve(records.size());
  for (const auto& r : records) out.emplace_back(r.t, r.variance.at(component));
  return out;
}

std::string csv_header(int ladder_size) {
  std::string h = "t,var_u,var_v,mean_u,mean_v,l2_u,l2_v,linf_u,linf_v";
  for (int j = 1; j <= ladder_size; ++j) h += ",m" + std::to_string(1 << j);
  return h;
}

void write_series_csv(std::ostream& out, const std::vector<DiagnosticsRecord>& records) {
  const int ladder = records.empty() ? 0 : static_cast<int>(records.front().lp_ladder.size());
  out << csv_header(ladder) << '\n';
  char buf[40];
  auto put = [&](double x) {
    std::snprintf(buf, sizeof buf, ",%.17g", x);
    out << buf;
  };
  for (const auto& r : records) {
    if (r.variance.size() != 2) throw std::invalid_argument("csv: series must have two components");
    std::snprintf(buf, sizeof buf, "%.17g", r.t);
    out << buf;
    for (const auto* col : {&r.variance, &r.mean, &r.l2, &r.linf}) {
      put((*col)[0]);
      put((*col)[1]);
    }
    for (double m : r.lp_ladder) put(m);
    out << '\n';
  }
}

void write_series_csv(const std::filesystem::path& path, const std::vector<DiagnosticsRecord>& records) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("csv: cannot open " + path.string());
  write_series_csv(out, records);
}

CsvTable read_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("csv: cannot open " + path.string());
  CsvTable table;
  std::string line;
  if (!std::getline(in, line)) throw std::runtime_error("csv: empty file " + path.string());
  {
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) table.columns.push_back(cell);
  }
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<double> row;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) {
      std::size_t used = 0;
      double v = 0.0;
      try {
        v = std::stod(cell, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != cell.size() || cell.empty()) throw std::runtime_error("csv: bad number '" + cell + "'");
      row.push_back(v);
    }
    if (row.size() != table.columns.size()) throw std::runtime_error("csv: ragged row in " + path.string());
    table.rows.push_back(std::move(row));
  }
  return table;
}

}  // namespace mncs
