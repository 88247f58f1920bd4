#include "mncs/compare.hpp"

#include <algorithm>
#include <cmath>
#include <span>
#include <stdexcept>

#include "mncs/diagnostics.hpp"
#include "mncs/snapshot.hpp"

namespace mncs {
namespace {

double difference(double a, double b, bool relative) {
  if (a == b) return 0.0;  // covers matching infinities
  const double d = std::abs(a - b);
  if (!relative) return d;
  const double scale = std::max(std::abs(a), std::abs(b));
  return d / scale;
}

void accumulate(CompareResult& r, std::span<const double> a, std::span<const double> b, bool relative) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double d = difference(a[i], b[i], relative);
    if (std::isnan(d)) {
      r.max_diff = d;
      return;
    }
    r.max_diff = std::max(r.max_diff, d);
  }
}

}  // namespace

CompareResult compare_files(const std::filesystem::path& a, const std::filesystem::path& b, double tol,
                            bool relative) {
  if (!(tol >= 0.0)) throw std::invalid_argument("compare: tolerance must be >= 0");
  const bool snap_a = is_snapshot_file(a), snap_b = is_snapshot_file(b);
  CompareResult r;
  if (snap_a != snap_b) {
    r.detail = "file kinds differ (snapshot vs csv)";
    return r;
  }

  if (snap_a) {
    const Snapshot x = read_snapshot(a), y = read_snapshot(b);
    if (!(x.field.grid() == y.field.grid())) {
      r.detail = "grids differ";
      return r;
    }
    if (difference(x.time, y.time, relative) > tol) {
      r.detail = "snapshot times differ";
      return r;
    }
    accumulate(r, x.field.values(), y.field.values(), relative);
  } else {
    const CsvTable x = read_csv(a), y = read_csv(b);
    if (x.columns != y.columns) {
      r.detail = "csv columns differ";
      return r;
    }
    if (x.rows.size() != y.rows.size()) {
      r.detail = "csv row counts differ";
      return r;
    }
    for (std::size_t i = 0; i < x.rows.size(); ++i) accumulate(r, x.rows[i], y.rows[i], relative);
  }
  r.match = r.max_diff <= tol;
  if (!r.match) r.detail = std::isnan(r.max_diff) ? "nan encountered" : "values differ beyond tolerance";
  return r;
}

}  // namespace mncs
