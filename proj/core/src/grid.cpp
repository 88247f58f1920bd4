#include "mncs/grid.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace mncs {

void GridSpec::validate() const {
  if (n < 4 || n % 2 != 0) {
    throw std::invalid_argument("grid: n must be an even integer >= 4, got " + std::to_string(n));
  }
  if (!(length > 0.0) || !std::isfinite(length)) {
    throw std::invalid_argument("grid: length must be positive and finite");
  }
  if (components < 1) {
    throw std::invalid_argument("grid: components must be >= 1");
  }
}

double GridSpec::wavenumber(int m) const { return std::numbers::pi * m / length; }

template <class Space>
bool all_finite(const GridArray<Space>& field) {
  const auto v = field.values();
  return std::all_of(v.begin(), v.end(), [](double x) { return std::isfinite(x); });
}

template bool all_finite(const GridArray<PhysicalSpace>&);
template bool all_finite(const GridArray<CoefficientSpace>&);

}  // namespace mncs
