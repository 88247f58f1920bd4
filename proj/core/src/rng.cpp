#include "mncs/rng.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace mncs {

double SplitMix64::uniform_open() {
  return (static_cast<double>(next() >> 11) + 0.5) * 0x1.0p-53;
}

RealField init_field(const GridSpec& grid, std::uint64_t seed, double sigma) {
  grid.validate();
  if (!(sigma >= 0.0)) throw std::invalid_argument("init_field: sigma must be >= 0");
  RealField field(grid);
  if (sigma == 0.0) return field;

  SplitMix64 rng(seed);
  auto v = field.values();
  for (std::size_t i = 0; i < v.size(); i += 2) {
    const double u1 = rng.uniform_open();
    const double u2 = rng.uniform_open();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * std::numbers::pi * u2;
    v[i] = sigma * r * std::cos(angle);
    if (i + 1 < v.size()) v[i + 1] = sigma * r * std::sin(angle);
  }
  return field;
}

}  // namespace mncs
