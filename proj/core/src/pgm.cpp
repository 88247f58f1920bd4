#include "mncs/pgm.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <stdexcept>
#include <string>

namespace mncs {

void export_pgm(const RealField& field, int component, const std::filesystem::path& path,
                std::optional<std::pair<double, double>> range) {
  const auto& g = field.grid();
  if (component < 0 || component >= g.components) throw std::out_of_range("pgm: component out of range");
  const auto v = field.component(component);

  double lo = 0.0, hi = 0.0;
  if (range) {
    std::tie(lo, hi) = *range;
  } else {
    const auto [mn, mx] = std::minmax_element(v.begin(), v.end());
    lo = *mn;
    hi = *mx;
  }
  if (!(hi > lo)) hi = lo + 1.0;

  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("pgm: cannot open " + path.string());
  const std::string header = "P5\n" + std::to_string(g.n) + " " + std::to_string(g.n) + "\n65535\n";
  out.write(header.data(), static_cast<std::streamsize>(header.size()));
  for (double x : v) {
    const double scaled = std::clamp((x - lo) / (hi - lo), 0.0, 1.0) * 65535.0;
    const auto level = static_cast<unsigned>(std::lround(scaled));
    const char bytes[2] = {static_cast<char>((level >> 8) & 0xFF), static_cast<char>(level & 0xFF)};
    out.write(bytes, 2);
  }
  if (!out) throw std::runtime_error("pgm: write failed");
}

}  // namespace mncs
