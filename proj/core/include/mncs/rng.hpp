#pragma once

#include <cstdint>

#include "mncs/grid.hpp"

namespace mncs {

/// SplitMix64 (Steele, Lea, Flood). Fully specified so any implementation
/// can reproduce the stream.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// ((x >> 11) + 0.5) * 2^-53, strictly inside (0, 1).
  double uniform_open();

 private:
  std::uint64_t state_;
};

/// i.i.d. normal(0, sigma) samples in component-major, row-major order.
/// Pairs of uniforms (u1, u2) become r cos(2 pi u2), r sin(2 pi u2) with
/// r = sqrt(-2 ln u1), emitted in that order.
RealField init_field(const GridSpec& grid, std::uint64_t seed, double sigma);

}  // namespace mncs
