#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace mncs {

/// Square 2D box [0, L]^2 sampled at the n DCT-II midpoints per axis,
/// carrying `components` state variables.
struct GridSpec {
  int n = 128;
  double length = 64.0;
  int components = 2;

  static constexpr int dims = 2;

  /// Throws std::invalid_argument unless n >= 4, n even, length > 0 and
  /// components >= 1.
  void validate() const;

  std::size_t points() const { return static_cast<std::size_t>(n) * n; }
  std::size_t size() const { return points() * components; }
  double spacing() const { return length / n; }
  double coordinate(int j) const { return (j + 0.5) * spacing(); }
  double wavenumber(int m) const;
  double measure() const { return length * length; }
  double cell_area() const { return spacing() * spacing(); }

  bool operator==(const GridSpec&) const = default;
};

struct PhysicalSpace {};
struct CoefficientSpace {};

/// components x n x n values, component-major then row-major.
///
/// The tag keeps samples and cosine coefficients from being mixed up;
/// the storage layout is the same for both.
template <class Space>
class GridArray {
 public:
  GridArray() = default;
  explicit GridArray(const GridSpec& grid) : grid_(grid), data_(grid.size(), 0.0) {}

  const GridSpec& grid() const { return grid_; }

  std::span<double> values() { return data_; }
  std::span<const double> values() const { return data_; }

  std::span<double> component(int c) {
    return std::span<double>(data_).subspan(c * grid_.points(), grid_.points());
  }
  std::span<const double> component(int c) const {
    return std::span<const double>(data_).subspan(c * grid_.points(), grid_.points());
  }

  double& operator()(int c, int row, int col) { return data_[index(c, row, col)]; }
  double operator()(int c, int row, int col) const { return data_[index(c, row, col)]; }

  bool operator==(const GridArray&) const = default;

 private:
  std::size_t index(int c, int row, int col) const {
    return (static_cast<std::size_t>(c) * grid_.n + row) * grid_.n + col;
  }

  GridSpec grid_;
  std::vector<double> data_;
};

using RealField = GridArray<PhysicalSpace>;
using SpectralField = GridArray<CoefficientSpace>;

/// True when every entry is finite.
template <class Space>
bool all_finite(const GridArray<Space>& field);

/// Eigenvalues of the negative Neumann Laplacian on the DCT grid.
struct LaplacianSymbol {
  GridSpec grid;
  std::vector<double> k2;  // n x n, row-major

  double at(int m, int l) const { return k2[static_cast<std::size_t>(m) * grid.n + l]; }
};

}  // namespace mncs
