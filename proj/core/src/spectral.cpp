#include "mncs/spectral.hpp"

#include <fftw3.h>

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <vector>

namespace mncs {
namespace {

// FFTW's REDFT10 / REDFT01 pair with the orthonormal weights folded in.
// Plans are created once per size under a lock (FFTW planning is not
// thread-safe); executing a plan on caller arrays is.
class CosineTransform2d {
 public:
  explicit CosineTransform2d(int n) : n_(n), weight_(n), inverse_weight_(n) {
    const std::size_t count = static_cast<std::size_t>(n) * n;
    double* a = fftw_alloc_real(count);
    double* b = fftw_alloc_real(count);
    const unsigned flags = FFTW_ESTIMATE | FFTW_UNALIGNED;
    forward_ = fftw_plan_r2r_2d(n, n, a, b, FFTW_REDFT10, FFTW_REDFT10, flags);
    inverse_ = fftw_plan_r2r_2d(n, n, a, b, FFTW_REDFT01, FFTW_REDFT01, flags);
    fftw_free(a);
    fftw_free(b);
    if (forward_ == nullptr || inverse_ == nullptr) {
      throw std::runtime_error("fftw: failed to plan cosine transform");
    }
    // REDFT10 returns 2 * sum(...); the ortho scale is sqrt(1/(4n)) for
    // k = 0 and sqrt(1/(2n)) otherwise. REDFT01 expects X_0 + 2 sum X_k.
    for (int k = 0; k < n; ++k) {
      weight_[k] = k == 0 ? std::sqrt(1.0 / (4.0 * n)) : std::sqrt(1.0 / (2.0 * n));
      inverse_weight_[k] = k == 0 ? std::sqrt(1.0 / n) : std::sqrt(1.0 / (2.0 * n));
    }
  }

  CosineTransform2d(const CosineTransform2d&) = delete;
  CosineTransform2d& operator=(const CosineTransform2d&) = delete;

  ~CosineTransform2d() {
    fftw_destroy_plan(forward_);
    fftw_destroy_plan(inverse_);
  }

  void forward(std::span<const double> in, std::span<double> out) const {
    // Out-of-place r2r preserves its input.
    fftw_execute_r2r(forward_, const_cast<double*>(in.data()), out.data());
    for (int i = 0; i < n_; ++i) {
      for (int j = 0; j < n_; ++j) out[i * n_ + j] *= weight_[i] * weight_[j];
    }
  }

  void inverse(std::span<const double> in, std::span<double> out) const {
    thread_local std::vector<double> scratch;
    scratch.resize(in.size());
    for (int i = 0; i < n_; ++i) {
      for (int j = 0; j < n_; ++j) {
        scratch[i * n_ + j] = in[i * n_ + j] * inverse_weight_[i] * inverse_weight_[j];
      }
    }
    fftw_execute_r2r(inverse_, scratch.data(), out.data());
  }

 private:
  int n_;
  std::vector<double> weight_;
  std::vector<double> inverse_weight_;
  fftw_plan forward_ = nullptr;
  fftw_plan inverse_ = nullptr;
};

const CosineTransform2d& transform_for(int n) {
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<CosineTransform2d>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[n];
  if (!slot) slot = std::make_unique<CosineTransform2d>(n);
  return *slot;
}

void require_same_grid(const GridSpec& a, const GridSpec& b) {
  if (!(a == b)) throw std::invalid_argument("spectral: output grid does not match input grid");
}

}  // namespace

void dct2_forward(const RealField& field, SpectralField& out) {
  require_same_grid(field.grid(), out.grid());
  const auto& t = transform_for(field.grid().n);
  for (int c = 0; c < field.grid().components; ++c) t.forward(field.component(c), out.component(c));
}

void dct2_inverse(const SpectralField& spec, RealField& out) {
  require_same_grid(spec.grid(), out.grid());
  const auto& t = transform_for(spec.grid().n);
  for (int c = 0; c < spec.grid().components; ++c) t.inverse(spec.component(c), out.component(c));
}

SpectralField dct2_forward(const RealField& field) {
  SpectralField out(field.grid());
  dct2_forward(field, out);
  return out;
}

RealField dct2_inverse(const SpectralField& spec) {
  RealField out(spec.grid());
  dct2_inverse(spec, out);
  return out;
}

LaplacianSymbol laplacian_symbol(const GridSpec& grid) {
  grid.validate();
  LaplacianSymbol symbol{grid, std::vector<double>(grid.points())};
  for (int m = 0; m < grid.n; ++m) {
    const double km = grid.wavenumber(m);
    for (int l = 0; l < grid.n; ++l) {
      const double kl = grid.wavenumber(l);
      symbol.k2[static_cast<std::size_t>(m) * grid.n + l] = km * km + kl * kl;
    }
  }
  return symbol;
}

RealField apply_laplacian(const RealField& field, double d_coeff) {
  if (d_coeff < 0.0) throw std::invalid_argument("apply_laplacian: diffusion must be >= 0");
  const auto symbol = laplacian_symbol(field.grid());
  SpectralField spec = dct2_forward(field);
  for (int c = 0; c < field.grid().components; ++c) {
    auto coeffs = spec.component(c);
    for (std::size_t i = 0; i < coeffs.size(); ++i) coeffs[i] *= -d_coeff * symbol.k2[i];
  }
  return dct2_inverse(spec);
}

}  // namespace mncs
