#pragma once

#include <cstdint>
#include <vector>

#include "mncs/config.hpp"
#include "mncs/dimension.hpp"
#include "mncs/etd.hpp"

namespace mncs {

struct LyapunovOptions {
  int m = 2;                   // tangent vectors
  long window_steps = 10;      // steps between QR renormalisations
  long total_steps = 0;        // averaging horizon in steps (after the transient)
  long transient_steps = 0;    // steps evolved before the accumulators start
  std::uint64_t tangent_seed = 0x5EED;
};

struct Renormalization {
  std::vector<double> log_scales;  // log R_jj for the surviving vectors
  int collapsed_at = -1;           // first vector whose scale underflowed
};

/// Modified Gram-Schmidt on the tangent coefficient vectors under the flat
/// inner product. Each vector's stored nonlinear history (nu_prev) receives
/// the same linear combination, so the ETD2 extrapolation stays consistent.
/// A vector collapses when projection leaves less than 1e-12 of its norm;
/// vectors from `collapsed_at` on are dropped.
Renormalization renormalize(std::vector<SimState>& tangents);

/// Benettin-style spectrum of the m leading exponents. The tangent fields
/// follow w' = D Lap w + f'(u(t)) w + C w through the same ETD tables as
/// the base trajectory. When a tangent vector collapses the spectrum is
/// reduced to the surviving leading vectors (requested stays m).
LyapunovSpectrum lyapunov_spectrum(const RunConfig& config, const RealField& initial,
                                   const LyapunovOptions& options);

}  // namespace mncs
