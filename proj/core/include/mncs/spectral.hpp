#pragma once

#include "mncs/grid.hpp"

namespace mncs {

// Orthonormal 2D DCT-II (forward) and DCT-III (inverse), applied separably
// per component. The cosine basis has zero normal derivative on the box
// edges, so it diagonalises the Neumann Laplacian.
//
// Normalisation matches scipy's norm='ortho': a constant field c has the
// single coefficient c * n at (0, 0), and Parseval holds exactly.

SpectralField dct2_forward(const RealField& field);
RealField dct2_inverse(const SpectralField& spec);

/// Allocation-free variants; `out` must already have the grid of the input.
void dct2_forward(const RealField& field, SpectralField& out);
void dct2_inverse(const SpectralField& spec, RealField& out);

/// k2[m][l] = (pi m / L)^2 + (pi l / L)^2; k2[0][0] is exactly zero.
LaplacianSymbol laplacian_symbol(const GridSpec& grid);

/// d * Laplacian(field) evaluated spectrally.
RealField apply_laplacian(const RealField& field, double d_coeff);

}  // namespace mncs
