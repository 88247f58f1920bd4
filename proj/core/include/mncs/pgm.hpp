#pragma once

#include <filesystem>
#include <optional>
#include <utility>

#include "mncs/grid.hpp"

namespace mncs {

/// 16-bit binary PGM ("P5", maxval 65535, big-endian samples) of one
/// component. Values map linearly from `range` (default: the component's
/// own [min, max]) onto [0, 65535], clipped. A degenerate range [v, v]
/// becomes [v, v + 1]. Row 0 of the field is the first image row.
void export_pgm(const RealField& field, int component, const std::filesystem::path& path,
                std::optional<std::pair<double, double>> range = std::nullopt);

}  // namespace mncs
