#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "mncs/grid.hpp"

namespace mncs {

// MNCS1 field snapshot:
//
//   MNCS1 <components> <n> <L> <t>\n
//   components * n * n little-endian IEEE-754 doubles
//
// L and t are printed with 17 significant digits so the header round-trips.

struct Snapshot {
  RealField field;
  double time = 0.0;
};

std::string snapshot_header(const GridSpec& grid, double time);

void write_snapshot(std::ostream& out, const RealField& field, double time);
void write_snapshot(const std::filesystem::path& path, const RealField& field, double time);

/// Throws std::runtime_error on a malformed header, bad grid or short payload.
Snapshot read_snapshot(std::istream& in);
Snapshot read_snapshot(const std::filesystem::path& path);

/// True when the file starts with the MNCS1 magic.
bool is_snapshot_file(const std::filesystem::path& path);

}  // namespace mncs
