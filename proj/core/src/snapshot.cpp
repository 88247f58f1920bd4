#include "mncs/snapshot.hpp"

#include <bit>
#include <cstdint>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace mncs {
namespace {

constexpr const char* kMagic = "MNCS1";

std::string format_real(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::uint64_t to_little_endian(std::uint64_t bits) {
  if constexpr (std::endian::native == std::endian::big) {
    return __builtin_bswap64(bits);
  } else {
    return bits;
  }
}

}  // namespace

std::string snapshot_header(const GridSpec& grid, double time) {
  return std::string(kMagic) + " " + std::to_string(grid.components) + " " + std::to_string(grid.n) +
         " " + format_real(grid.length) + " " + format_real(time) + "\n";
}

void write_snapshot(std::ostream& out, const RealField& field, double time) {
  const std::string header = snapshot_header(field.grid(), time);
  out.write(header.data(), static_cast<std::streamsize>(header.size()));
  for (double x : field.values()) {
    const std::uint64_t bits = to_little_endian(std::bit_cast<std::uint64_t>(x));
    char bytes[8];
    std::memcpy(bytes, &bits, 8);
    out.write(bytes, 8);
  }
  if (!out) throw std::runtime_error("snapshot: write failed");
}

void write_snapshot(const std::filesystem::path& path, const RealField& field, double time) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("snapshot: cannot open " + path.string() + " for writing");
  write_snapshot(out, field, time);
}

Snapshot read_snapshot(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw std::runtime_error("snapshot: missing header");
  std::istringstream header(line);
  std::string magic;
  GridSpec grid;
  double time = 0.0;
  if (!(header >> magic >> grid.components >> grid.n >> grid.length >> time) || magic != kMagic) {
    throw std::runtime_error("snapshot: malformed header '" + line + "'");
  }
  std::string trailing;
  if (header >> trailing) throw std::runtime_error("snapshot: trailing header tokens");
  try {
    grid.validate();
  } catch (const std::invalid_argument& e) {
    throw std::runtime_error(std::string("snapshot: ") + e.what());
  }

  Snapshot snap{RealField(grid), time};
  for (double& x : snap.field.values()) {
    char bytes[8];
    if (!in.read(bytes, 8)) throw std::runtime_error("snapshot: truncated payload");
    std::uint64_t bits = 0;
    std::memcpy(&bits, bytes, 8);
    x = std::bit_cast<double>(to_little_endian(bits));
  }
  if (in.peek() != std::char_traits<char>::eof()) {
    throw std::runtime_error("snapshot: payload longer than header declares");
  }
  return snap;
}

Snapshot read_snapshot(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("snapshot: cannot open " + path.string());
  return read_snapshot(in);
}

bool is_snapshot_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  char buf[5] = {};
  if (!in.read(buf, 5)) return false;
  return std::memcmp(buf, kMagic, 5) == 0;
}

}  // namespace mncs
