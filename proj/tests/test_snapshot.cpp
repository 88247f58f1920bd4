#include <gtest/gtest.h>

#include <cstring>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "mncs/snapshot.hpp"
#include "oracles.hpp"

namespace mncs {
namespace {

std::filesystem::path scratch(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / "mncs_snapshot_tests";
  std::filesystem::create_directories(dir);
  return dir / name;
}

TEST(Snapshot, HeaderText) {
  EXPECT_EQ(snapshot_header(GridSpec{128, 64.0, 2}, 100.0), "MNCS1 2 128 64 100\n");
  EXPECT_EQ(snapshot_header(GridSpec{4, 0.1, 1}, 0.05), "MNCS1 1 4 0.10000000000000001 0.050000000000000003\n");
}

TEST(Snapshot, PayloadIsLittleEndianDoubles) {
  RealField f(GridSpec{4, 1.0, 1});
  f(0, 0, 0) = 1.0;
  f(0, 0, 1) = -2.5;
  std::ostringstream out;
  write_snapshot(out, f, 0.0);
  const std::string bytes = out.str();
  const std::string header = snapshot_header(f.grid(), 0.0);
  ASSERT_EQ(bytes.size(), header.size() + 16 * 8);
  EXPECT_EQ(bytes.substr(0, header.size()), header);
  // 1.0 = 0x3FF0000000000000, -2.5 = 0xC004000000000000
  const unsigned char one[8] = {0, 0, 0, 0, 0, 0, 0xF0, 0x3F};
  const unsigned char m25[8] = {0, 0, 0, 0, 0, 0, 0x04, 0xC0};
  EXPECT_EQ(std::memcmp(bytes.data() + header.size(), one, 8), 0);
  EXPECT_EQ(std::memcmp(bytes.data() + header.size() + 8, m25, 8), 0);
}

TEST(Snapshot, BitExactRoundTrip) {
  const GridSpec g{16, 3.7, 2};
  auto f = oracle::random_field(g, 77, 5.0);
  f(1, 2, 3) = -0.0;
  f(0, 5, 5) = 1e-310;
  const auto path = scratch("roundtrip.mncs");
  write_snapshot(path, f, 12.345);
  const Snapshot s = read_snapshot(path);
  EXPECT_EQ(s.field.grid(), g);
  EXPECT_EQ(s.time, 12.345);
  ASSERT_EQ(s.field.values().size(), f.values().size());
  EXPECT_EQ(std::memcmp(s.field.values().data(), f.values().data(), f.values().size() * sizeof(double)), 0);
  EXPECT_TRUE(is_snapshot_file(path));
}

TEST(Snapshot, RejectsMalformedInput) {
  auto parse = [](const std::string& text) {
    std::istringstream in(text);
    return read_snapshot(in);
  };
  EXPECT_THROW(parse("MNCS2 1 4 1 0\n"), std::runtime_error);
  EXPECT_THROW(parse("MNCS1 1 4 1\n"), std::runtime_error);
  EXPECT_THROW(parse("MNCS1 0 4 1 0\n"), std::runtime_error);
  EXPECT_THROW(parse("MNCS1 1 3 1 0\n"), std::runtime_error);
  EXPECT_THROW(parse("MNCS1 1 4 -1 0\n"), std::runtime_error);
  EXPECT_THROW(parse("MNCS1 1 4 1 0\n" + std::string(15 * 8, '\0')), std::runtime_error);
  EXPECT_THROW(parse("MNCS1 1 4 1 0\n" + std::string(17 * 8, '\0')), std::runtime_error);
  EXPECT_NO_THROW(parse("MNCS1 1 4 1 0\n" + std::string(16 * 8, '\0')));
}

TEST(Snapshot, DetectsNonSnapshotFiles) {
  const auto path = scratch("table.csv");
  std::ofstream(path) << "t,var_u\n0,1\n";
  EXPECT_FALSE(is_snapshot_file(path));
  EXPECT_FALSE(is_snapshot_file(scratch("missing.mncs")));
  EXPECT_THROW(read_snapshot(scratch("missing.mncs")), std::runtime_error);
}

}  // namespace
}  // namespace mncs
