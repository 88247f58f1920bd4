#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"

namespace mncs {
namespace {

namespace fs = std::filesystem;

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "mncs");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / "mncs_cli_tests" /
           ::testing::UnitTest::GetInstance()->current_test_info()->name();
    fs::remove_all(dir_);
    fs::create_directories(dir_);
    write("small.conf", "n = 16\nlength = 8\nt_end = 1\nrecord_stride = 5\nnoise_sigma = 0.5\n");
  }

  fs::path write(const std::string& name, const std::string& text) {
    std::ofstream(dir_ / name) << text;
    return dir_ / name;
  }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  fs::path dir_;
};

TEST_F(CliTest, RequiresSubcommand) {
  EXPECT_EQ(invoke({}).code, cli::kConfigError);
  EXPECT_EQ(invoke({"launch"}).code, cli::kConfigError);
  EXPECT_EQ(invoke({"--help"}).code, cli::kOk);
}

TEST_F(CliTest, RunWritesOutputs) {
  const auto r = invoke({"--config", path("small.conf"), "--output-dir", path("out"), "run"});
  EXPECT_EQ(r.code, cli::kOk) << r.err;
  EXPECT_TRUE(fs::exists(dir_ / "out" / "series.csv"));
  EXPECT_TRUE(fs::exists(dir_ / "out" / "final.mncs"));
  EXPECT_NE(r.out.find("steps 20"), std::string::npos);
}

TEST_F(CliTest, OptionsAfterSubcommand) {
  const auto r = invoke({"run", "--config", path("small.conf"), "--output-dir", path("late"), "--quiet"});
  EXPECT_EQ(r.code, cli::kOk) << r.err;
  EXPECT_TRUE(r.out.empty());
  EXPECT_TRUE(fs::exists(dir_ / "late" / "run.txt"));
}

TEST_F(CliTest, ConfigErrors) {
  write("bad.conf", "n = 16\nbogus = 3\n");
  const auto r = invoke({"--config", path("bad.conf"), "run"});
  EXPECT_EQ(r.code, cli::kConfigError);
  EXPECT_NE(r.err.find("bogus"), std::string::npos);
  EXPECT_EQ(invoke({"--config", path("missing.conf"), "run"}).code, cli::kConfigError);
  EXPECT_EQ(invoke({"--config", path("small.conf"), "hopf", "--jacobian", "1,2,3"}).code, cli::kConfigError);
  EXPECT_EQ(invoke({"--config", path("small.conf"), "converge", "--dts", "0.1,0.05"}).code, cli::kConfigError);
}

TEST_F(CliTest, DivergenceIsNumericalFailure) {
  write("blowup.conf", "n = 16\nlength = 8\nkinetics = cubic\ndt = 1\nt_end = 50\nnoise_sigma = 10\n");
  const auto r = invoke({"--config", path("blowup.conf"), "--output-dir", path("x"), "run"});
  EXPECT_EQ(r.code, cli::kNumericalFailure);
  EXPECT_NE(r.err.find("numerical failure"), std::string::npos);
}

TEST_F(CliTest, PairAndCompare) {
  const auto r = invoke({"--config", path("small.conf"), "--output-dir", path("pair"), "pair", "--gamma", "6"});
  ASSERT_EQ(r.code, cli::kOk) << r.err;
  EXPECT_NE(r.out.find("control_final_variance_u"), std::string::npos);
  const auto chaos = path("pair/chaos/series.csv"), control = path("pair/control/series.csv");
  EXPECT_EQ(invoke({"compare", chaos, chaos, "--tol", "0"}).code, cli::kOk);
  EXPECT_EQ(invoke({"compare", chaos, control}).code, cli::kMismatch);
  EXPECT_EQ(invoke({"compare", path("pair/chaos/final.mncs"), chaos}).code, cli::kMismatch);
  EXPECT_EQ(invoke({"compare", path("nothing.csv"), chaos}).code, cli::kConfigError);
}

TEST_F(CliTest, CompareRelativeTolerance) {
  const auto a = write("a.csv", "t,x\n0,100\n1,200\n");
  const auto b = write("b.csv", "t,x\n0,100.5\n1,200\n");
  EXPECT_EQ(invoke({"compare", a.string(), b.string(), "--tol", "0.01"}).code, cli::kMismatch);
  EXPECT_EQ(invoke({"compare", a.string(), b.string(), "--tol", "0.01", "--relative"}).code, cli::kOk);
}

TEST_F(CliTest, SweepWritesTable) {
  const auto r = invoke({"--config", path("small.conf"), "--output-dir", path("sweep"), "sweep", "--gammas", "0,8"});
  ASSERT_EQ(r.code, cli::kOk) << r.err;
  std::ifstream in(dir_ / "sweep" / "sweep.csv");
  std::vector<std::string> lines;
  for (std::string line; std::getline(in, line);) lines.push_back(line);
  ASSERT_EQ(lines.size(), 3u);
  EXPECT_EQ(lines[1].substr(0, 2), "0,");
  EXPECT_EQ(lines[2].substr(0, 2), "8,");
  EXPECT_NE(r.out.find("threshold "), std::string::npos) << r.out;
  EXPECT_EQ(invoke({"--config", path("small.conf"), "sweep", "--gammas", "8,0"}).code, cli::kConfigError);
}

TEST_F(CliTest, BoundAndHopf) {
  auto r = invoke({"--gamma", "6", "bound", "--ka", "7"});
  ASSERT_EQ(r.code, cli::kOk) << r.err;
  EXPECT_NE(r.out.find("dimension_bound 4096"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("trace(1) 1 "), std::string::npos) << r.out;
  r = invoke({"--gamma", "6", "hopf"});
  EXPECT_EQ(r.code, cli::kOk);
  EXPECT_NE(r.out.find("bound holds"), std::string::npos);
  EXPECT_EQ(invoke({"hopf", "--jacobian", "0,1,-1,0"}).code, cli::kOk);
}

TEST_F(CliTest, LyapunovAndConverge) {
  auto r = invoke({"--config", path("small.conf"), "--gamma", "6", "lyapunov", "--m", "2", "--steps", "100"});
  ASSERT_EQ(r.code, cli::kOk) << r.err;
  EXPECT_NE(r.out.find("kaplan_yorke 0"), std::string::npos) << r.out;
  r = invoke({"--config", path("small.conf"), "converge", "--dts", "0.1,0.05,0.025"});
  ASSERT_EQ(r.code, cli::kOk) << r.err;
  EXPECT_NE(r.out.find("order "), std::string::npos);
}

TEST_F(CliTest, Version) {
  const auto r = invoke({"--version"});
  EXPECT_EQ(r.code, cli::kOk);
  EXPECT_FALSE(r.out.empty());
}

}  // namespace
}  // namespace mncs
