#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"

#include "commands.hpp"

namespace fs = std::filesystem;
using lifetrace::cli::kExitError;
using lifetrace::cli::kExitFails;
using lifetrace::cli::kExitHolds;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = lifetrace::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("lifetrace_cli_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) +
                                        "_" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string file(const std::string& name, const std::string& contents) {
    const fs::path p = dir_ / name;
    std::ofstream(p) << contents;
    return p.string();
  }

  fs::path dir_;
};

const char* kGlider = ".O.\n..O\nOOO\n";

}  // namespace

TEST_F(CliTest, UsageErrors) {
  EXPECT_EQ(run({}).code, kExitError);
  EXPECT_EQ(run({"no-such-command"}).code, kExitError);
  EXPECT_EQ(run({"is-goe"}).code, kExitError);
  EXPECT_EQ(run({"is-goe", (dir_ / "missing.txt").string()}).code, kExitError);
  EXPECT_EQ(run({"--rule", "B9/S", "is-goe", file("g.txt", kGlider)}).code, kExitError);
  EXPECT_EQ(run({"decode", "111"}).code, kExitError);
  EXPECT_EQ(run({"--help"}).code, kExitHolds);
}

TEST_F(CliTest, GliderIsNotGardenOfEden) {
  const Result r = run({"is-goe", file("g.txt", kGlider)});
  ASSERT_EQ(r.code, kExitHolds) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["verdict"], "SAT");
  EXPECT_EQ(j["answer"], "not GoE");
  EXPECT_EQ(j["pad"], 4);
  EXPECT_EQ(j["witness"]["width"], 13);
}

TEST_F(CliTest, OrphanUnderTinyBudgetIsAResourceError) {
  const Result r = run({"--budget-nodes", "5", "is-orphan", file("g.txt", kGlider)});
  EXPECT_EQ(r.code, kExitError);
  EXPECT_EQ(nlohmann::json::parse(r.out)["verdict"], "INDETERMINATE");
}

TEST_F(CliTest, OrphanUnderZeroRule) {
  const Result r = run({"--rule", "zero", "is-orphan", file("g.txt", kGlider)});
  EXPECT_EQ(r.code, kExitFails);
  EXPECT_EQ(nlohmann::json::parse(r.out)["verdict"], "UNSAT");
}

TEST_F(CliTest, ZeroPatternIsNotGardenOfEden) {
  const Result r = run({"is-goe", file("z.txt", "...\n...\n")});
  ASSERT_EQ(r.code, kExitHolds) << r.err;
  EXPECT_EQ(nlohmann::json::parse(r.out)["answer"], "not GoE");
}

TEST_F(CliTest, EncodeDecode) {
  Result r = run({"encode", file("g.txt", kGlider)});
  ASSERT_EQ(r.code, kExitHolds) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["word"], "010111001010");
  r = run({"decode", "010111001010"});
  ASSERT_EQ(r.code, kExitHolds) << r.err;
  EXPECT_EQ(r.out, kGlider);
  r = run({"encode", "--order", "column", file("g.txt", kGlider)});
  EXPECT_EQ(nlohmann::json::parse(r.out)["word"], "010100101110");
}

TEST_F(CliTest, Dimacs) {
  const Result r = run({"to-dimacs", file("g.txt", kGlider)});
  ASSERT_EQ(r.code, kExitHolds) << r.err;
  EXPECT_NE(r.out.find("p cnf 25 2420"), std::string::npos);
}

TEST_F(CliTest, FindPreimageWritesOutput) {
  const std::string out = (dir_ / "pre.json").string();
  const Result r = run({"--output", out, "find-preimage", file("g.txt", kGlider)});
  ASSERT_EQ(r.code, kExitHolds) << r.err;
  std::ifstream in(out);
  const auto j = nlohmann::json::parse(in);
  EXPECT_EQ(j["verdict"], "SAT");
}

TEST_F(CliTest, PeriodizeAndRender) {
  const Result r = run({"periodize", file("g.txt", kGlider)});
  ASSERT_EQ(r.code, kExitHolds) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_TRUE(j["certificate"]["verified"].get<bool>());
  const Result shown = run({"render", file("per.json", r.out), "--view", "8"});
  ASSERT_EQ(shown.code, kExitHolds) << shown.err;
  EXPECT_NE(shown.out.find('+'), std::string::npos);
}

TEST_F(CliTest, RepeatedRunsAreByteIdentical) {
  const std::string g = file("g.txt", kGlider);
  for (const std::vector<std::string>& args :
       {std::vector<std::string>{"is-goe", g}, {"periodize", g}, {"find-preimage", g, "--pad", "1"}}) {
    const Result a = run(args), b = run(args);
    EXPECT_EQ(a.code, b.code);
    EXPECT_EQ(a.out, b.out);
  }
  EXPECT_EQ(run({"--threads", "2", "is-goe", g}).out, run({"is-goe", g}).out);
}

TEST_F(CliTest, TraceReportForSimpleRule) {
  const std::string out = (dir_ / "c.json").string();
  const Result r = run({"--rule", "zero", "--output", out, "trace-report"});
  ASSERT_EQ(r.code, kExitHolds) << r.err;
  std::ifstream in(out);
  const auto j = nlohmann::json::parse(in);
  EXPECT_EQ(j["p"], 1);
  // The written constants drive later commands for the same rule.
  const Result g = run({"--rule", "zero", "--constants", out, "is-goe", file("g.txt", kGlider)});
  EXPECT_EQ(g.code, kExitFails) << g.err;
}
