// Copyright 2026 The actionconv Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "actionconv/harness.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <memory>
#include <sstream>
#include <stdexcept>
#include <string>

#include <gtest/gtest.h>

#include "actionconv/limits.hpp"

namespace actionconv {
namespace {

namespace fs = std::filesystem;

fs::path TempDir(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("actionconv_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

std::string Slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

TEST(SpecParsingTest, Graphs) {
  EXPECT_EQ(ParseGraphSpec("star:100").kind, GraphKind::kStar);
  EXPECT_EQ(ParseGraphSpec(" cycle:5 ").n, 5u);
  const GraphSpec er = ParseGraphSpec("er:10:0.5:3");
  EXPECT_EQ(er.kind, GraphKind::kErdosRenyi);
  EXPECT_EQ(er.edge_probability, 0.5);
  EXPECT_EQ(er.seed, 3u);
  EXPECT_THROW(ParseGraphSpec("star"), std::invalid_argument);
  EXPECT_THROW(ParseGraphSpec("star:-1"), std::invalid_argument);
  EXPECT_THROW(ParseGraphSpec("wheel:5"), std::invalid_argument);
  EXPECT_THROW(ParseGraphSpec("er:10:0.5"), std::invalid_argument);

  const fs::path dir = TempDir("edgelist");
  std::ofstream(dir / "g.txt") << "0 1\n1 2\n";
  EXPECT_EQ(ParseGraphSpec("edgelist:" + (dir / "g.txt").string()).n, 3u);
}

TEST(SpecParsingTest, Operators) {
  EXPECT_EQ(ParseOperatorSpec("broadcast:6:2").matrix(), Broadcast(6, 2).matrix());
  EXPECT_EQ(ParseOperatorSpec("broadcast:6").matrix(), Broadcast(6, 0).matrix());
  EXPECT_EQ(ParseOperatorSpec("gplus:cycle:5").n(), 6u);
  EXPECT_EQ(ParseOperatorSpec("minus:0:cycle:9").matrix(),
            SignedLimit(Adjacency(GraphSpec::Cycle(9)), 0, Sign::kMinus).matrix());
  EXPECT_EQ(ParseOperatorSpec("plus:1:broadcast:4").at(0, 1), 1.0);
  EXPECT_EQ(ParseOperatorSpec("star:7").id(), "star:7");

  const fs::path dir = TempDir("opjson");
  std::ofstream(dir / "op.json") << ToJson(Broadcast(5, 1)).dump();
  EXPECT_EQ(ParseOperatorSpec("json:" + (dir / "op.json").string()).matrix(),
            Broadcast(5, 1).matrix());
  EXPECT_THROW(ParseOperatorSpec("plus:9:cycle:4"), std::out_of_range);
  EXPECT_THROW(ParseOperatorSpec("json:/nonexistent.json"), std::runtime_error);
}

TEST(ConfigTest, ParseAndOverride) {
  const ExperimentConfig cfg = ParseConfig(
      "# trajectory\nexperiment = gplus_signed\nsizes=8, 16\nK=2\n\ncount=10\n"
      "seed=3\nsign=-1\nbase=path\nkind=rademacher\nout=/tmp/x\n");
  EXPECT_EQ(cfg.experiment, "gplus_signed");
  EXPECT_EQ(cfg.sizes, (std::vector<std::size_t>{8, 16}));
  EXPECT_EQ(cfg.truncation, 2u);
  EXPECT_EQ(cfg.count, 10u);
  EXPECT_EQ(cfg.seed, 3u);
  EXPECT_EQ(cfg.sign, -1);
  EXPECT_EQ(cfg.base, "path");
  EXPECT_EQ(cfg.kind, StrategyKind::kRademacher);
  std::string text;
  for (const auto& [key, value] : cfg.ToMap()) text += key + "=" + value + "\n";
  EXPECT_EQ(ParseConfig(text).ToMap(), cfg.ToMap());

  ExperimentConfig c;
  EXPECT_THROW(c.Set("colour", "red"), std::invalid_argument);
  EXPECT_THROW(c.Set("experiment", "nope"), std::invalid_argument);
  EXPECT_THROW(c.Set("K", "0"), std::invalid_argument);
  EXPECT_THROW(c.Set("sizes", ""), std::invalid_argument);
  EXPECT_THROW(ParseConfig("no equals sign"), std::invalid_argument);
  EXPECT_THROW(LoadConfig("/nonexistent.cfg"), std::runtime_error);
}

TEST(ExperimentTest, StarTrajectoryOneRowPerSizeAndReplayStable) {
  ExperimentConfig cfg;
  cfg.sizes = {8, 16, 32};
  cfg.count = 8;
  cfg.out = TempDir("exp_a");
  const auto files = RunExperiment(cfg);
  const std::string csv = Slurp(cfg.out / "trajectory.csv");
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 4);
  EXPECT_TRUE(fs::exists(cfg.out / "manifest.json"));
  EXPECT_TRUE(fs::exists(cfg.out / "report_n16.json"));
  EXPECT_EQ(files.size(), 5u);

  const fs::path first = cfg.out;
  cfg.out = TempDir("exp_b");
  RunExperiment(cfg);
  for (const char* name : {"trajectory.csv", "report_n8.json", "report_n32.json"}) {
    EXPECT_EQ(Slurp(first / name), Slurp(cfg.out / name)) << name;
  }
}

TEST(ExperimentTest, GPlusTrajectoryDecreases) {
  ExperimentConfig cfg;
  cfg.experiment = "gplus_signed";
  cfg.sizes = {8, 32, 128};
  const auto rows = ComputeTrajectory(cfg);
  ASSERT_EQ(rows.size(), 3u);
  EXPECT_GT(rows[0].report.value, rows[1].report.value);
  EXPECT_GT(rows[1].report.value, rows[2].report.value);
  EXPECT_EQ(rows[2].operator_b, "plus:0:cycle:129");
  EXPECT_EQ(rows[0].norm_inf1_b, 3.0);
}

TEST(VerifyTest, NormsSuitePasses) {
  const auto records = RunVerify("norms");
  EXPECT_TRUE(AllPassed(records));
  std::size_t star_records = 0;
  for (const auto& r : records) {
    EXPECT_TRUE(r.pass) << r.id;
    star_records += r.id.find("star_inf1") != std::string::npos;
  }
  EXPECT_EQ(star_records, 4u);
}

TEST(VerifyTest, EmptyOracleSuiteIsVacuousPassWithWarning) {
  VerifyOptions opt;
  opt.lp_oracle_cases = 0;
  const auto records = RunVerify("lp_oracle", opt);
  ASSERT_EQ(records.size(), 1u);
  EXPECT_TRUE(records[0].pass);
  EXPECT_FALSE(records[0].warning.empty());
}

TEST(VerifyTest, AllSuitesProduceSortedRecordsWithRegisteredAnchors) {
  VerifyOptions opt;
  opt.lp_oracle_cases = 20;
  opt.lp_metric_cases = 20;
  opt.gplus_shift_graphs = 5;
  opt.adjoint_cases = 5;
  opt.count = 16;
  const auto records = RunVerify("all", opt);
  EXPECT_GE(records.size(), 12u);
  EXPECT_TRUE(std::is_sorted(records.begin(), records.end(),
                             [](const auto& a, const auto& b) { return a.id < b.id; }));
  const auto anchors = Anchors();
  for (const auto& r : records) {
    EXPECT_NE(std::find(anchors.begin(), anchors.end(), r.anchor), anchors.end())
        << r.id;
    const nlohmann::json j = ToJson(r);
    for (const char* key : {"id", "anchor", "expected", "measured", "pass", "ms"}) {
      EXPECT_TRUE(j.contains(key)) << key;
    }
  }
  std::vector<std::string> suites;
  for (const auto& r : records) {
    const std::string prefix = r.id.substr(0, 4);
    if (suites.empty() || suites.back() != prefix) suites.push_back(prefix);
  }
  EXPECT_EQ(suites.size(), SuiteNames().size());
}

TEST(VerifyTest, TimeGuardReportsSkip) {
  VerifyOptions opt;
  opt.time_guard_seconds = 0.0;
  const auto records = RunVerify("lp_metric", opt);
  for (const auto& r : records) {
    EXPECT_TRUE(r.skipped);
    EXPECT_TRUE(ToJson(r)["pass"].is_null());
  }
  EXPECT_TRUE(AllPassed(records));
}

TEST(VerifyTest, UnknownSuite) {
  EXPECT_THROW(RunVerify("no_such_suite"), std::invalid_argument);
}

TEST(VerifyTest, FailedRecordFailsTheRun) {
  VerificationRecord ok, bad;
  ok.pass = true;
  std::vector<VerificationRecord> v = {ok, bad};
  EXPECT_FALSE(AllPassed(v));
}

// --- command-line binary ------------------------------------------------------

struct CliResult {
  int status;
  std::string out;
};

CliResult RunCli(const std::string& args) {
  const std::string cmd = std::string(ACTIONCONV_CLI) + " " + args + " 2>/dev/null";
  std::unique_ptr<FILE, int (*)(FILE*)> pipe(popen(cmd.c_str(), "r"), pclose);
  std::string out;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof(buf), pipe.get())) > 0) out.append(buf, got);
  const int status = pclose(pipe.release());
  return {WEXITSTATUS(status), out};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    if (std::string(ACTIONCONV_CLI).empty()) GTEST_SKIP() << "CLI not built";
  }
};

TEST_F(CliTest, VerifyJsonLines) {
  const CliResult r = RunCli("verify self_adjoint --json");
  EXPECT_EQ(r.status, 0);
  std::istringstream lines(r.out);
  std::string line;
  int count = 0;
  while (std::getline(lines, line)) {
    const auto j = nlohmann::json::parse(line);
    EXPECT_EQ(j["pass"], true);
    ++count;
  }
  EXPECT_EQ(count, 3);
  EXPECT_EQ(RunCli("verify bogus").status, 2);
}

TEST_F(CliTest, ProfileThenDistances) {
  const fs::path dir = TempDir("cli");
  const std::string a = (dir / "a").string(), b = (dir / "b").string();
  ASSERT_EQ(RunCli("profile --graph star:20 -k 2 --count 4 --seed 7 --out " + a).status, 0);
  ASSERT_EQ(RunCli("--seed 7 profile --graph broadcast:20:0 -k 2 --count 4 --out " + b).status, 0);
  const auto manifest = nlohmann::json::parse(Slurp(dir / "a" / "manifest.json"));
  EXPECT_EQ(manifest["files"].size(), 6u);

  const CliResult lp = RunCli("--json dist lp " + a + "/measure_0000.json " + b +
                              "/measure_0000.json");
  ASSERT_EQ(lp.status, 0);
  const auto j = nlohmann::json::parse(lp.out);
  EXPECT_EQ(j["method"], "exact_flow");
  EXPECT_EQ(j["value"], 0.05);  // only the center's atom differs

  const CliResult h = RunCli("--json dist hausdorff " + a + " " + b);
  ASSERT_EQ(h.status, 0);
  EXPECT_LE(nlohmann::json::parse(h.out)["value"].get<double>(), 1.0);
}

TEST_F(CliTest, LimitOutputFeedsActionDistance) {
  const fs::path dir = TempDir("cli_limit");
  const std::string op = (dir / "b.json").string();
  ASSERT_EQ(RunCli("limit broadcast --n 16 --i 0 --out " + op).status, 0);
  const CliResult r = RunCli("--json --seed 7 actiondist --a star:16 --b json:" + op +
                             " -K 2 --count 8 --probe-a 0 --probe-b 0");
  ASSERT_EQ(r.status, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["truncation_k"], 2);
  EXPECT_LE(j["value"].get<double>(), 0.75);

  const CliResult s = RunCli("--json limit signed --graph cycle:6 --i 0 --sign -1");
  ASSERT_EQ(s.status, 0);
  EXPECT_EQ(nlohmann::json::parse(s.out)["matrix"][2][0], -1.0);
}

TEST_F(CliTest, ExperimentWritesCsv) {
  const fs::path dir = TempDir("cli_exp");
  const CliResult r = RunCli("--out " + dir.string() +
                             " experiment --set sizes=8,16 --set count=4");
  ASSERT_EQ(r.status, 0);
  EXPECT_TRUE(fs::exists(dir / "trajectory.csv"));
}

}  // namespace
}  // namespace actionconv
