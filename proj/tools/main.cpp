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

// Command-line front end: verification suite, profiles, distances, limit
// operators and experiment trajectories.

#include <algorithm>
#include <cstdint>
#include <exception>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "actionconv/harness.hpp"
#include "actionconv/limits.hpp"
#include "actionconv/lp_metric.hpp"
#include "actionconv/measures.hpp"
#include "actionconv/operators.hpp"
#include "actionconv/profiles.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace actionconv {
namespace {

struct GlobalFlags {
  std::optional<std::uint64_t> seed;
  std::string out;
  bool json = false;
};

json ReadJson(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path.string() + "'");
  return json::parse(in);
}

void WriteText(const fs::path& path, const std::string& text) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path.string() + "'");
  out << text;
}

// --json selects compact single-line output; otherwise pretty-printed.
// With --out the document goes to that file instead of stdout.
void Emit(const GlobalFlags& g, const json& doc) {
  const std::string text = (g.json ? doc.dump() : doc.dump(2)) + "\n";
  if (g.out.empty()) {
    std::cout << text;
  } else {
    WriteText(g.out, text);
  }
}

// Measure files of a profile directory in name order; the manifest is skipped.
std::vector<DiscreteMeasure> LoadMeasureDir(const fs::path& dir) {
  if (!fs::is_directory(dir)) {
    throw std::runtime_error("'" + dir.string() + "' is not a directory");
  }
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir)) {
    const fs::path& p = entry.path();
    if (entry.is_regular_file() && p.extension() == ".json" &&
        p.filename() != "manifest.json") {
      files.push_back(p);
    }
  }
  std::sort(files.begin(), files.end());
  std::vector<DiscreteMeasure> out;
  out.reserve(files.size());
  for (const fs::path& p : files) out.push_back(MeasureFromJson(ReadJson(p)));
  return out;
}

TestFunctionStrategy MakeStrategy(const std::string& kind, std::size_t count,
                                  std::uint64_t seed,
                                  std::optional<std::size_t> probe) {
  TestFunctionStrategy s;
  s.kind = ParseStrategyKind(kind);
  s.count = count;
  s.seed = seed;
  s.probe_vertex = probe;
  return s;
}

int RunVerifyCommand(const GlobalFlags& g, const std::string& suite,
                     VerifyOptions options, bool list) {
  if (list) {
    for (const std::string& name : SuiteNames()) std::cout << name << "\n";
    return 0;
  }
  if (g.seed) options.seed = *g.seed;
  const std::vector<VerificationRecord> records = RunVerify(suite, options);
  std::ostringstream lines;
  for (const VerificationRecord& r : records) lines << ToJson(r).dump() << "\n";
  if (!g.out.empty()) WriteText(g.out, lines.str());
  if (g.json) {
    std::cout << lines.str();
  } else {
    for (const VerificationRecord& r : records) {
      const char* status = r.skipped ? "SKIP" : (r.pass ? "PASS" : "FAIL");
      std::cout << status << "  " << r.id << "  measured=" << r.measured.dump()
                << "  expected: " << r.expected;
      if (!r.warning.empty()) std::cout << "  [" << r.warning << "]";
      std::cout << "\n";
    }
  }
  return AllPassed(records) ? 0 : 1;
}

}  // namespace
}  // namespace actionconv

int main(int argc, char** argv) {
  using namespace actionconv;
  CLI::App app{"actionconv: action convergence of graph operators"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalFlags g;
  app.add_option("--seed", g.seed, "Seed for every random choice");
  app.add_option("--out", g.out, "Output file or directory");
  app.add_flag("--json", g.json, "Machine-readable output");

  // verify
  auto* verify = app.add_subcommand("verify", "Run verification suites");
  std::string suite = "all";
  bool list_suites = false;
  VerifyOptions vopt;
  verify->add_option("suite", suite, "Suite name or 'all'");
  verify->add_flag("--list", list_suites, "List suite names");
  verify->add_option("--lp-oracle-cases", vopt.lp_oracle_cases);
  verify->add_option("--lp-metric-cases", vopt.lp_metric_cases);
  verify->add_option("--gplus-graphs", vopt.gplus_shift_graphs);
  verify->add_option("--adjoint-cases", vopt.adjoint_cases);
  verify->add_option("--time-guard", vopt.time_guard_seconds, "Seconds per suite");

  // profile
  auto* profile = app.add_subcommand("profile", "Sample a k-profile");
  std::string graph;
  std::size_t k = 1;
  std::size_t count = kDefaultTupleCount;
  std::string kind = "mixed";
  std::optional<std::size_t> probe;
  profile->add_option("--graph", graph, "Graph or operator spec")->required();
  profile->add_option("-k", k, "Tuple size")->check(CLI::PositiveNumber);
  profile->add_option("--count", count, "Random tuples");
  profile->add_option("--kind", kind, "Test-function strategy");
  profile->add_option("--probe", probe, "Vertex receiving the probe value");

  // dist
  auto* dist = app.add_subcommand("dist", "Distances between measures");
  dist->require_subcommand(1);
  auto* dist_lp = dist->add_subcommand("lp", "Levy-Prokhorov distance");
  std::string file_a, file_b;
  dist_lp->add_option("a", file_a)->required()->check(CLI::ExistingFile);
  dist_lp->add_option("b", file_b)->required()->check(CLI::ExistingFile);
  auto* dist_h = dist->add_subcommand("hausdorff", "Hausdorff distance of measure sets");
  std::string dir_a, dir_b;
  dist_h->add_option("a", dir_a)->required()->check(CLI::ExistingDirectory);
  dist_h->add_option("b", dir_b)->required()->check(CLI::ExistingDirectory);

  // actiondist
  auto* actiondist = app.add_subcommand("actiondist", "Estimate the action distance");
  std::string op_a, op_b;
  std::size_t truncation = kDefaultTruncation;
  std::optional<std::size_t> probe_a, probe_b;
  actiondist->add_option("--a", op_a)->required();
  actiondist->add_option("--b", op_b)->required();
  actiondist->add_option("-K", truncation, "Largest k")->check(CLI::PositiveNumber);
  actiondist->add_option("--count", count);
  actiondist->add_option("--kind", kind);
  actiondist->add_option("--probe-a", probe_a);
  actiondist->add_option("--probe-b", probe_b);

  // limit
  auto* limit = app.add_subcommand("limit", "Emit limit operators as JSON");
  limit->require_subcommand(1);
  auto* broadcast = limit->add_subcommand("broadcast", "Broadcast operator");
  std::size_t n = 0, vertex = 0;
  broadcast->add_option("--n", n)->required();
  broadcast->add_option("--i", vertex);
  auto* signed_limit = limit->add_subcommand("signed", "A plus/minus broadcast");
  int sign = 1;
  signed_limit->add_option("--graph", graph)->required();
  signed_limit->add_option("--i", vertex);
  signed_limit->add_option("--sign", sign)->check(CLI::IsMember({-1, 1}));

  // experiment
  auto* experiment = app.add_subcommand("experiment", "Run a trajectory experiment");
  std::string config_path;
  std::vector<std::string> overrides;
  experiment->add_option("--config", config_path, "key=value file")
      ->check(CLI::ExistingFile);
  experiment->add_option("--set", overrides, "key=value override (repeatable)");

  CLI11_PARSE(app, argc, argv);

  try {
    const std::uint64_t seed = g.seed.value_or(0);
    if (*verify) return RunVerifyCommand(g, suite, vopt, list_suites);

    if (*profile) {
      const WeightedOperator a = ParseOperatorSpec(graph);
      const ProfileSample sample =
          SampleProfile(a, k, MakeStrategy(kind, count, seed, probe));
      const fs::path dir = g.out.empty() ? fs::path("profile_out") : fs::path(g.out);
      fs::create_directories(dir);
      json files = json::array();
      for (std::size_t i = 0; i < sample.measures.size(); ++i) {
        char name[32];
        std::snprintf(name, sizeof(name), "measure_%04zu.json", i);
        WriteText(dir / name, ToJson(sample.measures[i]).dump() + "\n");
        files.push_back(name);
      }
      const json manifest = {{"operator", sample.operator_id},
                             {"spec", graph},
                             {"k", sample.k},
                             {"strategy", sample.strategy.Fingerprint()},
                             {"files", files}};
      WriteText(dir / "manifest.json", manifest.dump(2) + "\n");
      std::cout << (g.json ? manifest.dump() : manifest.dump(2)) << "\n";
      return 0;
    }

    if (*dist_lp) {
      const LpResult r = LpDistance(MeasureFromJson(ReadJson(file_a)),
                                    MeasureFromJson(ReadJson(file_b)));
      Emit(g, {{"value", r.value},
               {"witness_epsilon", r.witness_epsilon},
               {"method", ToString(r.method)}});
      return 0;
    }
    if (*dist_h) {
      const auto a = LoadMeasureDir(dir_a);
      const auto b = LoadMeasureDir(dir_b);
      const HausdorffResult r = Hausdorff(a, b);
      Emit(g, {{"value", r.value},
               {"argmax_side", r.argmax_side == HausdorffSide::kLeft ? "left" : "right"},
               {"witness", {r.witness.first, r.witness.second}},
               {"sizes", {a.size(), b.size()}}});
      return 0;
    }

    if (*actiondist) {
      const WeightedOperator a = ParseOperatorSpec(op_a);
      const WeightedOperator b = ParseOperatorSpec(op_b);
      Emit(g, ToJson(EstimateActionDistance(
                  a, b, truncation, MakeStrategy(kind, count, seed, probe_a),
                  MakeStrategy(kind, count, seed, probe_b))));
      return 0;
    }

    if (*broadcast) {
      Emit(g, ToJson(Broadcast(n, vertex)));
      return 0;
    }
    if (*signed_limit) {
      const Sign s = sign > 0 ? Sign::kPlus : Sign::kMinus;
      Emit(g, ToJson(SignedLimit(ParseOperatorSpec(graph), vertex, s)));
      return 0;
    }

    if (*experiment) {
      ExperimentConfig cfg = config_path.empty() ? ExperimentConfig{}
                                                 : LoadConfig(config_path);
      for (const std::string& kv : overrides) {
        const auto eq = kv.find('=');
        if (eq == std::string::npos) {
          throw std::invalid_argument("--set expects key=value, got '" + kv + "'");
        }
        cfg.Set(kv.substr(0, eq), kv.substr(eq + 1));
      }
      if (g.seed) cfg.seed = *g.seed;
      if (!g.out.empty()) cfg.out = g.out;
      const auto written = RunExperiment(cfg);
      json paths = json::array();
      for (const auto& p : written) paths.push_back(p.string());
      const json summary = {{"config", cfg.ToMap()}, {"files", paths}};
      std::cout << (g.json ? summary.dump() : summary.dump(2)) << "\n";
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
