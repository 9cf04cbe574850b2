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

#ifndef ACTIONCONV_HARNESS_HPP_
#define ACTIONCONV_HARNESS_HPP_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "actionconv/measures.hpp"
#include "actionconv/operators.hpp"
#include "actionconv/profiles.hpp"
#include "actionconv/rng.hpp"

namespace actionconv {

// --- Operator specs -------------------------------------------------------
//
//   star:N  empty:N  cycle:N  path:N  complete:N  er:N:P:SEED  edgelist:PATH
//   gplus:<graph>          G+ of a graph spec (apex is the last vertex)
//   broadcast:N[:I]        1 e_I^T, I defaults to 0
//   plus:I:<op>            <op> + 1 e_I^T
//   minus:I:<op>           <op> - 1 e_I^T
//   json:PATH              operator JSON as written by `limit`
GraphSpec ParseGraphSpec(std::string_view text);
WeightedOperator ParseOperatorSpec(std::string_view text);

// --- Random inputs shared by the verification suites ----------------------

// Up to `max_atoms` atoms with small positive integer masses, normalized.
// With `grid` > 0 every coordinate is a multiple of 1/grid in [-span, span],
// which keeps translations and differences exact in floating point.
DiscreteMeasure RandomMeasure(SplitMix64& rng, std::size_t dim,
                              std::size_t max_atoms, double span, int grid);

// --- Experiments -------------------------------------------------------------

// Flat key=value settings. Recognized keys: experiment (star_broadcast |
// gplus_signed), base (graph family for gplus_signed), sizes (comma list),
// K, count, seed, kind, sign (+1 / -1), out.
struct ExperimentConfig {
  std::string experiment = "star_broadcast";
  std::string base = "cycle";
  std::vector<std::size_t> sizes = {8, 32, 128};
  std::size_t truncation = kDefaultTruncation;
  std::size_t count = kDefaultTupleCount;
  std::uint64_t seed = 7;
  StrategyKind kind = StrategyKind::kMixed;
  int sign = +1;
  std::filesystem::path out = "experiment_out";

  // Throws std::invalid_argument on unknown keys or bad values.
  void Set(std::string_view key, std::string_view value);
  std::map<std::string, std::string> ToMap() const;
};

// '#' comments and blank lines are ignored.
ExperimentConfig ParseConfig(std::string_view text);
ExperimentConfig LoadConfig(const std::filesystem::path& path);

// One trajectory point: sizes[i] with its operators and measured values.
struct TrajectoryRow {
  std::size_t n = 0;
  std::string operator_a;
  std::string operator_b;
  DistanceReport report;
  double norm_profile_a = 0.0;
  double norm_profile_b = 0.0;
  std::optional<double> norm_inf1_a;
  std::optional<double> norm_inf1_b;
};

std::vector<TrajectoryRow> ComputeTrajectory(const ExperimentConfig& cfg);

// Writes manifest.json, report_n<N>.json per size and trajectory.csv into
// cfg.out. Returns the written paths. Output depends only on cfg.
std::vector<std::filesystem::path> RunExperiment(const ExperimentConfig& cfg);

std::string TrajectoryCsv(std::span<const TrajectoryRow> rows);

// --- Verification ---------------------------------------------------------

struct VerificationRecord {
  std::string id;
  std::string anchor;
  std::string expected;
  nlohmann::json measured;
  bool pass = false;
  bool skipped = false;
  double ms = 0.0;
  std::string warning;
};

struct VerifyOptions {
  std::uint64_t seed = 20240611;
  std::size_t lp_oracle_cases = 200;
  std::size_t lp_metric_cases = 500;
  std::size_t gplus_shift_graphs = 50;
  std::size_t adjoint_cases = 50;
  std::size_t truncation = kDefaultTruncation;
  std::size_t count = kDefaultTupleCount;
  // A suite slower than this is reported as skipped rather than failed.
  double time_guard_seconds = 120.0;
};

// The closed set of claim labels a record may carry.
std::span<const std::string_view> Anchors();

// Suite names in registration order ("all" is accepted by RunVerify too).
std::vector<std::string> SuiteNames();

// Runs one suite or "all"; records are ordered by id. Throws
// std::invalid_argument for an unknown suite.
std::vector<VerificationRecord> RunVerify(std::string_view suite,
                                          const VerifyOptions& options = {});

// {"id","anchor","expected","measured","pass","ms"}; "pass" is null for a
// skipped record, and "warning" appears when set.
nlohmann::json ToJson(const VerificationRecord& record);

// True when no record failed (skips don't count as failures).
bool AllPassed(std::span<const VerificationRecord> records);

}  // namespace actionconv

#endif  // ACTIONCONV_HARNESS_HPP_
