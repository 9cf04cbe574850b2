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

#ifndef ACTIONCONV_PROFILES_HPP_
#define ACTIONCONV_PROFILES_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "actionconv/measures.hpp"
#include "actionconv/operators.hpp"

namespace actionconv {

// How test functions f_1..f_k in the L-infinity unit ball are drawn.
//
// kMixed cycles through iid_uniform, rademacher, block_step and indicator
// (25% each). When probe_vertex is set, the first generated value of every
// function is placed at that vertex and the remaining values fill the other
// vertices in order; two operators whose special vertices sit at different
// indices then receive corresponding tuples from the same seed.
enum class StrategyKind {
  kMixed,
  kIidUniform,
  kRademacher,
  kBlockStep,
  kIndicator,
  kConstantOne,
  kVertexProbe,
};

std::string_view ToString(StrategyKind kind);
StrategyKind ParseStrategyKind(std::string_view name);

inline constexpr std::size_t kDefaultTupleCount = 64;
inline constexpr std::size_t kDefaultTruncation = 3;
inline constexpr std::size_t kMaxBlocks = 8;

struct TestFunctionStrategy {
  StrategyKind kind = StrategyKind::kMixed;
  std::size_t count = kDefaultTupleCount;
  std::uint64_t seed = 0;
  std::optional<std::size_t> probe_vertex;
  // Values swept at the probe vertex by kVertexProbe.
  std::vector<double> probe_grid = {-1.0, -0.5, 0.0, 0.5, 1.0};

  // Same strategy with the probe moved; used to target a different vertex on
  // the other side of a comparison.
  TestFunctionStrategy WithProbe(std::optional<std::size_t> vertex) const {
    TestFunctionStrategy s = *this;
    s.probe_vertex = vertex;
    return s;
  }

  std::string Fingerprint() const;
};

using TestTuple = std::vector<std::vector<double>>;

// The index-th random tuple (k functions on n points). Depends only on
// (strategy, n, k, index).
TestTuple DrawTuple(const TestFunctionStrategy& strategy, std::size_t n,
                    std::size_t k, std::size_t index);

// Joint law of (f_1..f_k, Af_1..Af_k) under the vertex weights: one atom per
// vertex at (f_1(j),...,f_k(j),(Af_1)(j),...,(Af_k)(j)).
DiscreteMeasure MeasureOf(const WeightedOperator& a, const TestTuple& fs);

// A finite sample of the k-profile of an operator.
struct ProfileSample {
  std::size_t k = 1;
  // measures[0] comes from (1,...,1), measures[1] from (0,...,0), then one
  // per drawn tuple.
  std::vector<DiscreteMeasure> measures;
  TestFunctionStrategy strategy;
  std::string operator_id;
};

ProfileSample SampleProfile(const WeightedOperator& a, std::size_t k,
                            const TestFunctionStrategy& strategy);

// Hausdorff distance (under d_LP) between two samples of equal k. Exact for
// the finite sets; as an estimate of the distance between full profiles it
// is biased low in general.
double ProfileHausdorff(const ProfileSample& p, const ProfileSample& q);

struct DistanceReport {
  double value = 0.0;
  std::vector<std::pair<std::size_t, double>> per_k;
  std::size_t truncation_k = 0;
  double tail_bound = 0.0;
  std::string fingerprint;
};

// sum_{k=1..K} 2^-k * ProfileHausdorff(sample_k(A), sample_k(B)). The omitted
// tail is at most 2^-K since every d_LP is <= 1.
DistanceReport EstimateActionDistance(const WeightedOperator& a,
                                      const WeightedOperator& b,
                                      std::size_t truncation,
                                      const TestFunctionStrategy& strategy_a,
                                      const TestFunctionStrategy& strategy_b);

inline DistanceReport EstimateActionDistance(
    const WeightedOperator& a, const WeightedOperator& b,
    std::size_t truncation, const TestFunctionStrategy& strategy) {
  return EstimateActionDistance(a, b, truncation, strategy, strategy);
}

// sup over the sampled 1-profile of the integral of |y|: a lower bound on
// the (inf -> 1) norm, attained when A >= 0 (f = 1 is always sampled).
double NormFromProfile(const ProfileSample& p);

nlohmann::json ToJson(const DistanceReport& report);

}  // namespace actionconv

#endif  // ACTIONCONV_PROFILES_HPP_
