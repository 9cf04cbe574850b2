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

#ifndef ACTIONCONV_LP_METRIC_HPP_
#define ACTIONCONV_LP_METRIC_HPP_

#include <cstddef>
#include <span>
#include <string_view>
#include <utility>

#include "actionconv/measures.hpp"

namespace actionconv {

enum class LpMethod { kExactFlow, kBruteForce };

std::string_view ToString(LpMethod method);

struct LpResult {
  // Levy-Prokhorov distance, in [0, 1].
  double value = 0.0;
  // Largest point distance the optimal coupling is allowed to use; value is
  // max(witness_epsilon, unmatched mass).
  double witness_epsilon = 0.0;
  LpMethod method = LpMethod::kExactFlow;
};

// True iff some coupling of mu and nu puts mass >= 1 - eps on pairs at
// Euclidean distance <= eps. Mass comparisons are exact.
bool LpFeasible(const DiscreteMeasure& mu, const DiscreteMeasure& nu,
                double eps);

// Exact Levy-Prokhorov distance. The max-flow value F(eps) is a step function
// of eps that only changes at pairwise distances; the answer is the first
// breakpoint interval [d_j, d_{j+1}) containing max(d_j, 1 - F(d_j)).
LpResult LpDistance(const DiscreteMeasure& mu, const DiscreteMeasure& nu);

// Reference implementation straight from the Borel-set definition: every
// union of atoms is checked against every candidate eps. Exponential in the
// support size, so limited to kBruteForceMaxAtoms combined atoms.
inline constexpr std::size_t kBruteForceMaxAtoms = 10;
LpResult LpDistanceBruteForce(const DiscreteMeasure& mu,
                              const DiscreteMeasure& nu);

enum class HausdorffSide { kLeft, kRight };

struct HausdorffResult {
  double value = 0.0;
  // kLeft: the sup is attained by an element of the first set.
  HausdorffSide argmax_side = HausdorffSide::kLeft;
  // (index into first set, index into second set) realizing the value.
  std::pair<std::size_t, std::size_t> witness{0, 0};
};

// Hausdorff distance between two finite sets of measures under d_LP.
HausdorffResult Hausdorff(std::span<const DiscreteMeasure> a,
                          std::span<const DiscreteMeasure> b);

}  // namespace actionconv

#endif  // ACTIONCONV_LP_METRIC_HPP_
