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

#ifndef ACTIONCONV_LIMITS_HPP_
#define ACTIONCONV_LIMITS_HPP_

#include <cstddef>

#include "actionconv/measures.hpp"
#include "actionconv/operators.hpp"

namespace actionconv {

// Finite stand-ins for operators of the form f -> phi(f) * 1 where phi is
// evaluation along an ultrafilter. At size n the ultrafilter is replaced by
// a single distinguished coordinate.

// The rank-one matrix 1 e_{distinguished}^T: every row has a 1 in column
// `distinguished`, so Bf = f[distinguished] * 1. Uniform weights.
WeightedOperator Broadcast(std::size_t n, std::size_t distinguished);

enum class Sign { kPlus = 1, kMinus = -1 };

// A + sign * 1 e_{distinguished}^T.
WeightedOperator SignedLimit(const WeightedOperator& a,
                             std::size_t distinguished, Sign sign);

// Membership in P([-1,1]^k) x {delta_z : z in [-1,1]^k}: y-block is a single
// point in the cube and every x-block coordinate lies in [-1,1].
bool InStarLimitSet(const DiscreteMeasure& mu, std::size_t k);

// Upper bound on the d_LP distance from mu (on R^{2k}) to the star limit set.
// Candidates nu x delta_z use nu = x-marginal of mu clamped to the cube and z
// ranging over the y-block support points and the y-mean, clamped.
double DistanceToStarLimit(const DiscreteMeasure& mu, std::size_t k);

// |(f,1)_B - (1,f)_B| for f the indicator of `distinguished`.
double NonSelfAdjointWitness(const WeightedOperator& b,
                             std::size_t distinguished);

}  // namespace actionconv

#endif  // ACTIONCONV_LIMITS_HPP_
