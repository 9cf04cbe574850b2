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

#ifndef ACTIONCONV_RATIONAL_HPP_
#define ACTIONCONV_RATIONAL_HPP_

#include <cstdint>
#include <span>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace actionconv {

// Exact probability mass. Coordinates stay in double; all mass bookkeeping
// (merging atoms, marginals, flow capacities) is done in this type.
using Weight = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

// The exact rational value of a finite double. Throws on NaN/inf.
Weight ExactRational(double x);

// Correctly rounded (nearest, ties to even) conversion to double.
double ToDouble(const Weight& w);

// "num/den" (or "num" when the denominator is 1).
std::string FormatWeight(const Weight& w);

// Accepts "num/den", "num", or a decimal literal such as "0.25" (read
// exactly as written, not through binary floating point).
Weight ParseWeight(std::string_view text);

// sum_i weights[i] * values[i], accumulated exactly and rounded once.
double ExactWeightedSum(std::span<const double> values,
                        std::span<const Weight> weights);

}  // namespace actionconv

#endif  // ACTIONCONV_RATIONAL_HPP_
