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

#include "actionconv/rational.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include <gtest/gtest.h>

namespace actionconv {
namespace {

TEST(ExactRationalTest, RoundTripsDoubles) {
  for (double x : {0.0, 1.0, -2.5, 0.1, 1e-300, 123456789.125,
                   std::numeric_limits<double>::denorm_min(),
                   std::numeric_limits<double>::max()}) {
    EXPECT_EQ(ToDouble(ExactRational(x)), x) << x;
  }
}

TEST(ExactRationalTest, IsExact) {
  // 0.1 is not 1/10; its exact value has a power-of-two denominator.
  EXPECT_NE(ExactRational(0.1), Weight(1, 10));
  EXPECT_EQ(ExactRational(0.375), Weight(3, 8));
}

TEST(ExactRationalTest, RejectsNonFinite) {
  EXPECT_THROW(ExactRational(std::nan("")), std::invalid_argument);
  EXPECT_THROW(ExactRational(INFINITY), std::invalid_argument);
}

TEST(ToDoubleTest, CorrectlyRounded) {
  EXPECT_EQ(ToDouble(Weight(1, 3)), 1.0 / 3.0);
  EXPECT_EQ(ToDouble(Weight(2, 3)), 2.0 / 3.0);
  EXPECT_EQ(ToDouble(Weight(-7, 10)), -0.7);
  EXPECT_EQ(ToDouble(Weight(1998, 1000)), 1.998);
  // Halfway between 1 and the next double rounds to even (1).
  const Weight half_ulp = Weight(1) + Weight(BigInt(1), BigInt(1) << 53);
  EXPECT_EQ(ToDouble(half_ulp), 1.0);
  EXPECT_EQ(ToDouble(half_ulp + Weight(BigInt(1), BigInt(1) << 80)),
            std::nextafter(1.0, 2.0));
}

TEST(WeightTextTest, FormatAndParse) {
  EXPECT_EQ(FormatWeight(Weight(3, 4)), "3/4");
  EXPECT_EQ(FormatWeight(Weight(2)), "2");
  EXPECT_EQ(ParseWeight("6/8"), Weight(3, 4));
  EXPECT_EQ(ParseWeight("0.125"), Weight(1, 8));
  EXPECT_EQ(ParseWeight("5"), Weight(5));
  EXPECT_EQ(ParseWeight("-3/9"), Weight(-1, 3));
  EXPECT_THROW(ParseWeight("1/0"), std::invalid_argument);
  EXPECT_THROW(ParseWeight("abc"), std::invalid_argument);
  EXPECT_THROW(ParseWeight(""), std::invalid_argument);
}

TEST(ExactWeightedSumTest, AvoidsFloatingError) {
  const std::vector<double> x(10, 0.1);
  const std::vector<Weight> w(10, Weight(1));
  EXPECT_EQ(ExactWeightedSum(x, w), ToDouble(ExactRational(0.1) * 10));
  EXPECT_NE(ExactWeightedSum(x, w), 0.1 + 0.1 + 0.1 + 0.1 + 0.1 + 0.1 + 0.1 + 0.1 + 0.1 + 0.1);
  const std::vector<double> y = {1.0, -1.0};
  EXPECT_THROW(ExactWeightedSum(y, w), std::invalid_argument);
}

}  // namespace
}  // namespace actionconv
