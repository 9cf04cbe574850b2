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

#include "actionconv/operators.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <vector>

#include <gtest/gtest.h>

#include "actionconv/limits.hpp"
#include "actionconv/rng.hpp"

namespace actionconv {
namespace {

std::vector<double> RowSums(const WeightedOperator& a) {
  return Apply(a, std::vector<double>(a.n(), 1.0));
}

WeightedOperator RandomSigns(SplitMix64& rng, std::size_t n) {
  std::vector<double> m(n * n);
  for (double& x : m) x = rng.Coin(0.5) ? 1.0 : -1.0;
  return WeightedOperator(n, std::move(m));
}

// Oracle for the (inf -> 1) norm: every sign vector, weighted sum in doubles.
double BruteInfOne(const WeightedOperator& a) {
  const std::size_t n = a.n();
  double best = 0.0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    std::vector<double> f(n);
    for (std::size_t j = 0; j < n; ++j) f[j] = (mask >> j & 1U) ? -1.0 : 1.0;
    double total = 0.0;
    const std::vector<double> af = Apply(a, f);
    for (std::size_t i = 0; i < n; ++i) total += std::abs(af[i]);
    best = std::max(best, total / static_cast<double>(n));
  }
  return best;
}

TEST(WeightedOperatorTest, Validation) {
  EXPECT_THROW(WeightedOperator(0, {}), std::invalid_argument);
  EXPECT_THROW(WeightedOperator(2, {1, 2, 3}), std::invalid_argument);
  EXPECT_THROW(WeightedOperator(1, {NAN}), std::invalid_argument);
  EXPECT_THROW(WeightedOperator(2, {0, 0, 0, 0}, {Weight(1, 2)}),
               std::invalid_argument);
  EXPECT_THROW(WeightedOperator(2, {0, 0, 0, 0}, {Weight(1), Weight(0)}),
               std::invalid_argument);
  EXPECT_THROW(WeightedOperator(2, {0, 0, 0, 0}, {Weight(1, 2), Weight(1, 3)}),
               std::invalid_argument);
  const WeightedOperator a(2, {0, 1, 1, 0});
  EXPECT_TRUE(a.uniform_weights());
  EXPECT_EQ(a.weights(), (std::vector<Weight>{Weight(1, 2), Weight(1, 2)}));
}

TEST(AdjacencyTest, Generators) {
  EXPECT_EQ(Adjacency(GraphSpec::Star(2)).matrix(),
            (std::vector<double>{0, 1, 1, 0}));
  EXPECT_EQ(RowSums(Adjacency(GraphSpec::Star(4))),
            (std::vector<double>{3, 1, 1, 1}));
  EXPECT_EQ(RowSums(Adjacency(GraphSpec::Cycle(5))), std::vector<double>(5, 2));
  EXPECT_EQ(RowSums(Adjacency(GraphSpec::Path(4))),
            (std::vector<double>{1, 2, 2, 1}));
  EXPECT_EQ(RowSums(Adjacency(GraphSpec::Complete(5))), std::vector<double>(5, 4));
  EXPECT_EQ(RowSums(Adjacency(GraphSpec::Empty(3))), std::vector<double>(3, 0));
  EXPECT_EQ(Adjacency(GraphSpec::Star(1)).matrix(), std::vector<double>{0});
}

TEST(AdjacencyTest, ErdosRenyiIsDeterministicAndSymmetric) {
  const WeightedOperator a = Adjacency(GraphSpec::ErdosRenyi(30, 0.2, 5));
  EXPECT_EQ(a.matrix(), Adjacency(GraphSpec::ErdosRenyi(30, 0.2, 5)).matrix());
  EXPECT_NE(a.matrix(), Adjacency(GraphSpec::ErdosRenyi(30, 0.2, 6)).matrix());
  EXPECT_EQ(SelfAdjointDefect(a), 0.0);
  for (std::size_t i = 0; i < 30; ++i) EXPECT_EQ(a.at(i, i), 0.0);
  EXPECT_EQ(RowSums(Adjacency(GraphSpec::ErdosRenyi(6, 1.0, 1))),
            std::vector<double>(6, 5));
}

TEST(AdjacencyTest, Errors) {
  EXPECT_THROW(Adjacency(GraphSpec::Star(0)), std::invalid_argument);
  EXPECT_THROW(Adjacency(GraphSpec::Cycle(2)), std::invalid_argument);
  EXPECT_THROW(Adjacency(GraphSpec::EdgeList(3, {{1, 1}})), std::invalid_argument);
  EXPECT_THROW(Adjacency(GraphSpec::EdgeList(3, {{0, 1}, {1, 0}})),
               std::invalid_argument);
  EXPECT_THROW(Adjacency(GraphSpec::EdgeList(3, {{0, 3}})), std::invalid_argument);
  EXPECT_THROW(Adjacency(GraphSpec::ErdosRenyi(3, 1.5, 0)), std::invalid_argument);
}

TEST(EdgeListTest, ParsesCommentsAndInfersSize) {
  std::istringstream in("# triangle plus pendant\n0 1\n1 2  # inline\n\n2 0\n2\t4\n");
  const GraphSpec spec = ParseEdgeList(in);
  EXPECT_EQ(spec.n, 5u);
  EXPECT_EQ(RowSums(Adjacency(spec)), (std::vector<double>{2, 2, 3, 0, 1}));
  std::istringstream sized("0 1\n");
  EXPECT_EQ(ParseEdgeList(sized, 4).n, 4u);
  std::istringstream bad("0 x\n");
  EXPECT_THROW(ParseEdgeList(bad), std::invalid_argument);
  std::istringstream odd("0 1 2\n");
  EXPECT_THROW(ParseEdgeList(odd), std::invalid_argument);
  std::istringstream small("0 5\n");
  EXPECT_THROW(Adjacency(ParseEdgeList(small, 3)), std::invalid_argument);
  EXPECT_THROW(LoadEdgeList("/nonexistent/graph.txt"), std::runtime_error);
}

TEST(GPlusTest, Structure) {
  // G+ of the empty graph is a star whose center is the last vertex.
  const WeightedOperator e_plus = GPlus(GraphSpec::Empty(5));
  const std::vector<double> sums = RowSums(e_plus);
  EXPECT_EQ(sums.back(), 5.0);
  EXPECT_EQ(std::count(sums.begin(), sums.end(), 1.0), 5);
  EXPECT_DOUBLE_EQ(PqNorm(e_plus, kInfinity, 1.0),
                   PqNorm(Adjacency(GraphSpec::Star(6)), kInfinity, 1.0));

  for (std::size_t n : {3, 8, 20}) {
    const std::vector<double> c = RowSums(GPlus(GraphSpec::Cycle(n)));
    EXPECT_EQ(c.back(), static_cast<double>(n));
    for (std::size_t i = 0; i < n; ++i) EXPECT_EQ(c[i], 3.0);
    // Exactly n new edges: the entry total grows by 2n.
    const double before = 2.0 * static_cast<double>(n);
    EXPECT_EQ(std::accumulate(c.begin(), c.end(), 0.0), before + 2.0 * n);
  }
}

TEST(ApplyTest, Examples) {
  const WeightedOperator star = Adjacency(GraphSpec::Star(4));
  EXPECT_EQ(Apply(star, std::vector<double>{1, .5, -.5, 0}),
            (std::vector<double>{0, 1, 1, 1}));
  EXPECT_EQ(Apply(star, std::vector<double>(4, 0.0)), std::vector<double>(4, 0.0));
  EXPECT_EQ(Apply(Adjacency(GraphSpec::Cycle(4)), std::vector<double>(4, 1.0)),
            std::vector<double>(4, 2.0));
  EXPECT_THROW(Apply(star, std::vector<double>(3, 0.0)), std::invalid_argument);
}

TEST(ScaleTest, MultipliesEntries) {
  const WeightedOperator a = Scale(Adjacency(GraphSpec::Complete(4)), 0.25);
  EXPECT_EQ(RowSums(a), std::vector<double>(4, 0.75));
}

TEST(QNormTest, Examples) {
  const WeightedOperator star = Adjacency(GraphSpec::Star(10));
  EXPECT_EQ(QNorm(RowSums(star), star.weights(), 2.0), 3.0);
  EXPECT_EQ(QNorm(RowSums(star), star.weights(), kInfinity), 9.0);
  const std::vector<Weight> w(4, Weight(1, 4));
  EXPECT_EQ(QNorm(std::vector<double>(4, 1.0), w, 1.0), 1.0);
  EXPECT_THROW(QNorm(std::vector<double>(4, 1.0), w, 0.5), std::invalid_argument);
  EXPECT_THROW(QNorm(std::vector<double>(3, 1.0), w, 1.0), std::invalid_argument);
}

TEST(PqNormTest, Examples) {
  for (std::size_t n : {2, 4, 10, 100, 1000}) {
    EXPECT_EQ(PqNorm(Adjacency(GraphSpec::Star(n)), kInfinity, 1.0),
              ToDouble(Weight(2 * n - 2, n)))
        << n;
  }
  EXPECT_EQ(PqNorm(Adjacency(GraphSpec::Star(10)), kInfinity, 2.0), 3.0);
  EXPECT_EQ(PqNorm(Adjacency(GraphSpec::Empty(7)), kInfinity, 1.0), 0.0);
  EXPECT_EQ(PqNorm(Broadcast(50, 3), kInfinity, 1.0), 1.0);
}

TEST(PqNormTest, UnsupportedRegimesThrow) {
  const WeightedOperator a = Adjacency(GraphSpec::Cycle(5));
  EXPECT_THROW(PqNorm(a, 2.0, 2.0), std::domain_error);
  SplitMix64 rng(1);
  EXPECT_THROW(PqNorm(RandomSigns(rng, 21), kInfinity, 1.0), std::domain_error);
  EXPECT_THROW(PqNorm(RandomSigns(rng, 4), kInfinity, 2.0), std::domain_error);
  EXPECT_THROW(PqNorm(a, 0.5, 1.0), std::invalid_argument);
  try {
    PqNorm(a, 1.0, 1.0);
    FAIL();
  } catch (const std::domain_error& e) {
    EXPECT_NE(std::string(e.what()).find("p = inf"), std::string::npos);
  }
}

TEST(PqNormTest, MonotoneInQForNonnegative) {
  for (const WeightedOperator& a :
       {Adjacency(GraphSpec::Star(9)), Adjacency(GraphSpec::Path(6)),
        Adjacency(GraphSpec::ErdosRenyi(25, 0.3, 4)), GPlus(GraphSpec::Cycle(7))}) {
    double last = 0.0;
    for (double q : {1.0, 2.0, 4.0, kInfinity}) {
      const double v = PqNorm(a, kInfinity, q);
      EXPECT_GE(v, last) << a.id() << " q=" << q;
      last = v;
    }
  }
}

TEST(BilinearTest, Examples) {
  SplitMix64 rng(3);
  const WeightedOperator a = Adjacency(GraphSpec::ErdosRenyi(12, 0.4, 2));
  std::vector<double> f(12), g(12);
  for (double& x : f) x = rng.Uniform(-1, 1);
  for (double& x : g) x = rng.Uniform(-1, 1);
  EXPECT_EQ(Bilinear(a, f, g), Bilinear(a, g, f));
  EXPECT_EQ(Bilinear(a, std::vector<double>(12, 0.0), g), 0.0);

  const WeightedOperator b = Broadcast(8, 0);
  std::vector<double> chi(8, 0.0);
  chi[0] = 1.0;
  const std::vector<double> one(8, 1.0);
  EXPECT_EQ(Bilinear(b, chi, one), 1.0);
  EXPECT_EQ(Bilinear(b, one, chi), 0.125);
  EXPECT_THROW(Bilinear(b, chi, std::vector<double>(7, 0.0)), std::invalid_argument);
}

TEST(AdjointTest, Examples) {
  const WeightedOperator sym = Adjacency(GraphSpec::Cycle(6));
  EXPECT_EQ(Adjoint(sym).matrix(), sym.matrix());
  SplitMix64 rng(9);
  const WeightedOperator a = RandomSigns(rng, 7);
  EXPECT_EQ(Adjoint(Adjoint(a)).matrix(), a.matrix());
  // Defining identity (f, g)_{A*} = (g, f)_A with non-uniform weights.
  const WeightedOperator w(3, {1, 2, 0, -1, 0, 4, 0.5, 0, 1},
                           {Weight(1, 2), Weight(1, 4), Weight(1, 4)});
  const std::vector<double> f = {1, -0.5, 0.25}, g = {0.5, 1, -1};
  EXPECT_DOUBLE_EQ(Bilinear(Adjoint(w), f, g), Bilinear(w, g, f));
  EXPECT_EQ(Adjoint(w).weights(), w.weights());
}

TEST(SelfAdjointDefectTest, Examples) {
  EXPECT_EQ(SelfAdjointDefect(Adjacency(GraphSpec::Star(9))), 0.0);
  EXPECT_EQ(SelfAdjointDefect(Adjacency(GraphSpec::Empty(3))), 0.0);
  // Broadcast: (A^T W - W A)_{0j} = 1/8 for every j != 0.
  EXPECT_EQ(SelfAdjointDefect(Broadcast(8, 0)), 0.125);
  const WeightedOperator w(2, {0, 1, 1, 0}, {Weight(1, 4), Weight(3, 4)});
  EXPECT_EQ(SelfAdjointDefect(w), 0.5);
}

TEST(CRegularityTest, Examples) {
  EXPECT_EQ(CRegularity(Adjacency(GraphSpec::Cycle(9))), 2.0);
  EXPECT_EQ(CRegularity(Adjacency(GraphSpec::Star(3))), std::nullopt);
  EXPECT_EQ(CRegularity(Adjacency(GraphSpec::Complete(7))), 6.0);
  EXPECT_EQ(CRegularity(Adjacency(GraphSpec::Empty(4))), 0.0);
}

TEST(PositivityDefectTest, Examples) {
  EXPECT_EQ(PositivityDefect(Adjacency(GraphSpec::Cycle(4))), 0.0);
  EXPECT_EQ(PositivityDefect(Adjacency(GraphSpec::Empty(4))), 0.0);
  // cycle(4) - 2 * broadcast: column 0 holds 0 - 2 at row 0 and 1 - 2 at the
  // neighbours, so the most negative entry is -2.
  std::vector<double> m = Adjacency(GraphSpec::Cycle(4)).matrix();
  for (std::size_t i = 0; i < 4; ++i) m[i * 4] -= 2.0;
  EXPECT_EQ(PositivityDefect(WeightedOperator(4, m)), 2.0);
}

TEST(OperatorJsonTest, RoundTrip) {
  const WeightedOperator w(2, {0, 1.5, -1, 0}, {Weight(1, 3), Weight(2, 3)}, "x");
  const WeightedOperator back = OperatorFromJson(nlohmann::json::parse(ToJson(w).dump()));
  EXPECT_EQ(back.matrix(), w.matrix());
  EXPECT_EQ(back.weights(), w.weights());
  EXPECT_EQ(back.id(), "x");
  EXPECT_THROW(OperatorFromJson(nlohmann::json::parse(R"({"n":2})")),
               std::invalid_argument);
}

class AdjointNormTest : public ::testing::TestWithParam<int> {};

TEST_P(AdjointNormTest, InfOneNormIsSelfDualAndMatchesEnumeration) {
  SplitMix64 rng(HashSeed({31, static_cast<std::uint64_t>(GetParam())}));
  const std::size_t n = 1 + rng.Below(12);
  const WeightedOperator a = RandomSigns(rng, n);
  const double norm = PqNorm(a, kInfinity, 1.0);
  EXPECT_EQ(norm, PqNorm(Adjoint(a), kInfinity, 1.0));
  EXPECT_NEAR(norm, BruteInfOne(a), 1e-12);
}

INSTANTIATE_TEST_SUITE_P(Random, AdjointNormTest, ::testing::Range(0, 40));

}  // namespace
}  // namespace actionconv
