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

#include "actionconv/limits.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "actionconv/lp_metric.hpp"

namespace actionconv {

namespace {

void CheckIndex(std::size_t index, std::size_t n, const char* who) {
  if (index >= n) {
    throw std::out_of_range(std::string(who) + ": index " +
                            std::to_string(index) + " out of range for n = " +
                            std::to_string(n));
  }
}

double Clamp1(double x) { return std::clamp(x, -1.0, 1.0); }

}  // namespace

WeightedOperator Broadcast(std::size_t n, std::size_t distinguished) {
  if (n == 0) throw std::invalid_argument("Broadcast: n must be >= 1");
  CheckIndex(distinguished, n, "Broadcast");
  std::vector<double> m(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) m[i * n + distinguished] = 1.0;
  return WeightedOperator(n, std::move(m), {},
                          "broadcast:" + std::to_string(n) + ":" +
                              std::to_string(distinguished));
}

WeightedOperator SignedLimit(const WeightedOperator& a,
                             std::size_t distinguished, Sign sign) {
  const std::size_t n = a.n();
  CheckIndex(distinguished, n, "SignedLimit");
  const double s = static_cast<double>(static_cast<int>(sign));
  std::vector<double> m = a.matrix();
  for (std::size_t i = 0; i < n; ++i) m[i * n + distinguished] += s;
  return WeightedOperator(n, std::move(m), a.weights(),
                          std::string(sign == Sign::kPlus ? "plus" : "minus") +
                              "(" + a.id() + "," +
                              std::to_string(distinguished) + ")");
}

bool InStarLimitSet(const DiscreteMeasure& mu, std::size_t k) {
  if (mu.dim() != 2 * k) return false;
  const Point* z = nullptr;
  for (const Atom& a : mu.atoms()) {
    for (std::size_t i = 0; i < 2 * k; ++i) {
      if (!(a.point[i] >= -1.0 && a.point[i] <= 1.0)) return false;
    }
    if (z == nullptr) {
      z = &a.point;
    } else if (!std::equal(z->begin() + static_cast<std::ptrdiff_t>(k), z->end(),
                           a.point.begin() + static_cast<std::ptrdiff_t>(k))) {
      return false;
    }
  }
  return true;
}

double DistanceToStarLimit(const DiscreteMeasure& mu, std::size_t k) {
  if (k == 0 || mu.dim() != 2 * k) {
    throw std::invalid_argument("DistanceToStarLimit: measure dim " +
                                std::to_string(mu.dim()) + " != 2k = " +
                                std::to_string(2 * k));
  }
  std::vector<Atom> x_atoms;
  x_atoms.reserve(mu.size());
  std::set<Point> candidates;
  Point mean(k, 0.0);
  for (const Atom& a : mu.atoms()) {
    Point x(a.point.begin(), a.point.begin() + static_cast<std::ptrdiff_t>(k));
    std::transform(x.begin(), x.end(), x.begin(), Clamp1);
    x_atoms.push_back(Atom{std::move(x), a.weight});
    Point y(a.point.begin() + static_cast<std::ptrdiff_t>(k), a.point.end());
    const double w = ToDouble(a.weight);
    for (std::size_t i = 0; i < k; ++i) mean[i] += w * y[i];
    std::transform(y.begin(), y.end(), y.begin(), Clamp1);
    candidates.insert(std::move(y));
  }
  std::transform(mean.begin(), mean.end(), mean.begin(), Clamp1);
  candidates.insert(mean);
  const DiscreteMeasure x_marginal(k, std::move(x_atoms));

  double best = 1.0;
  for (const Point& z : candidates) {
    if (best == 0.0) break;
    const DiscreteMeasure target = ProductWithDirac(x_marginal, z);
    if (!LpFeasible(mu, target, best)) continue;
    best = std::min(best, LpDistance(mu, target).value);
  }
  return best;
}

double NonSelfAdjointWitness(const WeightedOperator& b,
                             std::size_t distinguished) {
  CheckIndex(distinguished, b.n(), "NonSelfAdjointWitness");
  std::vector<double> f(b.n(), 0.0);
  f[distinguished] = 1.0;
  const std::vector<double> ones(b.n(), 1.0);
  // Both forms are exact sums of weights here, so the difference is taken on
  // the exact values before rounding.
  const std::vector<double> bf = Apply(b, f);
  const std::vector<double> b1 = Apply(b, ones);
  Weight forward = 0;
  Weight backward = 0;
  for (std::size_t i = 0; i < b.n(); ++i) {
    forward += ExactRational(bf[i]) * b.weights()[i];
    backward += ExactRational(b1[i]) * ExactRational(f[i]) * b.weights()[i];
  }
  Weight diff = forward - backward;
  if (diff < 0) diff = -diff;
  return ToDouble(diff);
}

}  // namespace actionconv
