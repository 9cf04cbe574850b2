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

#include "actionconv/lp_metric.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "actionconv/max_flow.hpp"
#include "actionconv/parallel.hpp"

namespace actionconv {

std::string_view ToString(LpMethod method) {
  switch (method) {
    case LpMethod::kExactFlow:
      return "exact_flow";
    case LpMethod::kBruteForce:
      return "brute_force";
  }
  return "unknown";
}

namespace {

double Euclidean(const Point& x, const Point& y) {
  double s = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double d = x[i] - y[i];
    s += d * d;
  }
  return std::sqrt(s);
}

void CheckDims(const DiscreteMeasure& mu, const DiscreteMeasure& nu,
               const char* who) {
  if (mu.dim() != nu.dim()) {
    throw std::invalid_argument(std::string(who) + ": dimension mismatch (" +
                                std::to_string(mu.dim()) + " vs " +
                                std::to_string(nu.dim()) + ")");
  }
}

// Bipartite transport network between the atoms of two measures, with masses
// scaled to integers over their common denominator.
class CouplingProblem {
 public:
  CouplingProblem(const DiscreteMeasure& mu, const DiscreteMeasure& nu)
      : left_(mu.size()), right_(nu.size()), dist_(mu.size() * nu.size()) {
    BigInt common = 1;
    for (const Atom& a : mu.atoms()) {
      common = boost::multiprecision::lcm(
          common, boost::multiprecision::denominator(a.weight));
    }
    for (const Atom& a : nu.atoms()) {
      common = boost::multiprecision::lcm(
          common, boost::multiprecision::denominator(a.weight));
    }
    if (common > (BigInt(1) << 61)) {
      throw std::overflow_error(
          "LpDistance: common denominator of the weights exceeds 2^61");
    }
    total_ = common.convert_to<MaxFlow::Capacity>();
    auto scale = [&](const Weight& w) {
      const BigInt n = boost::multiprecision::numerator(w) *
                       (common / boost::multiprecision::denominator(w));
      return n.convert_to<MaxFlow::Capacity>();
    };
    for (std::size_t i = 0; i < mu.size(); ++i) left_[i] = scale(mu.atom(i).weight);
    for (std::size_t j = 0; j < nu.size(); ++j) right_[j] = scale(nu.atom(j).weight);
    for (std::size_t i = 0; i < mu.size(); ++i) {
      for (std::size_t j = 0; j < nu.size(); ++j) {
        dist_[i * nu.size() + j] = Euclidean(mu.atom(i).point, nu.atom(j).point);
      }
    }
  }

  MaxFlow::Capacity FlowWithin(double eps) const {
    const int nl = static_cast<int>(left_.size());
    const int nr = static_cast<int>(right_.size());
    const int source = nl + nr;
    const int sink = source + 1;
    MaxFlow flow(nl + nr + 2);
    for (int i = 0; i < nl; ++i) flow.AddArc(source, i, left_[i]);
    for (int j = 0; j < nr; ++j) flow.AddArc(nl + j, sink, right_[j]);
    for (int i = 0; i < nl; ++i) {
      for (int j = 0; j < nr; ++j) {
        if (dist_[static_cast<std::size_t>(i) * nr + j] <= eps) {
          flow.AddArc(i, nl + j, std::min(left_[i], right_[j]));
        }
      }
    }
    return flow.Solve(source, sink);
  }

  // Mass left unmatched, 1 - F/D, as an exact rational.
  Weight Deficit(MaxFlow::Capacity flow) const {
    return Weight(BigInt(total_ - flow), BigInt(total_));
  }

  bool Feasible(double eps) const {
    if (eps >= 1.0) return true;
    return ExactRational(eps) >= Deficit(FlowWithin(eps));
  }

  LpResult Distance() const {
    std::vector<double> breaks;
    breaks.reserve(dist_.size() + 1);
    breaks.push_back(0.0);
    for (double d : dist_) {
      if (d > 0.0 && d <= 1.0) breaks.push_back(d);
    }
    std::sort(breaks.begin(), breaks.end());
    breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());

    // Interval j = [breaks[j], breaks[j+1]) holds a feasible eps iff its
    // deficit is below the right end; the last interval always does since
    // eps = 1 is feasible. Feasibility is monotone in j.
    struct Probe {
      Weight deficit;
      bool feasible;
    };
    auto probe = [&](std::size_t j) {
      Weight deficit = Deficit(FlowWithin(breaks[j]));
      const bool feasible =
          j + 1 == breaks.size() || deficit < ExactRational(breaks[j + 1]);
      return Probe{std::move(deficit), feasible};
    };
    std::size_t lo = 0;
    std::size_t hi = breaks.size() - 1;
    Probe best = probe(hi);
    while (lo < hi) {
      const std::size_t mid = lo + (hi - lo) / 2;
      Probe p = probe(mid);
      if (p.feasible) {
        hi = mid;
        best = std::move(p);
      } else {
        lo = mid + 1;
      }
    }
    LpResult result;
    result.method = LpMethod::kExactFlow;
    result.witness_epsilon = breaks[hi];
    const Weight radius = ExactRational(breaks[hi]);
    result.value = radius >= best.deficit ? breaks[hi] : ToDouble(best.deficit);
    result.value = std::min(result.value, 1.0);
    return result;
  }

 private:
  std::vector<MaxFlow::Capacity> left_;
  std::vector<MaxFlow::Capacity> right_;
  std::vector<double> dist_;
  MaxFlow::Capacity total_ = 1;
};

}  // namespace

bool LpFeasible(const DiscreteMeasure& mu, const DiscreteMeasure& nu,
                double eps) {
  CheckDims(mu, nu, "LpFeasible");
  if (!(eps >= 0.0)) {
    throw std::invalid_argument("LpFeasible: eps must be >= 0");
  }
  return CouplingProblem(mu, nu).Feasible(eps);
}

LpResult LpDistance(const DiscreteMeasure& mu, const DiscreteMeasure& nu) {
  CheckDims(mu, nu, "LpDistance");
  return CouplingProblem(mu, nu).Distance();
}

LpResult LpDistanceBruteForce(const DiscreteMeasure& mu,
                              const DiscreteMeasure& nu) {
  CheckDims(mu, nu, "LpDistanceBruteForce");
  const std::size_t p = mu.size();
  const std::size_t q = nu.size();
  if (p + q > kBruteForceMaxAtoms) {
    throw std::length_error("LpDistanceBruteForce: combined support " +
                            std::to_string(p + q) + " exceeds " +
                            std::to_string(kBruteForceMaxAtoms));
  }
  std::vector<Weight> dist(p * q);
  for (std::size_t i = 0; i < p; ++i) {
    for (std::size_t j = 0; j < q; ++j) {
      dist[i * q + j] =
          ExactRational(Euclidean(mu.atom(i).point, nu.atom(j).point));
    }
  }
  // Mass of every union of atoms, indexed by bitmask.
  auto subset_masses = [](const DiscreteMeasure& m) {
    std::vector<Weight> mass(std::size_t{1} << m.size(), Weight(0));
    for (std::size_t s = 1; s < mass.size(); ++s) {
      const auto low = static_cast<std::size_t>(std::countr_zero(s));
      mass[s] = mass[s & (s - 1)] + m.atom(low).weight;
    }
    return mass;
  };
  const std::vector<Weight> mass_mu = subset_masses(mu);
  const std::vector<Weight> mass_nu = subset_masses(nu);

  std::set<Weight> candidates{Weight(0), Weight(1)};
  for (const Weight& d : dist) {
    if (d <= 1) candidates.insert(d);
  }
  for (const Weight& a : mass_mu) {
    for (const Weight& b : mass_nu) {
      const Weight diff = a - b;
      if (diff >= 0 && diff <= 1) candidates.insert(diff);
      if (-diff >= 0 && -diff <= 1) candidates.insert(-diff);
    }
  }

  // For every U in the support of `from`: from(U) <= to(closed eps-hull) + eps.
  auto covers = [&](const Weight& eps, bool mu_side) {
    const std::size_t n_from = mu_side ? p : q;
    const std::size_t n_to = mu_side ? q : p;
    std::vector<std::size_t> reach(n_from, 0);
    for (std::size_t i = 0; i < n_from; ++i) {
      for (std::size_t j = 0; j < n_to; ++j) {
        const Weight& d = mu_side ? dist[i * q + j] : dist[j * q + i];
        if (d <= eps) reach[i] |= std::size_t{1} << j;
      }
    }
    const auto& from_mass = mu_side ? mass_mu : mass_nu;
    const auto& to_mass = mu_side ? mass_nu : mass_mu;
    std::vector<std::size_t> hull(std::size_t{1} << n_from, 0);
    for (std::size_t s = 1; s < hull.size(); ++s) {
      const auto low = static_cast<std::size_t>(std::countr_zero(s));
      hull[s] = hull[s & (s - 1)] | reach[low];
      if (from_mass[s] > to_mass[hull[s]] + eps) return false;
    }
    return true;
  };

  for (const Weight& eps : candidates) {
    if (covers(eps, true) && covers(eps, false)) {
      LpResult result;
      result.method = LpMethod::kBruteForce;
      result.value = ToDouble(eps);
      double radius = 0.0;
      for (std::size_t k = 0; k < dist.size(); ++k) {
        if (dist[k] <= eps) radius = std::max(radius, ToDouble(dist[k]));
      }
      result.witness_epsilon = radius;
      return result;
    }
  }
  throw std::logic_error("LpDistanceBruteForce: eps = 1 must be feasible");
}

namespace {

struct Nearest {
  double distance = 0.0;
  std::size_t index = 0;
};

// min_j d_LP(from, to[j]). Starts at the same index (samples built from
// matching tuples are usually closest there); every other candidate is
// screened with a single flow at the current best before the full search.
Nearest NearestInSet(const DiscreteMeasure& from, std::size_t from_index,
                     std::span<const DiscreteMeasure> to) {
  const std::size_t first = from_index < to.size() ? from_index : 0;
  Nearest best{CouplingProblem(from, to[first]).Distance().value, first};
  for (std::size_t j = 0; j < to.size() && best.distance > 0.0; ++j) {
    if (j == first) continue;
    CouplingProblem problem(from, to[j]);
    if (!problem.Feasible(best.distance)) continue;
    const double d = problem.Distance().value;
    if (d < best.distance || (d == best.distance && j < best.index)) {
      best = Nearest{d, j};
    }
  }
  return best;
}

struct Directed {
  double value = 0.0;
  std::size_t from = 0;
  std::size_t to = 0;
};

Directed DirectedHausdorff(std::span<const DiscreteMeasure> a,
                           std::span<const DiscreteMeasure> b) {
  std::vector<Nearest> nearest(a.size());
  ParallelFor(a.size(), [&](std::size_t i) {
    nearest[i] = NearestInSet(a[i], i, b);
  });
  Directed out;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i == 0 || nearest[i].distance > out.value) {
      out = Directed{nearest[i].distance, i, nearest[i].index};
    }
  }
  return out;
}

}  // namespace

HausdorffResult Hausdorff(std::span<const DiscreteMeasure> a,
                          std::span<const DiscreteMeasure> b) {
  if (a.empty() || b.empty()) {
    throw std::invalid_argument("Hausdorff: empty set of measures");
  }
  const std::size_t dim = a.front().dim();
  for (const auto* set : {&a, &b}) {
    for (const DiscreteMeasure& m : *set) {
      if (m.dim() != dim) {
        throw std::invalid_argument("Hausdorff: measures of mixed dimension");
      }
    }
  }
  const Directed forward = DirectedHausdorff(a, b);
  const Directed backward = DirectedHausdorff(b, a);
  HausdorffResult result;
  if (forward.value >= backward.value) {
    result.value = forward.value;
    result.argmax_side = HausdorffSide::kLeft;
    result.witness = {forward.from, forward.to};
  } else {
    result.value = backward.value;
    result.argmax_side = HausdorffSide::kRight;
    result.witness = {backward.to, backward.from};
  }
  return result;
}

}  // namespace actionconv
