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

#include "actionconv/profiles.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "actionconv/lp_metric.hpp"
#include "actionconv/parallel.hpp"
#include "actionconv/rng.hpp"

namespace actionconv {

std::string_view ToString(StrategyKind kind) {
  switch (kind) {
    case StrategyKind::kMixed: return "mixed";
    case StrategyKind::kIidUniform: return "iid_uniform";
    case StrategyKind::kRademacher: return "rademacher";
    case StrategyKind::kBlockStep: return "block_step";
    case StrategyKind::kIndicator: return "indicator";
    case StrategyKind::kConstantOne: return "constant_one";
    case StrategyKind::kVertexProbe: return "vertex_probe";
  }
  return "unknown";
}

StrategyKind ParseStrategyKind(std::string_view name) {
  for (StrategyKind k :
       {StrategyKind::kMixed, StrategyKind::kIidUniform,
        StrategyKind::kRademacher, StrategyKind::kBlockStep,
        StrategyKind::kIndicator, StrategyKind::kConstantOne,
        StrategyKind::kVertexProbe}) {
    if (ToString(k) == name) return k;
  }
  throw std::invalid_argument("unknown strategy kind '" + std::string(name) +
                              "'");
}

std::string TestFunctionStrategy::Fingerprint() const {
  std::ostringstream out;
  out << ToString(kind) << "/count=" << count << "/seed=" << seed;
  if (probe_vertex) out << "/probe=" << *probe_vertex;
  if (kind == StrategyKind::kVertexProbe) {
    out << "/grid=";
    for (std::size_t i = 0; i < probe_grid.size(); ++i) {
      out << (i ? "," : "") << probe_grid[i];
    }
  }
  return out.str();
}

namespace {

std::vector<double> IidUniform(SplitMix64& rng, std::size_t n) {
  std::vector<double> v(n);
  for (double& x : v) x = rng.Uniform(-1.0, 1.0);
  return v;
}

std::vector<double> Rademacher(SplitMix64& rng, std::size_t n) {
  std::vector<double> v(n);
  for (double& x : v) x = (rng.Next() >> 63) ? 1.0 : -1.0;
  return v;
}

// Piecewise constant on 1..kMaxBlocks contiguous blocks.
std::vector<double> BlockStep(SplitMix64& rng, std::size_t n) {
  const std::size_t blocks = 1 + rng.Below(std::min(kMaxBlocks, n));
  std::vector<std::size_t> cuts(n - 1);
  std::iota(cuts.begin(), cuts.end(), 1);
  for (std::size_t i = 0; i + 1 < blocks; ++i) {
    std::swap(cuts[i], cuts[i + rng.Below(cuts.size() - i)]);
  }
  cuts.resize(blocks - 1);
  std::sort(cuts.begin(), cuts.end());
  cuts.push_back(n);
  std::vector<double> v(n);
  std::size_t start = 0;
  for (std::size_t end : cuts) {
    const double value = rng.Uniform(-1.0, 1.0);
    std::fill(v.begin() + static_cast<std::ptrdiff_t>(start),
              v.begin() + static_cast<std::ptrdiff_t>(end), value);
    start = end;
  }
  return v;
}

// 0/1 indicator of a random set with a random inclusion rate.
std::vector<double> Indicator(SplitMix64& rng, std::size_t n) {
  const double rate = rng.Unit();
  std::vector<double> v(n);
  for (double& x : v) x = rng.Coin(rate) ? 1.0 : 0.0;
  return v;
}

void Validate(const TestFunctionStrategy& s, std::size_t n) {
  if (n == 0) throw std::invalid_argument("strategy: operator has no vertices");
  if (s.probe_vertex && *s.probe_vertex >= n) {
    throw std::invalid_argument("strategy: probe vertex " +
                                std::to_string(*s.probe_vertex) +
                                " out of range for n = " + std::to_string(n));
  }
  if (s.kind == StrategyKind::kVertexProbe && s.probe_grid.empty()) {
    throw std::invalid_argument("strategy: vertex_probe needs a probe grid");
  }
  for (double g : s.probe_grid) {
    if (!(g >= -1.0 && g <= 1.0)) {
      throw std::invalid_argument("strategy: probe grid values must lie in [-1,1]");
    }
  }
}

// Moves v[0] to position `vertex`, keeping the order of the rest.
void PlaceFirstAt(std::vector<double>& v, std::size_t vertex) {
  std::rotate(v.begin(), v.begin() + 1,
              v.begin() + static_cast<std::ptrdiff_t>(vertex) + 1);
}

}  // namespace

TestTuple DrawTuple(const TestFunctionStrategy& strategy, std::size_t n,
                    std::size_t k, std::size_t index) {
  Validate(strategy, n);
  if (k == 0) throw std::invalid_argument("DrawTuple: k must be >= 1");
  TestTuple tuple;
  tuple.reserve(k);

  if (strategy.kind == StrategyKind::kVertexProbe) {
    // Tuples in a group of |grid| share the body and differ only at the probe.
    const std::size_t g = strategy.probe_grid.size();
    SplitMix64 rng(HashSeed({strategy.seed, k, index / g, 0x70726f6265ULL}));
    for (std::size_t i = 0; i < k; ++i) {
      std::vector<double> v = IidUniform(rng, n);
      v[0] = strategy.probe_grid[(index % g + i) % g];
      PlaceFirstAt(v, strategy.probe_vertex.value_or(0));
      tuple.push_back(std::move(v));
    }
    return tuple;
  }

  SplitMix64 rng(HashSeed({strategy.seed, k, index}));
  StrategyKind kind = strategy.kind;
  if (kind == StrategyKind::kMixed) {
    static constexpr StrategyKind kCycle[] = {
        StrategyKind::kIidUniform, StrategyKind::kRademacher,
        StrategyKind::kBlockStep, StrategyKind::kIndicator};
    kind = kCycle[index % 4];
  }
  for (std::size_t i = 0; i < k; ++i) {
    std::vector<double> v;
    switch (kind) {
      case StrategyKind::kIidUniform: v = IidUniform(rng, n); break;
      case StrategyKind::kRademacher: v = Rademacher(rng, n); break;
      case StrategyKind::kBlockStep: v = BlockStep(rng, n); break;
      case StrategyKind::kIndicator: v = Indicator(rng, n); break;
      default: v.assign(n, 1.0); break;
    }
    if (strategy.probe_vertex) PlaceFirstAt(v, *strategy.probe_vertex);
    tuple.push_back(std::move(v));
  }
  return tuple;
}

DiscreteMeasure MeasureOf(const WeightedOperator& a, const TestTuple& fs) {
  const std::size_t k = fs.size();
  if (k == 0) throw std::invalid_argument("MeasureOf: empty tuple");
  std::vector<std::vector<double>> images;
  images.reserve(k);
  for (const auto& f : fs) {
    if (f.size() != a.n()) {
      throw std::invalid_argument("MeasureOf: function length " +
                                  std::to_string(f.size()) + " vs n = " +
                                  std::to_string(a.n()));
    }
    for (double x : f) {
      if (!(x >= -1.0 && x <= 1.0)) {
        throw std::invalid_argument("MeasureOf: test function value outside [-1,1]");
      }
    }
    images.push_back(Apply(a, f));
  }
  std::vector<Atom> atoms;
  atoms.reserve(a.n());
  for (std::size_t j = 0; j < a.n(); ++j) {
    Point p(2 * k);
    for (std::size_t i = 0; i < k; ++i) {
      p[i] = fs[i][j];
      p[k + i] = images[i][j];
    }
    atoms.push_back(Atom{std::move(p), a.weights()[j]});
  }
  return DiscreteMeasure(2 * k, std::move(atoms));
}

ProfileSample SampleProfile(const WeightedOperator& a, std::size_t k,
                            const TestFunctionStrategy& strategy) {
  if (k == 0) throw std::invalid_argument("SampleProfile: k must be >= 1");
  Validate(strategy, a.n());
  const std::size_t total = strategy.count + 2;
  std::vector<std::optional<DiscreteMeasure>> slots(total);
  ParallelFor(total, [&](std::size_t t) {
    TestTuple tuple;
    if (t < 2) {
      tuple.assign(k, std::vector<double>(a.n(), t == 0 ? 1.0 : 0.0));
    } else {
      tuple = DrawTuple(strategy, a.n(), k, t - 2);
    }
    slots[t].emplace(MeasureOf(a, tuple));
  });
  ProfileSample sample;
  sample.k = k;
  sample.strategy = strategy;
  sample.operator_id = a.id();
  sample.measures.reserve(total);
  for (auto& m : slots) sample.measures.push_back(std::move(*m));
  return sample;
}

double ProfileHausdorff(const ProfileSample& p, const ProfileSample& q) {
  if (p.k != q.k) {
    throw std::invalid_argument("ProfileHausdorff: k mismatch (" +
                                std::to_string(p.k) + " vs " +
                                std::to_string(q.k) + ")");
  }
  return Hausdorff(p.measures, q.measures).value;
}

DistanceReport EstimateActionDistance(const WeightedOperator& a,
                                      const WeightedOperator& b,
                                      std::size_t truncation,
                                      const TestFunctionStrategy& strategy_a,
                                      const TestFunctionStrategy& strategy_b) {
  if (truncation == 0) {
    throw std::invalid_argument("EstimateActionDistance: K must be >= 1");
  }
  DistanceReport report;
  report.truncation_k = truncation;
  report.tail_bound = std::ldexp(1.0, -static_cast<int>(truncation));
  report.fingerprint = strategy_a.Fingerprint();
  if (strategy_b.Fingerprint() != report.fingerprint) {
    report.fingerprint += "|" + strategy_b.Fingerprint();
  }
  for (std::size_t k = 1; k <= truncation; ++k) {
    const ProfileSample pa = SampleProfile(a, k, strategy_a);
    const ProfileSample pb = SampleProfile(b, k, strategy_b);
    const double h = ProfileHausdorff(pa, pb);
    report.per_k.emplace_back(k, h);
    report.value += std::ldexp(h, -static_cast<int>(k));
  }
  return report;
}

double NormFromProfile(const ProfileSample& p) {
  if (p.k != 1) {
    throw std::invalid_argument("NormFromProfile: needs a 1-profile, got k = " +
                                std::to_string(p.k));
  }
  double best = 0.0;
  for (const DiscreteMeasure& m : p.measures) best = std::max(best, MeanAbs(m, 1));
  return best;
}

nlohmann::json ToJson(const DistanceReport& report) {
  nlohmann::json per_k = nlohmann::json::array();
  for (auto [k, h] : report.per_k) per_k.push_back({{"k", k}, {"hausdorff", h}});
  return {{"value", report.value},
          {"per_k", std::move(per_k)},
          {"truncation_k", report.truncation_k},
          {"tail_bound", report.tail_bound},
          {"strategy", report.fingerprint}};
}

}  // namespace actionconv
