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
#include <fstream>
#include <istream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "actionconv/rng.hpp"

namespace actionconv {

WeightedOperator::WeightedOperator(std::size_t n, std::vector<double> matrix,
                                   std::vector<Weight> weights, std::string id)
    : n_(n), matrix_(std::move(matrix)), weights_(std::move(weights)),
      id_(std::move(id)) {
  if (n_ == 0) throw std::invalid_argument("WeightedOperator: n must be >= 1");
  if (matrix_.size() != n_ * n_) {
    throw std::invalid_argument("WeightedOperator: matrix has " +
                                std::to_string(matrix_.size()) +
                                " entries, expected n*n = " +
                                std::to_string(n_ * n_));
  }
  for (double x : matrix_) {
    if (!std::isfinite(x)) {
      throw std::invalid_argument("WeightedOperator: non-finite entry");
    }
  }
  if (weights_.empty()) {
    weights_.assign(n_, Weight(1, n_));
  } else {
    if (weights_.size() != n_) {
      throw std::invalid_argument("WeightedOperator: weight count mismatch");
    }
    Weight total = 0;
    for (const Weight& w : weights_) {
      if (w <= 0) {
        throw std::invalid_argument("WeightedOperator: weights must be positive");
      }
      total += w;
    }
    if (total != 1) {
      throw std::invalid_argument("WeightedOperator: weights sum to " +
                                  FormatWeight(total));
    }
  }
  uniform_ = std::all_of(weights_.begin(), weights_.end(),
                         [&](const Weight& w) { return w == weights_.front(); });
}

WeightedOperator WeightedOperator::WithId(std::string id) const {
  WeightedOperator copy = *this;
  copy.id_ = std::move(id);
  return copy;
}

WeightedOperator Scale(const WeightedOperator& a, double c) {
  std::vector<double> m = a.matrix();
  for (double& x : m) x *= c;
  std::ostringstream id;
  id << c << "*" << a.id();
  return WeightedOperator(a.n(), std::move(m), a.weights(), id.str());
}

std::string_view ToString(GraphKind kind) {
  switch (kind) {
    case GraphKind::kStar: return "star";
    case GraphKind::kEmpty: return "empty";
    case GraphKind::kCycle: return "cycle";
    case GraphKind::kPath: return "path";
    case GraphKind::kComplete: return "complete";
    case GraphKind::kEdgeList: return "edgelist";
    case GraphKind::kErdosRenyi: return "er";
  }
  return "unknown";
}

std::string GraphSpec::Name() const {
  std::ostringstream out;
  out << ToString(kind) << ":" << n;
  if (kind == GraphKind::kErdosRenyi) out << ":" << edge_probability << ":" << seed;
  return out.str();
}

GraphSpec ParseEdgeList(std::istream& in, std::optional<std::size_t> n) {
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  std::size_t max_vertex = 0;
  bool any = false;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) {
      line.erase(hash);
    }
    std::istringstream fields(line);
    long long u = 0;
    long long v = 0;
    if (!(fields >> u)) continue;  // blank line
    std::string rest;
    if (!(fields >> v) || (fields >> rest) || u < 0 || v < 0) {
      throw std::invalid_argument("edge list line " + std::to_string(line_no) +
                                  ": expected two nonnegative vertex ids");
    }
    edges.emplace_back(static_cast<std::size_t>(u), static_cast<std::size_t>(v));
    max_vertex = std::max({max_vertex, edges.back().first, edges.back().second});
    any = true;
  }
  const std::size_t vertices = n ? *n : (any ? max_vertex + 1 : 0);
  GraphSpec spec = GraphSpec::EdgeList(vertices, std::move(edges));
  Edges(spec);  // validate now so errors carry the parse context
  return spec;
}

GraphSpec LoadEdgeList(const std::string& path, std::optional<std::size_t> n) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open edge list '" + path + "'");
  return ParseEdgeList(in, n);
}

std::vector<std::pair<std::size_t, std::size_t>> Edges(const GraphSpec& spec) {
  const std::size_t n = spec.n;
  if (n < 1) throw std::invalid_argument("graph: n must be >= 1");
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  switch (spec.kind) {
    case GraphKind::kEmpty:
      break;
    case GraphKind::kStar:
      for (std::size_t v = 1; v < n; ++v) edges.emplace_back(0, v);
      break;
    case GraphKind::kPath:
      for (std::size_t v = 1; v < n; ++v) edges.emplace_back(v - 1, v);
      break;
    case GraphKind::kCycle:
      if (n < 3) throw std::invalid_argument("graph: cycle needs n >= 3");
      for (std::size_t v = 1; v < n; ++v) edges.emplace_back(v - 1, v);
      edges.emplace_back(0, n - 1);
      break;
    case GraphKind::kComplete:
      for (std::size_t u = 0; u < n; ++u) {
        for (std::size_t v = u + 1; v < n; ++v) edges.emplace_back(u, v);
      }
      break;
    case GraphKind::kErdosRenyi: {
      if (!(spec.edge_probability >= 0.0 && spec.edge_probability <= 1.0)) {
        throw std::invalid_argument("graph: edge probability must be in [0,1]");
      }
      SplitMix64 rng(HashSeed({spec.seed, n}));
      for (std::size_t u = 0; u < n; ++u) {
        for (std::size_t v = u + 1; v < n; ++v) {
          if (rng.Coin(spec.edge_probability)) edges.emplace_back(u, v);
        }
      }
      break;
    }
    case GraphKind::kEdgeList: {
      std::set<std::pair<std::size_t, std::size_t>> seen;
      for (auto [u, v] : spec.edges) {
        if (u >= n || v >= n) {
          throw std::invalid_argument("graph: vertex out of range in edge (" +
                                      std::to_string(u) + "," +
                                      std::to_string(v) + ")");
        }
        if (u == v) {
          throw std::invalid_argument("graph: loop at vertex " +
                                      std::to_string(u));
        }
        const auto e = std::minmax(u, v);
        if (!seen.insert(e).second) {
          throw std::invalid_argument("graph: duplicate edge (" +
                                      std::to_string(e.first) + "," +
                                      std::to_string(e.second) + ")");
        }
        edges.emplace_back(e.first, e.second);
      }
      std::sort(edges.begin(), edges.end());
      break;
    }
  }
  return edges;
}

namespace {

WeightedOperator FromEdges(
    std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges,
    std::string id) {
  std::vector<double> m(n * n, 0.0);
  for (auto [u, v] : edges) {
    m[u * n + v] = 1.0;
    m[v * n + u] = 1.0;
  }
  return WeightedOperator(n, std::move(m), {}, std::move(id));
}

void CheckLength(std::size_t got, std::size_t want, const char* who) {
  if (got != want) {
    throw std::invalid_argument(std::string(who) + ": vector length " +
                                std::to_string(got) + ", expected " +
                                std::to_string(want));
  }
}

std::vector<double> WeightsAsDouble(std::span<const Weight> w) {
  std::vector<double> out(w.size());
  std::transform(w.begin(), w.end(), out.begin(),
                 [](const Weight& x) { return ToDouble(x); });
  return out;
}

}  // namespace

WeightedOperator Adjacency(const GraphSpec& spec) {
  return FromEdges(spec.n, Edges(spec), spec.Name());
}

WeightedOperator GPlus(const GraphSpec& spec) {
  auto edges = Edges(spec);
  const std::size_t apex = spec.n;
  for (std::size_t v = 0; v < spec.n; ++v) edges.emplace_back(v, apex);
  return FromEdges(spec.n + 1, edges, "gplus(" + spec.Name() + ")");
}

std::vector<double> Apply(const WeightedOperator& a, std::span<const double> f) {
  CheckLength(f.size(), a.n(), "Apply");
  std::vector<double> out(a.n(), 0.0);
  for (std::size_t i = 0; i < a.n(); ++i) {
    const auto r = a.row(i);
    double s = 0.0;
    for (std::size_t j = 0; j < a.n(); ++j) s += r[j] * f[j];
    out[i] = s;
  }
  return out;
}

double QNorm(std::span<const double> f, std::span<const Weight> weights,
             double q) {
  if (!(q >= 1.0)) throw std::invalid_argument("QNorm: q must be >= 1");
  CheckLength(f.size(), weights.size(), "QNorm");
  if (std::isinf(q)) {
    double m = 0.0;
    for (std::size_t i = 0; i < f.size(); ++i) {
      if (weights[i] > 0) m = std::max(m, std::abs(f[i]));
    }
    return m;
  }
  std::vector<double> powers(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) {
    powers[i] = q == 1.0 ? std::abs(f[i]) : std::pow(std::abs(f[i]), q);
  }
  const double sum = ExactWeightedSum(powers, weights);
  if (q == 1.0) return sum;
  if (q == 2.0) return std::sqrt(sum);
  return std::pow(sum, 1.0 / q);
}

double PqNorm(const WeightedOperator& a, double p, double q) {
  if (!(p >= 1.0) || !(q >= 1.0)) {
    throw std::invalid_argument("PqNorm: p and q must be >= 1");
  }
  const bool nonnegative = PositivityDefect(a) == 0.0;
  if (std::isinf(p) && nonnegative) {
    const std::vector<double> ones(a.n(), 1.0);
    return QNorm(Apply(a, ones), a.weights(), q);
  }
  if (std::isinf(p) && q == 1.0 && a.n() <= kMaxEnumerationSize) {
    // f and -f give the same value, so the last sign is pinned to +1.
    const std::size_t n = a.n();
    const std::vector<double> w = WeightsAsDouble(a.weights());
    std::vector<double> f(n, 1.0);
    double best = -1.0;
    std::uint64_t best_mask = 0;
    const std::uint64_t count = std::uint64_t{1} << (n - 1);
    for (std::uint64_t mask = 0; mask < count; ++mask) {
      for (std::size_t j = 0; j + 1 < n; ++j) f[j] = (mask >> j) & 1U ? -1.0 : 1.0;
      double total = 0.0;
      for (std::size_t i = 0; i < n; ++i) {
        const auto r = a.row(i);
        double s = 0.0;
        for (std::size_t j = 0; j < n; ++j) s += r[j] * f[j];
        total += w[i] * std::abs(s);
      }
      if (total > best) {
        best = total;
        best_mask = mask;
      }
    }
    for (std::size_t j = 0; j + 1 < n; ++j) {
      f[j] = (best_mask >> j) & 1U ? -1.0 : 1.0;
    }
    f[n - 1] = 1.0;
    std::vector<double> magnitudes = Apply(a, f);
    for (double& x : magnitudes) x = std::abs(x);
    return ExactWeightedSum(magnitudes, a.weights());
  }
  throw std::domain_error(
      "PqNorm: unsupported regime; supported are p = inf with an entrywise "
      "nonnegative matrix (any q), and p = inf, q = 1 for n <= " +
      std::to_string(kMaxEnumerationSize) + " (exact sign enumeration)");
}

double Bilinear(const WeightedOperator& a, std::span<const double> f,
                std::span<const double> g) {
  CheckLength(f.size(), a.n(), "Bilinear");
  CheckLength(g.size(), a.n(), "Bilinear");
  std::vector<double> af = Apply(a, f);
  // (Af)_i g_i is a product of doubles; accumulate it exactly.
  Weight total = 0;
  for (std::size_t i = 0; i < a.n(); ++i) {
    if (af[i] == 0.0 || g[i] == 0.0) continue;
    total += ExactRational(af[i]) * ExactRational(g[i]) * a.weights()[i];
  }
  return ToDouble(total);
}

WeightedOperator Adjoint(const WeightedOperator& a) {
  const std::size_t n = a.n();
  const auto& w = a.weights();
  std::vector<double> m(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const double ratio = a.uniform_weights() ? 1.0 : ToDouble(w[j] / w[i]);
      m[i * n + j] = a.at(j, i) * ratio;
    }
  }
  return WeightedOperator(n, std::move(m), w, "adjoint(" + a.id() + ")");
}

double SelfAdjointDefect(const WeightedOperator& a) {
  const std::size_t n = a.n();
  const auto& w = a.weights();
  if (a.uniform_weights()) {
    double worst = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        worst = std::max(worst, std::abs(a.at(j, i) - a.at(i, j)));
      }
    }
    return ToDouble(ExactRational(worst) * w.front());
  }
  Weight worst = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (a.at(j, i) == a.at(i, j) && w[i] == w[j]) continue;
      Weight d = ExactRational(a.at(j, i)) * w[j] - w[i] * ExactRational(a.at(i, j));
      if (d < 0) d = -d;
      worst = std::max(worst, d);
    }
  }
  return ToDouble(worst);
}

std::optional<double> CRegularity(const WeightedOperator& a, double tol) {
  const std::vector<double> ones(a.n(), 1.0);
  const std::vector<double> row_sums = Apply(a, ones);
  const double c = ExactWeightedSum(row_sums, a.weights());
  for (double r : row_sums) {
    if (!(std::abs(r - c) <= tol)) return std::nullopt;
  }
  return c;
}

double PositivityDefect(const WeightedOperator& a) {
  const double lowest = *std::min_element(a.matrix().begin(), a.matrix().end());
  return lowest < 0.0 ? -lowest : 0.0;
}

nlohmann::json ToJson(const WeightedOperator& a) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t i = 0; i < a.n(); ++i) {
    const auto r = a.row(i);
    rows.push_back(std::vector<double>(r.begin(), r.end()));
  }
  nlohmann::json weights = nlohmann::json::array();
  for (const Weight& w : a.weights()) weights.push_back(FormatWeight(w));
  return {{"id", a.id()}, {"n", a.n()}, {"matrix", std::move(rows)},
          {"weights", std::move(weights)}};
}

WeightedOperator OperatorFromJson(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("matrix")) {
    throw std::invalid_argument("operator JSON: expected {\"n\", \"matrix\"}");
  }
  const auto n = j.at("n").get<std::size_t>();
  std::vector<double> m;
  m.reserve(n * n);
  for (const auto& row : j.at("matrix")) {
    const auto r = row.get<std::vector<double>>();
    if (r.size() != n) throw std::invalid_argument("operator JSON: ragged matrix");
    m.insert(m.end(), r.begin(), r.end());
  }
  std::vector<Weight> weights;
  if (j.contains("weights")) {
    for (const auto& w : j.at("weights")) {
      weights.push_back(w.is_string() ? ParseWeight(w.get<std::string>())
                                      : ExactRational(w.get<double>()));
    }
  }
  return WeightedOperator(n, std::move(m), std::move(weights),
                          j.value("id", std::string()));
}

}  // namespace actionconv
