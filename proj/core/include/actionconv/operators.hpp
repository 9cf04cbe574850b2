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

#ifndef ACTIONCONV_OPERATORS_HPP_
#define ACTIONCONV_OPERATORS_HPP_

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "actionconv/rational.hpp"

namespace actionconv {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

// A finite P-operator: an n x n real matrix acting on functions of n points
// that carry probability weights.
class WeightedOperator {
 public:
  // `matrix` is row-major. Empty `weights` means uniform 1/n.
  WeightedOperator(std::size_t n, std::vector<double> matrix,
                   std::vector<Weight> weights = {}, std::string id = "");

  std::size_t n() const { return n_; }
  double at(std::size_t i, std::size_t j) const { return matrix_[i * n_ + j]; }
  std::span<const double> row(std::size_t i) const {
    return {matrix_.data() + i * n_, n_};
  }
  const std::vector<double>& matrix() const { return matrix_; }
  const std::vector<Weight>& weights() const { return weights_; }
  const std::string& id() const { return id_; }
  bool uniform_weights() const { return uniform_; }

  WeightedOperator WithId(std::string id) const;

 private:
  std::size_t n_;
  std::vector<double> matrix_;
  std::vector<Weight> weights_;
  std::string id_;
  bool uniform_ = true;
};

// c * A, same weights. Graphon-style normalization is c = 1/n.
WeightedOperator Scale(const WeightedOperator& a, double c);

enum class GraphKind { kStar, kEmpty, kCycle, kPath, kComplete, kEdgeList,
                       kErdosRenyi };

std::string_view ToString(GraphKind kind);

// A finite simple undirected graph on vertices 0..n-1.
struct GraphSpec {
  GraphKind kind = GraphKind::kEmpty;
  std::size_t n = 0;
  std::vector<std::pair<std::size_t, std::size_t>> edges;  // kEdgeList
  double edge_probability = 0.0;                           // kErdosRenyi
  std::uint64_t seed = 0;                                  // kErdosRenyi

  // Vertex 0 is the center.
  static GraphSpec Star(std::size_t n) { return Of(GraphKind::kStar, n); }
  static GraphSpec Empty(std::size_t n) { return Of(GraphKind::kEmpty, n); }
  static GraphSpec Cycle(std::size_t n) { return Of(GraphKind::kCycle, n); }
  static GraphSpec Path(std::size_t n) { return Of(GraphKind::kPath, n); }
  static GraphSpec Complete(std::size_t n) { return Of(GraphKind::kComplete, n); }
  static GraphSpec EdgeList(
      std::size_t n, std::vector<std::pair<std::size_t, std::size_t>> edges) {
    GraphSpec spec = Of(GraphKind::kEdgeList, n);
    spec.edges = std::move(edges);
    return spec;
  }
  static GraphSpec ErdosRenyi(std::size_t n, double p, std::uint64_t seed) {
    GraphSpec spec = Of(GraphKind::kErdosRenyi, n);
    spec.edge_probability = p;
    spec.seed = seed;
    return spec;
  }

  std::string Name() const;

 private:
  static GraphSpec Of(GraphKind kind, std::size_t n) {
    GraphSpec spec;
    spec.kind = kind;
    spec.n = n;
    return spec;
  }
};

// Edge list text: one "u v" pair per line, 0-based, '#' starts a comment.
// The vertex count is one more than the largest index unless `n` is given.
GraphSpec ParseEdgeList(std::istream& in, std::optional<std::size_t> n = {});
GraphSpec LoadEdgeList(const std::string& path,
                       std::optional<std::size_t> n = {});

// Validated edge set (sorted pairs u < v). Throws on loops, duplicates, or
// out-of-range vertices.
std::vector<std::pair<std::size_t, std::size_t>> Edges(const GraphSpec& spec);

// 0/1 adjacency matrix with uniform weights.
WeightedOperator Adjacency(const GraphSpec& spec);

// Adjacency matrix of G+: G plus a new last vertex adjacent to all of G.
WeightedOperator GPlus(const GraphSpec& spec);

// (Af)_i = sum_j A_ij f_j. No weight factor.
std::vector<double> Apply(const WeightedOperator& a, std::span<const double> f);

// (sum_i w_i |f_i|^q)^(1/q); q = kInfinity gives max over positive-weight i.
double QNorm(std::span<const double> f, std::span<const Weight> weights,
             double q);

// Induced (p -> q) norm in the regimes where it is computable exactly:
//  * p = inf and A entrywise nonnegative: ||A 1||_q;
//  * p = inf, q = 1, n <= kMaxEnumerationSize: max over f in {-1,1}^n.
// Any other combination throws std::domain_error.
inline constexpr std::size_t kMaxEnumerationSize = 20;
double PqNorm(const WeightedOperator& a, double p, double q);

// (f, g)_A = sum_i w_i (Af)_i g_i.
double Bilinear(const WeightedOperator& a, std::span<const double> f,
                std::span<const double> g);

// W^{-1} A^T W, the adjoint for the weighted inner product.
WeightedOperator Adjoint(const WeightedOperator& a);

// max |(A^T W - W A)_ij|; zero iff A is self-adjoint.
double SelfAdjointDefect(const WeightedOperator& a);

inline constexpr double kRegularityTolerance = 1e-9;

// c if A1 = c1 within `tol` (sup norm), c being the weighted mean of A1.
std::optional<double> CRegularity(const WeightedOperator& a,
                                  double tol = kRegularityTolerance);

// -min(0, min_ij A_ij); zero iff A preserves positivity.
double PositivityDefect(const WeightedOperator& a);

// {"id": ..., "n": n, "matrix": [[...], ...], "weights": ["1/n", ...]}
nlohmann::json ToJson(const WeightedOperator& a);
WeightedOperator OperatorFromJson(const nlohmann::json& j);

}  // namespace actionconv

#endif  // ACTIONCONV_OPERATORS_HPP_
