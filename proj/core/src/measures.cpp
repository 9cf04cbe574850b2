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

#include "actionconv/measures.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace actionconv {

namespace {

void CheckPoint(const Point& p, std::size_t dim) {
  if (p.size() != dim) {
    throw std::invalid_argument("measure: point has " +
                                std::to_string(p.size()) +
                                " coordinates, expected " +
                                std::to_string(dim));
  }
  for (double x : p) {
    if (!std::isfinite(x)) {
      throw std::invalid_argument("measure: non-finite coordinate");
    }
  }
}

}  // namespace

DiscreteMeasure::DiscreteMeasure(std::size_t dim, std::vector<Atom> atoms)
    : dim_(dim) {
  if (dim == 0) throw std::invalid_argument("measure: dim must be >= 1");
  Weight total = 0;
  for (const Atom& a : atoms) {
    CheckPoint(a.point, dim);
    if (a.weight < 0) throw std::invalid_argument("measure: negative weight");
    total += a.weight;
  }
  if (total != 1) {
    throw std::invalid_argument("measure: weights sum to " +
                                FormatWeight(total) + ", expected 1");
  }
  std::sort(atoms.begin(), atoms.end(),
            [](const Atom& x, const Atom& y) { return x.point < y.point; });
  atoms_.reserve(atoms.size());
  for (Atom& a : atoms) {
    if (a.weight == 0) continue;
    if (!atoms_.empty() && atoms_.back().point == a.point) {
      atoms_.back().weight += a.weight;
    } else {
      atoms_.push_back(std::move(a));
    }
  }
  // -0.0 and 0.0 compare equal; store the canonical +0.0.
  for (Atom& a : atoms_) {
    for (double& x : a.point) x = x + 0.0;
  }
}

DiscreteMeasure DiscreteMeasure::Dirac(Point point) {
  const std::size_t dim = point.size();
  std::vector<Atom> atoms;
  atoms.push_back(Atom{std::move(point), Weight(1)});
  return DiscreteMeasure(dim, std::move(atoms));
}

ShiftVector::ShiftVector(std::vector<double> components)
    : components_(std::move(components)) {
  if (components_.empty()) {
    throw std::invalid_argument("ShiftVector: dim must be >= 1");
  }
  for (double x : components_) {
    if (!std::isfinite(x)) {
      throw std::invalid_argument("ShiftVector: non-finite component");
    }
  }
}

double ShiftVector::Norm() const {
  double s = 0.0;
  for (double x : components_) s += x * x;
  return std::sqrt(s);
}

ShiftVector ShiftVector::operator-() const {
  std::vector<double> out(components_.size());
  std::transform(components_.begin(), components_.end(), out.begin(),
                 [](double x) { return -x; });
  return ShiftVector(std::move(out));
}

ShiftVector operator+(const ShiftVector& a, const ShiftVector& b) {
  if (a.dim() != b.dim()) {
    throw std::invalid_argument("ShiftVector: dimension mismatch");
  }
  std::vector<double> out(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) out[i] = a[i] + b[i];
  return ShiftVector(std::move(out));
}

DiscreteMeasure Empirical(std::span<const Point> points,
                          std::optional<std::span<const Weight>> weights) {
  if (points.empty()) {
    throw std::invalid_argument("Empirical: empty point list");
  }
  if (weights && weights->size() != points.size()) {
    throw std::invalid_argument("Empirical: " +
                                std::to_string(weights->size()) +
                                " weights for " +
                                std::to_string(points.size()) + " points");
  }
  const Weight uniform(1, points.size());
  std::vector<Atom> atoms;
  atoms.reserve(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    atoms.push_back(Atom{points[i], weights ? (*weights)[i] : uniform});
  }
  return DiscreteMeasure(points.front().size(), std::move(atoms));
}

DiscreteMeasure Shift(const DiscreteMeasure& mu, const ShiftVector& v) {
  if (mu.dim() != v.dim()) {
    throw std::invalid_argument("Shift: measure dim " +
                                std::to_string(mu.dim()) + " vs shift dim " +
                                std::to_string(v.dim()));
  }
  std::vector<Atom> atoms = mu.atoms();
  for (Atom& a : atoms) {
    for (std::size_t i = 0; i < a.point.size(); ++i) a.point[i] += v[i];
  }
  return DiscreteMeasure(mu.dim(), std::move(atoms));
}

DiscreteMeasure Marginal(const DiscreteMeasure& mu,
                         std::span<const std::size_t> coords) {
  if (coords.empty()) throw std::invalid_argument("Marginal: empty coords");
  for (std::size_t c : coords) {
    if (c >= mu.dim()) {
      throw std::out_of_range("Marginal: coordinate " + std::to_string(c) +
                              " out of range for dim " +
                              std::to_string(mu.dim()));
    }
  }
  std::vector<Atom> atoms;
  atoms.reserve(mu.size());
  for (const Atom& a : mu.atoms()) {
    Point p(coords.size());
    for (std::size_t i = 0; i < coords.size(); ++i) p[i] = a.point[coords[i]];
    atoms.push_back(Atom{std::move(p), a.weight});
  }
  return DiscreteMeasure(coords.size(), std::move(atoms));
}

double MeanAbs(const DiscreteMeasure& mu, std::size_t coord) {
  if (coord >= mu.dim()) {
    throw std::out_of_range("MeanAbs: coordinate out of range");
  }
  std::vector<double> values;
  std::vector<Weight> weights;
  values.reserve(mu.size());
  weights.reserve(mu.size());
  for (const Atom& a : mu.atoms()) {
    values.push_back(std::abs(a.point[coord]));
    weights.push_back(a.weight);
  }
  return ExactWeightedSum(values, weights);
}

DiscreteMeasure ProductWithDirac(const DiscreteMeasure& nu,
                                 std::span<const double> z) {
  if (nu.dim() != z.size()) {
    throw std::invalid_argument("ProductWithDirac: measure dim " +
                                std::to_string(nu.dim()) + " vs |z| " +
                                std::to_string(z.size()));
  }
  std::vector<Atom> atoms;
  atoms.reserve(nu.size());
  for (const Atom& a : nu.atoms()) {
    Point p = a.point;
    p.insert(p.end(), z.begin(), z.end());
    atoms.push_back(Atom{std::move(p), a.weight});
  }
  return DiscreteMeasure(nu.dim() + z.size(), std::move(atoms));
}

std::size_t CellsPerAxis(const Box& box, int resolution, std::size_t axis) {
  const double extent = box.upper[axis] - box.lower[axis];
  const double cells = std::ceil(extent * resolution *
                                 std::sqrt(static_cast<double>(box.dim())));
  return std::max<std::size_t>(1, static_cast<std::size_t>(cells));
}

DiscreteMeasure Discretize(const DiscreteMeasure& mu, const Box& box,
                           int resolution) {
  if (resolution < 1) {
    throw std::invalid_argument("Discretize: resolution must be >= 1");
  }
  if (box.lower.size() != mu.dim() || box.upper.size() != mu.dim()) {
    throw std::invalid_argument("Discretize: box dimension mismatch");
  }
  for (std::size_t a = 0; a < box.dim(); ++a) {
    if (!(box.lower[a] <= box.upper[a])) {
      throw std::invalid_argument("Discretize: empty box");
    }
  }
  std::vector<std::size_t> cells(mu.dim());
  std::vector<double> pitch(mu.dim());
  for (std::size_t a = 0; a < mu.dim(); ++a) {
    cells[a] = CellsPerAxis(box, resolution, a);
    pitch[a] = (box.upper[a] - box.lower[a]) / static_cast<double>(cells[a]);
  }
  std::vector<Atom> out;
  out.reserve(mu.size());
  for (const Atom& atom : mu.atoms()) {
    Point center(mu.dim());
    for (std::size_t a = 0; a < mu.dim(); ++a) {
      const double x = atom.point[a];
      if (x < box.lower[a] || x > box.upper[a]) {
        throw std::invalid_argument("Discretize: atom outside box");
      }
      std::size_t idx = 0;
      if (pitch[a] > 0.0) {
        const double raw = std::floor((x - box.lower[a]) / pitch[a]);
        idx = static_cast<std::size_t>(std::max(0.0, raw));
        idx = std::min(idx, cells[a] - 1);
      }
      center[a] = box.lower[a] + (static_cast<double>(idx) + 0.5) * pitch[a];
    }
    out.push_back(Atom{std::move(center), atom.weight});
  }
  return DiscreteMeasure(mu.dim(), std::move(out));
}

DiscreteMeasure RoundToUniform(const DiscreteMeasure& mu, std::size_t n) {
  if (n == 0) throw std::invalid_argument("RoundToUniform: n must be >= 1");
  const auto& atoms = mu.atoms();
  std::vector<BigInt> counts(atoms.size());
  std::vector<Weight> fractional(atoms.size());
  BigInt assigned = 0;
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    const Weight scaled = atoms[i].weight * n;
    counts[i] = boost::multiprecision::numerator(scaled) /
                boost::multiprecision::denominator(scaled);
    fractional[i] = scaled - Weight(counts[i]);
    assigned += counts[i];
  }
  std::vector<std::size_t> order(atoms.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return fractional[a] > fractional[b];
  });
  BigInt remaining = BigInt(n) - assigned;
  for (std::size_t i = 0; i < order.size() && remaining > 0; ++i) {
    if (fractional[order[i]] == 0) break;
    counts[order[i]] += 1;
    remaining -= 1;
  }
  std::vector<Atom> out;
  out.reserve(atoms.size());
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    out.push_back(Atom{atoms[i].point, Weight(counts[i], BigInt(n))});
  }
  return DiscreteMeasure(mu.dim(), std::move(out));
}

nlohmann::json ToJson(const DiscreteMeasure& mu) {
  nlohmann::json atoms = nlohmann::json::array();
  for (const Atom& a : mu.atoms()) {
    atoms.push_back({{"p", a.point}, {"w", FormatWeight(a.weight)}});
  }
  return {{"dim", mu.dim()}, {"atoms", std::move(atoms)}};
}

DiscreteMeasure MeasureFromJson(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("dim") || !j.contains("atoms")) {
    throw std::invalid_argument("measure JSON: expected {\"dim\", \"atoms\"}");
  }
  const auto dim = j.at("dim").get<std::size_t>();
  std::vector<Atom> atoms;
  for (const auto& a : j.at("atoms")) {
    const auto& w = a.at("w");
    Weight weight = w.is_string() ? ParseWeight(w.get<std::string>())
                                  : ExactRational(w.get<double>());
    atoms.push_back(Atom{a.at("p").get<Point>(), std::move(weight)});
  }
  return DiscreteMeasure(dim, std::move(atoms));
}

}  // namespace actionconv
