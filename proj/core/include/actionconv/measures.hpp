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

#ifndef ACTIONCONV_MEASURES_HPP_
#define ACTIONCONV_MEASURES_HPP_

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include <nlohmann/json.hpp>

#include "actionconv/rational.hpp"

namespace actionconv {

using Point = std::vector<double>;

struct Atom {
  Point point;
  Weight weight;
};

// A finitely supported probability measure on R^dim.
//
// Atoms are kept sorted lexicographically by point, with exactly-equal points
// merged and zero-mass atoms dropped, so two measures compare equal iff they
// are the same measure. Total mass is exactly 1.
class DiscreteMeasure {
 public:
  DiscreteMeasure(std::size_t dim, std::vector<Atom> atoms);

  static DiscreteMeasure Dirac(Point point);

  std::size_t dim() const { return dim_; }
  std::size_t size() const { return atoms_.size(); }
  const std::vector<Atom>& atoms() const { return atoms_; }
  const Atom& atom(std::size_t i) const { return atoms_[i]; }

  friend bool operator==(const DiscreteMeasure& a, const DiscreteMeasure& b) {
    return a.dim_ == b.dim_ && a.atoms_.size() == b.atoms_.size() &&
           std::equal(a.atoms_.begin(), a.atoms_.end(), b.atoms_.begin(),
                      [](const Atom& x, const Atom& y) {
                        return x.point == y.point && x.weight == y.weight;
                      });
  }

 private:
  std::size_t dim_;
  std::vector<Atom> atoms_;
};

// Translation vector for Shift(). A distinct type so that a shift can't be
// confused with a measure point.
class ShiftVector {
 public:
  explicit ShiftVector(std::vector<double> components);
  static ShiftVector Zero(std::size_t dim) {
    return ShiftVector(std::vector<double>(dim, 0.0));
  }

  std::size_t dim() const { return components_.size(); }
  const std::vector<double>& components() const { return components_; }
  double operator[](std::size_t i) const { return components_[i]; }
  double Norm() const;

  ShiftVector operator-() const;
  friend ShiftVector operator+(const ShiftVector& a, const ShiftVector& b);

 private:
  std::vector<double> components_;
};

// Axis-aligned bounding box [lower, upper].
struct Box {
  std::vector<double> lower;
  std::vector<double> upper;

  static Box Cube(std::size_t dim, double lo, double hi) {
    return Box{std::vector<double>(dim, lo), std::vector<double>(dim, hi)};
  }
  std::size_t dim() const { return lower.size(); }
};

// Weighted empirical measure sum_i w_i delta_{points[i]}; uniform when
// `weights` is absent.
DiscreteMeasure Empirical(std::span<const Point> points,
                          std::optional<std::span<const Weight>> weights = {});

// mu (+) v : every atom translated by v.
DiscreteMeasure Shift(const DiscreteMeasure& mu, const ShiftVector& v);

// Image of mu under projection onto `coords` (in the given order).
DiscreteMeasure Marginal(const DiscreteMeasure& mu,
                         std::span<const std::size_t> coords);

// Integral of |x_coord| against mu.
double MeanAbs(const DiscreteMeasure& mu, std::size_t coord);

// nu x delta_z on R^{k + |z|}.
DiscreteMeasure ProductWithDirac(const DiscreteMeasure& nu,
                                 std::span<const double> z);

// Grid quantization: every atom's mass moves to the center of its cell in a
// uniform grid over `box` with cell diameter <= 1/resolution. The result is
// within Levy-Prokhorov distance 1/resolution of mu.
DiscreteMeasure Discretize(const DiscreteMeasure& mu, const Box& box,
                           int resolution);

// Number of grid cells per axis used by Discretize().
std::size_t CellsPerAxis(const Box& box, int resolution, std::size_t axis);

// Rounds each atom's mass to floor(n*w)/n or ceil(n*w)/n so that the result
// is of the form (1/n) sum delta_{x_i}. Ceilings go to atoms in decreasing
// order of fractional part (ties: atom order) until the mass reaches 1.
DiscreteMeasure RoundToUniform(const DiscreteMeasure& mu, std::size_t n);

// {"dim": d, "atoms": [{"p": [...], "w": "num/den"}, ...]}
nlohmann::json ToJson(const DiscreteMeasure& mu);
DiscreteMeasure MeasureFromJson(const nlohmann::json& j);

}  // namespace actionconv

#endif  // ACTIONCONV_MEASURES_HPP_
