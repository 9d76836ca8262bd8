// Copyright 2026 The mstratio Authors.
//
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

#include "mstratio/core.h"

#include <algorithm>
#include <cmath>
#include <limits>

namespace mstratio {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument:
      return "invalid_argument";
    case ErrorCode::kDegenerateInstance:
      return "degenerate_instance";
    case ErrorCode::kEnumerationLimit:
      return "enumeration_limit";
    case ErrorCode::kNotMetric:
      return "not_metric";
    case ErrorCode::kImproperColoring:
      return "improper_coloring";
    case ErrorCode::kRealizationFailed:
      return "realization_failed";
    case ErrorCode::kCliqueVerificationFailed:
      return "clique_verification_failed";
    case ErrorCode::kParseError:
      return "parse_error";
  }
  return "unknown";
}

// PointSet.

PointSet::PointSet(int dim, std::vector<double> coordinates)
    : dim_(dim), coords_(std::move(coordinates)) {
  if (dim_ < 1) {
    throw Error(ErrorCode::kInvalidArgument, "point dimension must be >= 1");
  }
  if (coords_.empty() || coords_.size() % dim_ != 0) {
    throw Error(ErrorCode::kInvalidArgument,
                "coordinate count is not a positive multiple of dim");
  }
  for (double x : coords_) {
    if (!std::isfinite(x)) {
      throw Error(ErrorCode::kInvalidArgument, "non-finite coordinate");
    }
  }
}

PointSet PointSet::FromRows(const std::vector<std::vector<double>>& rows) {
  if (rows.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "point set is empty");
  }
  const std::size_t dim = rows.front().size();
  std::vector<double> coords;
  coords.reserve(rows.size() * dim);
  for (const auto& row : rows) {
    if (row.size() != dim) {
      throw Error(ErrorCode::kInvalidArgument,
                  "points have inconsistent dimensions");
    }
    coords.insert(coords.end(), row.begin(), row.end());
  }
  return PointSet(static_cast<int>(dim), std::move(coords));
}

double PointSet::SquaredDistance(int i, int j) const {
  const double* a = coords_.data() + static_cast<std::size_t>(i) * dim_;
  const double* b = coords_.data() + static_cast<std::size_t>(j) * dim_;
  double sum = 0.0;
  for (int k = 0; k < dim_; ++k) {
    const double diff = a[k] - b[k];
    sum += diff * diff;
  }
  return sum;
}

double PointSet::Distance(int i, int j) const {
  return std::sqrt(SquaredDistance(i, j));
}

// WeightedCompleteGraph.

WeightedCompleteGraph::WeightedCompleteGraph(
    int n, std::span<const double> upper_weights, MetricState metric)
    : n_(n), metric_(static_cast<std::uint8_t>(metric)) {
  if (n < 1) {
    throw Error(ErrorCode::kInvalidArgument, "graph needs at least 1 vertex");
  }
  const std::size_t expected = static_cast<std::size_t>(n) * (n - 1) / 2;
  if (upper_weights.size() != expected) {
    throw Error(ErrorCode::kInvalidArgument,
                "expected " + std::to_string(expected) + " weights, got " +
                    std::to_string(upper_weights.size()));
  }
  matrix_.assign(static_cast<std::size_t>(n) * n, 0.0);
  max_weight_ = 0.0;
  min_weight_ = expected == 0 ? 0.0 : std::numeric_limits<double>::infinity();
  std::size_t k = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j, ++k) {
      const double w = upper_weights[k];
      if (!(w > 0.0) || !std::isfinite(w)) {
        throw Error(ErrorCode::kDegenerateInstance,
                    "weight of edge (" + std::to_string(i) + "," +
                        std::to_string(j) + ") is not positive and finite");
      }
      matrix_[static_cast<std::size_t>(i) * n + j] = w;
      matrix_[static_cast<std::size_t>(j) * n + i] = w;
      max_weight_ = std::max(max_weight_, w);
      min_weight_ = std::min(min_weight_, w);
    }
  }
}

WeightedCompleteGraph::WeightedCompleteGraph(const WeightedCompleteGraph& other)
    : n_(other.n_),
      matrix_(other.matrix_),
      max_weight_(other.max_weight_),
      min_weight_(other.min_weight_),
      metric_(other.metric_.load(std::memory_order_relaxed)) {}

WeightedCompleteGraph& WeightedCompleteGraph::operator=(
    const WeightedCompleteGraph& other) {
  if (this != &other) {
    n_ = other.n_;
    matrix_ = other.matrix_;
    max_weight_ = other.max_weight_;
    min_weight_ = other.min_weight_;
    metric_.store(other.metric_.load(std::memory_order_relaxed),
                  std::memory_order_relaxed);
  }
  return *this;
}

std::vector<double> WeightedCompleteGraph::UpperTriangular() const {
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(n_) * (n_ - 1) / 2);
  for (int i = 0; i < n_; ++i) {
    for (int j = i + 1; j < n_; ++j) out.push_back(weight(i, j));
  }
  return out;
}

// SimpleGraph.

SimpleGraph::SimpleGraph(int n) : n_(n) {
  if (n < 1) {
    throw Error(ErrorCode::kInvalidArgument, "graph needs at least 1 vertex");
  }
  adjacency_.assign(static_cast<std::size_t>(n) * n, 0);
}

SimpleGraph::SimpleGraph(int n, const std::vector<std::array<int, 2>>& edges)
    : SimpleGraph(n) {
  for (const auto& [u, v] : edges) AddEdge(u, v);
}

void SimpleGraph::AddEdge(int i, int j) {
  if (i < 0 || j < 0 || i >= n_ || j >= n_ || i == j) {
    throw Error(ErrorCode::kInvalidArgument,
                "invalid edge (" + std::to_string(i) + "," +
                    std::to_string(j) + ")");
  }
  adjacency_[static_cast<std::size_t>(i) * n_ + j] = 1;
  adjacency_[static_cast<std::size_t>(j) * n_ + i] = 1;
}

std::vector<std::array<int, 2>> SimpleGraph::Edges() const {
  std::vector<std::array<int, 2>> edges;
  for (int i = 0; i < n_; ++i) {
    for (int j = i + 1; j < n_; ++j) {
      if (HasEdge(i, j)) edges.push_back({i, j});
    }
  }
  return edges;
}

int SimpleGraph::Degree(int v) const {
  int degree = 0;
  for (int j = 0; j < n_; ++j) degree += HasEdge(v, j) ? 1 : 0;
  return degree;
}

bool SimpleGraph::IsClique(std::span<const int> vertices) const {
  for (std::size_t a = 0; a < vertices.size(); ++a) {
    for (std::size_t b = a + 1; b < vertices.size(); ++b) {
      if (!HasEdge(vertices[a], vertices[b])) return false;
    }
  }
  return true;
}

// Coloring.

Coloring Coloring::FromFlags(std::vector<bool> red) {
  if (red.size() < 2) {
    throw Error(ErrorCode::kImproperColoring,
                "a proper coloring needs at least 2 vertices");
  }
  const auto reds = std::count(red.begin(), red.end(), true);
  if (reds == 0 || reds == static_cast<long>(red.size())) {
    throw Error(ErrorCode::kImproperColoring,
                "both color classes must be nonempty");
  }
  if (!red[0]) red.flip();
  return Coloring(std::move(red));
}

Coloring Coloring::FromRedSet(int n, std::span<const int> red) {
  if (n < 0) throw Error(ErrorCode::kInvalidArgument, "negative size");
  std::vector<bool> flags(n, false);
  for (int v : red) {
    if (v < 0 || v >= n) {
      throw Error(ErrorCode::kInvalidArgument,
                  "vertex " + std::to_string(v) + " out of range");
    }
    flags[v] = true;
  }
  return FromFlags(std::move(flags));
}

Coloring Coloring::FromMask(int n, std::uint64_t red_mask) {
  if (n < 0 || n > 64) {
    throw Error(ErrorCode::kInvalidArgument, "mask colorings need n <= 64");
  }
  std::vector<bool> flags(n);
  for (int i = 0; i < n; ++i) flags[i] = (red_mask >> i) & 1;
  return FromFlags(std::move(flags));
}

Coloring Coloring::FromString(std::string_view text) {
  std::vector<bool> flags;
  flags.reserve(text.size());
  for (char ch : text) {
    if (ch == 'R' || ch == 'r') {
      flags.push_back(true);
    } else if (ch == 'B' || ch == 'b') {
      flags.push_back(false);
    } else {
      throw Error(ErrorCode::kParseError,
                  std::string("unexpected character '") + ch +
                      "' in coloring string");
    }
  }
  return FromFlags(std::move(flags));
}

int Coloring::red_count() const {
  return static_cast<int>(std::count(red_.begin(), red_.end(), true));
}

std::vector<int> Coloring::RedVertices() const {
  std::vector<int> out;
  for (int i = 0; i < size(); ++i) {
    if (red_[i]) out.push_back(i);
  }
  return out;
}

std::vector<int> Coloring::BlueVertices() const {
  std::vector<int> out;
  for (int i = 0; i < size(); ++i) {
    if (!red_[i]) out.push_back(i);
  }
  return out;
}

std::uint64_t Coloring::mask() const {
  if (size() > 64) {
    throw Error(ErrorCode::kInvalidArgument, "mask needs n <= 64");
  }
  std::uint64_t m = 0;
  for (int i = 0; i < size(); ++i) {
    if (red_[i]) m |= std::uint64_t{1} << i;
  }
  return m;
}

std::string Coloring::ToString() const {
  std::string out(red_.size(), 'B');
  for (int i = 0; i < size(); ++i) {
    if (red_[i]) out[i] = 'R';
  }
  return out;
}

// Enumeration.

std::uint64_t ProperColoringCount(int n) {
  if (n < 2 || n > kMaxEnumerableVertices) {
    throw Error(ErrorCode::kEnumerationLimit,
                "coloring enumeration needs 2 <= n <= " +
                    std::to_string(kMaxEnumerableVertices) + ", got " +
                    std::to_string(n));
  }
  return (std::uint64_t{1} << (n - 1)) - 1;
}

ProperColorings::ProperColorings(int n) : n_(n) {
  ProperColoringCount(n);  // validates n
}

// Graph constructions.

WeightedCompleteGraph DistanceGraph(const PointSet& points) {
  const int n = points.size();
  if (n < 2) {
    throw Error(ErrorCode::kInvalidArgument,
                "distance graph needs at least 2 points");
  }
  std::vector<double> weights;
  weights.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const double d = points.Distance(i, j);
      if (d == 0.0) {
        throw Error(ErrorCode::kDegenerateInstance,
                    "points " + std::to_string(i) + " and " +
                        std::to_string(j) + " coincide");
      }
      weights.push_back(d);
    }
  }
  return WeightedCompleteGraph(n, weights, MetricState::kMetric);
}

MetricCheck ValidateMetric(const WeightedCompleteGraph& graph) {
  const int n = graph.size();
  const double tolerance = 1e-9 * graph.max_weight();
  MetricCheck result;
  for (int i = 0; i < n && result.metric; ++i) {
    for (int k = i + 1; k < n && result.metric; ++k) {
      const double direct = graph.weight(i, k);
      for (int j = 0; j < n; ++j) {
        if (j == i || j == k) continue;
        if (direct > graph.weight(i, j) + graph.weight(j, k) + tolerance) {
          result.metric = false;
          result.violation = std::array<int, 3>{i, j, k};
          break;
        }
      }
    }
  }
  graph.set_metric_state(result.metric ? MetricState::kMetric
                                       : MetricState::kNotMetric);
  return result;
}

}  // namespace mstratio
