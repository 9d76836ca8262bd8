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

// Instance and coloring data model: point sets, weighted complete graphs,
// simple graphs and red/blue colorings.

#ifndef MSTRATIO_CORE_H_
#define MSTRATIO_CORE_H_

#include <array>
#include <atomic>
#include <cstdint>
#include <iterator>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace mstratio {

enum class ErrorCode {
  kInvalidArgument,
  kDegenerateInstance,
  kEnumerationLimit,
  kNotMetric,
  kImproperColoring,
  kRealizationFailed,
  kCliqueVerificationFailed,
  kParseError,
};

// Machine-readable name, e.g. "degenerate_instance".
std::string_view ErrorCodeName(ErrorCode code);

// All domain failures are reported with this exception type.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

// n points in R^dim, stored row-major.
class PointSet {
 public:
  PointSet(int dim, std::vector<double> coordinates);
  static PointSet FromRows(const std::vector<std::vector<double>>& rows);

  int dim() const { return dim_; }
  int size() const { return static_cast<int>(coords_.size()) / dim_; }
  std::span<const double> point(int i) const {
    return {coords_.data() + static_cast<std::size_t>(i) * dim_,
            static_cast<std::size_t>(dim_)};
  }
  std::span<const double> coordinates() const { return coords_; }

  double SquaredDistance(int i, int j) const;
  double Distance(int i, int j) const;

  bool operator==(const PointSet& other) const = default;

 private:
  int dim_;
  std::vector<double> coords_;
};

enum class MetricState : std::uint8_t { kUnknown, kMetric, kNotMetric };

// Complete graph on n vertices with positive symmetric weights. The dense
// matrix is kept for O(1) lookups in the enumeration loops.
class WeightedCompleteGraph {
 public:
  // Weights in row-major upper-triangular order: w01, w02, ..., w12, ...
  WeightedCompleteGraph(int n, std::span<const double> upper_weights,
                        MetricState metric = MetricState::kUnknown);

  WeightedCompleteGraph(const WeightedCompleteGraph& other);
  WeightedCompleteGraph& operator=(const WeightedCompleteGraph& other);

  int size() const { return n_; }
  double weight(int i, int j) const {
    return matrix_[static_cast<std::size_t>(i) * n_ + j];
  }
  // Row i of the dense matrix (diagonal entry is 0).
  const double* row(int i) const {
    return matrix_.data() + static_cast<std::size_t>(i) * n_;
  }
  double max_weight() const { return max_weight_; }
  double min_weight() const { return min_weight_; }
  std::vector<double> UpperTriangular() const;

  MetricState metric_state() const {
    return static_cast<MetricState>(metric_.load(std::memory_order_relaxed));
  }
  void set_metric_state(MetricState state) const {
    metric_.store(static_cast<std::uint8_t>(state), std::memory_order_relaxed);
  }

 private:
  int n_;
  std::vector<double> matrix_;
  double max_weight_ = 0.0;
  double min_weight_ = 0.0;
  mutable std::atomic<std::uint8_t> metric_{0};
};

// Simple undirected graph, used as the source of clique reductions.
class SimpleGraph {
 public:
  explicit SimpleGraph(int n);
  SimpleGraph(int n, const std::vector<std::array<int, 2>>& edges);

  int size() const { return n_; }
  bool HasEdge(int i, int j) const {
    return adjacency_[static_cast<std::size_t>(i) * n_ + j] != 0;
  }
  void AddEdge(int i, int j);
  std::vector<std::array<int, 2>> Edges() const;
  int Degree(int v) const;
  bool IsClique(std::span<const int> vertices) const;

 private:
  int n_;
  std::vector<char> adjacency_;
};

// Proper red/blue bipartition in canonical form (vertex 0 is red).
class Coloring {
 public:
  // Empty placeholder (size 0); every factory below yields a proper coloring.
  Coloring() = default;

  // Each factory canonicalizes and rejects improper (monochromatic) input.
  static Coloring FromFlags(std::vector<bool> red);
  static Coloring FromRedSet(int n, std::span<const int> red);
  static Coloring FromMask(int n, std::uint64_t red_mask);
  // String over {R, B}.
  static Coloring FromString(std::string_view text);

  int size() const { return static_cast<int>(red_.size()); }
  bool is_red(int i) const { return red_[i]; }
  int red_count() const;
  int blue_count() const { return size() - red_count(); }
  std::vector<int> RedVertices() const;
  std::vector<int> BlueVertices() const;
  // Requires size() <= 64.
  std::uint64_t mask() const;
  std::string ToString() const;

  bool operator==(const Coloring& other) const = default;

 private:
  explicit Coloring(std::vector<bool> red) : red_(std::move(red)) {}
  std::vector<bool> red_;
};

// Largest n accepted by the coloring enumerators.
inline constexpr int kMaxEnumerableVertices = 30;

// Number of unordered proper colorings, 2^(n-1) - 1.
std::uint64_t ProperColoringCount(int n);

// Red mask of the index-th canonical coloring in increasing bit order.
inline std::uint64_t CanonicalMask(std::uint64_t index) {
  return 1 | (index << 1);
}

// Forward range over every canonical proper coloring of n vertices.
class ProperColorings {
 public:
  class iterator {
   public:
    using value_type = Coloring;
    using difference_type = std::ptrdiff_t;
    using iterator_category = std::input_iterator_tag;

    iterator() = default;
    iterator(int n, std::uint64_t index) : n_(n), index_(index) {}
    Coloring operator*() const {
      return Coloring::FromMask(n_, CanonicalMask(index_));
    }
    iterator& operator++() {
      ++index_;
      return *this;
    }
    iterator operator++(int) {
      iterator copy = *this;
      ++index_;
      return copy;
    }
    bool operator==(const iterator& other) const {
      return index_ == other.index_;
    }

   private:
    int n_ = 0;
    std::uint64_t index_ = 0;
  };

  explicit ProperColorings(int n);
  iterator begin() const { return {n_, 0}; }
  iterator end() const { return {n_, ProperColoringCount(n_)}; }
  std::uint64_t size() const { return ProperColoringCount(n_); }

 private:
  int n_;
};

inline ProperColorings EnumerateProperColorings(int n) {
  return ProperColorings(n);
}

// Euclidean distance graph; coincident points are rejected.
WeightedCompleteGraph DistanceGraph(const PointSet& points);

struct MetricCheck {
  bool metric = true;
  // (i, j, k) with w(i,k) > w(i,j) + w(j,k).
  std::optional<std::array<int, 3>> violation;
};

// Triangle inequality with tolerance 1e-9 * max weight. Caches the verdict
// on the graph.
MetricCheck ValidateMetric(const WeightedCompleteGraph& graph);

}  // namespace mstratio

#endif  // MSTRATIO_CORE_H_
