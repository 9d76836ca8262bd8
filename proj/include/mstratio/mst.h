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

// Minimum spanning trees and the tree combinatorics built on them.

#ifndef MSTRATIO_MST_H_
#define MSTRATIO_MST_H_

#include <cstdint>
#include <span>
#include <vector>

#include "mstratio/core.h"

namespace mstratio {

struct Edge {
  int u = 0;  // u < v
  int v = 0;
  double weight = 0.0;

  bool operator==(const Edge& other) const = default;
};

// Spanning tree over an explicit vertex set. Vertex labels are indices of the
// host instance, so a tree over a color class keeps the original indices.
class Tree {
 public:
  // Validates that `edges` form a spanning tree of `vertices`.
  Tree(std::vector<int> vertices, std::vector<Edge> edges);
  // Tree over {0, ..., n-1}.
  static Tree OnFirstVertices(int n, std::vector<Edge> edges);

  int size() const { return static_cast<int>(vertices_.size()); }
  std::span<const int> vertices() const { return vertices_; }
  std::span<const Edge> edges() const { return edges_; }
  double total_weight() const { return total_weight_; }

  bool Contains(int v) const {
    return v >= 0 && v < static_cast<int>(adjacency_.size()) &&
           contains_[v] != 0;
  }
  // Neighbors of v in increasing index order.
  std::span<const int> Neighbors(int v) const { return adjacency_[v]; }
  // Weights aligned with Neighbors(v).
  std::span<const double> NeighborWeights(int v) const {
    return adjacency_weights_[v];
  }
  int Degree(int v) const { return static_cast<int>(adjacency_[v].size()); }
  bool IsLeaf(int v) const { return Degree(v) == 1; }
  std::vector<int> Leaves() const;
  // Upper bound on vertex labels plus one.
  int label_bound() const { return static_cast<int>(adjacency_.size()); }

 private:
  std::vector<int> vertices_;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> adjacency_;
  std::vector<std::vector<double>> adjacency_weights_;
  std::vector<char> contains_;
  double total_weight_ = 0.0;
};

// True iff `edges` form a spanning tree of exactly `vertices`.
bool IsSpanningTreeOf(std::span<const Edge> edges,
                      std::span<const int> vertices);

// Dense Prim, O(n^2). Ties go to the lexicographically smallest (i, j) edge.
Tree MinimumSpanningTree(const WeightedCompleteGraph& graph);

// MST of the induced subgraph on `subset` (any order, no duplicates).
Tree MinimumSpanningTreeOfSubset(const WeightedCompleteGraph& graph,
                                 std::span<const int> subset);

// Weight-only variants for enumeration loops. The empty set and singletons
// have weight 0.
double SubsetMstWeight(const WeightedCompleteGraph& graph,
                       std::span<const int> subset);
double SubsetMstWeight(const WeightedCompleteGraph& graph, std::uint64_t mask);

// Euclidean MST computed directly on the points (no n^2 matrix).
Tree EuclideanMst(const PointSet& points);
double EuclideanMstWeight(const PointSet& points);
double EuclideanMstWeight(const PointSet& points, std::span<const int> subset);

// Tree hung from a root with a DFS preorder. Children are explored with
// prioritized vertices first, then by increasing index.
struct RootedTreeView {
  int root = -1;
  std::vector<int> parent;      // -1 for the root and for non-members
  std::vector<double> parent_weight;
  std::vector<int> depth;
  std::vector<int> start_time;  // preorder position
  std::vector<std::vector<int>> children;
  std::vector<int> preorder;
};

RootedTreeView RootTree(const Tree& tree, int root,
                        std::span<const char> priority = {});

struct TreePath {
  std::vector<int> vertices;  // from first to last endpoint
  double weight = 0.0;
};

// Unique path between a and b.
TreePath PathBetween(const Tree& tree, const RootedTreeView& view, int a,
                     int b);

// Leaf-to-leaf paths, one per leaf, covering each edge exactly twice: leaves
// l_1..l_k in DFS order are joined l_i -> l_(i+1) cyclically.
std::vector<TreePath> PathDoubleCover(const Tree& tree);

// Heaviest path whose endpoints are both non-leaves. With a single non-leaf
// the result is the zero-length path at it. Ties prefer smaller endpoints.
TreePath HeaviestInternalPath(const Tree& tree);

}  // namespace mstratio

#endif  // MSTRATIO_MST_H_
