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

#include "mstratio/mst.h"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>
#include <utility>

namespace mstratio {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct DisjointSets {
  explicit DisjointSets(int n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int Find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  bool Union(int a, int b) {
    a = Find(a);
    b = Find(b);
    if (a == b) return false;
    parent[b] = a;
    return true;
  }
  std::vector<int> parent;
};

std::pair<int, int> Ordered(int a, int b) {
  return a < b ? std::pair{a, b} : std::pair{b, a};
}

// Prim over the listed vertices, recording the tree.
Tree PrimTree(const WeightedCompleteGraph& graph, std::vector<int> vertices) {
  std::sort(vertices.begin(), vertices.end());
  const int m = static_cast<int>(vertices.size());
  std::vector<Edge> edges;
  if (m <= 1) return Tree(std::move(vertices), {});
  edges.reserve(m - 1);
  std::vector<double> key(m, kInf);
  std::vector<int> link(m, -1);
  std::vector<char> done(m, 0);
  int current = 0;
  done[0] = 1;
  for (int step = 1; step < m; ++step) {
    const int u = vertices[current];
    const double* row = graph.row(u);
    for (int t = 0; t < m; ++t) {
      if (done[t]) continue;
      const double w = row[vertices[t]];
      if (w < key[t] ||
          (w == key[t] && Ordered(u, vertices[t]) <
                              Ordered(vertices[link[t]], vertices[t]))) {
        key[t] = w;
        link[t] = current;
      }
    }
    int best = -1;
    for (int t = 0; t < m; ++t) {
      if (done[t]) continue;
      if (best < 0 || key[t] < key[best] ||
          (key[t] == key[best] &&
           Ordered(vertices[link[t]], vertices[t]) <
               Ordered(vertices[link[best]], vertices[best]))) {
        best = t;
      }
    }
    done[best] = 1;
    const auto [a, b] = Ordered(vertices[link[best]], vertices[best]);
    edges.push_back({a, b, key[best]});
    current = best;
  }
  return Tree(std::move(vertices), std::move(edges));
}

// Weight-only Prim over a small index list held in `ids` (modified).
template <typename DistanceFn>
double PrimWeight(int* ids, double* key, int m, DistanceFn&& dist) {
  if (m <= 1) return 0.0;
  int last = m - 1;
  // ids[0] is the start vertex; remaining candidates live in ids[1..last].
  const int start = ids[0];
  for (int t = 1; t <= last; ++t) key[t] = dist(start, ids[t]);
  double total = 0.0;
  while (last >= 1) {
    int best = 1;
    for (int t = 2; t <= last; ++t) {
      if (key[t] < key[best]) best = t;
    }
    total += key[best];
    const int u = ids[best];
    ids[best] = ids[last];
    key[best] = key[last];
    --last;
    for (int t = 1; t <= last; ++t) {
      const double w = dist(u, ids[t]);
      if (w < key[t]) key[t] = w;
    }
  }
  return total;
}

}  // namespace

// Tree.

Tree::Tree(std::vector<int> vertices, std::vector<Edge> edges)
    : vertices_(std::move(vertices)), edges_(std::move(edges)) {
  std::sort(vertices_.begin(), vertices_.end());
  if (vertices_.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "tree needs at least 1 vertex");
  }
  if (vertices_.front() < 0) {
    throw Error(ErrorCode::kInvalidArgument, "negative vertex label");
  }
  if (std::adjacent_find(vertices_.begin(), vertices_.end()) !=
      vertices_.end()) {
    throw Error(ErrorCode::kInvalidArgument, "duplicate tree vertex");
  }
  if (edges_.size() + 1 != vertices_.size()) {
    throw Error(ErrorCode::kInvalidArgument,
                "tree on " + std::to_string(vertices_.size()) +
                    " vertices needs " + std::to_string(vertices_.size() - 1) +
                    " edges, got " + std::to_string(edges_.size()));
  }
  const int bound = vertices_.back() + 1;
  contains_.assign(bound, 0);
  for (int v : vertices_) contains_[v] = 1;
  adjacency_.assign(bound, {});
  adjacency_weights_.assign(bound, {});
  DisjointSets sets(bound);
  total_weight_ = 0.0;
  for (Edge& e : edges_) {
    if (e.u > e.v) std::swap(e.u, e.v);
    if (!Contains(e.u) || !Contains(e.v) || e.u == e.v) {
      throw Error(ErrorCode::kInvalidArgument,
                  "edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                      ") leaves the vertex set");
    }
    if (!sets.Union(e.u, e.v)) {
      throw Error(ErrorCode::kInvalidArgument, "edges contain a cycle");
    }
    adjacency_[e.u].push_back(e.v);
    adjacency_[e.v].push_back(e.u);
    total_weight_ += e.weight;
  }
  for (int v : vertices_) {
    auto& nbrs = adjacency_[v];
    std::sort(nbrs.begin(), nbrs.end());
    auto& weights = adjacency_weights_[v];
    weights.resize(nbrs.size());
    for (const Edge& e : edges_) {
      if (e.u == v || e.v == v) {
        const int other = e.u == v ? e.v : e.u;
        const auto pos = std::lower_bound(nbrs.begin(), nbrs.end(), other);
        weights[pos - nbrs.begin()] = e.weight;
      }
    }
  }
}

Tree Tree::OnFirstVertices(int n, std::vector<Edge> edges) {
  std::vector<int> vertices(n);
  std::iota(vertices.begin(), vertices.end(), 0);
  return Tree(std::move(vertices), std::move(edges));
}

std::vector<int> Tree::Leaves() const {
  std::vector<int> leaves;
  for (int v : vertices_) {
    if (IsLeaf(v)) leaves.push_back(v);
  }
  return leaves;
}

// Spanning trees.

bool IsSpanningTreeOf(std::span<const Edge> edges,
                      std::span<const int> vertices) {
  if (vertices.empty() || edges.size() + 1 != vertices.size()) return false;
  int bound = 0;
  for (int v : vertices) {
    if (v < 0) return false;
    bound = std::max(bound, v + 1);
  }
  std::vector<char> member(bound, 0);
  for (int v : vertices) {
    if (member[v]) return false;
    member[v] = 1;
  }
  DisjointSets sets(bound);
  for (const Edge& e : edges) {
    if (e.u < 0 || e.v < 0 || e.u >= bound || e.v >= bound) return false;
    if (!member[e.u] || !member[e.v]) return false;
    if (!sets.Union(e.u, e.v)) return false;
  }
  // n-1 acyclic edges on n vertices connect them.
  return true;
}

Tree MinimumSpanningTree(const WeightedCompleteGraph& graph) {
  std::vector<int> all(graph.size());
  std::iota(all.begin(), all.end(), 0);
  return PrimTree(graph, std::move(all));
}

Tree MinimumSpanningTreeOfSubset(const WeightedCompleteGraph& graph,
                                 std::span<const int> subset) {
  if (subset.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "subset is empty");
  }
  for (int v : subset) {
    if (v < 0 || v >= graph.size()) {
      throw Error(ErrorCode::kInvalidArgument,
                  "subset vertex " + std::to_string(v) + " out of range");
    }
  }
  return PrimTree(graph, std::vector<int>(subset.begin(), subset.end()));
}

double SubsetMstWeight(const WeightedCompleteGraph& graph,
                       std::span<const int> subset) {
  const int m = static_cast<int>(subset.size());
  std::vector<int> ids(subset.begin(), subset.end());
  std::vector<double> key(m);
  return PrimWeight(ids.data(), key.data(), m, [&](int a, int b) {
    return graph.weight(a, b);
  });
}

double SubsetMstWeight(const WeightedCompleteGraph& graph, std::uint64_t mask) {
  std::array<int, 64> ids;
  std::array<double, 64> key;
  int m = 0;
  while (mask != 0) {
    ids[m++] = std::countr_zero(mask);
    mask &= mask - 1;
  }
  return PrimWeight(ids.data(), key.data(), m, [&](int a, int b) {
    return graph.weight(a, b);
  });
}

Tree EuclideanMst(const PointSet& points) {
  const int n = points.size();
  std::vector<int> all(n);
  std::iota(all.begin(), all.end(), 0);
  if (n == 1) return Tree(std::move(all), {});
  std::vector<double> key(n, kInf);
  std::vector<int> link(n, 0);
  std::vector<char> done(n, 0);
  std::vector<Edge> edges;
  edges.reserve(n - 1);
  int current = 0;
  done[0] = 1;
  for (int step = 1; step < n; ++step) {
    int best = -1;
    for (int t = 0; t < n; ++t) {
      if (done[t]) continue;
      const double d2 = points.SquaredDistance(current, t);
      if (d2 < key[t]) {
        key[t] = d2;
        link[t] = current;
      }
      if (best < 0 || key[t] < key[best]) best = t;
    }
    done[best] = 1;
    const auto [a, b] = Ordered(link[best], best);
    edges.push_back({a, b, std::sqrt(key[best])});
    current = best;
  }
  return Tree(std::move(all), std::move(edges));
}

double EuclideanMstWeight(const PointSet& points, std::span<const int> subset) {
  const int m = static_cast<int>(subset.size());
  if (m <= 1) return 0.0;
  const int dim = points.dim();
  const double* coords = points.coordinates().data();
  std::vector<int> ids(subset.begin(), subset.end());
  std::vector<double> key(m);
  // Squared distances order edges the same way as distances.
  std::vector<double> chosen;
  chosen.reserve(m - 1);
  int last = m - 1;
  auto d2 = [&](int a, int b) {
    const double* pa = coords + static_cast<std::size_t>(a) * dim;
    const double* pb = coords + static_cast<std::size_t>(b) * dim;
    double s = 0.0;
    for (int k = 0; k < dim; ++k) {
      const double diff = pa[k] - pb[k];
      s += diff * diff;
    }
    return s;
  };
  for (int t = 1; t <= last; ++t) key[t] = d2(ids[0], ids[t]);
  double total = 0.0;
  while (last >= 1) {
    int best = 1;
    for (int t = 2; t <= last; ++t) {
      if (key[t] < key[best]) best = t;
    }
    total += std::sqrt(key[best]);
    const int u = ids[best];
    ids[best] = ids[last];
    key[best] = key[last];
    --last;
    for (int t = 1; t <= last; ++t) {
      const double w = d2(u, ids[t]);
      if (w < key[t]) key[t] = w;
    }
  }
  return total;
}

double EuclideanMstWeight(const PointSet& points) {
  std::vector<int> all(points.size());
  std::iota(all.begin(), all.end(), 0);
  return EuclideanMstWeight(points, all);
}

// Rooted views and paths.

RootedTreeView RootTree(const Tree& tree, int root,
                        std::span<const char> priority) {
  if (!tree.Contains(root)) {
    throw Error(ErrorCode::kInvalidArgument,
                "root " + std::to_string(root) + " is not a tree vertex");
  }
  const int bound = tree.label_bound();
  RootedTreeView view;
  view.root = root;
  view.parent.assign(bound, -1);
  view.parent_weight.assign(bound, 0.0);
  view.depth.assign(bound, 0);
  view.start_time.assign(bound, -1);
  view.children.assign(bound, {});
  view.preorder.reserve(tree.size());

  auto prioritized = [&](int v) {
    return v < static_cast<int>(priority.size()) && priority[v] != 0;
  };
  std::vector<int> stack{root};
  std::vector<char> seen(bound, 0);
  seen[root] = 1;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    view.start_time[v] = static_cast<int>(view.preorder.size());
    view.preorder.push_back(v);
    auto& kids = view.children[v];
    const auto nbrs = tree.Neighbors(v);
    const auto weights = tree.NeighborWeights(v);
    for (std::size_t k = 0; k < nbrs.size(); ++k) {
      const int w = nbrs[k];
      if (seen[w]) continue;
      seen[w] = 1;
      view.parent[w] = v;
      view.parent_weight[w] = weights[k];
      view.depth[w] = view.depth[v] + 1;
      kids.push_back(w);
    }
    std::stable_sort(kids.begin(), kids.end(), [&](int a, int b) {
      return prioritized(a) > prioritized(b);
    });
    for (auto it = kids.rbegin(); it != kids.rend(); ++it) stack.push_back(*it);
  }
  return view;
}

TreePath PathBetween(const Tree& tree, const RootedTreeView& view, int a,
                     int b) {
  if (!tree.Contains(a) || !tree.Contains(b)) {
    throw Error(ErrorCode::kInvalidArgument, "path endpoint not in tree");
  }
  std::vector<int> front{a};
  std::vector<int> back{b};
  double weight = 0.0;
  int x = a;
  int y = b;
  while (x != y) {
    if (view.depth[x] >= view.depth[y]) {
      weight += view.parent_weight[x];
      x = view.parent[x];
      front.push_back(x);
    } else {
      weight += view.parent_weight[y];
      y = view.parent[y];
      back.push_back(y);
    }
  }
  // x == y is the meeting vertex, present at the end of both lists.
  back.pop_back();
  front.insert(front.end(), back.rbegin(), back.rend());
  return {std::move(front), weight};
}

std::vector<TreePath> PathDoubleCover(const Tree& tree) {
  if (tree.size() < 2) {
    throw Error(ErrorCode::kInvalidArgument,
                "path double cover needs at least 2 vertices");
  }
  const RootedTreeView view = RootTree(tree, tree.vertices().front());
  std::vector<int> leaves;
  for (int v : view.preorder) {
    if (tree.IsLeaf(v)) leaves.push_back(v);
  }
  std::vector<TreePath> paths;
  paths.reserve(leaves.size());
  for (std::size_t i = 0; i < leaves.size(); ++i) {
    paths.push_back(
        PathBetween(tree, view, leaves[i], leaves[(i + 1) % leaves.size()]));
  }
  return paths;
}

TreePath HeaviestInternalPath(const Tree& tree) {
  if (tree.size() < 3) {
    throw Error(ErrorCode::kInvalidArgument,
                "a tree needs at least 3 vertices to have a non-leaf");
  }
  std::vector<int> internal;
  for (int v : tree.vertices()) {
    if (!tree.IsLeaf(v)) internal.push_back(v);
  }
  const int bound = tree.label_bound();
  int best_a = internal.front();
  int best_b = internal.front();
  double best_weight = 0.0;
  std::vector<double> dist(bound);
  std::vector<int> stack;
  std::vector<int> from(bound);
  for (int a : internal) {
    dist[a] = 0.0;
    from[a] = -1;
    stack.assign(1, a);
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      const auto nbrs = tree.Neighbors(v);
      const auto weights = tree.NeighborWeights(v);
      for (std::size_t k = 0; k < nbrs.size(); ++k) {
        if (nbrs[k] == from[v]) continue;
        from[nbrs[k]] = v;
        dist[nbrs[k]] = dist[v] + weights[k];
        stack.push_back(nbrs[k]);
      }
    }
    for (int b : internal) {
      if (b > a && dist[b] > best_weight) {
        best_weight = dist[b];
        best_a = a;
        best_b = b;
      }
    }
  }
  const RootedTreeView view = RootTree(tree, best_a);
  return PathBetween(tree, view, best_a, best_b);
}

}  // namespace mstratio
