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

#include "mstratio/approx.h"

#include <algorithm>
#include <string>
#include <tuple>

namespace mstratio {
namespace {

// Vertices reachable from `start` in `tree` without using edge (cut_u, cut_v).
std::vector<int> ComponentWithout(const Tree& tree, int start, int cut_u,
                                  int cut_v) {
  std::vector<char> seen(tree.label_bound(), 0);
  std::vector<int> stack{start};
  std::vector<int> out;
  seen[start] = 1;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    out.push_back(v);
    for (int w : tree.Neighbors(v)) {
      if (seen[w]) continue;
      if ((v == cut_u && w == cut_v) || (v == cut_v && w == cut_u)) continue;
      seen[w] = 1;
      stack.push_back(w);
    }
  }
  return out;
}

const WeightedCompleteGraph& RequireCertifiable(
    const WeightedCompleteGraph& graph) {
  if (graph.size() < 5) {
    throw Error(ErrorCode::kInvalidArgument,
                "the upper-bound certificate needs n >= 5");
  }
  if (graph.metric_state() == MetricState::kUnknown) ValidateMetric(graph);
  if (graph.metric_state() != MetricState::kMetric) {
    throw Error(ErrorCode::kNotMetric,
                "the upper-bound certificate needs a metric instance");
  }
  return graph;
}

}  // namespace

RatioEvaluation ApproxColoring(const WeightedCompleteGraph& graph) {
  const int n = graph.size();
  if (n < 3) {
    throw Error(ErrorCode::kInvalidArgument,
                "the approximation needs at least 3 vertices");
  }
  const Tree tree = MinimumSpanningTree(graph);
  const Edge lightest = *std::min_element(
      tree.edges().begin(), tree.edges().end(),
      [](const Edge& a, const Edge& b) {
        return std::tie(a.weight, a.u, a.v) < std::tie(b.weight, b.u, b.v);
      });
  const std::vector<int> side =
      ComponentWithout(tree, lightest.u, lightest.u, lightest.v);
  return MstRatio(graph, Coloring::FromRedSet(n, side));
}

RatioEvaluation BipartiteColoring(const WeightedCompleteGraph& graph) {
  const int n = graph.size();
  if (n < 2) {
    throw Error(ErrorCode::kInvalidArgument,
                "a proper coloring needs at least 2 vertices");
  }
  const Tree tree = MinimumSpanningTree(graph);
  const RootedTreeView view = RootTree(tree, 0);
  std::vector<bool> red(n);
  for (int v = 0; v < n; ++v) red[v] = view.depth[v] % 2 == 0;
  return MstRatio(graph, Coloring::FromFlags(std::move(red)));
}

double MetricRatioUpperBound(int n) {
  return 3.0 - 4.0 / static_cast<double>(n - 1);
}

// UpperBoundCertifier.

UpperBoundCertifier::UpperBoundCertifier(const WeightedCompleteGraph& graph)
    : graph_(RequireCertifiable(graph)),
      tree_(MinimumSpanningTree(graph_)),
      pstar_(HeaviestInternalPath(tree_)) {
  std::vector<char> on_path(graph_.size(), 0);
  for (int v : pstar_.vertices) on_path[v] = 1;
  view_ = RootTree(tree_, pstar_.vertices.front(), on_path);
  for (const Edge& e : tree_.edges()) {
    if (tree_.IsLeaf(e.u) || tree_.IsLeaf(e.v)) leaf_weight_ += e.weight;
  }
  bound_ = MetricRatioUpperBound(graph_.size()) * tree_.total_weight();
}

CertificateEdges UpperBoundCertifier::Construct(
    const Coloring& coloring) const {
  if (coloring.size() != graph_.size()) {
    throw Error(ErrorCode::kImproperColoring,
                "coloring size does not match the instance");
  }
  std::vector<char> red(graph_.size());
  for (int v = 0; v < graph_.size(); ++v) red[v] = coloring.is_red(v);
  return Build(red);
}

CertificateEdges UpperBoundCertifier::Construct(std::uint64_t red_mask) const {
  std::vector<char> red(graph_.size());
  for (int v = 0; v < graph_.size(); ++v) red[v] = (red_mask >> v) & 1;
  return Build(red);
}

CertificateEdges UpperBoundCertifier::Build(const std::vector<char>& red) const {
  CertificateEdges out;
  auto add = [&](int a, int b) {
    const double w = graph_.weight(a, b);
    Edge e{std::min(a, b), std::max(a, b), w};
    if (red[a]) {
      out.red.push_back(e);
      out.red_weight += w;
    } else {
      out.blue.push_back(e);
      out.blue_weight += w;
    }
  };
  auto chain = [&](const std::vector<int>& seq) {
    for (std::size_t i = 1; i < seq.size(); ++i) add(seq[i - 1], seq[i]);
  };

  for (const Edge& e : tree_.edges()) {
    if (red[e.u] == red[e.v]) add(e.u, e.v);
  }

  // Preorder walk of the subtree below `top` that descends only through
  // vertices colored `through`; every vertex of the other color reached is
  // collected and not expanded. Children are pushed in reverse so the
  // collected vertices come out sorted by start time.
  std::vector<int> stack;
  std::vector<int> found;
  auto collect_below = [&](int top, char through) {
    found.clear();
    stack.clear();
    const auto& kids = view_.children[top];
    for (auto it = kids.rbegin(); it != kids.rend(); ++it) stack.push_back(*it);
    while (!stack.empty()) {
      const int x = stack.back();
      stack.pop_back();
      if (red[x] != through) {
        found.push_back(x);
        continue;
      }
      const auto& sub = view_.children[x];
      for (auto it = sub.rbegin(); it != sub.rend(); ++it) stack.push_back(*it);
    }
  };

  for (int v : view_.preorder) {
    for (int w : view_.children[v]) {
      if (red[w] == red[v]) continue;
      collect_below(w, red[w]);
      if (found.empty()) continue;
      found.push_back(v);
      chain(found);
    }
  }

  // Vertices of the non-root color with no ancestor of their own color.
  const int root = view_.root;
  found.clear();
  stack.assign(1, root);
  while (!stack.empty()) {
    const int x = stack.back();
    stack.pop_back();
    if (red[x] != red[root]) {
      found.push_back(x);
      continue;
    }
    const auto& sub = view_.children[x];
    for (auto it = sub.rbegin(); it != sub.rend(); ++it) stack.push_back(*it);
  }
  chain(found);
  return out;
}

CertificateReport UpperBoundCertifier::Certify(const Coloring& coloring) const {
  CertificateEdges edges = Construct(coloring);
  const int n = graph_.size();
  const double total = tree_.total_weight();
  const double combined = edges.combined_weight();
  return CertificateReport{
      tree_,
      pstar_,
      leaf_weight_,
      Tree(coloring.RedVertices(), std::move(edges.red)),
      Tree(coloring.BlueVertices(), std::move(edges.blue)),
      combined,
      bound_,
      combined <= bound_ + 1e-9 * total,
      pstar_.weight + leaf_weight_ >=
          4.0 / static_cast<double>(n - 1) * total - 1e-9 * total};
}

CertificateReport CertifyUpperBound(const WeightedCompleteGraph& graph,
                                    const Coloring& coloring) {
  return UpperBoundCertifier(graph).Certify(coloring);
}

}  // namespace mstratio
