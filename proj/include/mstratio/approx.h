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

// Polynomial-time colorings and the constructive upper-bound certificate.
//
// ApproxColoring deletes the lightest MST edge and colors the two
// components, which gives ratio >= (n-2)/(n-1) on metric instances and hence
// a 3-approximation. BipartiteColoring 2-colors the MST so every tree edge is
// colorful.
//
// UpperBoundCertifier builds, for any coloring, explicit spanning trees of
// both color classes whose total weight is at most (3 - 4/(n-1)) |T|:
//   * T is rooted at an endpoint r of the heaviest path P* between
//     non-leaves and explored by DFS with P* vertices first;
//   * monochromatic tree edges are kept;
//   * for a vertex v with an opposite-colored child w, the nearest
//     v-colored descendants u_1..u_x of w (in DFS order) are chained
//     u_1u_2, ..., u_(x-1)u_x, u_x v;
//   * vertices of the color other than r's that have no ancestor of their
//     own color are chained in DFS order.
// When r is blue the roles of the two colors are swapped.

#ifndef MSTRATIO_APPROX_H_
#define MSTRATIO_APPROX_H_

#include <cstdint>
#include <vector>

#include "mstratio/core.h"
#include "mstratio/mst.h"
#include "mstratio/ratio.h"

namespace mstratio {

// n >= 3.
RatioEvaluation ApproxColoring(const WeightedCompleteGraph& graph);
// n >= 2.
RatioEvaluation BipartiteColoring(const WeightedCompleteGraph& graph);

// (3 - 4/(n-1)).
double MetricRatioUpperBound(int n);

struct CertificateEdges {
  std::vector<Edge> red;
  std::vector<Edge> blue;
  double red_weight = 0.0;
  double blue_weight = 0.0;
  double combined_weight() const { return red_weight + blue_weight; }
};

struct CertificateReport {
  Tree tree;
  TreePath pstar;
  double leaf_weight = 0.0;
  Tree red_tree;
  Tree blue_tree;
  double combined_weight = 0.0;
  double bound = 0.0;
  bool within_bound = false;
  // W_P* + W_L >= 4 |T| / (n-1).
  bool key_inequality = false;
};

class UpperBoundCertifier {
 public:
  // Requires a metric instance with n >= 5.
  explicit UpperBoundCertifier(const WeightedCompleteGraph& graph);

  const Tree& tree() const { return tree_; }
  const TreePath& pstar() const { return pstar_; }
  const RootedTreeView& view() const { return view_; }
  int root() const { return view_.root; }
  double leaf_weight() const { return leaf_weight_; }
  double bound() const { return bound_; }

  CertificateEdges Construct(const Coloring& coloring) const;
  CertificateEdges Construct(std::uint64_t red_mask) const;
  CertificateReport Certify(const Coloring& coloring) const;

 private:
  CertificateEdges Build(const std::vector<char>& red) const;

  WeightedCompleteGraph graph_;
  Tree tree_;
  TreePath pstar_;
  RootedTreeView view_;
  double leaf_weight_ = 0.0;
  double bound_ = 0.0;
};

CertificateReport CertifyUpperBound(const WeightedCompleteGraph& graph,
                                    const Coloring& coloring);

}  // namespace mstratio

#endif  // MSTRATIO_APPROX_H_
