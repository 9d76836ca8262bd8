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

// Clique reduction for MAX-MST-ratio and the uniform weight lift that makes
// any weighted complete graph Euclidean-realizable.

#ifndef MSTRATIO_HARDNESS_H_
#define MSTRATIO_HARDNESS_H_

#include <span>
#include <vector>

#include "mstratio/core.h"
#include "mstratio/ratio.h"

namespace mstratio {

// Complete graph with weight n on source edges and 1 on non-edges.
struct ReductionInstance {
  SimpleGraph source;
  WeightedCompleteGraph reduced;
  int size() const { return source.size(); }
};

ReductionInstance ReduceClique(const SimpleGraph& source);

struct ColoringValue {
  Coloring coloring;
  double value = 0.0;  // |MST(red)| + |MST(blue)| in the reduced graph
};

// Colors all but one clique vertex red and everything else blue. Cliques
// with fewer than 3 vertices give the coloring with only the first clique
// vertex (or vertex 0) red.
ColoringValue CliqueToColoring(const ReductionInstance& instance,
                               std::span<const int> clique);

// Recovers a clique of size >= floor(k/n)/2 + 1 from a coloring of value k.
std::vector<int> ColoringToClique(const ReductionInstance& instance,
                                  const Coloring& coloring);

inline constexpr int kMaxCliqueSearchVertices = 16;

// Exact maximum clique by subset enumeration; ties go to the smallest mask.
std::vector<int> MaxCliqueBruteForce(const SimpleGraph& graph);

struct RealizationLift {
  WeightedCompleteGraph original;
  double shift = 0.0;  // N
  WeightedCompleteGraph lifted;
  PointSet embedding;  // n points in R^(n-1)
  double max_relative_distance_error = 0.0;
  // N <= n^2 * max weight.
  bool within_quadratic_budget = false;
};

// Smallest shift N (to 3 significant digits) for which w + N is the distance
// graph of a point set: N = 0 is tried first, then N = w_max * 2^j until the
// double-centered squared-distance matrix is positive semidefinite and the
// factored coordinates reproduce the weights, then bisection.
RealizationLift LiftAndRealize(const WeightedCompleteGraph& graph);

// Enumerates every coloring of both graphs: the value shift must be exactly
// (n-2) N everywhere and the sets of argmax colorings must coincide.
bool LiftPreservesArgmax(const WeightedCompleteGraph& original,
                         const WeightedCompleteGraph& lifted);

}  // namespace mstratio

#endif  // MSTRATIO_HARDNESS_H_
