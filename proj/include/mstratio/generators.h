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

// Deterministic instance families and seeded random instances.

#ifndef MSTRATIO_GENERATORS_H_
#define MSTRATIO_GENERATORS_H_

#include <cstdint>
#include <optional>
#include <string_view>

#include "mstratio/core.h"
#include "mstratio/mst.h"

namespace mstratio {

enum class Family {
  kUniformCube,
  kTriangularChain,
  kPentagonCore,
  kTripod,
  kMetricExtremal,
  kCliqueReduction,
};

std::string_view FamilyName(Family family);
std::optional<Family> ParseFamily(std::string_view name);

inline constexpr double kDefaultChainStretch = 1e-3;
inline constexpr double kDefaultCoreRadius = 1e-12;

// n i.i.d. points in [0,1]^d.
PointSet GenerateUniform(int n, int d, std::uint64_t seed);

// 2k+1 points zigzagging on the triangular grid, stretched horizontally by
// (1 + stretch) so consecutive points (distance ~ 1 + stretch/4) are closer
// than second neighbors (distance 1 + stretch) and the EMST is the path.
PointSet GenerateTriangularChain(int k, double stretch = kDefaultChainStretch);

// n-5 points evenly spaced on a circle of radius `core_radius` around the
// origin, plus a regular pentagon inscribed in the unit circle.
PointSet GeneratePentagonCore(int n, double core_radius = kDefaultCoreRadius);

// A regular triangle on the unit circle, m points uniformly within distance
// `spread` of each corner, plus the origin (n = 3m + 1).
PointSet GenerateTripod(int m, double spread, std::uint64_t seed = 0);

// n = 2k+1 vertices: the last vertex has weight 1 to all others, pairs
// (2i, 2i+1) have weight eps, all other pairs weight 2.
WeightedCompleteGraph GenerateMetricExtremal(int k, double eps);

// Shortest-path closure of i.i.d. weights in [0.1, 1]: always metric.
WeightedCompleteGraph GenerateRandomMetric(int n, std::uint64_t seed);

// i.i.d. weights in [lo, hi], not necessarily metric.
WeightedCompleteGraph GenerateRandomWeights(int n, double lo, double hi,
                                            std::uint64_t seed);

// Erdos-Renyi G(n, p).
SimpleGraph GenerateRandomGraph(int n, double p, std::uint64_t seed);

// Uniform labeled tree (random Pruefer code) with weights in [0.5, 1.5].
Tree GenerateRandomTree(int n, std::uint64_t seed);

// Complete graph of tree path lengths; metric by construction.
WeightedCompleteGraph TreeMetric(const Tree& tree);

}  // namespace mstratio

#endif  // MSTRATIO_GENERATORS_H_
