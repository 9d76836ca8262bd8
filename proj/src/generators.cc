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

#include "mstratio/generators.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <queue>
#include <string>

#include "mstratio/rng.h"

namespace mstratio {
namespace {

void Require(bool ok, const std::string& message) {
  if (!ok) throw Error(ErrorCode::kInvalidArgument, message);
}

}  // namespace

std::string_view FamilyName(Family family) {
  switch (family) {
    case Family::kUniformCube:
      return "uniform_cube";
    case Family::kTriangularChain:
      return "triangular_chain";
    case Family::kPentagonCore:
      return "pentagon_core";
    case Family::kTripod:
      return "tripod";
    case Family::kMetricExtremal:
      return "metric_extremal";
    case Family::kCliqueReduction:
      return "clique_reduction";
  }
  return "unknown";
}

std::optional<Family> ParseFamily(std::string_view name) {
  for (Family f : {Family::kUniformCube, Family::kTriangularChain,
                   Family::kPentagonCore, Family::kTripod,
                   Family::kMetricExtremal, Family::kCliqueReduction}) {
    if (FamilyName(f) == name) return f;
  }
  return std::nullopt;
}

PointSet GenerateUniform(int n, int d, std::uint64_t seed) {
  Require(n >= 1 && d >= 1, "uniform cloud needs n >= 1 and d >= 1");
  Rng rng(seed);
  std::vector<double> coords(static_cast<std::size_t>(n) * d);
  for (double& x : coords) x = rng.Uniform();
  return PointSet(d, std::move(coords));
}

PointSet GenerateTriangularChain(int k, double stretch) {
  Require(k >= 1, "triangular chain needs k >= 1");
  Require(stretch > 0.0 && stretch <= 1e-2,
          "chain stretch must lie in (0, 1e-2]");
  const int n = 2 * k + 1;
  const double height = std::sqrt(3.0) / 2.0;
  std::vector<double> coords;
  coords.reserve(2 * n);
  for (int i = 1; i <= n; ++i) {
    coords.push_back((i - 1) * (1.0 + stretch) / 2.0);
    coords.push_back(i % 2 == 0 ? height : 0.0);
  }
  return PointSet(2, std::move(coords));
}

PointSet GeneratePentagonCore(int n, double core_radius) {
  Require(n >= 10, "pentagon core needs n >= 10");
  Require(core_radius > 0.0 && core_radius <= 1e-10,
          "core radius must lie in (0, 1e-10]");
  const double two_pi = 2.0 * std::numbers::pi;
  const int core = n - 5;
  std::vector<double> coords;
  coords.reserve(2 * n);
  for (int i = 0; i < core; ++i) {
    const double a = two_pi * i / core;
    coords.push_back(core_radius * std::cos(a));
    coords.push_back(core_radius * std::sin(a));
  }
  for (int i = 0; i < 5; ++i) {
    const double a = std::numbers::pi / 2.0 + two_pi * i / 5.0;
    coords.push_back(std::cos(a));
    coords.push_back(std::sin(a));
  }
  return PointSet(2, std::move(coords));
}

PointSet GenerateTripod(int m, double spread, std::uint64_t seed) {
  Require(m >= 1, "tripod needs m >= 1");
  Require(spread > 0.0 && spread <= 1e-3, "tripod spread must lie in (0, 1e-3]");
  Rng rng(seed);
  std::vector<double> coords;
  coords.reserve(2 * (3 * m + 1));
  for (int corner = 0; corner < 3; ++corner) {
    const double a = std::numbers::pi / 2.0 + 2.0 * std::numbers::pi * corner / 3.0;
    const double cx = std::cos(a);
    const double cy = std::sin(a);
    for (int i = 0; i < m; ++i) {
      const double r = spread * std::sqrt(rng.Uniform());
      const double t = 2.0 * std::numbers::pi * rng.Uniform();
      coords.push_back(cx + r * std::cos(t));
      coords.push_back(cy + r * std::sin(t));
    }
  }
  coords.push_back(0.0);
  coords.push_back(0.0);
  return PointSet(2, std::move(coords));
}

WeightedCompleteGraph GenerateMetricExtremal(int k, double eps) {
  Require(k >= 2, "extremal family needs k >= 2");
  Require(eps > 0.0 && eps < 1.0, "extremal eps must lie in (0, 1)");
  const int n = 2 * k + 1;
  const int hub = n - 1;
  std::vector<double> weights;
  weights.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (j == hub) {
        weights.push_back(1.0);
      } else if (i % 2 == 0 && j == i + 1) {
        weights.push_back(eps);
      } else {
        weights.push_back(2.0);
      }
    }
  }
  return WeightedCompleteGraph(n, weights);
}

WeightedCompleteGraph GenerateRandomMetric(int n, std::uint64_t seed) {
  Require(n >= 2, "random metric needs n >= 2");
  Rng rng(seed);
  std::vector<double> d(static_cast<std::size_t>(n) * n, 0.0);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      d[i * n + j] = d[j * n + i] = rng.Uniform(0.1, 1.0);
    }
  }
  for (int via = 0; via < n; ++via) {
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        d[i * n + j] = std::min(d[i * n + j], d[i * n + via] + d[via * n + j]);
      }
    }
  }
  std::vector<double> weights;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) weights.push_back(d[i * n + j]);
  }
  return WeightedCompleteGraph(n, weights, MetricState::kMetric);
}

WeightedCompleteGraph GenerateRandomWeights(int n, double lo, double hi,
                                            std::uint64_t seed) {
  Require(n >= 1, "random weights need n >= 1");
  Require(lo > 0.0 && hi >= lo, "random weights need 0 < lo <= hi");
  Rng rng(seed);
  std::vector<double> weights(static_cast<std::size_t>(n) * (n - 1) / 2);
  for (double& w : weights) w = rng.Uniform(lo, hi);
  return WeightedCompleteGraph(n, weights);
}

SimpleGraph GenerateRandomGraph(int n, double p, std::uint64_t seed) {
  Require(n >= 1, "random graph needs n >= 1");
  Require(p >= 0.0 && p <= 1.0, "edge probability must lie in [0, 1]");
  Rng rng(seed);
  SimpleGraph g(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (rng.Bernoulli(p)) g.AddEdge(i, j);
    }
  }
  return g;
}

Tree GenerateRandomTree(int n, std::uint64_t seed) {
  Require(n >= 1, "random tree needs n >= 1");
  Rng rng(seed);
  std::vector<Edge> edges;
  if (n == 2) edges.push_back({0, 1, rng.Uniform(0.5, 1.5)});
  if (n > 2) {
    std::vector<int> code(n - 2);
    for (int& c : code) c = static_cast<int>(rng.Below(n));
    std::vector<int> degree(n, 1);
    for (int c : code) ++degree[c];
    std::priority_queue<int, std::vector<int>, std::greater<>> leaves;
    for (int v = 0; v < n; ++v) {
      if (degree[v] == 1) leaves.push(v);
    }
    for (int c : code) {
      const int leaf = leaves.top();
      leaves.pop();
      edges.push_back({std::min(leaf, c), std::max(leaf, c), 0.0});
      if (--degree[c] == 1) leaves.push(c);
    }
    const int a = leaves.top();
    leaves.pop();
    const int b = leaves.top();
    edges.push_back({std::min(a, b), std::max(a, b), 0.0});
    for (Edge& e : edges) e.weight = rng.Uniform(0.5, 1.5);
  }
  return Tree::OnFirstVertices(n, std::move(edges));
}

WeightedCompleteGraph TreeMetric(const Tree& tree) {
  const int n = tree.size();
  Require(n >= 2, "tree metric needs at least 2 vertices");
  Require(tree.vertices().back() == n - 1,
          "tree metric needs vertices labeled 0..n-1");
  std::vector<double> d(static_cast<std::size_t>(n) * n, 0.0);
  std::vector<int> stack;
  std::vector<int> from(n);
  for (int s = 0; s < n; ++s) {
    stack.assign(1, s);
    from[s] = -1;
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      const auto nbrs = tree.Neighbors(v);
      const auto ws = tree.NeighborWeights(v);
      for (std::size_t k = 0; k < nbrs.size(); ++k) {
        if (nbrs[k] == from[v]) continue;
        from[nbrs[k]] = v;
        d[s * n + nbrs[k]] = d[s * n + v] + ws[k];
        stack.push_back(nbrs[k]);
      }
    }
  }
  std::vector<double> weights;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) weights.push_back(d[i * n + j]);
  }
  return WeightedCompleteGraph(n, weights, MetricState::kMetric);
}

}  // namespace mstratio
