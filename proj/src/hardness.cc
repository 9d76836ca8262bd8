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

#include "mstratio/hardness.h"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <optional>
#include <string>

#include "mstratio/mst.h"

namespace mstratio {
namespace {

constexpr double kPsdTolerance = 1e-9;       // times the Gram trace
constexpr double kDistanceTolerance = 1e-6;  // relative
constexpr int kMaxDoublings = 40;

void CheckVertices(int n, std::span<const int> vertices) {
  std::vector<char> seen(n, 0);
  for (int v : vertices) {
    if (v < 0 || v >= n) {
      throw Error(ErrorCode::kInvalidArgument,
                  "vertex " + std::to_string(v) + " out of range");
    }
    if (seen[v]) {
      throw Error(ErrorCode::kInvalidArgument,
                  "vertex " + std::to_string(v) + " listed twice");
    }
    seen[v] = 1;
  }
}

struct Embedding {
  Eigen::MatrixXd coordinates;  // n x (n-1)
  double max_relative_error = 0.0;
};

// Classical scaling of the shifted weights; empty when the Gram matrix has
// a significantly negative eigenvalue or the factorization is inaccurate.
std::optional<Embedding> TryEmbed(const WeightedCompleteGraph& graph,
                                  double shift) {
  const int n = graph.size();
  Eigen::MatrixXd gram(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const double d = i == j ? 0.0 : graph.weight(i, j) + shift;
      gram(i, j) = -0.5 * d * d;
    }
  }
  const Eigen::VectorXd row_means = gram.rowwise().mean();
  const double grand_mean = row_means.mean();
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      gram(i, j) += grand_mean - row_means(i) - row_means(j);
    }
  }
  const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(gram);
  if (solver.info() != Eigen::Success) return std::nullopt;
  const Eigen::VectorXd& values = solver.eigenvalues();  // ascending
  const double trace = gram.trace();
  if (values(0) < -kPsdTolerance * trace) return std::nullopt;

  const int dim = std::max(1, n - 1);
  Embedding out;
  out.coordinates.resize(n, dim);
  out.coordinates.setZero();
  for (int c = 0; c < std::min(dim, n); ++c) {
    const int k = n - 1 - c;  // c-th largest eigenvalue
    const double scale = std::sqrt(std::max(0.0, values(k)));
    out.coordinates.col(c) = solver.eigenvectors().col(k) * scale;
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const double target = graph.weight(i, j) + shift;
      const double got =
          (out.coordinates.row(i) - out.coordinates.row(j)).norm();
      out.max_relative_error =
          std::max(out.max_relative_error, std::abs(got - target) / target);
    }
  }
  if (!(out.max_relative_error <= kDistanceTolerance)) return std::nullopt;
  return out;
}

WeightedCompleteGraph Shifted(const WeightedCompleteGraph& graph,
                              double shift) {
  std::vector<double> weights = graph.UpperTriangular();
  for (double& w : weights) w += shift;
  return WeightedCompleteGraph(graph.size(), weights, MetricState::kMetric);
}

}  // namespace

ReductionInstance ReduceClique(const SimpleGraph& source) {
  const int n = source.size();
  if (n < 3) {
    throw Error(ErrorCode::kInvalidArgument,
                "the clique reduction needs at least 3 vertices");
  }
  std::vector<double> weights;
  weights.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      weights.push_back(source.HasEdge(i, j) ? static_cast<double>(n) : 1.0);
    }
  }
  return {source, WeightedCompleteGraph(n, weights)};
}

ColoringValue CliqueToColoring(const ReductionInstance& instance,
                               std::span<const int> clique) {
  const int n = instance.size();
  CheckVertices(n, clique);
  if (!instance.source.IsClique(clique)) {
    throw Error(ErrorCode::kInvalidArgument,
                "the given vertices do not form a clique");
  }
  std::vector<int> red;
  if (clique.size() >= 3) {
    red.assign(clique.begin(), clique.end() - 1);
  } else {
    red.push_back(clique.empty() ? 0 : clique.front());
  }
  Coloring coloring = Coloring::FromRedSet(n, red);
  const double value =
      SubsetMstWeight(instance.reduced, coloring.RedVertices()) +
      SubsetMstWeight(instance.reduced, coloring.BlueVertices());
  return {std::move(coloring), value};
}

std::vector<int> ColoringToClique(const ReductionInstance& instance,
                                  const Coloring& coloring) {
  const int n = instance.size();
  if (coloring.size() != n) {
    throw Error(ErrorCode::kImproperColoring,
                "coloring size does not match the instance");
  }
  const WeightedCompleteGraph& g = instance.reduced;
  auto heavy = [](const Edge& e) { return e.weight > 1.5; };
  const Tree red = MinimumSpanningTreeOfSubset(g, coloring.RedVertices());
  const Tree blue = MinimumSpanningTreeOfSubset(g, coloring.BlueVertices());
  const auto red_heavy = std::count_if(red.edges().begin(), red.edges().end(), heavy);
  const auto blue_heavy =
      std::count_if(blue.edges().begin(), blue.edges().end(), heavy);
  // The two trees have n-2 edges in total and light edges weigh 1 < n, so
  // floor(value / n) is exactly the number of heavy edges.
  const long heavy_total = red_heavy + blue_heavy;
  const Tree& chosen = red_heavy >= blue_heavy ? red : blue;

  // Components of the light-edge forest; one representative (the smallest
  // vertex) each.
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const Edge& e : chosen.edges()) {
    if (!heavy(e)) parent[std::max(find(e.u), find(e.v))] = std::min(find(e.u), find(e.v));
  }
  std::vector<int> clique;
  for (int v : chosen.vertices()) {
    if (find(v) == v) clique.push_back(v);
  }
  if (!instance.source.IsClique(clique) ||
      2 * static_cast<long>(clique.size()) < heavy_total + 2) {
    throw Error(ErrorCode::kCliqueVerificationFailed,
                "decoded vertex set is not a large enough clique");
  }
  return clique;
}

std::vector<int> MaxCliqueBruteForce(const SimpleGraph& graph) {
  const int n = graph.size();
  if (n > kMaxCliqueSearchVertices) {
    throw Error(ErrorCode::kEnumerationLimit,
                "max clique search is limited to n <= " +
                    std::to_string(kMaxCliqueSearchVertices));
  }
  std::vector<std::uint32_t> adjacency(n, 0);
  std::vector<int> degree(n, 0);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (graph.HasEdge(i, j)) adjacency[i] |= std::uint32_t{1} << j;
    }
    degree[i] = std::popcount(adjacency[i]);
  }
  std::uint32_t best = 1;
  int best_size = 1;
  const std::uint32_t end = std::uint32_t{1} << n;
  for (std::uint32_t mask = 1; mask < end; ++mask) {
    const int size = std::popcount(mask);
    if (size <= best_size) continue;
    bool clique = true;
    for (std::uint32_t rest = mask; rest != 0 && clique; rest &= rest - 1) {
      const int v = std::countr_zero(rest);
      clique = degree[v] >= size - 1 &&
               (mask & ~(adjacency[v] | (std::uint32_t{1} << v))) == 0;
    }
    if (clique) {
      best = mask;
      best_size = size;
    }
  }
  std::vector<int> out;
  for (int v = 0; v < n; ++v) {
    if ((best >> v) & 1) out.push_back(v);
  }
  return out;
}

RealizationLift LiftAndRealize(const WeightedCompleteGraph& graph) {
  const int n = graph.size();
  if (n < 2) {
    throw Error(ErrorCode::kInvalidArgument,
                "realization needs at least 2 vertices");
  }
  const double w_max = graph.max_weight();
  double shift = 0.0;
  std::optional<Embedding> embedding = TryEmbed(graph, 0.0);
  if (!embedding) {
    double lo = 0.0;
    double hi = w_max;
    int j = 0;
    while (!(embedding = TryEmbed(graph, hi))) {
      if (++j > kMaxDoublings) {
        throw Error(ErrorCode::kRealizationFailed,
                    "no shift up to 2^40 * max weight is realizable");
      }
      lo = hi;
      hi *= 2.0;
    }
    while (hi - lo > 1e-3 * hi) {
      const double mid = 0.5 * (lo + hi);
      if (auto attempt = TryEmbed(graph, mid)) {
        hi = mid;
        embedding = std::move(attempt);
      } else {
        lo = mid;
      }
    }
    shift = hi;
  }
  const Eigen::MatrixXd& x = embedding->coordinates;
  std::vector<double> coords;
  coords.reserve(static_cast<std::size_t>(x.rows()) * x.cols());
  for (int i = 0; i < x.rows(); ++i) {
    for (int c = 0; c < x.cols(); ++c) coords.push_back(x(i, c));
  }
  return RealizationLift{
      graph,
      shift,
      Shifted(graph, shift),
      PointSet(static_cast<int>(x.cols()), std::move(coords)),
      embedding->max_relative_error,
      shift <= static_cast<double>(n) * n * w_max};
}

bool LiftPreservesArgmax(const WeightedCompleteGraph& original,
                         const WeightedCompleteGraph& lifted) {
  const int n = original.size();
  if (lifted.size() != n) return false;
  if (n < 2) {
    throw Error(ErrorCode::kInvalidArgument,
                "argmax comparison needs at least 2 vertices");
  }
  if (n > kMaxCliqueSearchVertices) {
    throw Error(ErrorCode::kEnumerationLimit,
                "argmax comparison is limited to n <= " +
                    std::to_string(kMaxCliqueSearchVertices));
  }
  const double shift = lifted.weight(0, 1) - original.weight(0, 1);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const double d = lifted.weight(i, j) - original.weight(i, j) - shift;
      if (std::abs(d) > 1e-9 * lifted.weight(i, j)) return false;
    }
  }
  const std::uint64_t count = ProperColoringCount(n);
  const std::uint64_t full = (std::uint64_t{1} << n) - 1;
  std::vector<double> before(count);
  std::vector<double> after(count);
  const double expected_shift = (n - 2) * shift;
  for (std::uint64_t index = 0; index < count; ++index) {
    const std::uint64_t mask = CanonicalMask(index);
    before[index] =
        SubsetMstWeight(original, mask) + SubsetMstWeight(original, full ^ mask);
    after[index] =
        SubsetMstWeight(lifted, mask) + SubsetMstWeight(lifted, full ^ mask);
    const double drift = after[index] - before[index] - expected_shift;
    if (std::abs(drift) > 1e-9 * std::max(1.0, std::abs(after[index]))) {
      return false;
    }
  }
  const double max_before = *std::max_element(before.begin(), before.end());
  const double max_after = *std::max_element(after.begin(), after.end());
  const double tol_before = 1e-9 * std::max(1.0, std::abs(max_before));
  const double tol_after = 1e-9 * std::max(1.0, std::abs(max_after));
  for (std::uint64_t index = 0; index < count; ++index) {
    const bool best_before = before[index] >= max_before - tol_before;
    const bool best_after = after[index] >= max_after - tol_after;
    if (best_before != best_after) return false;
  }
  return true;
}

}  // namespace mstratio
