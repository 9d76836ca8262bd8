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

#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "mstratio/approx.h"
#include "mstratio/ratio.h"
#include "fixtures.h"
#include "oracles.h"

namespace mstratio {
namespace {

using fixture::ExpectErrorCode;

TEST(Family, NamesRoundTrip) {
  for (Family f : {Family::kUniformCube, Family::kTriangularChain,
                   Family::kPentagonCore, Family::kTripod,
                   Family::kMetricExtremal, Family::kCliqueReduction}) {
    EXPECT_EQ(ParseFamily(FamilyName(f)), f);
  }
  EXPECT_FALSE(ParseFamily("hexagon").has_value());
}

TEST(GenerateUniform, DeterministicAndInCube) {
  EXPECT_EQ(GenerateUniform(5, 2, 42), GenerateUniform(5, 2, 42));
  EXPECT_NE(GenerateUniform(5, 2, 42), GenerateUniform(5, 2, 43));
  const PointSet p = GenerateUniform(10000, 2, 1);
  EXPECT_EQ(p.size(), 10000);
  for (double x : p.coordinates()) {
    EXPECT_GE(x, 0.0);
    EXPECT_LE(x, 1.0);
  }
}

TEST(GenerateUniform, EmstScalesLikeSquareRoot) {
  const double w = EuclideanMstWeight(GenerateUniform(10000, 2, 17));
  EXPECT_GE(w / 100.0, 0.55);
  EXPECT_LE(w / 100.0, 0.75);
}

TEST(GenerateTriangularChain, Coordinates) {
  const double delta = 1e-3;
  const PointSet p = GenerateTriangularChain(3, delta);
  ASSERT_EQ(p.size(), 7);
  for (int i = 0; i < 7; ++i) {
    EXPECT_DOUBLE_EQ(p.point(i)[0], i * (1 + delta) / 2);
    EXPECT_DOUBLE_EQ(p.point(i)[1], i % 2 ? std::sqrt(3.0) / 2 : 0.0);
  }
}

TEST(GenerateTriangularChain, SingleTriangle) {
  const Tree t = EuclideanMst(GenerateTriangularChain(1, 1e-3));
  ASSERT_EQ(t.edges().size(), 2u);
  EXPECT_EQ(t.edges()[0], (Edge{0, 1, t.edges()[0].weight}));
  EXPECT_EQ(t.edges()[1], (Edge{1, 2, t.edges()[1].weight}));
}

TEST(GenerateTriangularChain, MstIsTheConsecutivePath) {
  for (double delta : {1e-3, 1e-2}) {
    for (int k = 1; k <= 50; ++k) {
      const PointSet p = GenerateTriangularChain(k, delta);
      const Tree t = EuclideanMst(p);
      for (const Edge& e : t.edges()) ASSERT_EQ(e.v, e.u + 1) << k;
      // Consecutive gaps stay strictly below the skip distance.
      EXPECT_LT(p.Distance(0, 1), p.Distance(0, 2));
    }
  }
}

TEST(GenerateTriangularChain, RatiosForFiveTriangles) {
  const double delta = 1e-3;
  const auto g = DistanceGraph(GenerateTriangularChain(5, delta));
  const double base = MinimumSpanningTree(g).total_weight();
  EXPECT_NEAR(base, 10.0, 10 * delta);
  EXPECT_NEAR(MaxRatioExact(g).best.value(), 13.0, 13 * 5 * delta);
  EXPECT_NEAR(BipartiteColoring(g).value(), 9.0, 9 * 5 * delta);
}

TEST(GenerateTriangularChain, RejectsBadStretch) {
  ExpectErrorCode([] { GenerateTriangularChain(3, 0.0); },
                  ErrorCode::kInvalidArgument);
  ExpectErrorCode([] { GenerateTriangularChain(3, 0.02); },
                  ErrorCode::kInvalidArgument);
  ExpectErrorCode([] { GenerateTriangularChain(0, 1e-3); },
                  ErrorCode::kInvalidArgument);
}

TEST(GeneratePentagonCore, PentagonGeometry) {
  const PointSet p = GeneratePentagonCore(12, 1e-12);
  ASSERT_EQ(p.size(), 12);
  // The pentagon occupies the last five slots.
  const double side = 2 * std::sin(std::numbers::pi / 5);
  EXPECT_NEAR(side, 1.17557, 1e-5);
  EXPECT_NEAR(std::numbers::phi * side, 1.90211, 1e-5);
  for (int i = 0; i < 5; ++i) {
    EXPECT_NEAR(p.Distance(7 + i, 7 + (i + 1) % 5), side, 1e-12);
    EXPECT_NEAR(p.Distance(7 + i, 7 + (i + 2) % 5), std::numbers::phi * side,
                1e-12);
  }
  for (int i = 0; i < 7; ++i) {
    EXPECT_LT(std::hypot(p.point(i)[0], p.point(i)[1]), 3e-12);
  }
}

TEST(GeneratePentagonCore, AverageBelowOne) {
  const auto g = DistanceGraph(GeneratePentagonCore(12, 1e-12));
  EXPECT_LT(AverageRatioExact(g), 1.0);
}

TEST(GeneratePentagonCore, Preconditions) {
  ExpectErrorCode([] { GeneratePentagonCore(9); }, ErrorCode::kInvalidArgument);
  ExpectErrorCode([] { GeneratePentagonCore(12, 1e-3); },
                  ErrorCode::kInvalidArgument);
}

TEST(GenerateTripod, Layout) {
  const double eps = 1e-4;
  const PointSet p = GenerateTripod(6, eps, 3);
  ASSERT_EQ(p.size(), 19);
  EXPECT_EQ(p.point(18)[0], 0.0);
  EXPECT_EQ(p.point(18)[1], 0.0);
  for (int i = 0; i < 18; ++i) {
    const double r = std::hypot(p.point(i)[0], p.point(i)[1]);
    EXPECT_NEAR(r, 1.0, eps + 1e-15);
  }
  EXPECT_EQ(p, GenerateTripod(6, eps, 3));
}

TEST(GenerateTripod, SingletonArmsGiveThreeSpokes) {
  const PointSet p = GenerateTripod(1, 1e-6, 1);
  EXPECT_NEAR(EuclideanMstWeight(p), 3.0, 1e-5);
}

TEST(GenerateTripod, SixPerArmAverageAndMax) {
  const auto g = DistanceGraph(GenerateTripod(6, 1e-4, 0));
  const ColoringSummary s = SummarizeColorings(g);
  EXPECT_GE(s.mean_ratio, 1.9);
  EXPECT_LE(s.mean_ratio, 2.16);
  EXPECT_LE(s.best.ratio, MetricRatioUpperBound(19) + 1e-9);
}

TEST(GenerateMetricExtremal, WeightPattern) {
  const double eps = 0.01;
  const auto g = GenerateMetricExtremal(2, eps);
  ASSERT_EQ(g.size(), 5);
  EXPECT_NEAR(MinimumSpanningTree(g).total_weight(), 2.02, 1e-12);
  for (int i = 0; i < 5; ++i) {
    for (int j = i + 1; j < 5; ++j) {
      const double expected = j == 4 ? 1.0 : (j == i + 1 && i % 2 == 0) ? eps : 2.0;
      EXPECT_EQ(g.weight(i, j), expected);
    }
  }
}

TEST(GenerateMetricExtremal, AlwaysMetric) {
  for (int k = 2; k <= 12; ++k) {
    for (double eps : {1e-4, 0.3, 0.99}) {
      auto g = GenerateMetricExtremal(k, eps);
      g.set_metric_state(MetricState::kUnknown);
      EXPECT_TRUE(ValidateMetric(g).metric);
    }
  }
  ExpectErrorCode([] { GenerateMetricExtremal(1, 0.1); },
                  ErrorCode::kInvalidArgument);
  ExpectErrorCode([] { GenerateMetricExtremal(3, 1.0); },
                  ErrorCode::kInvalidArgument);
}

TEST(GenerateMetricExtremal, MaximumApproachesUpperBound) {
  const double eps = 1e-4;
  for (int k = 2; k <= 6; ++k) {
    const int n = 2 * k + 1;
    const double gamma = MaxRatioExact(GenerateMetricExtremal(k, eps)).best.ratio;
    EXPECT_LE(gamma, MetricRatioUpperBound(n) + 1e-12);
    EXPECT_GE(gamma, MetricRatioUpperBound(n) / (1 + eps) - 1e-6);
  }
}

TEST(GenerateRandomMetric, MetricAndDeterministic) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto g = GenerateRandomMetric(12, seed);
    EXPECT_TRUE(oracle::SameTriangleInequality(g));
    EXPECT_EQ(g.UpperTriangular(), GenerateRandomMetric(12, seed).UpperTriangular());
  }
}

TEST(GenerateRandomGraph, EdgeDensity) {
  const SimpleGraph g = GenerateRandomGraph(60, 0.3, 5);
  const double edges = static_cast<double>(g.Edges().size());
  EXPECT_NEAR(edges / (60 * 59 / 2), 0.3, 0.05);
  EXPECT_TRUE(GenerateRandomGraph(10, 0.0, 1).Edges().empty());
  EXPECT_EQ(GenerateRandomGraph(10, 1.0, 1).Edges().size(), 45u);
}

TEST(GenerateRandomTree, IsSpanningTree) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Tree t = GenerateRandomTree(2 + seed, seed);
    EXPECT_EQ(t.size(), static_cast<int>(2 + seed));
    EXPECT_TRUE(IsSpanningTreeOf(t.edges(), t.vertices()));
  }
}

TEST(TreeMetric, ShortestPathDistances) {
  const Tree t = GenerateRandomTree(9, 6);
  const auto g = TreeMetric(t);
  const auto d = oracle::TreeDistances(t);
  for (int i = 0; i < 9; ++i)
    for (int j = i + 1; j < 9; ++j) EXPECT_NEAR(g.weight(i, j), d[i][j], 1e-12);
  EXPECT_NEAR(MinimumSpanningTree(g).total_weight(), t.total_weight(), 1e-12);
}

}  // namespace
}  // namespace mstratio
