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

#include "mstratio/analysis.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <string>

#include "mstratio/approx.h"
#include "mstratio/mst.h"
#include "mstratio/parallel.h"
#include "mstratio/ratio.h"
#include "mstratio/rng.h"
#include "mstratio/generators.h"

namespace mstratio {
namespace {

constexpr double kOrientationEpsilon = 1e-12;

void Require(bool ok, const std::string& message) {
  if (!ok) throw Error(ErrorCode::kInvalidArgument, message);
}

Estimate MeanAndError(const std::vector<double>& values) {
  Estimate e;
  const double count = static_cast<double>(values.size());
  e.mean = PairwiseSum(values) / count;
  if (values.size() > 1) {
    std::vector<double> sq(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) {
      sq[i] = (values[i] - e.mean) * (values[i] - e.mean);
    }
    e.standard_error = std::sqrt(PairwiseSum(sq) / (count - 1.0) / count);
  }
  return e;
}

std::string Format12(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

struct Point2 {
  double x;
  double y;
};

double Orient(const Point2& a, const Point2& b, const Point2& c) {
  return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
}

bool WithinBox(const Point2& p, const Point2& a, const Point2& b) {
  return p.x >= std::min(a.x, b.x) - kOrientationEpsilon &&
         p.x <= std::max(a.x, b.x) + kOrientationEpsilon &&
         p.y >= std::min(a.y, b.y) - kOrientationEpsilon &&
         p.y <= std::max(a.y, b.y) + kOrientationEpsilon;
}

// Proper crossing of segments ab and cd with disjoint endpoints.
bool Crosses(const Point2& a, const Point2& b, const Point2& c,
             const Point2& d) {
  const double o1 = Orient(a, b, c);
  const double o2 = Orient(a, b, d);
  const double o3 = Orient(c, d, a);
  const double o4 = Orient(c, d, b);
  const bool z1 = std::abs(o1) <= kOrientationEpsilon;
  const bool z2 = std::abs(o2) <= kOrientationEpsilon;
  const bool z3 = std::abs(o3) <= kOrientationEpsilon;
  const bool z4 = std::abs(o4) <= kOrientationEpsilon;
  if ((z1 && WithinBox(c, a, b)) || (z2 && WithinBox(d, a, b)) ||
      (z3 && WithinBox(a, c, d)) || (z4 && WithinBox(b, c, d))) {
    throw Error(ErrorCode::kDegenerateInstance,
                "an MST endpoint touches a segment of the other color");
  }
  if (z1 || z2 || z3 || z4) return false;
  return ((o1 > 0) != (o2 > 0)) && ((o3 > 0) != (o4 > 0));
}

// Euclidean MST edges of a subset, in original labels.
std::vector<Edge> SubsetEmstEdges(const PointSet& points,
                                  const std::vector<int>& subset) {
  if (subset.size() < 2) return {};
  std::vector<double> coords;
  coords.reserve(subset.size() * points.dim());
  for (int v : subset) {
    const auto p = points.point(v);
    coords.insert(coords.end(), p.begin(), p.end());
  }
  const Tree local = EuclideanMst(PointSet(points.dim(), std::move(coords)));
  std::vector<Edge> edges;
  edges.reserve(local.edges().size());
  for (const Edge& e : local.edges()) {
    edges.push_back({subset[e.u], subset[e.v], e.weight});
  }
  return edges;
}

std::vector<Point2> Normalized(const PointSet& points) {
  const int n = points.size();
  double min_x = points.point(0)[0], max_x = min_x;
  double min_y = points.point(0)[1], max_y = min_y;
  for (int i = 1; i < n; ++i) {
    min_x = std::min(min_x, points.point(i)[0]);
    max_x = std::max(max_x, points.point(i)[0]);
    min_y = std::min(min_y, points.point(i)[1]);
    max_y = std::max(max_y, points.point(i)[1]);
  }
  double scale = std::max(max_x - min_x, max_y - min_y);
  if (scale == 0.0) scale = 1.0;
  std::vector<Point2> out(n);
  for (int i = 0; i < n; ++i) {
    out[i] = {(points.point(i)[0] - min_x) / scale,
              (points.point(i)[1] - min_y) / scale};
  }
  return out;
}

int CountCrossings(const std::vector<Point2>& pts,
                   const std::vector<Edge>& red,
                   const std::vector<Edge>& blue) {
  int count = 0;
  for (const Edge& r : red) {
    for (const Edge& b : blue) {
      if (Crosses(pts[r.u], pts[r.v], pts[b.u], pts[b.v])) ++count;
    }
  }
  return count;
}

}  // namespace

double BernsteinAverageLimit(std::int64_t n, int d) {
  Require(n >= 2 && d >= 1, "Bernstein limit needs n >= 2 and d >= 1");
  const double a = 1.0 - 1.0 / d;
  const double nd = static_cast<double>(n);
  auto f = [&](std::int64_t k) {
    const double t = static_cast<double>(k) / nd;
    return std::pow(t, a) + std::pow(1.0 - t, a);
  };
  // q_k proportional to C(n, k), with q_mode = 1.
  const std::int64_t mode = n / 2;
  double total = 0.0;
  double inner = 0.0;
  double q = 1.0;
  for (std::int64_t k = mode; k <= n && q > 1e-300; ++k) {
    total += q;
    if (k >= 1 && k <= n - 1) inner += f(k) * q;
    q *= static_cast<double>(n - k) / static_cast<double>(k + 1);
  }
  q = static_cast<double>(mode) / static_cast<double>(n - mode + 1);
  for (std::int64_t k = mode - 1; k >= 0 && q > 1e-300; --k) {
    total += q;
    if (k >= 1) inner += f(k) * q;
    q *= static_cast<double>(k) / static_cast<double>(n - k + 1);
  }
  // sum over k = 1..n-1 of C(n,k) is 2^n - 2 = 2^n (1 - 2^(1-n)).
  const double tail = n > 1100 ? 0.0 : std::ldexp(1.0, static_cast<int>(1 - n));
  return inner / total / (1.0 - tail);
}

Estimate EstimateBeta(int n, int d, int trials, std::uint64_t seed,
                      int threads) {
  Require(n >= 100, "beta estimation needs n >= 100");
  Require(d >= 1 && trials >= 1, "beta estimation needs d >= 1, trials >= 1");
  std::vector<double> values(trials);
  const double norm = std::pow(static_cast<double>(n), 1.0 - 1.0 / d);
  ParallelFor(trials, threads, [&](std::size_t t) {
    const PointSet cloud = GenerateUniform(n, d, ChildSeed(seed, t));
    values[t] = EuclideanMstWeight(cloud) / norm;
  });
  return MeanAndError(values);
}

int ChromaticCrossingNumber(const PointSet& points, const Coloring& coloring) {
  Require(points.dim() == 2, "crossings are defined for planar point sets");
  if (coloring.size() != points.size()) {
    throw Error(ErrorCode::kImproperColoring,
                "coloring size does not match the point set");
  }
  const std::vector<Point2> pts = Normalized(points);
  return CountCrossings(pts, SubsetEmstEdges(points, coloring.RedVertices()),
                        SubsetEmstEdges(points, coloring.BlueVertices()));
}

CrossingResult MaxCrossingExact(const PointSet& points) {
  Require(points.dim() == 2, "crossings are defined for planar point sets");
  const int n = points.size();
  if (n > kMaxCrossingSearchVertices) {
    throw Error(ErrorCode::kEnumerationLimit,
                "crossing search is limited to n <= " +
                    std::to_string(kMaxCrossingSearchVertices));
  }
  const std::vector<Point2> pts = Normalized(points);
  CrossingResult best{Coloring::FromMask(n, 1), -1};
  for (const Coloring& c : EnumerateProperColorings(n)) {
    const int count =
        CountCrossings(pts, SubsetEmstEdges(points, c.RedVertices()),
                       SubsetEmstEdges(points, c.BlueVertices()));
    if (count > best.crossings) best = {c, count};
  }
  return best;
}

std::uint64_t TrialSeed(std::uint64_t base, int n, int trial) {
  return ChildSeed(ChildSeed(base, static_cast<std::uint64_t>(n)),
                   static_cast<std::uint64_t>(trial));
}

TrialRatios RunTrial(int n, int d, std::uint64_t seed) {
  const WeightedCompleteGraph g = DistanceGraph(GenerateUniform(n, d, seed));
  const ColoringSummary summary = SummarizeColorings(g, {.threads = 1});
  return {summary.best.ratio, summary.mean_ratio, BipartiteColoring(g).ratio};
}

std::vector<ExperimentRecord> RunSweep(const SweepOptions& options) {
  Require(options.n_min >= 2 && options.n_min <= options.n_max,
          "sweep needs 2 <= n_min <= n_max");
  if (options.n_max > kMaxSweepVertices) {
    throw Error(ErrorCode::kEnumerationLimit,
                "sweep is limited to n <= " + std::to_string(kMaxSweepVertices));
  }
  Require(options.trials >= 1 && options.d >= 1,
          "sweep needs trials >= 1 and d >= 1");
  std::vector<ExperimentRecord> records;
  for (int n = options.n_min; n <= options.n_max; ++n) {
    std::vector<TrialRatios> trials(options.trials);
    ParallelFor(trials.size(), options.threads, [&](std::size_t t) {
      trials[t] = RunTrial(n, options.d,
                           TrialSeed(options.seed, n, static_cast<int>(t)));
    });
    std::vector<double> maxes, avgs, bips;
    ExperimentRecord rec;
    rec.n = n;
    rec.trials = options.trials;
    rec.seed = options.seed;
    for (const TrialRatios& t : trials) {
      maxes.push_back(t.max);
      avgs.push_back(t.avg);
      bips.push_back(t.bipartite);
      rec.trials_max_over_1_1_bipartite += t.max > 1.1 * t.bipartite;
      rec.trials_max_over_1_3_bipartite += t.max > 1.3 * t.bipartite;
      rec.trials_bipartite_below_avg += t.bipartite < t.avg;
      rec.trials_max_at_least_2 += t.max >= 2.0;
    }
    const Estimate m = MeanAndError(maxes);
    const Estimate a = MeanAndError(avgs);
    const Estimate b = MeanAndError(bips);
    rec.mean_max = m.mean;
    rec.stderr_max = m.standard_error;
    rec.mean_avg = a.mean;
    rec.stderr_avg = a.standard_error;
    rec.mean_bipartite = b.mean;
    rec.stderr_bipartite = b.standard_error;
    records.push_back(rec);
  }
  return records;
}

std::string_view ScatterModeName(ScatterMode mode) {
  return mode == ScatterMode::kMaxVsBipartite ? "max" : "avg";
}

std::vector<ScatterRow> ScatterPairs(const ScatterOptions& options) {
  Require(options.n_min >= 2 && options.n_min <= options.n_max,
          "scatter needs 2 <= n_min <= n_max");
  if (options.n_max > kMaxSweepVertices) {
    throw Error(ErrorCode::kEnumerationLimit,
                "scatter is limited to n <= " +
                    std::to_string(kMaxSweepVertices));
  }
  Require(options.trials >= 1, "scatter needs trials >= 1");
  std::vector<ScatterRow> rows(options.trials);
  ParallelFor(rows.size(), options.threads, [&](std::size_t t) {
    Rng rng(ChildSeed(options.seed, t));
    const int span = options.n_max - options.n_min + 1;
    const int n = options.n_min + static_cast<int>(rng.Below(span));
    const TrialRatios r = RunTrial(n, 2, rng.NextU64());
    rows[t] = {n, static_cast<int>(t), r.bipartite,
               options.mode == ScatterMode::kMaxVsBipartite ? r.max : r.avg};
  });
  return rows;
}

void WriteSweepCsv(std::ostream& out,
                   const std::vector<ExperimentRecord>& records) {
  out << kSweepCsvHeader << '\n';
  for (const ExperimentRecord& r : records) {
    out << r.n << ',' << r.trials << ',' << Format12(r.mean_max) << ','
        << Format12(r.mean_avg) << ',' << Format12(r.mean_bipartite) << ','
        << Format12(r.stderr_max) << ',' << Format12(r.stderr_avg) << ','
        << Format12(r.stderr_bipartite) << '\n';
  }
}

void WriteScatterCsv(std::ostream& out, const std::vector<ScatterRow>& rows) {
  out << kScatterCsvHeader << '\n';
  for (const ScatterRow& r : rows) {
    out << r.n << ',' << r.trial << ',' << Format12(r.bipartite) << ','
        << Format12(r.other) << '\n';
  }
}

}  // namespace mstratio
