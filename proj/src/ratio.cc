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

#include "mstratio/ratio.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "mstratio/parallel.h"
#include "mstratio/rng.h"

namespace mstratio {
namespace {

constexpr std::uint64_t kChunkSize = std::uint64_t{1} << 12;
constexpr std::uint64_t kSampleBlock = 1024;

void CheckEnumerable(int n, const EnumerationOptions& options) {
  if (n < 2) {
    throw Error(ErrorCode::kInvalidArgument,
                "a proper coloring needs at least 2 vertices");
  }
  const int limit =
      options.allow_large ? kMaxEnumerableVertices : kDefaultEnumerationLimit;
  if (n > limit) {
    throw Error(ErrorCode::kEnumerationLimit,
                "exhaustive enumeration is limited to n <= " +
                    std::to_string(limit) + ", got " + std::to_string(n));
  }
}

struct ChunkResult {
  std::uint64_t best_mask = 0;
  double best_red = 0.0;
  double best_blue = 0.0;
  double min_value = std::numeric_limits<double>::infinity();
  double ratio_sum = 0.0;
};

}  // namespace

std::string_view RatioMethodName(RatioMethod method) {
  switch (method) {
    case RatioMethod::kExact:
      return "exact";
    case RatioMethod::kApprox:
      return "approx";
    case RatioMethod::kBipartite:
      return "bipartite";
    case RatioMethod::kSampled:
      return "sampled";
  }
  return "unknown";
}

RatioEvaluation MstRatio(const WeightedCompleteGraph& graph,
                         const Coloring& coloring) {
  if (coloring.size() != graph.size()) {
    throw Error(ErrorCode::kImproperColoring,
                "coloring has " + std::to_string(coloring.size()) +
                    " vertices, instance has " + std::to_string(graph.size()));
  }
  const std::vector<int> red = coloring.RedVertices();
  const std::vector<int> blue = coloring.BlueVertices();
  RatioEvaluation eval{coloring, SubsetMstWeight(graph, red),
                       SubsetMstWeight(graph, blue),
                       MinimumSpanningTree(graph).total_weight(), 0.0};
  eval.ratio = eval.value() / eval.base_weight;
  return eval;
}

RatioEvaluation MstRatio(const WeightedCompleteGraph& graph,
                         std::uint64_t red_mask, double base_weight) {
  const int n = graph.size();
  const std::uint64_t full = n == 64 ? ~std::uint64_t{0}
                                     : (std::uint64_t{1} << n) - 1;
  RatioEvaluation eval{Coloring::FromMask(n, red_mask),
                       SubsetMstWeight(graph, red_mask),
                       SubsetMstWeight(graph, full & ~red_mask), base_weight,
                       0.0};
  eval.ratio = eval.value() / base_weight;
  return eval;
}

ColoringSummary SummarizeColorings(const WeightedCompleteGraph& graph,
                                   const EnumerationOptions& options) {
  const int n = graph.size();
  CheckEnumerable(n, options);
  const std::uint64_t total = ProperColoringCount(n);
  const std::uint64_t full = (std::uint64_t{1} << n) - 1;
  const double base = MinimumSpanningTree(graph).total_weight();
  const std::uint64_t chunks = (total + kChunkSize - 1) / kChunkSize;
  std::vector<ChunkResult> results(chunks);

  ParallelFor(chunks, options.threads, [&](std::size_t c) {
    ChunkResult& r = results[c];
    const std::uint64_t begin = c * kChunkSize;
    const std::uint64_t end = std::min(total, begin + kChunkSize);
    double best_value = -1.0;
    double sum = 0.0;
    for (std::uint64_t index = begin; index < end; ++index) {
      const std::uint64_t mask = CanonicalMask(index);
      const double red = SubsetMstWeight(graph, mask);
      const double blue = SubsetMstWeight(graph, full ^ mask);
      const double value = red + blue;
      if (value > best_value) {
        best_value = value;
        r.best_mask = mask;
        r.best_red = red;
        r.best_blue = blue;
      }
      r.min_value = std::min(r.min_value, value);
      sum += value / base;
    }
    r.ratio_sum = sum;
  });

  std::size_t best_chunk = 0;
  double min_value = results[0].min_value;
  std::vector<double> sums(chunks);
  for (std::size_t c = 0; c < chunks; ++c) {
    const ChunkResult& r = results[c];
    const ChunkResult& b = results[best_chunk];
    if (r.best_red + r.best_blue > b.best_red + b.best_blue) best_chunk = c;
    min_value = std::min(min_value, r.min_value);
    sums[c] = r.ratio_sum;
  }
  const ChunkResult& b = results[best_chunk];
  ColoringSummary summary;
  summary.best = RatioEvaluation{Coloring::FromMask(n, b.best_mask), b.best_red,
                                 b.best_blue, base,
                                 (b.best_red + b.best_blue) / base};
  summary.min_ratio = min_value / base;
  summary.count = total;
  summary.mean_ratio = PairwiseSum(sums) / static_cast<double>(total);
  return summary;
}

MaxRatioResult MaxRatioExact(const WeightedCompleteGraph& graph,
                             const EnumerationOptions& options) {
  ColoringSummary summary = SummarizeColorings(graph, options);
  return {std::move(summary.best), summary.count, RatioMethod::kExact};
}

double AverageRatioExact(const WeightedCompleteGraph& graph,
                         const EnumerationOptions& options) {
  return SummarizeColorings(graph, options).mean_ratio;
}

SampledAverage AverageRatioSampled(const WeightedCompleteGraph& graph,
                                   std::uint64_t samples, std::uint64_t seed,
                                   int threads) {
  const int n = graph.size();
  if (samples < 1) {
    throw Error(ErrorCode::kInvalidArgument, "need at least 1 sample");
  }
  if (n < 2) {
    throw Error(ErrorCode::kInvalidArgument,
                "a proper coloring needs at least 2 vertices");
  }
  const double base = MinimumSpanningTree(graph).total_weight();
  const std::uint64_t blocks = (samples + kSampleBlock - 1) / kSampleBlock;
  std::vector<double> sums(blocks);
  std::vector<double> squares(blocks);

  ParallelFor(blocks, threads, [&](std::size_t b) {
    Rng rng(ChildSeed(seed, b));
    const std::uint64_t count =
        std::min(kSampleBlock, samples - b * kSampleBlock);
    std::vector<int> red;
    std::vector<int> blue;
    red.reserve(n);
    blue.reserve(n);
    double sum = 0.0;
    double sq = 0.0;
    for (std::uint64_t s = 0; s < count; ++s) {
      do {
        red.clear();
        blue.clear();
        std::uint64_t bits = 0;
        for (int i = 0; i < n; ++i) {
          if (i % 64 == 0) bits = rng.NextU64();
          ((bits >> (i % 64)) & 1 ? red : blue).push_back(i);
        }
      } while (red.empty() || blue.empty());
      const double ratio =
          (SubsetMstWeight(graph, red) + SubsetMstWeight(graph, blue)) / base;
      sum += ratio;
      sq += ratio * ratio;
    }
    sums[b] = sum;
    squares[b] = sq;
  });

  const double total = static_cast<double>(samples);
  SampledAverage out;
  out.samples = samples;
  out.mean = PairwiseSum(sums) / total;
  if (samples > 1) {
    const double var =
        std::max(0.0, (PairwiseSum(squares) - total * out.mean * out.mean) /
                          (total - 1.0));
    out.standard_error = std::sqrt(var / total);
  }
  return out;
}

double AverageLowerBound(const Tree& tree) {
  const int n = tree.size();
  if (n < 2) {
    throw Error(ErrorCode::kInvalidArgument,
                "the average bound needs at least 2 vertices");
  }
  std::vector<double> weights;
  weights.reserve(n - 1);
  for (const Edge& e : tree.edges()) weights.push_back(e.weight);
  std::sort(weights.begin(), weights.end());
  // 2^(n-i) / (2^n - 2) = 2^-i / (1 - 2^(1-n)), safe for any n.
  const double norm = 1.0 - std::ldexp(1.0, 1 - n);
  double deficit = 0.0;
  double scale = 0.5;
  for (double w : weights) {
    deficit += scale * w;
    scale *= 0.5;
  }
  return 1.0 - deficit / (norm * tree.total_weight());
}

SubsetMstResult MaxSubsetMstExact(const WeightedCompleteGraph& graph) {
  const int n = graph.size();
  if (n > kMaxSubsetSearchVertices) {
    throw Error(ErrorCode::kEnumerationLimit,
                "subset search is limited to n <= " +
                    std::to_string(kMaxSubsetSearchVertices));
  }
  const std::uint64_t end = std::uint64_t{1} << n;
  std::uint64_t best_mask = 1;
  double best = 0.0;
  for (std::uint64_t mask = 1; mask < end; ++mask) {
    const double w = SubsetMstWeight(graph, mask);
    if (w > best) {
      best = w;
      best_mask = mask;
    }
  }
  SubsetMstResult out;
  out.weight = best;
  for (int i = 0; i < n; ++i) {
    if ((best_mask >> i) & 1) out.subset.push_back(i);
  }
  return out;
}

}  // namespace mstratio
