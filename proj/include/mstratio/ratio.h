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

// MST-ratio of a coloring: (|MST(red)| + |MST(blue)|) / |MST(all)|.
//
// Exact maximum and average by enumerating canonical colorings, Monte-Carlo
// averaging, the sorted-weight lower bound on the average, and the
// maximum-weight induced subtree search.

#ifndef MSTRATIO_RATIO_H_
#define MSTRATIO_RATIO_H_

#include <cstdint>
#include <string_view>
#include <vector>

#include "mstratio/core.h"
#include "mstratio/mst.h"

namespace mstratio {

// Ratio comparisons throughout use this absolute slack.
inline constexpr double kRatioTolerance = 1e-9;

// Default enumeration guard; EnumerationOptions::allow_large lifts it to
// kMaxEnumerableVertices.
inline constexpr int kDefaultEnumerationLimit = 24;

struct RatioEvaluation {
  Coloring coloring;
  double red_weight = 0.0;
  double blue_weight = 0.0;
  double base_weight = 0.0;
  double ratio = 0.0;

  // |MST(red)| + |MST(blue)|.
  double value() const { return red_weight + blue_weight; }
};

enum class RatioMethod { kExact, kApprox, kBipartite, kSampled };
std::string_view RatioMethodName(RatioMethod method);

struct MaxRatioResult {
  RatioEvaluation best;
  std::uint64_t colorings_examined = 0;
  RatioMethod method = RatioMethod::kExact;
};

struct EnumerationOptions {
  int threads = 0;  // 0: all hardware threads
  bool allow_large = false;
};

RatioEvaluation MstRatio(const WeightedCompleteGraph& graph,
                         const Coloring& coloring);
// Fast path for n <= 64; `red_mask` must describe a proper coloring.
RatioEvaluation MstRatio(const WeightedCompleteGraph& graph,
                         std::uint64_t red_mask, double base_weight);

// Everything one enumeration pass yields.
struct ColoringSummary {
  RatioEvaluation best;    // first maximum in enumeration order
  double min_ratio = 0.0;
  double mean_ratio = 0.0;
  std::uint64_t count = 0;
};

ColoringSummary SummarizeColorings(const WeightedCompleteGraph& graph,
                                   const EnumerationOptions& options = {});

MaxRatioResult MaxRatioExact(const WeightedCompleteGraph& graph,
                             const EnumerationOptions& options = {});
double AverageRatioExact(const WeightedCompleteGraph& graph,
                         const EnumerationOptions& options = {});

struct SampledAverage {
  double mean = 0.0;
  double standard_error = 0.0;
  std::uint64_t samples = 0;
};

// Uniform proper colorings by rejection of monochromatic draws. Samples are
// drawn in fixed-size blocks with one child stream per block.
SampledAverage AverageRatioSampled(const WeightedCompleteGraph& graph,
                                   std::uint64_t samples, std::uint64_t seed,
                                   int threads = 0);

// 1 - sum_i 2^(n-i) w_i / ((2^n - 2) |T|) with w ascending.
double AverageLowerBound(const Tree& tree);

struct SubsetMstResult {
  std::vector<int> subset;
  double weight = 0.0;
};

inline constexpr int kMaxSubsetSearchVertices = 20;

// Exhaustive; the first maximizing mask in increasing order wins.
SubsetMstResult MaxSubsetMstExact(const WeightedCompleteGraph& graph);

}  // namespace mstratio

#endif  // MSTRATIO_RATIO_H_
