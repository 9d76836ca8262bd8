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

// File formats.
//
//   point set   {"dim": d, "points": [[x1, ..., xd], ...]} or CSV with d
//               numeric columns and no header
//   graph       {"n": N, "weights": [w01, w02, ..., w0(N-1), w12, ...]}
//   simple graph{"n": N, "edges": [[i, j], ...]}
//   tree        {"n": N, "edges": [[i, j, w], ...]}
//   coloring    "RBBR" or a JSON array of 0/1 with 1 = red
//
// Numbers are written with 12 significant digits.

#ifndef MSTRATIO_IO_H_
#define MSTRATIO_IO_H_

#include <optional>
#include <string>
#include <string_view>

#include "json.hpp"
#include "mstratio/approx.h"
#include "mstratio/core.h"
#include "mstratio/mst.h"
#include "mstratio/ratio.h"

namespace mstratio {

using Json = nlohmann::ordered_json;

// x rounded to 12 significant digits.
double Round12(double x);

PointSet ParsePointSet(std::string_view text);
WeightedCompleteGraph ParseGraph(std::string_view text);
SimpleGraph ParseSimpleGraph(std::string_view text);
Coloring ParseColoring(std::string_view text);

// Either a point set (kept, and turned into its distance graph) or a graph.
struct Instance {
  std::optional<PointSet> points;
  WeightedCompleteGraph graph;
};
Instance ParseInstance(std::string_view text);

Json ToJson(const PointSet& points);
Json ToJson(const WeightedCompleteGraph& graph);
Json ToJson(const SimpleGraph& graph);
Json ToJson(const Tree& tree);
Json ToJson(const std::vector<Edge>& edges);
Json ToJson(const RatioEvaluation& eval);
Json ToJson(const MaxRatioResult& result);
Json ToJson(const CertificateReport& report);

}  // namespace mstratio

#endif  // MSTRATIO_IO_H_
