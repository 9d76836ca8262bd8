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

#include "mstratio/io.h"

#include <cctype>
#include <cstdio>
#include <cstdlib>
#include <sstream>

namespace mstratio {
namespace {

Json ParseJson(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kParseError, e.what());
  }
}

bool LooksLikeJson(std::string_view text) {
  for (char ch : text) {
    if (std::isspace(static_cast<unsigned char>(ch))) continue;
    return ch == '{' || ch == '[' || ch == '"';
  }
  return false;
}

template <typename T>
T Field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw Error(ErrorCode::kParseError,
                std::string("missing field \"") + key + "\"");
  }
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kParseError,
                std::string("bad field \"") + key + "\": " + e.what());
  }
}

PointSet PointSetFromJson(const Json& j) {
  const int dim = Field<int>(j, "dim");
  const auto rows = Field<std::vector<std::vector<double>>>(j, "points");
  PointSet ps = PointSet::FromRows(rows);
  if (ps.dim() != dim) {
    throw Error(ErrorCode::kParseError, "\"dim\" does not match the points");
  }
  return ps;
}

PointSet PointSetFromCsv(std::string_view text) {
  std::vector<std::vector<double>> rows;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::vector<double> row;
    std::istringstream cells(line);
    std::string cell;
    while (std::getline(cells, cell, ',')) {
      char* end = nullptr;
      const double x = std::strtod(cell.c_str(), &end);
      while (end && *end && std::isspace(static_cast<unsigned char>(*end))) ++end;
      if (end == cell.c_str() || (end && *end)) {
        throw Error(ErrorCode::kParseError, "non-numeric CSV cell: " + cell);
      }
      row.push_back(x);
    }
    rows.push_back(std::move(row));
  }
  return PointSet::FromRows(rows);
}

WeightedCompleteGraph GraphFromJson(const Json& j) {
  const int n = Field<int>(j, "n");
  const auto weights = Field<std::vector<double>>(j, "weights");
  return WeightedCompleteGraph(n, weights);
}

Json Rounded(const std::vector<double>& xs) {
  Json out = Json::array();
  for (double x : xs) out.push_back(Round12(x));
  return out;
}

}  // namespace

double Round12(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return std::strtod(buf, nullptr);
}

PointSet ParsePointSet(std::string_view text) {
  if (LooksLikeJson(text)) return PointSetFromJson(ParseJson(text));
  return PointSetFromCsv(text);
}

WeightedCompleteGraph ParseGraph(std::string_view text) {
  return GraphFromJson(ParseJson(text));
}

SimpleGraph ParseSimpleGraph(std::string_view text) {
  const Json j = ParseJson(text);
  const int n = Field<int>(j, "n");
  const auto edges = Field<std::vector<std::array<int, 2>>>(j, "edges");
  return SimpleGraph(n, edges);
}

Coloring ParseColoring(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) {
    throw Error(ErrorCode::kParseError, "empty coloring");
  }
  text.remove_prefix(first);
  text = text.substr(0, text.find_last_not_of(" \t\r\n") + 1);
  if (text.front() == '[') {
    const Json j = ParseJson(text);
    std::vector<bool> red;
    for (const Json& v : j) {
      if (!v.is_number_integer() || (v.get<int>() != 0 && v.get<int>() != 1)) {
        throw Error(ErrorCode::kParseError, "coloring entries must be 0 or 1");
      }
      red.push_back(v.get<int>() == 1);
    }
    return Coloring::FromFlags(std::move(red));
  }
  if (text.front() == '"') {
    return Coloring::FromString(ParseJson(text).get<std::string>());
  }
  return Coloring::FromString(text);
}

Instance ParseInstance(std::string_view text) {
  if (!LooksLikeJson(text)) {
    PointSet ps = PointSetFromCsv(text);
    WeightedCompleteGraph g = DistanceGraph(ps);
    return {std::move(ps), std::move(g)};
  }
  const Json j = ParseJson(text);
  if (j.is_object() && j.contains("points")) {
    PointSet ps = PointSetFromJson(j);
    WeightedCompleteGraph g = DistanceGraph(ps);
    return {std::move(ps), std::move(g)};
  }
  if (j.is_object() && j.contains("weights")) {
    return {std::nullopt, GraphFromJson(j)};
  }
  throw Error(ErrorCode::kParseError,
              "input is neither a point set nor a weighted graph");
}

Json ToJson(const PointSet& points) {
  Json rows = Json::array();
  for (int i = 0; i < points.size(); ++i) {
    const auto p = points.point(i);
    rows.push_back(Rounded(std::vector<double>(p.begin(), p.end())));
  }
  return Json{{"dim", points.dim()}, {"points", std::move(rows)}};
}

Json ToJson(const WeightedCompleteGraph& graph) {
  return Json{{"n", graph.size()}, {"weights", Rounded(graph.UpperTriangular())}};
}

Json ToJson(const SimpleGraph& graph) {
  Json edges = Json::array();
  for (const auto& [u, v] : graph.Edges()) edges.push_back({u, v});
  return Json{{"n", graph.size()}, {"edges", std::move(edges)}};
}

Json ToJson(const std::vector<Edge>& edges) {
  Json out = Json::array();
  for (const Edge& e : edges) out.push_back({e.u, e.v, Round12(e.weight)});
  return out;
}

Json ToJson(const Tree& tree) {
  return Json{{"n", tree.size()},
              {"edges", ToJson(std::vector<Edge>(tree.edges().begin(),
                                                 tree.edges().end()))}};
}

Json ToJson(const RatioEvaluation& eval) {
  return Json{{"ratio", Round12(eval.ratio)},
              {"coloring", eval.coloring.ToString()},
              {"red_weight", Round12(eval.red_weight)},
              {"blue_weight", Round12(eval.blue_weight)},
              {"base_weight", Round12(eval.base_weight)}};
}

Json ToJson(const MaxRatioResult& result) {
  Json j = ToJson(result.best);
  j["method"] = std::string(RatioMethodName(result.method));
  j["examined"] = result.colorings_examined;
  return j;
}

Json ToJson(const CertificateReport& report) {
  return Json{{"tree", ToJson(report.tree)},
              {"pstar", report.pstar.vertices},
              {"pstar_weight", Round12(report.pstar.weight)},
              {"leaf_weight", Round12(report.leaf_weight)},
              {"red_tree", ToJson(report.red_tree)},
              {"blue_tree", ToJson(report.blue_tree)},
              {"combined_weight", Round12(report.combined_weight)},
              {"bound", Round12(report.bound)},
              {"within_bound", report.within_bound},
              {"key_inequality", report.key_inequality}};
}

}  // namespace mstratio
