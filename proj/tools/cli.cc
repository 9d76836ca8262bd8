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

#include "cli.h"

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"
#include "mstratio/analysis.h"
#include "mstratio/approx.h"
#include "mstratio/core.h"
#include "mstratio/generators.h"
#include "mstratio/hardness.h"
#include "mstratio/io.h"
#include "mstratio/mst.h"
#include "mstratio/ratio.h"

namespace mstratio::cli {
namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Globals {
  std::uint64_t seed = 0;
  std::string input = "-";
  std::string output;
  int threads = 0;
  std::string format;
};

struct Options {
  // gen
  std::string family;
  int n = 10;
  int d = 2;
  int k = 5;
  double eps = -1.0;
  double delta = kDefaultChainStretch;
  int m = 6;
  double p = 0.5;
  // colorings and modes
  std::string coloring;
  bool exact = false;
  bool approx = false;
  bool bipartite = false;
  bool allow_large = false;
  std::uint64_t samples = 0;
  // analysis
  std::int64_t big_n = 10000;
  int trials = 20;
  int n_min = 5;
  int n_max = 20;
  std::string mode = "max";
};

class Context {
 public:
  Context(const Globals& g, std::istream& in) : globals_(g), in_(in) {}

  std::string ReadInput() const {
    if (globals_.input.empty() || globals_.input == "-") {
      return {std::istreambuf_iterator<char>(in_), {}};
    }
    std::ifstream file(globals_.input, std::ios::binary);
    if (!file) {
      throw Error(ErrorCode::kInvalidArgument,
                  "cannot open input file " + globals_.input);
    }
    return {std::istreambuf_iterator<char>(file), {}};
  }

 private:
  const Globals& globals_;
  std::istream& in_;
};

std::string Dump(const Json& j) { return j.dump(2) + "\n"; }

std::string Csv(const std::function<void(std::ostream&)>& write) {
  std::ostringstream s;
  write(s);
  return s.str();
}

double DefaultEps(Family family) {
  switch (family) {
    case Family::kPentagonCore:
      return kDefaultCoreRadius;
    default:
      return 1e-4;
  }
}

Json RecordJson(const ExperimentRecord& r) {
  return Json{{"n", r.n},
              {"trials", r.trials},
              {"mean_max", Round12(r.mean_max)},
              {"mean_avg", Round12(r.mean_avg)},
              {"mean_bipartite", Round12(r.mean_bipartite)},
              {"stderr_max", Round12(r.stderr_max)},
              {"stderr_avg", Round12(r.stderr_avg)},
              {"stderr_bipartite", Round12(r.stderr_bipartite)},
              {"trials_max_over_1_1_bipartite", r.trials_max_over_1_1_bipartite},
              {"trials_max_over_1_3_bipartite", r.trials_max_over_1_3_bipartite},
              {"trials_bipartite_below_avg", r.trials_bipartite_below_avg},
              {"trials_max_at_least_2", r.trials_max_at_least_2}};
}

std::string Execute(const std::string& verb, const Options& o,
                    const Globals& g, const Context& ctx) {
  const bool table_verb = verb == "sweep" || verb == "scatter";
  const std::string format =
      g.format.empty() ? (table_verb ? "csv" : "json") : g.format;
  if (format != "json" && format != "csv") {
    throw UsageError("--format must be json or csv");
  }
  if (format == "csv" && !table_verb) {
    throw UsageError("--format csv is only available for sweep and scatter");
  }

  if (verb == "gen") {
    const auto family = ParseFamily(o.family);
    if (!family) throw UsageError("unknown family '" + o.family + "'");
    const double eps = o.eps > 0.0 ? o.eps : DefaultEps(*family);
    switch (*family) {
      case Family::kUniformCube:
        return Dump(ToJson(GenerateUniform(o.n, o.d, g.seed)));
      case Family::kTriangularChain:
        return Dump(ToJson(GenerateTriangularChain(o.k, o.delta)));
      case Family::kPentagonCore:
        return Dump(ToJson(GeneratePentagonCore(o.n, eps)));
      case Family::kTripod:
        return Dump(ToJson(GenerateTripod(o.m, eps, g.seed)));
      case Family::kMetricExtremal:
        return Dump(ToJson(GenerateMetricExtremal(o.k, eps)));
      case Family::kCliqueReduction: {
        const ReductionInstance ri =
            ReduceClique(GenerateRandomGraph(o.n, o.p, g.seed));
        Json j = ToJson(ri.reduced);
        j["source"] = ToJson(ri.source);
        return Dump(j);
      }
    }
  }
  if (verb == "bernstein") {
    return Dump(Json{{"value", Round12(BernsteinAverageLimit(o.big_n, o.d))},
                     {"limit", Round12(std::pow(2.0, 1.0 / o.d))}});
  }
  if (verb == "beta") {
    const Estimate e = EstimateBeta(static_cast<int>(o.big_n), o.d, o.trials,
                                    g.seed, g.threads);
    return Dump(Json{{"beta", Round12(e.mean)},
                     {"stderr", Round12(e.standard_error)},
                     {"trials", o.trials}});
  }
  if (verb == "sweep") {
    const auto records = RunSweep({.n_min = o.n_min,
                                   .n_max = o.n_max,
                                   .trials = o.trials,
                                   .d = o.d,
                                   .seed = g.seed,
                                   .threads = g.threads});
    if (format == "csv") {
      return Csv([&](std::ostream& s) { WriteSweepCsv(s, records); });
    }
    Json arr = Json::array();
    for (const auto& r : records) arr.push_back(RecordJson(r));
    return Dump(arr);
  }
  if (verb == "scatter") {
    if (o.mode != "max" && o.mode != "avg") {
      throw UsageError("--mode must be max or avg");
    }
    const auto rows = ScatterPairs(
        {.trials = o.trials,
         .n_min = o.n_min,
         .n_max = o.n_max,
         .mode = o.mode == "max" ? ScatterMode::kMaxVsBipartite
                                 : ScatterMode::kAvgVsBipartite,
         .seed = g.seed,
         .threads = g.threads});
    if (format == "csv") {
      return Csv([&](std::ostream& s) { WriteScatterCsv(s, rows); });
    }
    Json arr = Json::array();
    for (const auto& r : rows) {
      arr.push_back(Json{{"n", r.n},
                         {"trial", r.trial},
                         {"bipartite", Round12(r.bipartite)},
                         {"other", Round12(r.other)}});
    }
    return Dump(arr);
  }

  const std::string text = ctx.ReadInput();

  if (verb == "reduce-clique") {
    const ReductionInstance ri = ReduceClique(ParseSimpleGraph(text));
    Json j = ToJson(ri.reduced);
    j["source"] = ToJson(ri.source);
    return Dump(j);
  }
  if (verb == "decode-clique") {
    if (o.coloring.empty()) throw UsageError("--coloring is required");
    const ReductionInstance ri = ReduceClique(ParseSimpleGraph(text));
    const Coloring c = ParseColoring(o.coloring);
    const std::vector<int> clique = ColoringToClique(ri, c);
    const double value = SubsetMstWeight(ri.reduced, c.RedVertices()) +
                         SubsetMstWeight(ri.reduced, c.BlueVertices());
    return Dump(Json{{"clique", clique},
                     {"size", clique.size()},
                     {"value", Round12(value)}});
  }

  const Instance inst = ParseInstance(text);
  const WeightedCompleteGraph& graph = inst.graph;
  const EnumerationOptions enumeration{.threads = g.threads,
                                       .allow_large = o.allow_large};
  auto need_coloring = [&] {
    if (o.coloring.empty()) throw UsageError("--coloring is required");
    return ParseColoring(o.coloring);
  };
  auto need_points = [&]() -> const PointSet& {
    if (!inst.points) {
      throw Error(ErrorCode::kInvalidArgument,
                  "this verb needs a point-set input");
    }
    return *inst.points;
  };

  if (verb == "emst") {
    const Tree tree = MinimumSpanningTree(graph);
    Json j = ToJson(tree);
    j["total_weight"] = Round12(tree.total_weight());
    return Dump(j);
  }
  if (verb == "ratio") {
    return Dump(ToJson(MstRatio(graph, need_coloring())));
  }
  if (verb == "maxratio") {
    if (o.exact + o.approx + o.bipartite > 1) {
      throw UsageError("choose one of --exact, --approx, --bipartite");
    }
    if (o.approx) {
      return Dump(ToJson(
          MaxRatioResult{ApproxColoring(graph), 1, RatioMethod::kApprox}));
    }
    if (o.bipartite) {
      return Dump(ToJson(
          MaxRatioResult{BipartiteColoring(graph), 1, RatioMethod::kBipartite}));
    }
    return Dump(ToJson(MaxRatioExact(graph, enumeration)));
  }
  if (verb == "average") {
    if (o.exact && o.samples > 0) {
      throw UsageError("choose one of --exact, --sample");
    }
    if (o.samples > 0) {
      const SampledAverage s =
          AverageRatioSampled(graph, o.samples, g.seed, g.threads);
      return Dump(Json{{"average", Round12(s.mean)},
                       {"stderr", Round12(s.standard_error)},
                       {"method", "sampled"},
                       {"examined", s.samples}});
    }
    const ColoringSummary s = SummarizeColorings(graph, enumeration);
    return Dump(Json{{"average", Round12(s.mean_ratio)},
                     {"method", "exact"},
                     {"examined", s.count}});
  }
  if (verb == "bound") {
    const Tree tree = MinimumSpanningTree(graph);
    const int n = graph.size();
    return Dump(Json{{"bound", Round12(AverageLowerBound(tree))},
                     {"floor", Round12(static_cast<double>(n - 2) / (n - 1))}});
  }
  if (verb == "certify") {
    return Dump(ToJson(CertifyUpperBound(graph, need_coloring())));
  }
  if (verb == "realize") {
    const RealizationLift lift = LiftAndRealize(graph);
    Json j = ToJson(lift.embedding);
    j["shift"] = Round12(lift.shift);
    j["max_relative_error"] = Round12(lift.max_relative_distance_error);
    j["within_quadratic_budget"] = lift.within_quadratic_budget;
    return Dump(j);
  }
  if (verb == "crossings") {
    return Dump(Json{
        {"crossings", ChromaticCrossingNumber(need_points(), need_coloring())}});
  }
  if (verb == "maxcrossings") {
    const CrossingResult r = MaxCrossingExact(need_points());
    return Dump(Json{{"crossings", r.crossings},
                     {"coloring", r.coloring.ToString()}});
  }
  if (verb == "subsetmax") {
    const SubsetMstResult r = MaxSubsetMstExact(graph);
    return Dump(Json{{"subset", r.subset}, {"weight", Round12(r.weight)}});
  }
  throw UsageError("unknown verb '" + verb + "'");
}

}  // namespace

int Run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out, std::ostream& err) {
  CLI::App app{"MST-ratio toolkit: EMST ratios of red/blue colorings"};
  app.name("mstratio");
  app.fallthrough();
  app.require_subcommand(1);
  Globals globals;
  Options o;
  app.add_option("--seed", globals.seed, "Base random seed");
  app.add_option("--input", globals.input, "Input file, - for stdin");
  app.add_option("--output", globals.output, "Output file (default stdout)");
  app.add_option("--threads", globals.threads, "Worker threads, 0 = all")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--format", globals.format, "json or csv");

  auto coloring_opt = [&](CLI::App* sub) {
    sub->add_option("--coloring", o.coloring, "RB string or 0/1 JSON array");
  };

  CLI::App* gen = app.add_subcommand("gen", "Generate an instance family");
  gen->add_option("--family", o.family,
                  "uniform_cube|triangular_chain|pentagon_core|tripod|"
                  "metric_extremal|clique_reduction")
      ->required();
  gen->add_option("--n", o.n, "Number of points");
  gen->add_option("--d", o.d, "Dimension");
  gen->add_option("--k", o.k, "Chain / extremal parameter");
  gen->add_option("--eps", o.eps, "Core radius / spread / extremal eps");
  gen->add_option("--delta", o.delta, "Chain stretch");
  gen->add_option("--m", o.m, "Tripod cluster size");
  gen->add_option("--p", o.p, "Edge probability for clique_reduction");

  app.add_subcommand("emst", "Minimum spanning tree of the input");
  coloring_opt(app.add_subcommand("ratio", "MST-ratio of one coloring"));
  CLI::App* maxratio = app.add_subcommand("maxratio", "Maximum MST-ratio");
  maxratio->add_flag("--exact", o.exact, "Exhaustive enumeration (default)");
  maxratio->add_flag("--approx", o.approx, "Lightest-edge split");
  maxratio->add_flag("--bipartite", o.bipartite, "MST 2-coloring");
  maxratio->add_flag("--allow-large", o.allow_large, "Enumerate beyond n = 24");
  CLI::App* average = app.add_subcommand("average", "Average MST-ratio");
  average->add_flag("--exact", o.exact, "Exhaustive enumeration (default)");
  average->add_option("--sample", o.samples, "Monte-Carlo sample count")
      ->check(CLI::PositiveNumber);
  average->add_flag("--allow-large", o.allow_large, "Enumerate beyond n = 24");
  app.add_subcommand("bound", "Sorted-weight lower bound on the average");
  coloring_opt(app.add_subcommand("certify", "Upper-bound certificate"));
  app.add_subcommand("reduce-clique", "Clique reduction of a simple graph");
  coloring_opt(
      app.add_subcommand("decode-clique", "Clique from a reduced coloring"));
  app.add_subcommand("realize", "Shift weights and embed in R^(n-1)");
  CLI::App* bernstein = app.add_subcommand("bernstein", "Bernstein-sum limit");
  bernstein->add_option("--n", o.big_n, "Number of points")->required();
  bernstein->add_option("--d", o.d, "Dimension");
  CLI::App* beta = app.add_subcommand("beta", "Estimate |EMST| / n^(1-1/d)");
  beta->add_option("--n", o.big_n, "Number of points");
  beta->add_option("--d", o.d, "Dimension");
  beta->add_option("--trials", o.trials, "Clouds to average");
  coloring_opt(app.add_subcommand("crossings", "Chromatic crossing number"));
  app.add_subcommand("maxcrossings", "Maximum chromatic crossing number");
  CLI::App* sweep = app.add_subcommand("sweep", "Random-cloud experiment sweep");
  sweep->add_option("--n-min", o.n_min, "Smallest n");
  sweep->add_option("--n-max", o.n_max, "Largest n");
  sweep->add_option("--trials", o.trials, "Clouds per n");
  sweep->add_option("--d", o.d, "Dimension");
  CLI::App* scatter = app.add_subcommand("scatter", "Per-cloud ratio pairs");
  scatter->add_option("--n-min", o.n_min, "Smallest n");
  scatter->add_option("--n-max", o.n_max, "Largest n");
  scatter->add_option("--trials", o.trials, "Number of clouds");
  scatter->add_option("--mode", o.mode, "max or avg");
  app.add_subcommand("subsetmax", "Heaviest induced MST over subsets");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n" << app.help();
    return 2;
  }

  const std::string verb = app.get_subcommands().front()->get_name();
  try {
    const Context ctx(globals, in);
    const std::string payload = Execute(verb, o, globals, ctx);
    if (globals.output.empty() || globals.output == "-") {
      out << payload;
    } else {
      std::ofstream file(globals.output, std::ios::binary);
      if (!file) {
        throw Error(ErrorCode::kInvalidArgument,
                    "cannot open output file " + globals.output);
      }
      file << payload;
    }
    return 0;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << ErrorCodeName(e.code()) << ": " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: internal: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace mstratio::cli
