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

// Acceptance suite: prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails. Set MSTRATIO_THREADS to cap the pool.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <mutex>
#include <string>
#include <vector>

#include "../oracles.h"
#include "mstratio/analysis.h"
#include "mstratio/approx.h"
#include "mstratio/core.h"
#include "mstratio/generators.h"
#include "mstratio/hardness.h"
#include "mstratio/mst.h"
#include "mstratio/parallel.h"
#include "mstratio/ratio.h"
#include "mstratio/rng.h"

namespace mstratio {
namespace {

int Threads() {
  const char* env = std::getenv("MSTRATIO_THREADS");
  return env ? std::atoi(env) : 0;
}

std::string Format(const char* fmt, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, fmt, args...);
  return buf;
}

// Collects the first failure message; safe to call from workers.
class Verdict {
 public:
  void Check(bool ok, const std::string& what) {
    if (ok) return;
    std::lock_guard lock(mu_);
    ++failures_;
    if (first_.empty()) first_ = what;
  }
  bool ok() const { return failures_ == 0; }
  std::string Summary(const std::string& detail) const {
    if (ok()) return detail;
    return Format("%d violation(s); first: %s; %s", failures_, first_.c_str(),
                  detail.c_str());
  }

 private:
  std::mutex mu_;
  int failures_ = 0;
  std::string first_;
};

struct Outcome {
  bool pass;
  std::string detail;
};

// The shared corpus: 200 random metrics and 200 planar clouds per n = 5..14.
struct CorpusInstance {
  int n;
  bool euclidean;
  std::uint64_t seed;
};

std::vector<CorpusInstance> Corpus() {
  std::vector<CorpusInstance> out;
  for (int n = 5; n <= 14; ++n) {
    for (int i = 0; i < 200; ++i) {
      out.push_back({n, false, ChildSeed(1000 + n, i)});
      out.push_back({n, true, ChildSeed(2000 + n, i)});
    }
  }
  return out;
}

WeightedCompleteGraph Build(const CorpusInstance& c) {
  return c.euclidean ? DistanceGraph(GenerateUniform(c.n, 2, c.seed))
                     : GenerateRandomMetric(c.n, c.seed);
}

struct CorpusResults {
  Verdict upper, certifier, approx, average;
  std::atomic<long> colorings{0};
  double worst_gamma_gap = -1e300;     // max of gamma - bound
  double worst_cert_slack = -1e300;    // max of (combined - bound) / |T|
  double min_approx_margin = 1e300;    // min of approx - (n-2)/(n-1)
  double max_gamma_over_approx = 0.0;  // max of gamma / approx
  double min_avg_margin = 1e300;       // min of avg - max(floor, lower bound)
  std::mutex mu;
};

void RunCorpus(CorpusResults& r) {
  const std::vector<CorpusInstance> corpus = Corpus();
  ParallelFor(corpus.size(), Threads(), [&](std::size_t idx) {
    const CorpusInstance& inst = corpus[idx];
    const int n = inst.n;
    const WeightedCompleteGraph g = Build(inst);
    const std::string tag = Format("n=%d %s seed=%llu", n,
                                   inst.euclidean ? "cloud" : "metric",
                                   static_cast<unsigned long long>(inst.seed));
    const ColoringSummary s = SummarizeColorings(g, {.threads = 1});
    const double bound = MetricRatioUpperBound(n);
    const double gamma = s.best.ratio;
    r.upper.Check(gamma <= bound + 1e-9, tag + Format(" gamma=%.12g", gamma));

    const UpperBoundCertifier cert(g);
    const double t = cert.tree().total_weight();
    const double base = t;
    double worst = -1e300;
    for (std::uint64_t i = 0; i < ProperColoringCount(n); ++i) {
      const std::uint64_t mask = CanonicalMask(i);
      const Coloring c = Coloring::FromMask(n, mask);
      const CertificateEdges e = cert.Construct(mask);
      const auto red = c.RedVertices();
      const auto blue = c.BlueVertices();
      const bool spanning = IsSpanningTreeOf(e.red, red) &&
                            IsSpanningTreeOf(e.blue, blue);
      const double optimum = MstRatio(g, mask, base).value();
      const double combined = e.combined_weight();
      worst = std::max(worst, (combined - cert.bound()) / t);
      r.certifier.Check(spanning, tag + " non-spanning certificate");
      r.certifier.Check(combined <= cert.bound() + 1e-9 * t,
                        tag + Format(" combined=%.12g bound=%.12g", combined,
                                     cert.bound()));
      r.certifier.Check(combined >= optimum - 1e-12 * t,
                        tag + " certificate lighter than the optimum");
    }
    r.certifier.Check(cert.pstar().weight + cert.leaf_weight() >=
                          4.0 / (n - 1) * t - 1e-9 * t,
                      tag + " key inequality");
    r.colorings += static_cast<long>(ProperColoringCount(n));

    const double approx = ApproxColoring(g).ratio;
    const double floor_value = (n - 2.0) / (n - 1);
    r.approx.Check(approx >= floor_value - 1e-9,
                   tag + Format(" approx=%.12g", approx));
    r.approx.Check(3 * approx >= gamma, tag + Format(" approx=%.12g gamma=%.12g",
                                                      approx, gamma));

    const double lower = AverageLowerBound(cert.tree());
    r.average.Check(s.mean_ratio >= floor_value - 1e-9,
                    tag + Format(" avg=%.12g", s.mean_ratio));
    r.average.Check(s.mean_ratio >= lower - 1e-9,
                    tag + Format(" avg=%.12g lower=%.12g", s.mean_ratio, lower));

    std::lock_guard lock(r.mu);
    r.worst_gamma_gap = std::max(r.worst_gamma_gap, gamma - bound);
    r.worst_cert_slack = std::max(r.worst_cert_slack, worst);
    r.min_approx_margin = std::min(r.min_approx_margin, approx - floor_value);
    r.max_gamma_over_approx = std::max(r.max_gamma_over_approx, gamma / approx);
    r.min_avg_margin =
        std::min(r.min_avg_margin, s.mean_ratio - std::max(floor_value, lower));
  });
}

Outcome ExtremalTightness() {
  Verdict v;
  const double eps = 1e-4;
  std::string detail;
  for (int k = 2; k <= 9; ++k) {
    const int n = 2 * k + 1;
    const double bound = MetricRatioUpperBound(n);
    const double gamma =
        MaxRatioExact(GenerateMetricExtremal(k, eps), {.threads = Threads()})
            .best.ratio;
    v.Check(gamma >= bound / (1 + eps) - 1e-6 && gamma <= bound,
            Format("k=%d gamma=%.12g", k, gamma));
    detail += Format("%sk=%d:%.9f", k == 2 ? "" : " ", k, gamma);
  }
  return {v.ok(), v.Summary("gamma " + detail)};
}

Outcome TriangularChain() {
  Verdict v;
  const double delta = 1e-3;
  std::string detail;
  double ratio5 = 0.0;
  for (int k = 2; k <= 5; ++k) {
    const auto g = DistanceGraph(GenerateTriangularChain(k, delta));
    const RatioEvaluation best = MaxRatioExact(g, {.threads = Threads()}).best;
    const RatioEvaluation bip = BipartiteColoring(g);
    const double max_target = 3.0 * k - 2, bip_target = 2.0 * k - 1;
    v.Check(std::abs(best.value() - max_target) <= 5 * delta * max_target,
            Format("k=%d max value %.12g", k, best.value()));
    v.Check(std::abs(bip.value() - bip_target) <= 5 * delta * bip_target,
            Format("k=%d bipartite value %.12g", k, bip.value()));
    detail += Format("k=%d max=%.6f bip=%.6f; ", k, best.value(), bip.value());
    if (k == 5) ratio5 = best.ratio / bip.ratio;
  }
  v.Check(std::abs(ratio5 - 1.444) <= 0.02,
          Format("max/bipartite at k=5 is %.12g", ratio5));
  return {v.ok(), v.Summary(detail + Format("max/bip(k=5)=%.6f", ratio5))};
}

Outcome PentagonCore() {
  Verdict v;
  std::string detail;
  for (int n : {10, 12, 15, 20}) {
    const double avg = AverageRatioExact(
        DistanceGraph(GeneratePentagonCore(n, 1e-12)), {.threads = Threads()});
    v.Check(avg < 1.0, Format("n=%d avg=%.12g", n, avg));
    detail += Format("%sn=%d:%.9f", n == 10 ? "" : " ", n, avg);
  }
  return {v.ok(), v.Summary("avg " + detail)};
}

Outcome Tripod() {
  Verdict v;
  std::vector<double> avgs;
  for (int m : {2, 4, 6}) {
    avgs.push_back(AverageRatioExact(DistanceGraph(GenerateTripod(m, 1e-4, 0)),
                                     {.threads = Threads()}));
  }
  v.Check(avgs[2] >= 1.90 && avgs[2] <= 2.16,
          Format("m=6 avg=%.12g outside [1.90, 2.16]", avgs[2]));
  v.Check(avgs[0] < avgs[1] && avgs[1] < avgs[2], "average not increasing in m");
  return {v.ok(), v.Summary(Format("avg m=2:%.9f m=4:%.9f m=6:%.9f", avgs[0],
                                   avgs[1], avgs[2]))};
}

Outcome Bernstein() {
  Verdict v;
  const double d2 = BernsteinAverageLimit(10000, 2);
  const double d3 = BernsteinAverageLimit(100000, 3);
  const double d1 = BernsteinAverageLimit(1000, 1);
  v.Check(std::abs(d2 - std::sqrt(2.0)) < 0.01, Format("d=2: %.12g", d2));
  v.Check(std::abs(d3 - std::cbrt(2.0)) < 0.01, Format("d=3: %.12g", d3));
  v.Check(std::abs(d1 - 2.0) <= 1e-9, Format("d=1: %.15g", d1));
  return {v.ok(),
          v.Summary(Format("d=2 n=1e4: %.9f  d=3 n=1e5: %.9f  d=1: %.12f", d2,
                           d3, d1))};
}

Outcome Beta() {
  const Estimate e = EstimateBeta(10000, 2, 20, 2024, Threads());
  Verdict v;
  v.Check(e.mean >= 0.55 && e.mean <= 0.75, Format("beta=%.12g", e.mean));
  return {v.ok(), v.Summary(Format("beta(2) ~ %.6f +- %.6f", e.mean,
                                   e.standard_error))};
}

Outcome Sweep() {
  const auto records = RunSweep({.n_min = 5,
                                 .n_max = 20,
                                 .trials = 100,
                                 .d = 2,
                                 .seed = 20240601,
                                 .threads = Threads()});
  Verdict v;
  for (std::size_t i = 0; i + 1 < records.size(); ++i) {
    const auto& a = records[i];
    const auto& b = records[i + 1];
    const double tol = 2 * std::hypot(a.stderr_avg, b.stderr_avg);
    v.Check(b.mean_avg >= a.mean_avg - tol,
            Format("mean_avg drops from n=%d to n=%d", a.n, b.n));
  }
  int bip_below_avg = 0;
  for (const auto& r : records) {
    v.Check(r.mean_max >= r.mean_bipartite,
            Format("n=%d mean_max < mean_bipartite", r.n));
    v.Check(r.mean_max >= r.mean_avg, Format("n=%d mean_max < mean_avg", r.n));
    v.Check(r.mean_max <= MetricRatioUpperBound(r.n) + 1e-9,
            Format("n=%d mean_max above the metric bound", r.n));
    bip_below_avg += r.trials_bipartite_below_avg;
  }
  const auto& last = records.back();
  v.Check(last.mean_avg >= 1.25 && last.mean_avg <= 1.45,
          Format("mean_avg(20)=%.12g", last.mean_avg));
  return {v.ok(),
          v.Summary(Format("n=20: mean_max=%.6f (report; [1.5,2.0] %s) "
                           "mean_avg=%.6f mean_bip=%.6f; trials with "
                           "bipartite<avg=%d, max>=2 at n=20: %d",
                           last.mean_max,
                           last.mean_max >= 1.5 && last.mean_max <= 2.0
                               ? "inside"
                               : "outside",
                           last.mean_avg, last.mean_bipartite, bip_below_avg,
                           last.trials_max_at_least_2))};
}

Outcome ReductionRoundTrip() {
  Verdict v;
  std::atomic<int> largest_clique{0};
  ParallelFor(100, Threads(), [&](std::size_t i) {
    const int n = 5 + static_cast<int>(i % 8);
    const double p = 0.3 + 0.2 * static_cast<double>((i / 8) % 3);
    const SimpleGraph g = GenerateRandomGraph(n, p, ChildSeed(77, i));
    const ReductionInstance ri = ReduceClique(g);
    const RatioEvaluation best = MaxRatioExact(ri.reduced, {.threads = 1}).best;
    const int q = static_cast<int>(std::floor(best.value() / n + 1e-9));
    const int ell = static_cast<int>(MaxCliqueBruteForce(g).size());
    const std::string tag = Format("graph %zu n=%d p=%.1f", i, n, p);
    v.Check(ell <= q + 2, tag + Format(" clique=%d floor(k/n)=%d", ell, q));
    try {
      const std::vector<int> clique = ColoringToClique(ri, best.coloring);
      v.Check(g.IsClique(clique), tag + " decoded set is not a clique");
      v.Check(2 * static_cast<int>(clique.size()) >= q + 2,
              tag + " decoded clique too small");
      int seen = largest_clique.load();
      while (static_cast<int>(clique.size()) > seen &&
             !largest_clique.compare_exchange_weak(seen, clique.size())) {
      }
    } catch (const Error& e) {
      v.Check(false, tag + " " + e.what());
    }
  });
  return {v.ok(), v.Summary(Format("100 graphs; largest decoded clique %d",
                                   largest_clique.load()))};
}

Outcome Realization() {
  Verdict v;
  std::vector<WeightedCompleteGraph> graphs;
  for (int i = 0; i < 50; ++i) {
    graphs.push_back(
        GenerateRandomWeights(2 + i % 11, 0.1, 10.0, ChildSeed(5, i)));
  }
  for (int i = 0; i < 20; ++i) {
    graphs.push_back(
        ReduceClique(GenerateRandomGraph(3 + i % 10, 0.5, ChildSeed(6, i)))
            .reduced);
  }
  double worst_error = 0.0, worst_shift = 0.0;
  std::mutex mu;
  ParallelFor(graphs.size(), Threads(), [&](std::size_t i) {
    const WeightedCompleteGraph& g = graphs[i];
    const int n = g.size();
    const std::string tag = Format("graph %zu n=%d", i, n);
    try {
      const RealizationLift lift = LiftAndRealize(g);
      v.Check(lift.max_relative_distance_error <= 1e-6,
              tag + Format(" error %.3g", lift.max_relative_distance_error));
      v.Check(LiftPreservesArgmax(g, lift.lifted), tag + " argmax changed");
      double shift_error = 0.0;
      if (n >= 2) {
        const double base0 = MinimumSpanningTree(g).total_weight();
        const double base1 = MinimumSpanningTree(lift.lifted).total_weight();
        for (std::uint64_t k = 0; k < ProperColoringCount(n); ++k) {
          const std::uint64_t mask = CanonicalMask(k);
          const double before = MstRatio(g, mask, base0).value();
          const double after = MstRatio(lift.lifted, mask, base1).value();
          const double expected = before + (n - 2) * lift.shift;
          const double rel = std::abs(after - expected) / std::max(1.0, after);
          shift_error = std::max(shift_error, rel);
        }
      }
      v.Check(shift_error <= 1e-9, tag + Format(" shift error %.3g", shift_error));
      std::lock_guard lock(mu);
      worst_error = std::max(worst_error, lift.max_relative_distance_error);
      worst_shift = std::max(worst_shift, shift_error);
    } catch (const Error& e) {
      v.Check(false, tag + " " + e.what());
    }
  });
  return {v.ok(),
          v.Summary(Format("%zu graphs; max distance error %.3g; max "
                           "value-shift error %.3g",
                           graphs.size(), worst_error, worst_shift))};
}

Outcome Crossings() {
  Verdict v;
  const PointSet square =
      PointSet::FromRows({{0, 0}, {1, 0}, {0, 1}, {1, 1}});
  const int sq = ChromaticCrossingNumber(square, Coloring::FromString("RBBR"));
  v.Check(sq == 1, Format("square diagonal coloring gives %d", sq));
  Rng rng(4242);
  long total = 0;
  for (int i = 0; i < 500; ++i) {
    const int n = 4 + static_cast<int>(rng.Below(17));
    const PointSet p = GenerateUniform(n, 2, rng.NextU64());
    const Coloring c =
        Coloring::FromMask(n, 1 + rng.Below((std::uint64_t{1} << n) - 2));
    const int got = ChromaticCrossingNumber(p, c);
    const int want = oracle::NaiveCrossings(p, c);
    v.Check(got == want, Format("pair %d: %d vs oracle %d", i, got, want));
    total += want;
  }
  return {v.ok(), v.Summary(Format("500 pairs, %ld crossings in total", total))};
}

Outcome PathDoubleCoverCheck() {
  Verdict v;
  Rng rng(99);
  for (int i = 0; i < 500; ++i) {
    const int n = 2 + static_cast<int>(rng.Below(29));
    const Tree t = GenerateRandomTree(n, rng.NextU64());
    const auto paths = PathDoubleCover(t);
    v.Check(paths.size() == t.Leaves().size(),
            Format("tree %d: %zu paths for %zu leaves", i, paths.size(),
                   t.Leaves().size()));
    std::vector<int> count(static_cast<std::size_t>(n) * n, 0);
    for (const TreePath& p : paths) {
      for (std::size_t k = 0; k + 1 < p.vertices.size(); ++k) {
        const int a = std::min(p.vertices[k], p.vertices[k + 1]);
        const int b = std::max(p.vertices[k], p.vertices[k + 1]);
        v.Check(t.Contains(a) && b < n, Format("tree %d: bad vertex", i));
        ++count[a * n + b];
      }
    }
    int covered = 0;
    for (const Edge& e : t.edges()) {
      v.Check(count[e.u * n + e.v] == 2, Format("tree %d: edge covered %d times",
                                                i, count[e.u * n + e.v]));
      covered += count[e.u * n + e.v];
    }
    const int all = std::accumulate(count.begin(), count.end(), 0);
    v.Check(all == covered, Format("tree %d: path uses a non-tree edge", i));
  }
  return {v.ok(), v.Summary("500 random trees, n in [2, 30]")};
}

int Report(const char* name, const std::function<Outcome()>& run) {
  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = run();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(
                          std::chrono::steady_clock::now() - start)
                          .count();
  std::printf("%s %-22s %s [%.1fs]\n", o.pass ? "PASS" : "FAIL", name,
              o.detail.c_str(), secs);
  std::fflush(stdout);
  return o.pass ? 0 : 1;
}

}  // namespace
}  // namespace mstratio

int main() {
  using namespace mstratio;
  int failed = 0;

  CorpusResults corpus;
  const auto start = std::chrono::steady_clock::now();
  RunCorpus(corpus);
  const double corpus_secs = std::chrono::duration<double>(
                                 std::chrono::steady_clock::now() - start)
                                 .count();
  std::printf("corpus: 4000 instances, n = 5..14, %ld colorings certified "
              "[%.1fs]\n",
              corpus.colorings.load(), corpus_secs);
  failed += Report("upper_bound", [&] {
    return Outcome{corpus.upper.ok(),
                   corpus.upper.Summary(Format(
                       "max gamma - bound = %.6g", corpus.worst_gamma_gap))};
  });
  failed += Report("certifier", [&] {
    return Outcome{corpus.certifier.ok(),
                   corpus.certifier.Summary(Format(
                       "max (combined - bound)/|T| = %.6g",
                       corpus.worst_cert_slack))};
  });
  failed += Report("extremal_tightness", ExtremalTightness);
  failed += Report("three_approximation", [&] {
    return Outcome{corpus.approx.ok(),
                   corpus.approx.Summary(Format(
                       "min approx - floor = %.6g; max gamma/approx = %.6f",
                       corpus.min_approx_margin,
                       corpus.max_gamma_over_approx))};
  });
  failed += Report("triangular_chain", TriangularChain);
  failed += Report("average_bounds", [&] {
    return Outcome{corpus.average.ok(),
                   corpus.average.Summary(Format(
                       "min margin over both bounds = %.6g",
                       corpus.min_avg_margin))};
  });
  failed += Report("pentagon_core", PentagonCore);
  failed += Report("tripod", Tripod);
  failed += Report("bernstein_limit", Bernstein);
  failed += Report("beta2_bracket", Beta);
  failed += Report("sweep", Sweep);
  failed += Report("reduction_round_trip", ReductionRoundTrip);
  failed += Report("realization", Realization);
  failed += Report("crossings", Crossings);
  failed += Report("path_double_cover", PathDoubleCoverCheck);
  std::printf("%d of 15 criteria failed\n", failed);
  return failed == 0 ? 0 : 1;
}
