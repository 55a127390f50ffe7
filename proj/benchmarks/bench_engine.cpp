#include <benchmark/benchmark.h>

#include <string>
#include <vector>

#include "rpq/engine.hpp"
#include "rpq/graph.hpp"
#include "rpq/workload.hpp"

namespace {

// rpqbench-shaped graph at a tenth of the acceptance scale.
const rpq::LabeledGraph& bench_graph() {
  static const rpq::LabeledGraph g = [] {
    rpq::GeneratorSpec spec;
    spec.vertices = 10'000;
    for (auto [label, count] : rpq::rpqbench_label_counts()) {
      spec.label_counts.emplace_back(label, std::max<std::size_t>(count / 10, 1));
    }
    spec.seed = 11;
    return rpq::LabeledGraph::from_edges(rpq::generate_edges(spec));
  }();
  return g;
}

void run_family(benchmark::State& state, rpq::Algorithm algorithm) {
  const auto& g = bench_graph();
  const std::string pattern = rpq::rpqbench_patterns().at(static_cast<std::size_t>(state.range(0)));
  const rpq::PreparedQuery q = rpq::PreparedQuery::from_text(pattern);
  rpq::EngineOptions opts;
  opts.algorithm = algorithm;
  std::size_t answers = 0;
  rpq::Index v = 0;
  for (auto _ : state) {
    const auto r = rpq::evaluate(g, q, {rpq::Mode::ssr, v}, opts);
    answers += r.reachable.size();
    v = static_cast<rpq::Index>((v + 7919) % g.num_vertices());
  }
  state.SetLabel(pattern);
  state.counters["answers/query"] =
      benchmark::Counter(static_cast<double>(answers), benchmark::Counter::kAvgIterations);
}

void BM_Masked(benchmark::State& s) { run_family(s, rpq::Algorithm::masked); }
void BM_NoMask(benchmark::State& s) { run_family(s, rpq::Algorithm::no_mask); }
void BM_Hybrid(benchmark::State& s) { run_family(s, rpq::Algorithm::hybrid); }
void BM_Plan(benchmark::State& s) { run_family(s, rpq::Algorithm::plan); }

BENCHMARK(BM_Masked)->DenseRange(0, 9)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_NoMask)->DenseRange(0, 9)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_Hybrid)->DenseRange(0, 9)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_Plan)->DenseRange(0, 9)->Unit(benchmark::kMicrosecond);

// Closure-heavy query where the frontier grows large.
void BM_LargeClosure(benchmark::State& state) {
  const auto& g = bench_graph();
  const rpq::PreparedQuery q = rpq::PreparedQuery::from_text("(c | ^c)*");
  rpq::EngineOptions opts;
  opts.algorithm = static_cast<rpq::Algorithm>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(rpq::evaluate(g, q, {rpq::Mode::ssr, 0}, opts));
  state.SetLabel(std::string(rpq::to_string(opts.algorithm)));
}
BENCHMARK(BM_LargeClosure)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
