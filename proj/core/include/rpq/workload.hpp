#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "rpq/engine.hpp"
#include "rpq/graph.hpp"

namespace rpq {

struct WorkloadEntry {
  std::string id;
  Mode mode = Mode::ssr;
  std::string endpoint;  // external vertex id
  std::string pattern;
};

// TSV `id<TAB>mode<TAB>endpoint<TAB>pattern`, mode is `ssr` or `sdr`.
// '#' lines and blank lines are skipped; ids must be unique.
std::vector<WorkloadEntry> parse_workload(std::istream& in);
void write_workload(const std::vector<WorkloadEntry>& entries, std::ostream& out);

// Uniform random edge-list generator. Vertex ids are the decimal strings
// "0" .. vertices-1; each label receives exactly its requested number of
// lines (duplicates are possible and collapse on load).
struct GeneratorSpec {
  Index vertices = 1;
  std::vector<std::pair<std::string, std::size_t>> label_counts;
  std::uint64_t seed = 1;
};

std::vector<Edge> generate_edges(const GeneratorSpec& spec);
void write_edges(const std::vector<Edge>& edges, std::ostream& out);

// Per-label counts for a ~1e6-edge graph with the label skew of the
// RPQBench dataset: the frequent labels scaled down by ~124x and the two
// rare labels (d, e) kept at their absolute counts.
std::vector<std::pair<std::string, std::size_t>> rpqbench_label_counts();

// The ten RPQBench query families, each evaluated single-source and
// single-destination.
std::vector<std::string> rpqbench_patterns();

// 20 family/mode combinations x `endpoints` uniformly drawn vertices.
std::vector<WorkloadEntry> make_rpqbench_workload(const LabeledGraph& g, std::size_t endpoints,
                                                  std::uint64_t seed);

struct BenchRow {
  std::string id;
  Mode mode = Mode::ssr;
  Algorithm algorithm = Algorithm::hybrid;
  std::size_t result_count = 0;
  std::size_t iterations = 0;
  double time_ms = 0.0;
  std::string status;  // ok | timeout | error
  std::string message;
  std::vector<Index> reachable;
};

struct BenchConfig {
  std::vector<Algorithm> algorithms{Algorithm::hybrid};
  EngineOptions engine;
  std::size_t repeat = 1;
  bool parallel_entries = false;
};

// Runs every entry under every algorithm. With repeat >= 2 the first run is a
// warm-up and time_ms is the median of the remaining runs. Rows are ordered
// by entry, then algorithm, regardless of parallel_entries.
std::vector<BenchRow> run_bench(const LabeledGraph& g, const std::vector<WorkloadEntry>& entries,
                                const BenchConfig& config);

inline constexpr const char* kBenchCsvHeader = "id,mode,algorithm,result_count,iterations,time_ms,status";
void write_bench_csv(const std::vector<BenchRow>& rows, std::ostream& out);

}  // namespace rpq
