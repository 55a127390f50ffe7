// rpq: command-line front end for the regular path query engine.
//
//   rpq query   GRAPH (--ssr V | --sdr V) PATTERN   evaluate one query
//   rpq bench   GRAPH WORKLOAD                      timing CSV for a workload
//   rpq gen     --vertices N --label a:COUNT ...    random edge list
//   rpq compile PATTERN                             dump the minimal automaton

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "rpq/automaton.hpp"
#include "rpq/engine.hpp"
#include "rpq/error.hpp"
#include "rpq/graph.hpp"
#include "rpq/workload.hpp"

namespace {

constexpr int kUsageError = 2;
constexpr int kTimeout = 3;

struct EngineFlags {
  std::string algorithm = "hybrid";
  std::size_t threshold = 100;
  std::string product_order = "left";
  long long timeout_ms = 60'000;

  void attach(CLI::App& cmd) {
    cmd.add_option("--threshold", threshold, "nnz(P) at which hybrid switches to the masked loop")
        ->capture_default_str();
    cmd.add_option("--product-order", product_order, "left: ((N^T M) G), right: (N^T (M G))")
        ->check(CLI::IsMember({"left", "right"}))
        ->capture_default_str();
    cmd.add_option("--timeout-ms", timeout_ms, "per-query evaluation budget")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
  }

  rpq::EngineOptions options() const {
    rpq::EngineOptions opts;
    opts.algorithm = *rpq::parse_algorithm(algorithm);
    opts.switch_threshold = threshold;
    opts.product_order = *rpq::parse_product_order(product_order);
    opts.timeout = std::chrono::milliseconds(timeout_ms);
    return opts;
  }
};

const std::vector<std::string> kAlgorithmNames{"masked", "no_mask", "hybrid", "plan"};

int run_query(const std::string& graph_path, const std::optional<std::string>& ssr,
              const std::optional<std::string>& sdr, const std::string& pattern, const EngineFlags& flags,
              bool list_vertices) {
  const rpq::LabeledGraph g = rpq::load_graph(graph_path);
  const rpq::PreparedQuery query = rpq::PreparedQuery::from_text(pattern);
  const rpq::Endpoint endpoint{ssr ? rpq::Mode::ssr : rpq::Mode::sdr, g.vertex_index(ssr ? *ssr : *sdr)};
  const rpq::EvalResult r = rpq::evaluate(g, query, endpoint, flags.options());

  std::cerr << "algorithm=" << rpq::to_string(r.algorithm) << " iterations=" << r.iterations
            << " time_ms=" << std::chrono::duration<double, std::milli>(r.elapsed).count() << '\n';
  if (r.status == rpq::Status::timeout) {
    std::cerr << "rpq: query timed out after " << flags.timeout_ms << " ms\n";
    return kTimeout;
  }
  std::cout << "count=" << r.reachable.size() << '\n';
  if (list_vertices) {
    std::vector<std::string> names;
    names.reserve(r.reachable.size());
    for (rpq::Index v : r.reachable) names.push_back(g.vertex_name(v));
    std::sort(names.begin(), names.end());
    for (const auto& n : names) std::cout << n << '\n';
  }
  return 0;
}

int run_bench(const std::string& graph_path, const std::string& workload_path,
              const std::vector<std::string>& algorithms, const EngineFlags& flags, std::size_t repeat,
              bool parallel) {
  const rpq::LabeledGraph g = rpq::load_graph(graph_path);
  std::ifstream in(workload_path);
  if (!in) throw rpq::Error("cannot open workload file " + workload_path);
  const auto entries = rpq::parse_workload(in);

  rpq::BenchConfig config;
  config.engine = flags.options();
  config.repeat = repeat;
  config.parallel_entries = parallel;
  config.algorithms.clear();
  for (const auto& name : algorithms) {
    if (name == "all") {
      config.algorithms = {rpq::Algorithm::masked, rpq::Algorithm::no_mask, rpq::Algorithm::hybrid,
                           rpq::Algorithm::plan};
      break;
    }
    config.algorithms.push_back(*rpq::parse_algorithm(name));
  }
  rpq::write_bench_csv(rpq::run_bench(g, entries, config), std::cout);
  return 0;
}

std::pair<std::string, std::size_t> parse_label_count(const std::string& text) {
  const auto colon = text.rfind(':');
  if (colon == std::string::npos || colon == 0 || colon + 1 == text.size()) {
    throw rpq::Error("expected LABEL:COUNT, got '" + text + "'");
  }
  const std::string digits = text.substr(colon + 1);
  if (!std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    throw rpq::Error("edge count must be a non-negative integer in '" + text + "'");
  }
  return {text.substr(0, colon), std::stoull(digits)};
}

int run_gen(long long vertices, const std::vector<std::string>& labels, bool preset, std::uint64_t seed,
            const std::string& workload_out, std::size_t endpoints) {
  if (vertices < 1 || vertices > std::numeric_limits<rpq::Index>::max()) {
    throw rpq::Error("--vertices must be in [1, 2^32)");
  }
  rpq::GeneratorSpec spec;
  spec.vertices = static_cast<rpq::Index>(vertices);
  spec.seed = seed;
  if (preset) spec.label_counts = rpq::rpqbench_label_counts();
  for (const auto& l : labels) spec.label_counts.push_back(parse_label_count(l));
  if (spec.label_counts.empty()) throw rpq::Error("no labels requested; use --label or --preset rpqbench");

  const auto edges = rpq::generate_edges(spec);
  rpq::write_edges(edges, std::cout);

  if (!workload_out.empty()) {
    const auto g = rpq::LabeledGraph::from_edges(edges);
    std::ofstream out(workload_out);
    if (!out) throw rpq::Error("cannot write " + workload_out);
    rpq::write_workload(rpq::make_rpqbench_workload(g, endpoints, seed), out);
  }
  return 0;
}

int run_compile(const std::string& pattern, bool reversed) {
  rpq::TwoNfa n = rpq::compile(pattern);
  if (reversed) n = rpq::reverse(n);
  rpq::write_transitions(n, std::cout);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Regular path queries over edge-labelled graphs with sparse Boolean matrices"};
  app.require_subcommand(1);

  EngineFlags engine;

  auto* query = app.add_subcommand("query", "Evaluate one single-source or single-destination query");
  std::string graph_path;
  std::optional<std::string> ssr;
  std::optional<std::string> sdr;
  std::string pattern;
  bool list_vertices = false;
  query->add_option("graph", graph_path, "edge-list file")->required()->check(CLI::ExistingFile);
  auto* ssr_opt = query->add_option("--ssr", ssr, "source vertex id");
  auto* sdr_opt = query->add_option("--sdr", sdr, "destination vertex id");
  ssr_opt->excludes(sdr_opt);
  query->add_option("pattern", pattern, "query pattern")->required();
  query->add_option("--algorithm", engine.algorithm, "masked | no_mask | hybrid | plan")
      ->check(CLI::IsMember(kAlgorithmNames))
      ->capture_default_str();
  query->add_flag("--list-vertices", list_vertices, "print the sorted ids of matching vertices");
  engine.attach(*query);

  auto* bench = app.add_subcommand("bench", "Run a workload file and print timing CSV");
  std::string workload_path;
  std::vector<std::string> algorithms{"hybrid"};
  std::size_t repeat = 1;
  bool parallel = false;
  bench->add_option("graph", graph_path, "edge-list file")->required()->check(CLI::ExistingFile);
  bench->add_option("workload", workload_path, "TSV id, mode, endpoint, pattern")
      ->required()
      ->check(CLI::ExistingFile);
  std::vector<std::string> algorithm_choices = kAlgorithmNames;
  algorithm_choices.push_back("all");
  bench->add_option("--algorithm", algorithms, "comma-separated algorithms, or 'all'")
      ->delimiter(',')
      ->check(CLI::IsMember(algorithm_choices))
      ->capture_default_str();
  bench->add_option("--repeat", repeat, "runs per entry; the first is a warm-up when >= 2")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  bench->add_flag("--parallel", parallel, "evaluate entries concurrently");
  engine.attach(*bench);

  auto* gen = app.add_subcommand("gen", "Generate a uniform random edge list on stdout");
  long long vertices = 0;
  std::vector<std::string> labels;
  std::string preset;
  std::uint64_t seed = 1;
  std::string workload_out;
  std::size_t endpoints = 50;
  gen->add_option("--vertices", vertices, "vertex count")->required();
  gen->add_option("--label", labels, "LABEL:COUNT, repeatable");
  gen->add_option("--preset", preset, "rpqbench: skewed 7-label counts (~1e6 edges)")
      ->check(CLI::IsMember({"rpqbench"}));
  gen->add_option("--seed", seed, "random seed")->capture_default_str();
  gen->add_option("--workload-out", workload_out, "also write the 20-combination query workload here");
  gen->add_option("--endpoints", endpoints, "random endpoints per query/mode combination")
      ->capture_default_str();

  auto* comp = app.add_subcommand("compile", "Print the minimal automaton of a pattern");
  bool reversed = false;
  comp->add_option("pattern", pattern, "query pattern")->required();
  comp->add_flag("--reverse", reversed, "print the automaton of the reversed language");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsageError;
  }

  try {
    if (*query) {
      if (!ssr && !sdr) {
        std::cerr << "rpq query: one of --ssr or --sdr is required\n";
        return kUsageError;
      }
      return run_query(graph_path, ssr, sdr, pattern, engine, list_vertices);
    }
    if (*bench) return run_bench(graph_path, workload_path, algorithms, engine, repeat, parallel);
    if (*gen) return run_gen(vertices, labels, !preset.empty(), seed, workload_out, endpoints);
    if (*comp) return run_compile(pattern, reversed);
  } catch (const rpq::ParseError& e) {
    std::cerr << "rpq: pattern error at " << e.what() << '\n';
    return kUsageError;
  } catch (const rpq::Error& e) {
    std::cerr << "rpq: " << e.what() << '\n';
    return kUsageError;
  }
  return kUsageError;
}
