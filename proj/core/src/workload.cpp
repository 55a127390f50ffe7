#include "rpq/workload.hpp"

#include <algorithm>
#include <cstdio>
#include <istream>
#include <ostream>
#include <optional>
#include <random>
#include <set>
#include <thread>

#include "rpq/error.hpp"
#include "rpq/parallel.hpp"

namespace rpq {
namespace {

std::vector<std::string> split_tabs(const std::string& line) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (;;) {
    const auto tab = line.find('\t', start);
    out.push_back(line.substr(start, tab - start));
    if (tab == std::string::npos) return out;
    start = tab + 1;
  }
}

double median(std::vector<double> xs) {
  std::sort(xs.begin(), xs.end());
  const std::size_t mid = xs.size() / 2;
  return xs.size() % 2 == 1 ? xs[mid] : 0.5 * (xs[mid - 1] + xs[mid]);
}

double to_ms(std::chrono::nanoseconds d) { return std::chrono::duration<double, std::milli>(d).count(); }

std::vector<BenchRow> run_entry(const LabeledGraph& g, const WorkloadEntry& entry, const BenchConfig& config) {
  std::vector<BenchRow> rows;
  auto make_row = [&](Algorithm a) {
    BenchRow row;
    row.id = entry.id;
    row.mode = entry.mode;
    row.algorithm = a;
    return row;
  };

  std::optional<PreparedQuery> query;
  std::optional<Index> endpoint;
  std::string failure;
  try {
    endpoint = g.vertex_index(entry.endpoint);
    query = PreparedQuery::from_text(entry.pattern);
  } catch (const Error& e) {
    failure = e.what();
  }

  for (Algorithm algorithm : config.algorithms) {
    BenchRow row = make_row(algorithm);
    if (!query || !endpoint) {
      row.status = "error";
      row.message = failure;
      rows.push_back(std::move(row));
      continue;
    }
    EngineOptions opts = config.engine;
    opts.algorithm = algorithm;
    const std::size_t runs = std::max<std::size_t>(config.repeat, 1);
    std::vector<double> times;
    bool timed_out = false;
    for (std::size_t r = 0; r < runs; ++r) {
      EvalResult res = evaluate(g, *query, {entry.mode, *endpoint}, opts);
      if (res.status == Status::timeout) {
        timed_out = true;
        break;
      }
      if (r > 0 || runs == 1) times.push_back(to_ms(res.elapsed));
      row.iterations = res.iterations;
      row.result_count = res.reachable.size();
      row.reachable = std::move(res.reachable);
    }
    if (timed_out) {
      row.status = "timeout";
      row.time_ms = static_cast<double>(opts.timeout.count());
      row.result_count = 0;
      row.iterations = 0;
      row.reachable.clear();
    } else {
      row.status = "ok";
      row.time_ms = median(times);
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

std::vector<WorkloadEntry> parse_workload(std::istream& in) {
  std::vector<WorkloadEntry> out;
  std::set<std::string> ids;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    const auto fields = split_tabs(line);
    if (fields.size() != 4) throw FormatError(lineno, "expected id<TAB>mode<TAB>endpoint<TAB>pattern");
    WorkloadEntry e;
    e.id = fields[0];
    if (fields[1] == "ssr") {
      e.mode = Mode::ssr;
    } else if (fields[1] == "sdr") {
      e.mode = Mode::sdr;
    } else {
      throw FormatError(lineno, "mode must be ssr or sdr, got '" + fields[1] + "'");
    }
    e.endpoint = fields[2];
    e.pattern = fields[3];
    if (e.id.empty() || e.endpoint.empty() || e.pattern.empty()) throw FormatError(lineno, "empty field");
    if (!ids.insert(e.id).second) throw FormatError(lineno, "duplicate id '" + e.id + "'");
    out.push_back(std::move(e));
  }
  return out;
}

void write_workload(const std::vector<WorkloadEntry>& entries, std::ostream& out) {
  for (const auto& e : entries) {
    out << e.id << '\t' << to_string(e.mode) << '\t' << e.endpoint << '\t' << e.pattern << '\n';
  }
}

std::vector<Edge> generate_edges(const GeneratorSpec& spec) {
  if (spec.vertices == 0) throw Error("generator needs at least one vertex");
  std::mt19937_64 rng(spec.seed);
  // Plain modulo keeps the byte stream identical across standard libraries.
  auto draw = [&] { return std::to_string(rng() % spec.vertices); };
  std::vector<Edge> edges;
  std::size_t total = 0;
  for (const auto& [label, count] : spec.label_counts) total += count;
  edges.reserve(total);
  for (const auto& [label, count] : spec.label_counts) {
    if (label.empty() || label.find_first_of("\t\n") != std::string::npos) {
      throw Error("invalid label name '" + label + "'");
    }
    for (std::size_t i = 0; i < count; ++i) {
      std::string src = draw();
      std::string dst = draw();
      edges.push_back({std::move(src), label, std::move(dst)});
    }
  }
  return edges;
}

void write_edges(const std::vector<Edge>& edges, std::ostream& out) {
  for (const auto& e : edges) out << e.source << '\t' << e.label << '\t' << e.destination << '\n';
}

std::vector<std::pair<std::string, std::size_t>> rpqbench_label_counts() {
  return {{"a", 2'762}, {"b", 33'826}, {"c", 922'024}, {"d", 186},
          {"e", 36},    {"f", 39'604}, {"g", 1'797}};
}

std::vector<std::string> rpqbench_patterns() {
  return {"a b c",   "(a b c) | (c d d)", "d*",
          "d* e",    "d+",                "(a b)*",
          "f g (d | e)", "f g (d | e)*",  "(c | g) (d | e)",
          "(c | g) (d | e)*"};
}

std::vector<WorkloadEntry> make_rpqbench_workload(const LabeledGraph& g, std::size_t endpoints,
                                                  std::uint64_t seed) {
  if (g.num_vertices() == 0) throw Error("workload generation needs a non-empty graph");
  std::mt19937_64 rng(seed);
  std::vector<WorkloadEntry> out;
  const auto patterns = rpqbench_patterns();
  for (std::size_t f = 0; f < patterns.size(); ++f) {
    for (Mode mode : {Mode::ssr, Mode::sdr}) {
      for (std::size_t k = 0; k < endpoints; ++k) {
        char id[48];
        std::snprintf(id, sizeof id, "q%02zu-%s-%03zu", 2 * f + (mode == Mode::ssr ? 1 : 2),
                      mode == Mode::ssr ? "S" : "D", k);
        const auto v = static_cast<Index>(rng() % g.num_vertices());
        out.push_back({id, mode, g.vertex_name(v), patterns[f]});
      }
    }
  }
  return out;
}

std::vector<BenchRow> run_bench(const LabeledGraph& g, const std::vector<WorkloadEntry>& entries,
                                const BenchConfig& config) {
  std::vector<std::vector<BenchRow>> per_entry(entries.size());
  if (config.parallel_entries && entries.size() > 1) {
    const unsigned workers = std::max(1u, std::thread::hardware_concurrency());
    parallel_chunks(entries.size(), workers, [&](std::size_t first, std::size_t last, unsigned) {
      for (std::size_t i = first; i < last; ++i) per_entry[i] = run_entry(g, entries[i], config);
    });
  } else {
    for (std::size_t i = 0; i < entries.size(); ++i) per_entry[i] = run_entry(g, entries[i], config);
  }
  std::vector<BenchRow> rows;
  for (auto& group : per_entry) {
    for (auto& r : group) rows.push_back(std::move(r));
  }
  return rows;
}

void write_bench_csv(const std::vector<BenchRow>& rows, std::ostream& out) {
  out << kBenchCsvHeader << '\n';
  for (const auto& r : rows) {
    char time[32];
    std::snprintf(time, sizeof time, "%.3f", r.time_ms);
    out << r.id << ',' << to_string(r.mode) << ',' << to_string(r.algorithm) << ',' << r.result_count << ','
        << r.iterations << ',' << time << ',' << r.status << '\n';
  }
}

}  // namespace rpq
