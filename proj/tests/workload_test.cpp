#include "rpq/workload.hpp"

#include <gtest/gtest.h>

#include <sstream>

#include "rpq/error.hpp"

namespace rpq {
namespace {

LabeledGraph load(const std::string& text) {
  std::istringstream in(text);
  return load_graph(in);
}

std::vector<WorkloadEntry> parse(const std::string& text) {
  std::istringstream in(text);
  return parse_workload(in);
}

TEST(Workload, ParsesEntries) {
  const auto w = parse("# comment\nq1\tssr\t3\ta* b\nq2\tsdr\t5\tb\n");
  ASSERT_EQ(w.size(), 2u);
  EXPECT_EQ(w[0].id, "q1");
  EXPECT_EQ(w[0].mode, Mode::ssr);
  EXPECT_EQ(w[0].endpoint, "3");
  EXPECT_EQ(w[0].pattern, "a* b");
  EXPECT_EQ(w[1].mode, Mode::sdr);

  std::ostringstream out;
  write_workload(w, out);
  EXPECT_EQ(parse(out.str()).size(), 2u);
}

TEST(Workload, RejectsBadLines) {
  EXPECT_THROW(parse("q1\tssr\t3\n"), FormatError);
  EXPECT_THROW(parse("q1\tboth\t3\ta\n"), FormatError);
  EXPECT_THROW(parse("q1\tssr\t3\ta\nq1\tsdr\t3\ta\n"), FormatError);
}

TEST(Workload, BenchEmitsOneRowPerEntry) {
  const auto g = load("3\ta\t4\n4\ta\t3\n3\tb\t5\n");
  const auto w = parse("q1\tssr\t3\ta* b\nq2\tsdr\t5\tb\nq3\tssr\tmissing\ta\n");
  BenchConfig config;
  const auto rows = run_bench(g, w, config);
  ASSERT_EQ(rows.size(), 3u);
  EXPECT_EQ(rows[0].result_count, 1u);
  EXPECT_EQ(rows[0].status, "ok");
  EXPECT_EQ(rows[1].result_count, 1u);
  EXPECT_EQ(rows[2].status, "error");

  std::ostringstream csv;
  write_bench_csv(rows, csv);
  std::istringstream lines(csv.str());
  std::string header;
  std::getline(lines, header);
  EXPECT_EQ(header, "id,mode,algorithm,result_count,iterations,time_ms,status");
  int count = 0;
  for (std::string line; std::getline(lines, line);) ++count;
  EXPECT_EQ(count, 3);
}

TEST(Workload, ParseErrorsBecomeErrorRows) {
  const auto g = load("3\ta\t4\n");
  const auto rows = run_bench(g, parse("bad\tssr\t3\t(a\n"), BenchConfig{});
  ASSERT_EQ(rows.size(), 1u);
  EXPECT_EQ(rows[0].status, "error");
  EXPECT_NE(rows[0].message.find("column"), std::string::npos);
}

TEST(Workload, TimeoutRowsReportBudget) {
  std::ostringstream chain;
  for (int i = 0; i < 40'000; ++i) chain << i << "\ta\t" << i + 1 << '\n';
  const auto g = load(chain.str());
  BenchConfig config;
  config.algorithms = {Algorithm::masked};
  config.engine.timeout = std::chrono::milliseconds(1);
  const auto rows = run_bench(g, parse("slow\tssr\t0\ta*\n"), config);
  ASSERT_EQ(rows.size(), 1u);
  EXPECT_EQ(rows[0].status, "timeout");
  EXPECT_DOUBLE_EQ(rows[0].time_ms, 1.0);
}

TEST(Workload, RepeatsAndAlgorithms) {
  const auto g = load("3\ta\t4\n4\ta\t3\n3\tb\t5\n");
  BenchConfig config;
  config.algorithms = {Algorithm::masked, Algorithm::no_mask, Algorithm::hybrid, Algorithm::plan};
  config.repeat = 3;
  const auto rows = run_bench(g, parse("q1\tssr\t3\ta* b\n"), config);
  ASSERT_EQ(rows.size(), 4u);
  for (const auto& r : rows) {
    EXPECT_EQ(r.status, "ok");
    EXPECT_EQ(r.reachable, rows[0].reachable);
  }
  config.parallel_entries = true;
  const auto again = run_bench(g, parse("q1\tssr\t3\ta* b\nq2\tsdr\t5\ta* b\n"), config);
  ASSERT_EQ(again.size(), 8u);
  EXPECT_EQ(again[0].id, "q1");
  EXPECT_EQ(again[4].id, "q2");
}

TEST(Generator, DeterministicAndCounted) {
  GeneratorSpec spec;
  spec.vertices = 100;
  spec.label_counts = {{"a", 50}};
  spec.seed = 9;
  std::ostringstream first;
  std::ostringstream second;
  write_edges(generate_edges(spec), first);
  write_edges(generate_edges(spec), second);
  EXPECT_EQ(first.str(), second.str());
  EXPECT_EQ(generate_edges(spec).size(), 50u);

  spec.seed = 10;
  std::ostringstream other;
  write_edges(generate_edges(spec), other);
  EXPECT_NE(first.str(), other.str());

  spec.vertices = 0;
  EXPECT_THROW(generate_edges(spec), Error);
}

TEST(Generator, SkewedCountsSurviveLoad) {
  GeneratorSpec spec;
  spec.vertices = 1'000'000;
  spec.label_counts = {{"big", 1'000'000}, {"mid", 100}, {"one", 1}};
  spec.seed = 3;
  const auto g = LabeledGraph::from_edges(generate_edges(spec));
  // 1e6 draws over 1e12 possible pairs: duplicates are vanishingly rare.
  EXPECT_GE(g.adjacency(*g.label_index("big"), false).nnz(), 999'990u);
  EXPECT_EQ(g.adjacency(*g.label_index("mid"), false).nnz(), 100u);
  EXPECT_EQ(g.adjacency(*g.label_index("one"), false).nnz(), 1u);
}

TEST(Generator, RpqbenchWorkloadShape) {
  const auto g = load("0\ta\t1\n1\tb\t2\n");
  const auto w = make_rpqbench_workload(g, 5, 1);
  EXPECT_EQ(w.size(), 100u);
  EXPECT_EQ(w.front().id, "q01-S-000");
  EXPECT_EQ(w[5].id, "q02-D-000");
  EXPECT_EQ(w.back().id, "q20-D-004");
  EXPECT_EQ(rpqbench_patterns().size(), 10u);
  for (const auto& p : rpqbench_patterns()) EXPECT_NO_THROW(PreparedQuery::from_text(p));
}

}  // namespace
}  // namespace rpq
