#include "rpq/oracle.hpp"

#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "random_instances.hpp"
#include "rpq/error.hpp"

namespace rpq {
namespace {

LabeledGraph load(const std::string& text) {
  std::istringstream in(text);
  return load_graph(in);
}

Symbol fwd(std::string l) { return {std::move(l), false}; }

// One accepting start state looping on every symbol in both directions.
TwoNfa universal(const LabeledGraph& g) {
  TwoNfa n;
  n.nstates = 1;
  n.starts = SparseBoolMatrix::from_pairs(1, 1, {{0, 0}});
  n.finals = n.starts;
  for (const auto& l : g.labels().names()) {
    n.transitions.emplace(Symbol{l, false}, SparseBoolMatrix::identity(1));
    n.transitions.emplace(Symbol{l, true}, SparseBoolMatrix::identity(1));
  }
  return n;
}

TEST(Oracle, HandEnumeratedPaths) {
  // 2-paths from 3 of length <= 2: b (to 5), a (to 4), a a (to 3), a ^a (to 3), ...
  // Only words in a*b end in 5.
  const auto g = load("3\tb\t5\n");
  EXPECT_EQ(oracle_ssr(g, compile("a* b"), g.vertex_index("3")), std::set<Index>{g.vertex_index("5")});
  const auto h = load("3\ta\t4\n4\ta\t3\n3\tb\t5\n");
  EXPECT_EQ(oracle_ssr(h, compile("a* b"), h.vertex_index("3")), std::set<Index>{h.vertex_index("5")});
}

TEST(Oracle, EmptyWordIncludesSource) {
  const auto g = load("x\ta\ty\n");
  EXPECT_TRUE(oracle_ssr(g, compile("b?"), 1).count(1));
}

TEST(Oracle, DisconnectedVertexExcluded) {
  const auto g = load("x\ta\ty\nz\ta\tw\n");
  const auto r = oracle_ssr(g, compile("(a | ^a)+"), g.vertex_index("x"));
  EXPECT_EQ(r.count(g.vertex_index("z")), 0u);
  EXPECT_EQ(r.count(g.vertex_index("w")), 0u);
}

TEST(Oracle, UniversalAutomatonGivesUndirectedComponent) {
  std::mt19937_64 rng(307);
  for (int trial = 0; trial < 30; ++trial) {
    const auto g = testing::random_graph(rng, 40, 40);
    const auto src = static_cast<Index>(rng() % g.num_vertices());
    // Union-find over all labels, ignoring direction.
    std::vector<Index> parent(g.num_vertices());
    for (Index v = 0; v < parent.size(); ++v) parent[v] = v;
    auto find = [&](Index v) {
      while (parent[v] != v) v = parent[v] = parent[parent[v]];
      return v;
    };
    for (Index a = 0; a < g.num_labels(); ++a) {
      for (const auto& [u, v] : g.adjacency(a, false).to_pairs()) parent[find(u)] = find(v);
    }
    std::set<Index> component;
    for (Index v = 0; v < g.num_vertices(); ++v) {
      if (find(v) == find(src)) component.insert(v);
    }
    OracleStats stats;
    EXPECT_EQ(oracle_ssr(g, universal(g), src, stats), component);
    EXPECT_LE(stats.visited, g.num_vertices());
  }
}

TEST(Oracle, VisitsAtMostProductSize) {
  std::mt19937_64 rng(311);
  for (int trial = 0; trial < 50; ++trial) {
    const auto g = testing::random_graph(rng);
    const TwoNfa n = compile(testing::random_ast(rng));
    OracleStats stats;
    oracle_ssr(g, n, 0, stats);
    EXPECT_LE(stats.visited, std::size_t{n.nstates} * g.num_vertices());
  }
}

TEST(Oracle, WordEnumeration) {
  EXPECT_EQ(oracle_words(compile("a*"), 2), (std::set<Word>{{}, {fwd("a")}, {fwd("a"), fwd("a")}}));
  EXPECT_EQ(oracle_words(compile("a*b"), 2), (std::set<Word>{{fwd("b")}, {fwd("a"), fwd("b")}}));
  EXPECT_EQ(oracle_words(compile("^b"), 1), (std::set<Word>{{Symbol{"b", true}}}));
}

TEST(Oracle, WordEnumerationRefusesHugeAlphabets) {
  EXPECT_THROW(oracle_words(compile("(a|b|c|d|e|f|g|h|i|j)*"), 8, 1000), Error);
}

}  // namespace
}  // namespace rpq
