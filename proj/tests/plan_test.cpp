#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

#include "random_instances.hpp"
#include "rpq/engine.hpp"
#include "rpq/oracle.hpp"

namespace rpq {
namespace {

LabeledGraph load(const std::string& text) {
  std::istringstream in(text);
  return load_graph(in);
}

std::vector<Index> plan(const LabeledGraph& g, std::string_view pattern, Mode mode, const std::string& v) {
  return eval_plan(g, parse_query(pattern), {mode, g.vertex_index(v)}).reachable;
}

TEST(PlanEvaluator, StarThenLabel) {
  const auto g = load("3\ta\t4\n4\ta\t3\n3\tb\t5\n");
  EXPECT_EQ(plan(g, "a* b", Mode::ssr, "3"), std::vector<Index>{g.vertex_index("5")});
}

TEST(PlanEvaluator, StarWithoutMatchingEdgesIsIdentity) {
  const auto g = load("x\tb\ty\n");
  EXPECT_EQ(plan(g, "a*", Mode::ssr, "y"), std::vector<Index>{g.vertex_index("y")});
  EXPECT_EQ(plan(g, "(a b)*", Mode::ssr, "x"), std::vector<Index>{g.vertex_index("x")});
}

TEST(PlanEvaluator, ChainReachesFarEndpointOnly) {
  const auto g = load("p0\ta\tp1\np1\tb\tp2\np2\tc\tp3\n");
  EXPECT_EQ(plan(g, "a b c", Mode::ssr, "p0"), std::vector<Index>{g.vertex_index("p3")});
  EXPECT_EQ(plan(g, "a b c", Mode::sdr, "p3"), std::vector<Index>{g.vertex_index("p0")});
  EXPECT_TRUE(plan(g, "a b c", Mode::ssr, "p1").empty());
}

TEST(PlanEvaluator, InnerClosuresAreMaterialised) {
  // The star sits inside an alternation, so its closure is computed as a
  // full matrix rather than by vector propagation.
  const auto g = load("0\ta\t1\n1\ta\t2\n2\ta\t3\n0\tb\t9\n");
  const auto got = plan(g, "(a* | b) a", Mode::ssr, "0");
  std::vector<std::string> names;
  for (Index v : got) names.push_back(g.vertex_name(v));
  std::sort(names.begin(), names.end());
  EXPECT_EQ(names, (std::vector<std::string>{"1", "2", "3"}));
}

TEST(PlanEvaluator, AgreesWithOracleBothDirections) {
  std::mt19937_64 rng(211);
  for (int trial = 0; trial < 150; ++trial) {
    const auto g = testing::random_graph(rng, 30, 120);
    const RegexAst ast = testing::random_ast(rng);
    const TwoNfa n = compile(ast);
    const auto v = static_cast<Index>(rng() % g.num_vertices());

    const auto ssr = eval_plan(g, ast, {Mode::ssr, v}).reachable;
    EXPECT_EQ(std::set<Index>(ssr.begin(), ssr.end()), oracle_ssr(g, n, v)) << to_string(ast);

    const auto sdr = eval_plan(g, ast, {Mode::sdr, v}).reachable;
    EXPECT_EQ(std::set<Index>(sdr.begin(), sdr.end()), oracle_ssr(g, reverse(n), v)) << to_string(ast);
  }
}

TEST(PlanEvaluator, TimesOut) {
  std::ostringstream chain;
  for (int i = 0; i < 3'000; ++i) chain << i << "\ta\t" << i + 1 << '\n';
  const auto g = load(chain.str());
  EngineOptions opts;
  opts.timeout = std::chrono::milliseconds(1);
  // (a a)* inside an alternation forces a full closure of a 3000-vertex chain.
  const auto r = eval_plan(g, parse_query("((a a)* | b) a"), {Mode::ssr, 0}, opts);
  EXPECT_EQ(r.status, Status::timeout);
  EXPECT_EQ(r.algorithm, Algorithm::plan);
}

}  // namespace
}  // namespace rpq
