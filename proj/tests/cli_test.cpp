#include <gtest/gtest.h>
#include <sys/wait.h>

#include <unistd.h>

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "rpq/engine.hpp"
#include "rpq/graph.hpp"

namespace {

namespace fs = std::filesystem;

struct CliRun {
  int code = -1;
  std::string out;
};

// Runs the CLI through the shell; stderr is folded into `out` when asked.
CliRun rpq_cli(const std::string& args, bool with_stderr = false, const std::string& env = "") {
  const std::string cmd = env + " " + RPQ_CLI_PATH + " " + args + (with_stderr ? " 2>&1" : " 2>/dev/null");
  CliRun r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) return r;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("rpq_cli_" + std::to_string(::getpid()) + "_" +
                                        ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
    write("g.tsv", "3\ta\t4\n4\ta\t3\n3\tb\t5\n");
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string write(const std::string& name, const std::string& body) {
    const fs::path p = dir_ / name;
    std::ofstream(p) << body;
    return p.string();
  }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  fs::path dir_;
};

TEST_F(CliTest, QueryPrintsCountAndVertices) {
  const CliRun r = rpq_cli("query " + path("g.tsv") + " --ssr 3 'a* b' --list-vertices");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "count=1\n5\n");
}

TEST_F(CliTest, QueryCountOnlyByDefault) {
  const CliRun r = rpq_cli("query " + path("g.tsv") + " --sdr 5 'a* b' --algorithm plan");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "count=2\n");
}

TEST_F(CliTest, KleeneStarAlwaysHasAnAnswer) {
  for (const char* v : {"3", "4", "5"}) {
    const CliRun r = rpq_cli("query " + path("g.tsv") + " --ssr " + v + " 'a*' --list-vertices");
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find(std::string("\n") + v + "\n"), std::string::npos) << r.out;
  }
}

TEST_F(CliTest, QueryMatchesEngine) {
  const auto g = rpq::load_graph(fs::path(path("g.tsv")));
  for (const char* alg : {"masked", "no_mask", "hybrid", "plan"}) {
    rpq::EngineOptions opts;
    opts.algorithm = *rpq::parse_algorithm(alg);
    const auto api = rpq::evaluate(g, rpq::PreparedQuery::from_text("a | ^a b?"), {rpq::Mode::ssr, 1}, opts);
    const CliRun r = rpq_cli("query " + path("g.tsv") + " --ssr 4 'a | ^a b?' --algorithm " + alg);
    EXPECT_EQ(r.out, "count=" + std::to_string(api.reachable.size()) + "\n");
  }
}

TEST_F(CliTest, ErrorsExitWithTwo) {
  CliRun r = rpq_cli("query " + path("g.tsv") + " --ssr 3 'a* (b'", true);
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.out.find("column 6"), std::string::npos) << r.out;

  r = rpq_cli("query " + path("g.tsv") + " --ssr nope 'a'", true);
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.out.find("unknown vertex"), std::string::npos);

  EXPECT_EQ(rpq_cli("query " + path("g.tsv") + " 'a'").code, 2);
  EXPECT_EQ(rpq_cli("query " + path("g.tsv") + " --ssr 3 a --algorithm fast").code, 2);
  EXPECT_EQ(rpq_cli("frobnicate").code, 2);
}

TEST_F(CliTest, TimeoutExitsWithThree) {
  std::ostringstream chain;
  for (int i = 0; i < 40'000; ++i) chain << i << "\ta\t" << i + 1 << '\n';
  write("chain.tsv", chain.str());
  const CliRun r = rpq_cli("query " + path("chain.tsv") + " --ssr 0 'a*' --algorithm masked --timeout-ms 1");
  EXPECT_EQ(r.code, 3);
}

TEST_F(CliTest, BenchWritesCsv) {
  write("w.tsv", "q1\tssr\t3\ta* b\nq2\tsdr\t5\tb\nq3\tssr\t4\ta+\n");
  const CliRun r = rpq_cli("bench " + path("g.tsv") + " " + path("w.tsv") + " --repeat 2");
  EXPECT_EQ(r.code, 0);
  std::istringstream lines(r.out);
  std::string line;
  std::getline(lines, line);
  EXPECT_EQ(line, "id,mode,algorithm,result_count,iterations,time_ms,status");
  std::getline(lines, line);
  EXPECT_EQ(line.rfind("q1,ssr,hybrid,1,", 0), 0u) << line;
  EXPECT_EQ(line.substr(line.size() - 3), ",ok");
  int rows = 1;
  while (std::getline(lines, line)) ++rows;
  EXPECT_EQ(rows, 3);

  const CliRun all = rpq_cli("bench " + path("g.tsv") + " " + path("w.tsv") + " --algorithm all --parallel");
  EXPECT_EQ(std::count(all.out.begin(), all.out.end(), '\n'), 13);
  const CliRun two = rpq_cli("bench " + path("g.tsv") + " " + path("w.tsv") + " --algorithm masked,plan");
  EXPECT_EQ(std::count(two.out.begin(), two.out.end(), '\n'), 7);
}

TEST_F(CliTest, GenIsDeterministic) {
  const CliRun a = rpq_cli("gen --vertices 100 --label a:50 --seed 7");
  const CliRun b = rpq_cli("gen --vertices 100 --label a:50 --seed 7");
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(std::count(a.out.begin(), a.out.end(), '\n'), 50);
  EXPECT_EQ(rpq_cli("gen --vertices 0 --label a:5").code, 2);
  EXPECT_EQ(rpq_cli("gen --vertices 10 --label a").code, 2);
  EXPECT_EQ(rpq_cli("gen --vertices 10 --label a:-4").code, 2);
}

TEST_F(CliTest, GenWritesWorkload) {
  const CliRun r = rpq_cli("gen --vertices 50 --label a:100 --label b:100 --workload-out " + path("w.tsv") +
                        " --endpoints 2 > " + path("g2.tsv"));
  EXPECT_EQ(r.code, 0);
  std::ifstream in(path("w.tsv"));
  int lines = 0;
  for (std::string l; std::getline(in, l);) ++lines;
  EXPECT_EQ(lines, 40);
  const CliRun b = rpq_cli("bench " + path("g2.tsv") + " " + path("w.tsv"));
  EXPECT_EQ(b.code, 0);
  EXPECT_EQ(b.out.find(",error"), std::string::npos);
}

TEST_F(CliTest, CompilePrintsTransitions) {
  EXPECT_EQ(rpq_cli("compile 'a* b'").out, "states=2 start=0 final=1\n0 a 0\n0 b 1\n");
  EXPECT_EQ(rpq_cli("compile 'a* b' --reverse").out, "states=2 start=1 final=0\n0 ^a 0\n1 ^b 0\n");
}

TEST_F(CliTest, ThreadCountDoesNotChangeResults) {
  write("w.tsv", "q1\tssr\t3\t(a | ^a)* b?\nq2\tsdr\t3\ta*\n");
  auto strip_times = [](const std::string& csv) {
    std::istringstream in(csv);
    std::string out;
    for (std::string l; std::getline(in, l);) {
      const auto last = l.rfind(',');
      const auto before = l.rfind(',', last - 1);
      out += l.substr(0, before) + l.substr(last) + "\n";
    }
    return out;
  };
  const CliRun one = rpq_cli("bench " + path("g.tsv") + " " + path("w.tsv") + " --algorithm all", false, "RPQ_THREADS=1");
  const CliRun many = rpq_cli("bench " + path("g.tsv") + " " + path("w.tsv") + " --algorithm all", false, "RPQ_THREADS=8");
  EXPECT_EQ(strip_times(one.out), strip_times(many.out));
}

}  // namespace
