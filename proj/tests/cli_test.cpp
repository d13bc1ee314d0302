#include "cli.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <initializer_list>
#include <sstream>
#include <string>
#include <vector>

namespace curvkit {
namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::initializer_list<std::string> args) {
  std::vector<std::string> storage{"curvkit"};
  storage.insert(storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& s : storage) argv.push_back(s.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::size_t count_lines(const std::string& text) {
  std::size_t n = 0;
  for (char c : text) n += c == '\n';
  return n;
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = std::filesystem::temp_directory_path() / "curvkit_cli_test";
    std::filesystem::create_directories(dir_);
  }
  void TearDown() override { std::filesystem::remove_all(dir_); }
  std::string file(const std::string& name) const { return (dir_ / name).string(); }

  std::filesystem::path dir_;
};

TEST_F(CliTest, GenerateThenCompute) {
  const std::string graph = file("g.txt");
  const std::string csv = file("c.csv");
  Outcome gen = run({"generate", "--model", "er", "--n", "100", "--p", "0.5", "--seed", "42",
                     "--out", graph});
  ASSERT_EQ(gen.code, 0) << gen.err;
  std::ifstream in(graph);
  std::size_t edges = 0;
  for (std::string line; std::getline(in, line);) edges += !line.empty() && line[0] != '#';

  Outcome comp = run({"compute", "--graph", graph, "--metrics", "jc", "--out", csv});
  ASSERT_EQ(comp.code, 0) << comp.err;
  std::ifstream csv_in(csv);
  std::stringstream buffer;
  buffer << csv_in.rdbuf();
  EXPECT_EQ(count_lines(buffer.str()), edges + 1);
  EXPECT_EQ(buffer.str().rfind("u,v,or,jc,gjc,forman\n", 0), 0u);
}

TEST_F(CliTest, ComputeWorkedExampleToStdout) {
  const std::string graph = file("six.txt");
  std::ofstream(graph) << "1 2\n1 3\n1 4\n1 6\n2 3\n2 5\n4 5\n";
  Outcome r = run({"compute", "--graph", graph, "--metrics", "or,jc,gjc,forman", "--exact"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("\n1,2,0.25,-1.5,0,-3,1/4,-3/2,0\n"), std::string::npos) << r.out;

  Outcome par = run({"compute", "--graph", graph, "--workers", "4", "--idle", "1/2"});
  EXPECT_EQ(par.code, 0) << par.err;
}

TEST_F(CliTest, CompareModelPrintsRow) {
  Outcome r = run({"compare", "--model", "ba", "--n", "60", "--m", "1", "--seeds", "2"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out.rfind("graph,or_mean", 0), 0u);
  EXPECT_NE(r.out.find("N/A"), std::string::npos);
}

TEST_F(CliTest, OtherSubcommands) {
  EXPECT_EQ(run({"moments", "--n", "50", "--p", "0.1", "--trials", "50"}).code, 0);
  EXPECT_EQ(run({"asymptotics", "--regime", "fixed-p", "--n", "60", "--p", "0.3", "--trials", "1"})
                .code,
            0);
  const std::string graph = file("b.txt");
  ASSERT_EQ(run({"generate", "--model", "ws", "--n", "40", "--k", "4", "--p", "0.1", "--out",
                 graph})
                .code,
            0);
  EXPECT_EQ(run({"bench", "--graph", graph}).code, 0);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST_F(CliTest, UsageErrors) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  Outcome unknown = run({"compute", "--graph", file("x.txt"), "--bogus"});
  EXPECT_EQ(unknown.code, 2);
  EXPECT_FALSE(unknown.err.empty());
  EXPECT_EQ(run({"generate", "--model", "xyz", "--n", "10"}).code, 2);
  EXPECT_EQ(run({"compute", "--metrics", "jc"}).code, 2);
  EXPECT_EQ(run({"generate", "--model", "ba", "--n", "5", "--m", "9"}).code, 2);
  EXPECT_EQ(run({"compare", "--model", "ws", "--n", "10", "--k", "3", "--p", "0.1"}).code, 2);
  EXPECT_EQ(run({"asymptotics", "--regime", "intermediate", "--n", "10000", "--p", "0.5"}).code, 2);

}

TEST_F(CliTest, RuntimeErrors) {
  EXPECT_EQ(run({"compute", "--graph", file("missing.txt")}).code, 1);

  // The invocation is well formed; the data is not.
  const std::string bad = file("bad.txt");
  std::ofstream(bad) << "1 2\nfoo bar\n";
  Outcome parse = run({"compute", "--graph", bad});
  EXPECT_EQ(parse.code, 1);
  EXPECT_NE(parse.err.find("line 2"), std::string::npos) << parse.err;
  const std::string empty = file("empty.txt");
  std::ofstream(empty) << "# nothing\n";
  EXPECT_EQ(run({"compare", "--graph", empty}).code, 1);
}

}  // namespace
}  // namespace curvkit
