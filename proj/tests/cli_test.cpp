/*
Copyright (c) 2026 The hxsim Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

// Drives the built command line binary end to end.

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

#include "hxsim/graph.hpp"

namespace {

namespace fs = std::filesystem;

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("hxsim_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  int run(const std::string& args) {
    const std::string cmd = std::string(HXSIM_CLI_PATH) + " " + args + " >" + (dir_ / "stdout").string() +
                            " 2>" + (dir_ / "stderr").string();
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }
  static std::string slurp(const std::string& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
  }

  fs::path dir_;
};

TEST_F(Cli, PreprocessRunReportPipeline) {
  ASSERT_EQ(run("rmat --vertices 2000 --edges 16000 --seed 5 --out " + path("g.txt")), 0);
  ASSERT_EQ(run("preprocess --input " + path("g.txt") + " --out " + path("g.bin") + " --partition-bytes 4096"), 0);
  for (const char* ext : {"", ".idmap", ".perm", ".parts"}) EXPECT_TRUE(fs::exists(path("g.bin") + ext)) << ext;

  for (const char* engine : {"hybrid", "filter", "compaction", "zerocopy"}) {
    const std::string csv = path(std::string(engine) + ".csv");
    ASSERT_EQ(run("run --graph " + path("g.bin") + " --algo bfs --engine " + engine + " --metrics-out " + csv +
                  " --result-out " + path(std::string(engine) + ".res")),
              0);
    EXPECT_TRUE(fs::exists(csv + ".summary.json"));
  }
  // forced engines produce identical result arrays
  const auto ref = slurp(path("hybrid.res"));
  EXPECT_FALSE(ref.empty());
  for (const char* engine : {"filter", "compaction", "zerocopy"}) EXPECT_EQ(slurp(path(std::string(engine) + ".res")), ref);

  ASSERT_EQ(run("report " + path("hybrid.csv") + " " + path("filter.csv")), 0);
  const auto table = slurp(path("stdout"));
  EXPECT_NE(table.find("hybrid.csv"), std::string::npos);
  EXPECT_NE(table.find("filter"), std::string::npos);
}

TEST_F(Cli, GlobalFlagsMayFollowSubcommandAndRunsRepeatExactly) {
  ASSERT_EQ(run("rmat --vertices 500 --edges 4000 --out " + path("g.txt") + " --seed 9"), 0);
  for (const char* tag : {"a", "b"}) {
    ASSERT_EQ(run("run --graph " + path("g.txt") + " --algo pr --priority delta --partition-bytes 1024 --metrics-out " +
                  path(std::string(tag) + ".csv") + " --result-out " + path(std::string(tag) + ".res")),
              0);
  }
  EXPECT_EQ(slurp(path("a.csv")), slurp(path("b.csv")));
  EXPECT_EQ(slurp(path("a.res")), slurp(path("b.res")));
}

TEST_F(Cli, ConfigFileAndCostFlags) {
  ASSERT_EQ(run("rmat --vertices 500 --edges 4000 --out " + path("g.txt")), 0);
  {
    std::ofstream cfg(path("c.conf"));
    cfg << "# test config\nalpha = 0.7\nk = 2\nstreams = 2\n";
  }
  ASSERT_EQ(run("--config " + path("c.conf") + " run --graph " + path("g.txt") + " --algo sssp --beta 0.3 --summary-out " +
                path("s.json") + " --dump-plan " + path("plan.jsonl")),
            0);
  const auto summary = slurp(path("s.json"));
  EXPECT_NE(summary.find("\"streams\": 2"), std::string::npos);
  EXPECT_FALSE(slurp(path("plan.jsonl")).empty());

  std::ofstream bad(path("bad.conf"));
  bad << "no_such_key = 1\n";
  bad.close();
  EXPECT_EQ(run("--config " + path("bad.conf") + " run --graph " + path("g.txt")), 2);
}

TEST_F(Cli, ExitCodes) {
  EXPECT_EQ(run("--help"), 0);
  EXPECT_EQ(run(""), 2);
  EXPECT_EQ(run("frobnicate"), 2);
  EXPECT_EQ(run("run"), 2);
  EXPECT_EQ(run("run --graph " + path("missing.txt")), 3);
  EXPECT_EQ(run("run --graph x --engine warp"), 2);
  {
    std::ofstream bad(path("bad.txt"));
    bad << "0 1\n1 banana\n";
  }
  EXPECT_EQ(run("run --graph " + path("bad.txt")), 3);
  EXPECT_NE(slurp(path("stderr")).find("line 2"), std::string::npos);
  {
    std::ofstream g(path("dir.txt"));
    g << "0 1\n1 2\n";
  }
  EXPECT_EQ(run("run --graph " + path("dir.txt") + " --algo cc"), 2);
  EXPECT_EQ(run("run --graph " + path("dir.txt") + " --algo bfs --priority delta"), 2);
  EXPECT_EQ(run("run --graph " + path("dir.txt") + " --undirected --algo cc --result-text " + path("cc.txt")), 0);
  EXPECT_EQ(slurp(path("cc.txt")), "0 0\n1 0\n2 0\n");
}

TEST_F(Cli, EmptyGraph) {
  {
    std::ofstream g(path("empty.txt"));
    g << "# nothing here\n";
  }
  EXPECT_EQ(run("run --graph " + path("empty.txt") + " --metrics-out " + path("m.csv")), 0);
  const auto csv = slurp(path("m.csv"));
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 1);
}

}  // namespace
