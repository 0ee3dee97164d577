// Copyright 2026 The genrig Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "genrig/cli.hpp"
#include "genrig/errors.hpp"
#include "genrig/generators.hpp"
#include "genrig/json_io.hpp"

namespace genrig {
namespace {

namespace fs = std::filesystem;

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun cli(std::vector<std::string> args) {
  args.insert(args.begin(), "genrig");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

class TempDir : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("genrig_test_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) +
            "_" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  std::string write(const std::string& name, const std::string& text) const {
    std::ofstream(path(name), std::ios::binary) << text;
    return path(name);
  }

  static std::string slurp(const std::string& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }

  fs::path dir_;
};

TEST(GraphJsonTest, CanonicalWriter) {
  const Graph g(4, {{2, 1}, {0, 3}});
  EXPECT_EQ(write_graph(g), "{\"n\":4,\"edges\":[[0,3],[1,2]]}\n");
  EXPECT_EQ(write_graph(Graph(2)), "{\"n\":2,\"edges\":[]}\n");
}

TEST(GraphJsonTest, RoundTripIsByteStable) {
  for (const Graph& g : {figure1_graph(), figure2b_graph(), ring_of_k5(5), Graph(3)}) {
    const std::string text = write_graph(g);
    EXPECT_EQ(read_graph(text), g);
    EXPECT_EQ(write_graph(read_graph(text)), text);
  }
  // The reader accepts any order and orientation.
  EXPECT_EQ(read_graph(R"({"edges": [[3,0],[1,2],[2,1]], "n": 4})"), Graph(4, {{0, 3}, {1, 2}}));
}

TEST(GraphJsonTest, ReaderValidates) {
  for (const char* bad : {"", "{", "[]", R"({"n":3})", R"({"edges":[]})", R"({"n":-1,"edges":[]})",
                          R"({"n":3,"edges":[[0]]})", R"({"n":3,"edges":[[0,3]]})",
                          R"({"n":3,"edges":[[1,1]]})", R"({"n":3,"edges":[["a",1]]})",
                          R"({"n":2.5,"edges":[]})", R"({"n":3,"edges":{}})"}) {
    EXPECT_THROW(read_graph(bad), InputError) << bad;
  }
}

TEST(ReportJsonTest, MatroidReportKeys) {
  RigidityEngine eng;
  const Json j = to_json(eng.analyze(figure2a_graph(), 3));
  for (const char* key : {"rank", "dof", "rigid", "redundantly_rigid", "bridges", "components",
                          "m_connected", "witness", "dim", "seed", "trials", "modulus"}) {
    EXPECT_TRUE(j.contains(key)) << key;
  }
  EXPECT_EQ(j["rank"], 105);
  EXPECT_EQ(j["witness"]["E1_rank"], 96);
  EXPECT_EQ(j["witness"]["E2_rank"], 9);
  EXPECT_EQ(j["modulus"], "m61");
  EXPECT_TRUE(to_json(eng.analyze(complete_graph(5), 3))["witness"].is_null());
}

TEST(CliTest, GenerateFamilies) {
  const CliRun f1 = cli({"generate", "figure1"});
  ASSERT_EQ(f1.code, 0) << f1.err;
  const Graph g = read_graph(f1.out);
  EXPECT_EQ(g.vertex_count(), 14);
  EXPECT_EQ(g.edge_count(), 40u);
  EXPECT_EQ(read_graph(cli({"generate", "complete:5"}).out), complete_graph(5));
  EXPECT_EQ(read_graph(cli({"generate", "ring-of-k5:6"}).out).vertex_count(), 18);
  EXPECT_EQ(read_graph(cli({"generate", "bipartite:5,5"}).out), complete_bipartite(5, 5));
  EXPECT_EQ(read_graph(cli({"generate", "figure2a"}).out), figure2a_graph());
  EXPECT_EQ(read_graph(cli({"generate", "figure2b"}).out), figure2b_graph());
}

TEST(CliTest, GenerateRejectsBadSpecs) {
  for (const char* spec : {"nonsense", "complete", "complete:x", "complete:0", "bipartite:3",
                           "ring-of-k5:2", "figure1:3", "cone:/nonexistent.json", "glue:a"}) {
    const CliRun r = cli({"generate", spec});
    EXPECT_EQ(r.code, kExitInput) << spec;
    EXPECT_FALSE(r.err.empty());
  }
}

TEST_F(TempDir, GenerateComposedFamilies) {
  const std::string k5 = write("k5.json", write_graph(complete_graph(5)));
  EXPECT_EQ(read_graph(cli({"generate", "cone:" + k5}).out), complete_graph(6));
  const Graph byk = read_graph(cli({"generate", "glue:" + k5 + "," + k5 + ",3"}).out);
  EXPECT_EQ(byk, glue(complete_graph(5), complete_graph(5), {{{0, 0}, {1, 1}, {2, 2}}}));
  const Graph bypairs = read_graph(cli({"generate", "glue:" + k5 + "," + k5 + ",0-4;1-3"}).out);
  EXPECT_EQ(bypairs, glue(complete_graph(5), complete_graph(5), {{{0, 4}, {1, 3}}}));
  EXPECT_EQ(cli({"generate", "glue:" + k5 + "," + k5 + ",0-9"}).code, kExitInput);
}

TEST_F(TempDir, GenerateWritesFileAndRoundTrips) {
  const std::string out = path("fig.json");
  ASSERT_EQ(cli({"generate", "figure2b", "-o", out}).code, 0);
  const std::string text = slurp(out);
  EXPECT_EQ(write_graph(read_graph_file(out)), text);
  EXPECT_EQ(text.back(), '\n');
}

TEST_F(TempDir, AnalyzeFigure2a) {
  const std::string in = write("f2a.json", write_graph(figure2a_graph()));
  const CliRun r = cli({"analyze", in, "--dim", "3", "--checks", "all"});
  ASSERT_EQ(r.code, 0) << r.err;
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j["matroid"]["rank"], 105);
  EXPECT_EQ(j["matroid"]["witness"]["E1_rank"], 96);
  EXPECT_EQ(j["matroid"]["witness"]["E2_rank"], 9);
  EXPECT_EQ(j["hendrickson"]["passes"], true);
  EXPECT_EQ(j["global"]["decision"], "NotGloballyRigid");
  EXPECT_EQ(j["classify"]["decision"], "NotFullyReconstructible");
  EXPECT_EQ(j["tool"]["version"], GENRIG_VERSION);
  EXPECT_EQ(j["config"]["trials"], 3);
  EXPECT_EQ(j["config"]["global_trials"], 5);
  EXPECT_EQ(j["global"]["trials_used"], 5);
  // Deterministic in (file, config).
  EXPECT_EQ(cli({"analyze", in, "--dim", "3", "--checks", "all"}).out, r.out);
}

TEST_F(TempDir, AnalyzeSelectedChecks) {
  const std::string k5 = write("k5.json", write_graph(complete_graph(5)));
  const Json g = Json::parse(cli({"analyze", k5, "--checks", "global"}).out);
  EXPECT_EQ(g["global"]["decision"], "GloballyRigid");
  EXPECT_FALSE(g.contains("matroid"));
  const std::string ring = write("ring.json", write_graph(ring_of_k5(6)));
  const Json m = Json::parse(cli({"analyze", ring, "--checks", "mconn,global"}).out);
  EXPECT_EQ(m["matroid"]["m_connected"], true);
  EXPECT_FALSE(m["matroid"].contains("rank"));
  EXPECT_EQ(m["global"]["decision"], "NotGloballyRigid");
  const Json t = Json::parse(
      cli({"analyze", ring, "--checks", "global", "--trials", "2", "--modulus", "alt"}).out);
  EXPECT_EQ(t["global"]["trials_used"], 2);
  EXPECT_EQ(t["global"]["modulus"], "alt");
}

TEST_F(TempDir, AnalyzeErrors) {
  const std::string bad = write("bad.json", "{\"n\":3,\"edges\":[[0,1],");
  EXPECT_EQ(cli({"analyze", bad}).code, kExitInput);
  EXPECT_EQ(cli({"analyze", path("missing.json")}).code, kExitInput);
  const std::string k5 = write("k5.json", write_graph(complete_graph(5)));
  EXPECT_EQ(cli({"analyze", k5, "--checks", "bogus"}).code, kExitInput);
  EXPECT_EQ(cli({"analyze", k5, "--modulus", "m31"}).code, kExitInput);
  EXPECT_EQ(cli({"analyze", k5, "--trials", "0"}).code, kExitInput);
  EXPECT_EQ(cli({"analyze", k5, "--dim", "0"}).code, kExitInput);
  EXPECT_EQ(cli({}).code, kExitInput);
}

TEST(CliTest, VerifySuites) {
  const CliRun r = cli({"verify", "oracle", "--count", "60"});
  ASSERT_EQ(r.code, 0) << r.err;
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j["passed"], true);
  EXPECT_EQ(j["results"].size(), 3u);
  EXPECT_EQ(j["results"][0]["property"], "oracle_equivalence");
  EXPECT_EQ(cli({"verify", "oracle", "--count", "60"}).out, r.out);

  const Json dof = Json::parse(cli({"verify", "dofbound", "--count", "60"}).out);
  bool equality = false;
  for (const auto& res : dof["results"]) {
    for (const auto& rec : res["records"]) {
      if (rec["label"] == "figure2a" || res["corpus"] == "figure2a") {
        equality = equality || rec["details"].get<std::string>().find("equality") !=
                                   std::string::npos;
      }
    }
  }
  EXPECT_TRUE(equality);
  EXPECT_EQ(cli({"verify", "nothing"}).code, kExitInput);
}

TEST(CliTest, HelpAndVersion) {
  EXPECT_EQ(cli({"--help"}).code, 0);
  const CliRun v = cli({"--version"});
  EXPECT_EQ(v.code, 0);
  EXPECT_EQ(v.out, std::string(GENRIG_VERSION) + "\n");
}

TEST(CliTest, ParseChecks) {
  EXPECT_EQ(parse_checks("all").size(), 8u);
  EXPECT_EQ(parse_checks("rank,rank,global"), (std::vector<std::string>{"rank", "global"}));
  EXPECT_THROW(parse_checks("rank,"), InputError);
}

}  // namespace
}  // namespace genrig
