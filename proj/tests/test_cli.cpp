// Copyright 2026 The digraph-energy Authors
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

#include <cstdio>
#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

#include "digraph_energy/cli.hpp"
#include "digraph_energy/json_io.hpp"

namespace de = digraph_energy;

namespace {

constexpr const char* kK3 = "3\n0 1\n1 0\n0 2\n2 0\n1 2\n2 1\n";
constexpr const char* kC3 = "3\n0 1\n1 2\n2 0\n";
constexpr const char* kC4 = "4\n0 1\n1 2\n2 3\n3 0\n";

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args, const std::string& input = "") {
  args.insert(args.begin(), "digraph_energy");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::istringstream in(input);
  std::ostringstream out;
  std::ostringstream err;
  const int code = de::run_cli(static_cast<int>(argv.size()), argv.data(), in, out, err);
  return {code, out.str(), err.str()};
}

de::Json json_of(const Result& r) { return de::Json::parse(r.out); }

}  // namespace

TEST(Cli, AnalyzeCompleteTriangleJson) {
  const Result r = run({"--json", "analyze"}, kK3);
  ASSERT_EQ(r.code, 0) << r.err;
  const de::Json j = json_of(r);
  EXPECT_NEAR(j["spectrum"]["energy"].get<double>(), 4.0, 1e-9);
  EXPECT_NEAR(j["spectrum"]["rho"].get<double>(), 2.0, 1e-9);
  for (const char* name : {"e_upper_rho", "e_upper_gr", "e_upper_tc", "e_upper_new"}) {
    EXPECT_NEAR(j["bounds"][name].get<double>(), 4.0, 1e-9) << name;
  }
  EXPECT_EQ(j["verdicts"]["e_upper_new"]["kind"], "COMPLETE");
  EXPECT_EQ(j["verdicts"]["e_upper_new"]["parameters"]["n"], 3);
  EXPECT_EQ(j["characteristic_polynomial"]["text"], "x^3 - 3x - 2");
  EXPECT_EQ(j["profile"]["c2_seq"], (std::vector<int>{2, 2, 2}));
}

TEST(Cli, JsonFlagAfterSubcommand) {
  const Result r = run({"analyze", "--json"}, kC3);
  ASSERT_EQ(r.code, 0) << r.err;
  const de::Json j = json_of(r);
  EXPECT_NEAR(j["spectrum"]["energy"].get<double>(), 2.0, 1e-9);
  EXPECT_NEAR(j["spectrum"]["rho"].get<double>(), 1.0, 1e-9);
  EXPECT_EQ(j["bounds"]["rho_lower_gr"].get<double>(), 0.0);
  EXPECT_EQ(j["bounds"]["rho_lower_tc"].get<double>(), 0.0);
  EXPECT_EQ(j["bounds"]["rho_lower_new"].get<double>(), 0.0);
}

TEST(Cli, AnalyzeRoundTripsArcList) {
  const std::string text = "5\n0 1\n1 0\n1 2\n2 3\n3 1\n4 0\n";
  const Result r = run({"--json", "analyze"}, text);
  ASSERT_EQ(r.code, 0) << r.err;
  const de::Json j = json_of(r);
  EXPECT_EQ(de::digraph_from_json(j["digraph"]), de::parse_edge_list(text));
  const de::ClosedWalkProfile p = de::walk_profile(de::digraph_from_json(j["digraph"]));
  EXPECT_EQ(j["profile"]["c2_seq"].get<std::vector<std::int64_t>>(), p.c2_seq);
  EXPECT_EQ(j["profile"]["t2_seq"].get<std::vector<std::int64_t>>(), p.t2_seq);
}

TEST(Cli, AnalyzeHumanOutput) {
  const Result r = run({"analyze", "-"}, kK3);
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("x^3 - 3x - 2"), std::string::npos);
  EXPECT_NE(r.out.find("e_upper_new"), std::string::npos);
  EXPECT_NE(r.out.find("COMPLETE(n=3)"), std::string::npos);
  EXPECT_EQ(r.out.find("\x1b["), std::string::npos);
}

TEST(Cli, AnalyzeWarnsWhenCoulsonSkipped) {
  const Result r = run({"--json", "analyze"}, kC4);
  ASSERT_EQ(r.code, 0) << r.err;
  const de::Json j = json_of(r);
  EXPECT_TRUE(j["coulson"]["integral"].is_null());
  ASSERT_EQ(j["warnings"].size(), 1U);
  EXPECT_NE(j["warnings"][0].get<std::string>().find("PurelyImaginaryEigenvalue"),
            std::string::npos);
}

TEST(Cli, AnalyzeParseErrors) {
  EXPECT_EQ(run({"analyze"}, "").code, 2);
  const Result loop = run({"analyze"}, "2\n0 0\n");
  EXPECT_EQ(loop.code, 2);
  EXPECT_NE(loop.err.find("line 2"), std::string::npos) << loop.err;
  EXPECT_EQ(run({"analyze", "/nonexistent/file.txt"}).code, 2);
}

TEST(Cli, VerifyExitCodes) {
  EXPECT_EQ(run({"verify", "3", "--mode", "exhaustive"}).code, 0);
  EXPECT_EQ(run({"verify", "4", "--checks", "rho_chain"}).code, 0);
  EXPECT_EQ(run({"verify", "9", "--mode", "exhaustive"}).code, 2);
  EXPECT_EQ(run({"verify", "5"}).code, 2);
  EXPECT_EQ(run({"verify", "3", "--checks", "bogus"}).code, 2);
  EXPECT_EQ(run({"verify", "3", "--mode", "sideways"}).code, 2);
  EXPECT_EQ(run({"verify"}).code, 2);
}

TEST(Cli, VerifyJsonReport) {
  const Result r = run({"--json", "verify", "8", "--mode", "random", "--count", "50", "--p", "0.3",
                        "--seed", "7", "--checks", "lemma_i,lemma_ii"});
  ASSERT_EQ(r.code, 0) << r.err;
  const de::Json j = json_of(r);
  EXPECT_EQ(j["digraphs_checked"], 50);
  EXPECT_EQ(j["checks"].size(), 2U);
  EXPECT_EQ(j["checks"]["lemma_i"]["passed"], 50);
  EXPECT_TRUE(j["violations"].empty());
  EXPECT_EQ(j["mode"], "random");
}

TEST(Cli, Coulson) {
  const Result k2 = run({"coulson"}, "2\n0 1\n1 0\n");
  ASSERT_EQ(k2.code, 0) << k2.err;
  EXPECT_NE(k2.out.find("integral"), std::string::npos);

  const Result k3 = run({"--json", "coulson", "--rel-tol", "1e-8"}, kK3);
  ASSERT_EQ(k3.code, 0) << k3.err;
  const de::Json j = json_of(k3);
  EXPECT_NEAR(j["integral"].get<double>(), 4.0, 4e-8);
  EXPECT_LT(j["difference"].get<double>(), 4e-8);

  const Result c4 = run({"coulson"}, kC4);
  EXPECT_EQ(c4.code, 1);
  EXPECT_NE(c4.err.find("PurelyImaginaryEigenvalue"), std::string::npos);
  EXPECT_NE(c4.err.find("1"), std::string::npos);

  EXPECT_EQ(run({"coulson", "--rel-tol", "2"}, kK3).code, 2);
}

TEST(Cli, Random) {
  EXPECT_EQ(run({"random", "3", "1.0", "1"}).out, de::serialize_edge_list(de::parse_edge_list(kK3)));
  EXPECT_EQ(run({"random", "3", "0.0", "1"}).out, "3\n");
  EXPECT_EQ(run({"random", "5", "0.4", "9"}).out, run({"random", "5", "0.4", "9"}).out);
  EXPECT_EQ(run({"random", "3", "1.5", "1"}).code, 2);
  EXPECT_EQ(run({"random", "3"}).code, 2);
}

TEST(Cli, RandomPipesIntoAnalyze) {
  const Result gen = run({"random", "6", "0.5", "3"});
  ASSERT_EQ(gen.code, 0);
  EXPECT_EQ(run({"analyze"}, gen.out).code, 0);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"--tol", "-1", "verify", "3"}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, BinaryHonorsNoColor) {
  const std::string cmd = std::string("NO_COLOR=1 ") + DIGRAPH_ENERGY_BINARY +
                          " verify 2 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  ASSERT_NE(pipe, nullptr);
  std::string output;
  char buffer[256];
  while (std::fgets(buffer, sizeof buffer, pipe)) output += buffer;
  const int status = pclose(pipe);
  EXPECT_EQ(WEXITSTATUS(status), 0);
  EXPECT_NE(output.find("result: PASS"), std::string::npos);
  EXPECT_EQ(output.find("\x1b["), std::string::npos);
}
