// Copyright 2026 The wpolar Authors
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

#include <nlohmann/json.hpp>
#include <fstream>
#include <iterator>
#include <sstream>

#include "commands.hpp"
#include "support/data.hpp"

namespace wpolar::cli {
namespace {

struct Run {
  int code = 0;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args, const std::string& input = "") {
  std::ostringstream out;
  std::ostringstream err;
  std::istringstream in(input);
  Run r;
  r.code = run_cli(args, out, err, in);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::string slurp(const std::string& name) {
  std::ifstream f(testing::data_path(name));
  return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
}

TEST(Cli, GenerateZigzag) {
  const auto r = run({"generate", "zigzag", "3", "4"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["graph"]["vertices"].size(), 32u);
  EXPECT_EQ(doc["stats"]["kind"], "zigzag");
  EXPECT_EQ(doc["stats"]["external"], nlohmann::json::parse("[0,0,0]"));
}

TEST(Cli, GenerateIsDeterministicForRandom) {
  const auto a = run({"generate", "random", "12", "--seed", "5"});
  const auto b = run({"generate", "random", "12", "--seed", "5"});
  ASSERT_EQ(a.code, kExitOk);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(nlohmann::json::parse(a.out)["stats"]["h"], 12);
}

TEST(Cli, StatsFromHexFile) {
  const auto r = run({"stats", "--hexes", testing::data_path("coronene.txt").string()});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["n"], 24);
  EXPECT_EQ(doc["internal"], 6);
}

TEST(Cli, StatsFromStdin) {
  const auto r = run({"stats", "benzenoid", "-"}, "0 0\n1 0\n");
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(nlohmann::json::parse(r.out)["n"], 10);
}

TEST(Cli, WpAllMethodsAgree) {
  const auto r = run({"wp", "--method", "all", "--json", "zigzag", "3", "4"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_TRUE(doc["agreement"].get<bool>());
  ASSERT_EQ(doc["results"].size(), 3u);
  for (const auto& res : doc["results"]) EXPECT_EQ(res["value"], 108);
}

TEST(Cli, WpTextOutput) {
  const auto r = run({"wp", "--method", "brute", "armchair", "6", "4"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_NE(r.out.find("222"), std::string::npos) << r.out;
}

TEST(Cli, WpBenzenoidParams) {
  const auto r = run({"wp", "--method", "formula", "--benzenoid-params", "8", "1", "1", "1", "--json"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(nlohmann::json::parse(r.out)["results"][0]["value"], 72);
}

TEST(Cli, WpOnRawGraph) {
  const auto path = testing::data_path("naphthalene.json").string();
  const auto brute = run({"wp", "--method", "brute", "--json", "--graph", path});
  ASSERT_EQ(brute.code, kExitOk) << brute.err;
  EXPECT_EQ(nlohmann::json::parse(brute.out)["results"][0]["value"], 12);

  const auto cut = run({"wp", "--method", "cut", "--graph", path});
  EXPECT_EQ(cut.code, kExitInputError);
  EXPECT_EQ(nlohmann::json::parse(cut.err)["error"], "FormulaUnavailable");
}

TEST(Cli, InputErrors) {
  const auto bad_tube = run({"generate", "armchair", "5", "2"});
  EXPECT_EQ(bad_tube.code, kExitInputError);
  EXPECT_EQ(nlohmann::json::parse(bad_tube.err)["error"], "ParamOutOfRange");

  const auto hole = run({"stats", "--hexes", testing::data_path("ring-hole.txt").string()});
  EXPECT_EQ(hole.code, kExitInputError);
  EXPECT_EQ(nlohmann::json::parse(hole.err)["error"], "HasHoles");

  const auto dup = run({"stats", "benzenoid", "-"}, "0 0\n0 0\n");
  EXPECT_EQ(nlohmann::json::parse(dup.err)["error"], "DuplicateHex");

  EXPECT_EQ(run({}).code, kExitInputError);
  EXPECT_EQ(run({"wp", "--method", "magic", "zigzag", "3", "4"}).code, kExitInputError);
  EXPECT_EQ(run({"frobnicate"}).code, kExitInputError);
}

TEST(Cli, VerifyIsDeterministic) {
  const auto a = run({"verify", "--count", "25", "--seed", "7", "--json"});
  const auto b = run({"verify", "--count", "25", "--seed", "7", "--json"});
  ASSERT_EQ(a.code, kExitOk) << a.out;
  EXPECT_EQ(a.out, b.out);
  const auto doc = nlohmann::json::parse(a.out);
  EXPECT_TRUE(doc["violations"].empty());
}

TEST(Cli, VerifyFlagsCorruptedGraph) {
  const auto r = run({"verify", "--graph", "-", "--json"}, slurp("corrupted-naphthalene.json"));
  EXPECT_EQ(r.code, kExitViolation);
  EXPECT_NE(r.out.find("MalformedComponent"), std::string::npos) << r.out;
}

TEST(Cli, VerifyAcceptsCleanGraph) {
  const auto r = run({"verify", "--graph", testing::data_path("naphthalene.json").string()});
  EXPECT_EQ(r.code, kExitOk) << r.out;
}

TEST(Cli, BenchJson) {
  const auto r = run({"bench", "--sizes", "1,10", "--instances", "1", "--json"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto doc = nlohmann::json::parse(r.out);
  ASSERT_EQ(doc["rows"].size(), 2u);
  EXPECT_EQ(doc["rows"][0]["h"], 1);
  EXPECT_TRUE(doc["rows"][1]["agree"].get<bool>());
}

TEST(Cli, BenchRejectsBadSizes) {
  EXPECT_EQ(run({"bench", "--sizes", "1,x"}).code, kExitInputError);
}

}  // namespace
}  // namespace wpolar::cli
