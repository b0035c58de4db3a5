// Copyright 2026 The Pancake Toolkit Authors
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

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "cli/commands.hpp"

namespace {

namespace fs = std::filesystem;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "pancake");
  std::ostringstream out;
  std::ostringstream err;
  const int code = pancake::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "pancake_cli_test";
  fs::create_directories(dir);
  fs::remove(dir / name);
  return dir / name;
}

TEST(Cli, DiameterJson) {
  const Result r = run({"diameter", "--n", "7"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["eccentricity"], 8);
  EXPECT_EQ(j["matches_table1"], true);
  EXPECT_EQ(j["layer_profile"].size(), 9u);
}

TEST(Cli, DiameterOverBudgetIsResourceError) {
  const Result r = run({"diameter", "--n", "13"});
  EXPECT_EQ(r.code, pancake::cli::kExitResource);
  EXPECT_NE(r.err.find("required bytes"), std::string::npos) << r.err;
  const Result tiny = run({"diameter", "--n", "8", "--memory-budget", "1000"});
  EXPECT_EQ(tiny.code, pancake::cli::kExitResource);
}

TEST(Cli, ProfileCsv) {
  const Result r = run({"profile", "--n", "4"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "distance,count\n0,1\n1,3\n2,6\n3,11\n4,3\n");
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, pancake::cli::kExitUsage);
  EXPECT_EQ(run({"nonsense"}).code, pancake::cli::kExitUsage);
  EXPECT_EQ(run({"bound", "--n", "3"}).code, pancake::cli::kExitUsage);
  EXPECT_EQ(run({"diameter", "--n", "4", "--format", "xml"}).code, pancake::cli::kExitUsage);
  const Result bad = run({"sort", "--perm", "3 1 x"});
  EXPECT_EQ(bad.code, pancake::cli::kExitUsage);
  EXPECT_NE(bad.err.find("'x'"), std::string::npos) << bad.err;
  const Result dup = run({"stats", "--perm", "3 1 3"});
  EXPECT_EQ(dup.code, pancake::cli::kExitUsage);
  EXPECT_NE(dup.err.find("value 3 is duplicated; value 2 is missing"), std::string::npos);
}

TEST(Cli, SortAndStats) {
  const Result s = run({"sort", "--perm", "2 1 4 3", "--format", "text"});
  ASSERT_EQ(s.code, 0);
  EXPECT_EQ(s.out, "3 4 3\n");
  const Result t = run({"sort", "--perm", "2 1 4 3", "--trace", "--format", "text"});
  EXPECT_NE(t.out.find("1 2 3 4"), std::string::npos);
  const Result st = run({"stats", "--perm", "4 1 2 3", "--format", "text"});
  ASSERT_EQ(st.code, 0);
  EXPECT_NE(st.out.find("[1..4]"), std::string::npos) << st.out;
}

TEST(Cli, TreesExitReflectsEquality) {
  const Result three = run({"trees", "--n", "3", "--format", "text"});
  EXPECT_EQ(three.code, 0);
  EXPECT_EQ(three.out, "n=3 path-covering equality: holds (6/6)\n");
  const Result four = run({"trees", "--n", "4"});
  EXPECT_EQ(four.code, pancake::cli::kExitVerifiedFalse);
  const auto j = nlohmann::json::parse(four.out);
  EXPECT_EQ(j["equality"], false);
}

TEST(Cli, BoundExitCodes) {
  const Result exact = run({"bound", "--n", "5"});
  ASSERT_EQ(exact.code, 0) << exact.err;
  const auto j = nlohmann::json::parse(exact.out);
  EXPECT_EQ(j["sound"], true);
  const Result chunked = run({"bound", "--n", "5", "--mset-method", "chunked"});
  EXPECT_EQ(chunked.code, pancake::cli::kExitVerifiedFalse);
  const Result agree =
      run({"bound", "--n", "4", "--mset-method", "chunked", "--threshold", "3"});
  EXPECT_EQ(agree.code, 0) << agree.out;
  const Result budget = run(
      {"bound", "--n", "6", "--mset-method", "chunked", "--node-budget", "10"});
  EXPECT_EQ(budget.code, pancake::cli::kExitResource);
}

TEST(Cli, HamWritesAndChecks) {
  const fs::path path = scratch("h5.pnkh");
  const Result w = run({"ham", "--n", "5", "--cycle", "--out", path.string()});
  ASSERT_EQ(w.code, 0) << w.err;
  EXPECT_TRUE(fs::exists(path));
  EXPECT_FALSE(fs::exists(path.string() + ".tmp"));
  const Result c = run({"ham", "--n", "5", "--check", "--in", path.string()});
  EXPECT_EQ(c.code, 0) << c.err;

  // Swap two interior entries and re-check.
  std::ifstream in(path);
  std::vector<std::string> lines;
  for (std::string line; std::getline(in, line);) lines.push_back(line);
  in.close();
  std::swap(lines[10], lines[40]);
  std::ofstream(path) << [&] {
    std::string s;
    for (const auto& l : lines) s += l + "\n";
    return s;
  }();
  const Result bad = run({"ham", "--n", "5", "--check", "--in", path.string()});
  EXPECT_EQ(bad.code, pancake::cli::kExitVerifiedFalse);
}

TEST(Cli, DistanceFieldOutput) {
  const fs::path path = scratch("d6.pnkd");
  const Result r = run({"diameter", "--n", "6", "--out", path.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(fs::file_size(path), 20u + 720u);
  EXPECT_FALSE(fs::exists(path.string() + ".tmp"));
}

TEST(Cli, EnvironmentSuppliesFlags) {
  ::setenv("PANCAKE_N", "6", 1);
  const Result r = run({"diameter", "--format", "text"});
  ::unsetenv("PANCAKE_N");
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out.rfind("n=6 diameter=7", 0), 0u) << r.out;
  // An explicit flag wins over the environment.
  ::setenv("PANCAKE_N", "6", 1);
  const Result flag = run({"diameter", "--n", "5", "--format", "text"});
  ::unsetenv("PANCAKE_N");
  EXPECT_EQ(flag.out.rfind("n=5 ", 0), 0u);
}

TEST(Cli, StructureReport) {
  const Result r = run({"structure", "--n", "5", "--samples", "50", "--seed", "3"});
  EXPECT_EQ(r.code, 0) << r.err;
}

}  // namespace
