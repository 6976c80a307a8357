// Copyright 2026 The Beatpath Authors
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

#include "cli.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "beatpath/election_io.hpp"
#include "json.hpp"

namespace beatpath::cli {
namespace {

namespace fs = std::filesystem;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string fixture(const std::string& name) {
  return std::string(BEATPATH_FIXTURE_DIR) + "/" + name;
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    const auto* info = ::testing::UnitTest::GetInstance()->current_test_info();
    dir_ = fs::temp_directory_path() /
           (std::string("beatpath_cli_") + info->name());
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string write(const std::string& name, const std::string& text) {
    const fs::path path = dir_ / name;
    std::ofstream(path) << text;
    return path.string();
  }

  std::string path(const std::string& name) const {
    return (dir_ / name).string();
  }

  fs::path dir_;
};

TEST_F(CliTest, WinnerOnThreeCycle) {
  const auto r = run_cli({"winner", fixture("three_cycle.txt"), "--strengths"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out,
            "winners: a,b,c\n"
            "strengths:\n"
            "   a  b  c\n"
            "a  ·  1  1\n"
            "b  1  ·  1\n"
            "c  1  1  ·\n");
}

TEST_F(CliTest, WinnerJson) {
  const auto r = run_cli({"winner", fixture("three_cycle.txt"), "--json"});
  ASSERT_EQ(r.code, kExitOk);
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["winners"], nlohmann::json({"a", "b", "c"}));
  EXPECT_TRUE(doc["strengths"][0][0].is_null());
  EXPECT_EQ(doc["strengths"][0][1], 1);
}

TEST_F(CliTest, ManipulateFoundAndImpossible) {
  const auto file = write("e.txt", "candidates: x,c\nvote: 3: x > c\n");
  const auto found =
      run_cli({"manipulate", file, "--prefer", "c", "--manipulators", "3"});
  EXPECT_EQ(found.code, kExitOk);
  EXPECT_EQ(found.out,
            "FOUND\nlambda: c > x\nvote: 3: c > x\nverified: true\n");
  const auto impossible =
      run_cli({"manipulate", file, "--prefer", "c", "--manipulators", "2"});
  EXPECT_EQ(impossible.code, kExitOk);
  EXPECT_EQ(impossible.out, "IMPOSSIBLE\n");
}

TEST_F(CliTest, ManipulateUnique) {
  const auto file = write("e.txt", "candidates: x,c\nvote: 1: x > c\n");
  EXPECT_EQ(run_cli({"manipulate", file, "--prefer", "c", "--manipulators", "1",
                     "--unique"})
                .out,
            "IMPOSSIBLE\n");
  const auto r = run_cli({"manipulate", file, "--prefer", "c",
                          "--manipulators", "2", "--mode", "unique"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("FOUND\n"), std::string::npos);
  EXPECT_NE(r.out.find("verified: true\n"), std::string::npos);
  EXPECT_EQ(run_cli({"manipulate", file, "--prefer", "x", "--manipulators", "0",
                     "--unique"})
                .out,
            "FOUND\nverified: true\n");
}

TEST_F(CliTest, WeightsRouteToWeightedSolver) {
  const auto file = write("e.txt", "candidates: x,c\nvote: 3: x > c\n");
  EXPECT_EQ(run_cli({"manipulate", file, "--prefer", "c", "--weights", "1,1"}).out,
            "IMPOSSIBLE\n");
  EXPECT_EQ(
      run_cli({"manipulate", file, "--prefer", "c", "--weights", "1,2"}).out,
      "FOUND\nlambda: c > x\nvote: 1: c > x\nvote: 2: c > x\nverified: true\n");
  EXPECT_EQ(run_cli({"oracle", file, "--prefer", "c", "--weights", "4"}).out,
            "FOUND\nlambda: c > x\nvote: 4: c > x\nverified: true\n");
  EXPECT_EQ(run_cli({"manipulate", file, "--prefer", "c", "--weights", "1,2",
                     "--manipulators", "3", "--unique"})
                .code,
            kExitUsage);
}

TEST_F(CliTest, ManipulateJson) {
  const auto r = run_cli({"manipulate", fixture("three_cycle.txt"), "--prefer",
                          "c", "--manipulators", "1", "--json", "--unique"});
  ASSERT_EQ(r.code, kExitOk);
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["candidates"], nlohmann::json({"a", "b", "c"}));
  EXPECT_EQ(doc["preferred"], "c");
  EXPECT_EQ(doc["mode"], "unique");
  EXPECT_EQ(doc["outcome"], "FOUND");
  EXPECT_EQ(doc["verified"], true);
  EXPECT_EQ(doc["votes"][0]["weight"], 1);
  EXPECT_EQ(doc["votes"][0]["order"][0], "c");
  EXPECT_TRUE(doc["trace"].is_array());
  EXPECT_TRUE(doc.contains("lambda"));
  EXPECT_TRUE(doc.contains("winners"));
  EXPECT_TRUE(doc.contains("strengths"));
}

TEST_F(CliTest, OracleAgreesWithSolver) {
  for (const std::string k : {"1", "2"}) {
    const auto fast = run_cli({"manipulate", fixture("single_vote_gap.txt"),
                               "--prefer", "b", "--manipulators", k});
    const auto slow = run_cli({"oracle", fixture("single_vote_gap.txt"),
                               "--prefer", "b", "--manipulators", k});
    EXPECT_EQ(fast.out.substr(0, 5), slow.out.substr(0, 5)) << k;
  }
  EXPECT_EQ(run_cli({"oracle", fixture("single_vote_gap.txt"), "--prefer", "b",
                     "--manipulators", "1"})
                .out,
            "IMPOSSIBLE\n");
  const auto independent =
      run_cli({"oracle", fixture("three_cycle.txt"), "--prefer", "a",
               "--manipulators", "2", "--search", "independent", "--unique"});
  EXPECT_EQ(independent.code, kExitOk);
  EXPECT_NE(independent.out.find("verified: true"), std::string::npos);
}

TEST_F(CliTest, Resolvability) {
  const auto r = run_cli({"resolvability", fixture("three_cycle.txt"), "--prefer", "c"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out, "vote: c > a > b\nwinners: c\n");
  const auto file = write("e.txt", "candidates: x,c\nvote: 1: x > c\n");
  const auto rejected = run_cli({"resolvability", file, "--prefer", "c"});
  EXPECT_EQ(rejected.code, kExitUsage);
  EXPECT_NE(rejected.err.find("co-winner"), std::string::npos);
}

TEST_F(CliTest, GenIsDeterministic) {
  const auto a = run_cli({"gen", "--candidates", "5", "--votes", "7", "--seed", "11"});
  const auto b = run_cli({"gen", "--candidates", "5", "--votes", "7", "--seed", "11"});
  ASSERT_EQ(a.code, kExitOk);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(parse_election(a.out).registry.size(), 5u);
  EXPECT_NE(a.out,
            run_cli({"gen", "--candidates", "5", "--votes", "7", "--seed", "12"}).out);

  const auto out = path("g.txt");
  ASSERT_EQ(run_cli({"gen", "--candidates", "4", "--seed", "3", "--wmg", "-o", out})
                .code,
            kExitOk);
  const Election e = read_election_file(out);
  EXPECT_FALSE(e.has_profile());
  EXPECT_EQ(run_cli({"gen", "--candidates", "4", "--seed", "3", "--wmg"}).out,
            serialize_election(e));
}

TEST_F(CliTest, McGarveyRoundTrip) {
  const auto file = write("w.txt",
                          "candidates: a,b,c\nwmg: a b 3\nwmg: b c 1\nwmg: a c -5\n");
  const auto out = path("p.txt");
  ASSERT_EQ(run_cli({"mcgarvey", file, "-o", out}).code, kExitOk);
  const Election original = read_election_file(file);
  const Election realised = read_election_file(out);
  ASSERT_TRUE(realised.has_profile());
  EXPECT_EQ(realised.graph(), original.graph());
}

TEST_F(CliTest, ExplainPrintsTrace) {
  const auto file = write("e.txt", "candidates: x,c\nvote: 1: x > c\n");
  const auto r = run_cli({"explain", file, "--prefer", "c", "--manipulators", "1"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("trace:\npass=1 rule=1 target=x old=2 new=0\n"),
            std::string::npos);
  const auto plain = run_cli({"explain", file});
  EXPECT_NE(plain.out.find("winners: x\n"), std::string::npos);
}

TEST_F(CliTest, UsageErrorsExitOne) {
  const auto file = write("e.txt", "candidates: x,c\nvote: 1: x > c\n");
  EXPECT_EQ(run_cli({"winner", path("missing.txt")}).code, kExitUsage);
  EXPECT_EQ(run_cli({"manipulate", file, "--prefer", "z", "--manipulators", "1"})
                .code,
            kExitUsage);
  EXPECT_EQ(run_cli({"manipulate", file, "--prefer", "c"}).code, kExitUsage);
  EXPECT_EQ(run_cli({"manipulate", file, "--prefer", "c", "--manipulators", "1",
                     "--mode", "sometimes"})
                .code,
            kExitUsage);
  EXPECT_EQ(run_cli({"bogus"}).code, kExitUsage);
  EXPECT_EQ(run_cli({}).code, kExitUsage);
  const auto bad = write("bad.txt", "candidates: x,c\nvote: 1: x > q\n");
  const auto parse = run_cli({"winner", bad});
  EXPECT_EQ(parse.code, kExitUsage);
  EXPECT_NE(parse.err.find("line 2"), std::string::npos);
  const auto big = path("big.txt");
  ASSERT_EQ(run_cli({"gen", "--candidates", "8", "--votes", "3", "--seed", "1",
                     "-o", big})
                .code,
            kExitOk);
  EXPECT_EQ(run_cli({"oracle", big, "--prefer", "a", "--manipulators", "1"}).code,
            kExitUsage);
}

TEST_F(CliTest, HelpExitsZero) {
  EXPECT_EQ(run_cli({"--help"}).code, kExitOk);
}

}  // namespace
}  // namespace beatpath::cli
