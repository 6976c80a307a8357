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

#include "beatpath/election_io.hpp"

#include <gtest/gtest.h>

#include "beatpath/errors.hpp"
#include "beatpath/oracle.hpp"

namespace beatpath {
namespace {

int parse_error_line(const std::string& text) {
  try {
    parse_election(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return -1;
}

TEST(ParseElectionTest, MinimalProfile) {
  const Election e = parse_election("candidates: a,b\nvote: 1: a > b\n");
  ASSERT_TRUE(e.has_profile());
  const auto& p = std::get<Profile>(e.body);
  ASSERT_EQ(p.ballots().size(), 1u);
  EXPECT_EQ(p.ballots()[0], (Ballot{{0, 1}, 1}));
  EXPECT_EQ(e.registry.names(), (std::vector<std::string>{"a", "b"}));
}

TEST(ParseElectionTest, MinimalWmg) {
  const Election e = parse_election("candidates: a,b\nwmg: a b 3\n");
  ASSERT_FALSE(e.has_profile());
  EXPECT_EQ(e.graph().weight(0, 1), 3);
  EXPECT_EQ(e.graph().weight(1, 0), -3);
}

TEST(ParseElectionTest, CommentsBlankLinesAndSpacing) {
  const Election e = parse_election(
      "# header\n\n  candidates:x, y ,z   # trailing\n"
      "vote:2:z>y>x\n\n# done\n");
  const auto& p = std::get<Profile>(e.body);
  EXPECT_EQ(p.ballots()[0], (Ballot{{2, 1, 0}, 2}));
}

TEST(ParseElectionTest, RedundantReversedEntries) {
  const Election e =
      parse_election("candidates: a,b,c\nwmg: a b 3\nwmg: b a -3\nwmg: c a 1\nwmg: b c 5\n");
  EXPECT_EQ(e.graph().weight(0, 2), -1);
  EXPECT_EQ(parse_error_line("candidates: a,b\nwmg: a b 3\nwmg: b a 3\n"), 3);
}

TEST(ParseElectionTest, EmptyBodyIsEmptyProfile) {
  const Election e = parse_election("candidates: a,b,c\n");
  ASSERT_TRUE(e.has_profile());
  EXPECT_EQ(e.graph(), WeightedMajorityGraph(3));
}

TEST(ParseElectionTest, LineNumberedErrors) {
  EXPECT_EQ(parse_error_line("vote: 1: a > b\n"), 1);
  EXPECT_EQ(parse_error_line("candidates: a,b\nvote: 1: a > z\n"), 2);
  EXPECT_EQ(parse_error_line("candidates: a,b\n\nvote: 1: a > a\n"), 3);
  EXPECT_EQ(parse_error_line("candidates: a,b\nvote: 0: a > b\n"), 2);
  EXPECT_EQ(parse_error_line("candidates: a,b\nvote: -2: a > b\n"), 2);
  EXPECT_EQ(parse_error_line("candidates: a,b,c\nvote: 1: a > b\n"), 2);
  EXPECT_EQ(parse_error_line("candidates: a,b,c\nwmg: a b 2\nwmg: a c 1\n"), 3);
  EXPECT_EQ(parse_error_line("candidates: a,b\nvote: 1: a > b\nwmg: a b 1\n"), 3);
  EXPECT_EQ(parse_error_line("candidates: a,b\nwmg: a b 1\nvote: 1: a > b\n"), 3);
  EXPECT_EQ(parse_error_line("candidates: a,a\n"), 1);
  EXPECT_EQ(parse_error_line("candidates: a,b\ncandidates: a,b\n"), 2);
  EXPECT_EQ(parse_error_line("candidates: a,b\nwmg: a a 2\n"), 2);
  EXPECT_EQ(parse_error_line("candidates: a,b\nbogus\n"), 2);
  EXPECT_EQ(parse_error_line("# only a comment\n"), 2);
}

TEST(SerializeElectionTest, CanonicalWmgListsUpperTriangle) {
  const Election e =
      parse_election("candidates: a,b,c\nwmg: c b 2\nwmg: b a 4\n");
  EXPECT_EQ(serialize_election(e),
            "candidates: a,b,c\nwmg: a b -4\nwmg: b c -2\n");
}

TEST(SerializeElectionTest, FormatOrder) {
  EXPECT_EQ(format_order(std::vector<CandidateId>{2, 0, 1},
                         CandidateRegistry({"x", "y", "z"})),
            "z > x > y");
}

// Canonical text is a fixed point of parse -> serialize, and parsing it
// reproduces the value.
TEST(SerializeElectionTest, RoundTripOnGeneratedCorpus) {
  for (auto culture : {oracle::Culture::kImpartial, oracle::Culture::kWmgDirect}) {
    oracle::InstanceGenerator gen({.seed = 5,
                                   .min_candidates = 1,
                                   .max_candidates = 7,
                                   .max_voters = 6,
                                   .max_weight = 9,
                                   .culture = culture});
    for (int trial = 0; trial < 200; ++trial) {
      std::string text;
      if (culture == oracle::Culture::kImpartial) {
        const Profile p = gen.next_profile();
        text = serialize_election(p);
        EXPECT_EQ(std::get<Profile>(parse_election(text).body), p);
      } else {
        const auto g = gen.next_wmg();
        const auto registry = CandidateRegistry::with_default_names(g.size());
        text = serialize_election(registry, g);
        EXPECT_EQ(parse_election(text).graph(), g);
      }
      EXPECT_EQ(serialize_election(parse_election(text)), text);
    }
  }
}

}  // namespace
}  // namespace beatpath
