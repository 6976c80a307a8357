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

// Line-oriented election files.
//
//   # comment
//   candidates: a,b,c
//   vote: 2: a > b > c        (profile body)
//   wmg: a b 3                (WMG body; unspecified pairs are 0)
//
// A file carries either vote lines or wmg lines, never both. A file with no
// body lines is an empty profile.

#ifndef BEATPATH_ELECTION_IO_HPP_
#define BEATPATH_ELECTION_IO_HPP_

#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <variant>

#include "beatpath/election.hpp"

namespace beatpath {

struct Election {
  CandidateRegistry registry;
  std::variant<Profile, WeightedMajorityGraph> body;

  bool has_profile() const { return std::holds_alternative<Profile>(body); }
  // The WMG of the body (built from the ballots for profile files).
  WeightedMajorityGraph graph() const;
};

// Throws ParseError with the offending line number.
Election parse_election(std::string_view text);
// Throws ValidationError if the file cannot be read, ParseError on bad content.
Election read_election_file(const std::filesystem::path& path);

// Canonical text: registry order, votes in input order, nonzero WMG entries
// for x-id < y-id in (x-id, y-id) order.
std::string serialize_election(const Profile& profile);
std::string serialize_election(const CandidateRegistry& registry,
                               const WeightedMajorityGraph& g);
std::string serialize_election(const Election& election);

// "a > b > c"
std::string format_order(std::span<const CandidateId> order,
                         const CandidateRegistry& registry);

}  // namespace beatpath

#endif  // BEATPATH_ELECTION_IO_HPP_
