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

// Candidates, ballots, profiles and weighted majority graphs.
//
// A weighted majority graph (WMG) is the complete skew-symmetric margin
// matrix w(x, y) = N(x, y) - N(y, x). Zero and negative arcs are kept; every
// algorithm in this library treats the WMG as a complete digraph.

#ifndef BEATPATH_ELECTION_HPP_
#define BEATPATH_ELECTION_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "beatpath/matrix.hpp"

namespace beatpath {

using CandidateId = std::size_t;
// Ballot weights, margins and path strengths. Arithmetic that could leave the
// int64 range is checked and reported as a ValidationError.
using Weight = std::int64_t;

// Whether the preferred candidate must merely be among the winners or be the
// only winner.
enum class WinGoal { kCoWinner, kUnique };

class CandidateRegistry {
 public:
  CandidateRegistry() = default;
  // Throws ValidationError on empty, duplicate or ill-formed names.
  explicit CandidateRegistry(std::vector<std::string> names);

  // a, b, ..., z for up to 26 candidates, c1 .. cm beyond that.
  static CandidateRegistry with_default_names(std::size_t m);

  // Names are non-empty and free of whitespace, '>', ',' and '#'.
  static bool is_valid_name(std::string_view name);

  std::size_t size() const { return names_.size(); }
  const std::string& name(CandidateId id) const { return names_.at(id); }
  const std::vector<std::string>& names() const { return names_; }

  std::optional<CandidateId> find(std::string_view name) const;
  // Like find(), but throws ValidationError for unknown names.
  CandidateId id(std::string_view name) const;

  bool operator==(const CandidateRegistry& other) const {
    return names_ == other.names_;
  }

 private:
  std::vector<std::string> names_;
  std::map<std::string, CandidateId, std::less<>> index_;
};

// A strict total order, most preferred first, cast `weight` times.
struct Ballot {
  std::vector<CandidateId> order;
  Weight weight = 1;

  bool operator==(const Ballot&) const = default;
};

bool is_permutation_of_candidates(std::span<const CandidateId> order,
                                  std::size_t m);

class Profile {
 public:
  Profile() = default;
  // Throws ValidationError naming the first malformed ballot's index.
  explicit Profile(CandidateRegistry registry, std::vector<Ballot> ballots = {});

  const CandidateRegistry& registry() const { return registry_; }
  const std::vector<Ballot>& ballots() const { return ballots_; }
  std::size_t candidate_count() const { return registry_.size(); }
  Weight total_weight() const;

  void add(Ballot ballot);

  bool operator==(const Profile&) const = default;

 private:
  CandidateRegistry registry_;
  std::vector<Ballot> ballots_;
};

// n(x, y) = total weight of ballots ranking x above y.
struct PairwiseMatrix {
  SquareMatrix<Weight> n;
  Weight total_weight = 0;
};

PairwiseMatrix pairwise_tally(const Profile& profile);

class WeightedMajorityGraph {
 public:
  WeightedMajorityGraph() = default;
  // All-zero graph on m candidates.
  explicit WeightedMajorityGraph(std::size_t m) : w_(m, 0) {}

  // Throws ValidationError unless the matrix is skew-symmetric with a single
  // parity across all off-diagonal entries.
  static WeightedMajorityGraph from_matrix(SquareMatrix<Weight> w);

  std::size_t size() const { return w_.size(); }
  Weight weight(CandidateId x, CandidateId y) const { return w_(x, y); }
  const SquareMatrix<Weight>& matrix() const { return w_; }

  // Parity shared by the off-diagonal entries. Graphs on fewer than two
  // candidates report even.
  bool is_odd() const { return w_.size() >= 2 && (w_(0, 1) & 1) != 0; }

  // Adds `times` copies of the ballot `order`. Requires a full permutation.
  void add_ballot(std::span<const CandidateId> order, Weight times);
  WeightedMajorityGraph with_ballot(std::span<const CandidateId> order,
                                    Weight times) const;

  bool operator==(const WeightedMajorityGraph&) const = default;

 private:
  SquareMatrix<Weight> w_;
};

WeightedMajorityGraph build_wmg(const Profile& profile);

// McGarvey construction: a profile whose WMG is exactly `g`. Odd graphs get a
// registry-order base ballot first; each remaining margin 2k on a pair {x, y}
// is realised by the canceling pair (x > y > rest) and (reversed rest > x > y),
// each cast k times.
Profile mcgarvey_profile(const WeightedMajorityGraph& g,
                         const CandidateRegistry& registry);

// Overflow-checked helpers shared by tallying code.
Weight checked_add(Weight a, Weight b);
Weight checked_mul(Weight a, Weight b);

}  // namespace beatpath

#endif  // BEATPATH_ELECTION_HPP_
