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

// Schulze's rule over margins: widest-path strengths and the winning set.

#ifndef BEATPATH_SCHULZE_HPP_
#define BEATPATH_SCHULZE_HPP_

#include <cstddef>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "beatpath/election.hpp"
#include "beatpath/matrix.hpp"

namespace beatpath {

// Stored on the diagonal of a StrengthMatrix. Never a valid strength.
inline constexpr Weight kUndefinedStrength = std::numeric_limits<Weight>::min();

// s(x, y) = max over x -> y paths of the minimum arc weight on the path.
class StrengthMatrix {
 public:
  StrengthMatrix() = default;
  // Diagonal entries are overwritten with kUndefinedStrength.
  explicit StrengthMatrix(SquareMatrix<Weight> s);

  std::size_t size() const { return s_.size(); }
  // Throws InvariantViolation when x == y.
  Weight operator()(CandidateId x, CandidateId y) const;

  bool operator==(const StrengthMatrix&) const = default;

 private:
  SquareMatrix<Weight> s_;
};

// Max-min Floyd-Warshall over the complete digraph, O(m^3).
StrengthMatrix strength_matrix(const WeightedMajorityGraph& g);

class WinningSet {
 public:
  explicit WinningSet(const StrengthMatrix& s);

  // Sorted by id; never empty for m >= 1.
  const std::vector<CandidateId>& winners() const& { return winners_; }
  std::vector<CandidateId> winners() && { return std::move(winners_); }
  // s(x, y) > s(y, x).
  bool dominates(CandidateId x, CandidateId y) const {
    return dominance_(x, y) != 0;
  }
  bool contains(CandidateId c) const;
  bool is_unique_winner(CandidateId c) const {
    return winners_.size() == 1 && winners_.front() == c;
  }

 private:
  SquareMatrix<char> dominance_;
  std::vector<CandidateId> winners_;
};

WinningSet winning_set(const StrengthMatrix& s);
WinningSet winning_set(const WeightedMajorityGraph& g);

// Aligned table, rows = source, columns = target, "·" on the diagonal.
std::string render_strength_table(const StrengthMatrix& s,
                                  const CandidateRegistry& registry);

}  // namespace beatpath

#endif  // BEATPATH_SCHULZE_HPP_
