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

// Helpers shared by the unit and acceptance suites.

#ifndef BEATPATH_TESTS_SUPPORT_HPP_
#define BEATPATH_TESTS_SUPPORT_HPP_

#include <algorithm>
#include <limits>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "beatpath/election.hpp"
#include "beatpath/election_io.hpp"
#include "beatpath/homogenize.hpp"
#include "beatpath/oracle.hpp"
#include "beatpath/schulze.hpp"

namespace beatpath::testing {

// make_profile("a,b,c", {{2, "a>b>c"}, {1, "c>b>a"}})
inline Profile make_profile(
    const std::string& candidates,
    const std::vector<std::pair<Weight, std::string>>& votes) {
  std::string text = "candidates: " + candidates + "\n";
  for (const auto& [weight, order] : votes) {
    text += "vote: " + std::to_string(weight) + ": " + order + "\n";
  }
  return std::get<Profile>(parse_election(text).body);
}

// Skew-symmetric graph from (x, y, w(x, y)) triples; other pairs are 0.
inline WeightedMajorityGraph make_wmg(
    std::size_t m,
    const std::vector<std::tuple<CandidateId, CandidateId, Weight>>& arcs) {
  SquareMatrix<Weight> w(m, 0);
  for (const auto& [x, y, weight] : arcs) {
    w(x, y) = weight;
    w(y, x) = -weight;
  }
  return WeightedMajorityGraph::from_matrix(std::move(w));
}

inline Weight path_strength(const WeightedMajorityGraph& g,
                            const std::vector<CandidateId>& path) {
  Weight strength = std::numeric_limits<Weight>::max();
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    strength = std::min(strength, g.weight(path[i], path[i + 1]));
  }
  return strength;
}

// Every root -> x tree path is a strongest path.
inline bool tree_paths_are_critical(const WeightedMajorityGraph& g,
                                    const OutBranching& tree,
                                    const StrengthMatrix& s) {
  for (CandidateId x = 0; x < g.size(); ++x) {
    if (x == tree.root) continue;
    if (path_strength(g, tree.path_to(x)) != s(tree.root, x)) return false;
  }
  return true;
}

// Spanning arborescence: root has no parent, every other vertex has one and
// reaches the root without revisiting a vertex.
inline bool is_arborescence(const OutBranching& tree, std::size_t m) {
  if (tree.parent.size() != m || tree.parent[tree.root]) return false;
  for (CandidateId x = 0; x < m; ++x) {
    CandidateId at = x;
    std::size_t steps = 0;
    while (at != tree.root) {
      if (!tree.parent[at] || ++steps > m) return false;
      at = *tree.parent[at];
    }
  }
  return true;
}

// Every tree path visits candidates in increasing order positions.
inline bool tree_respects_order(const OutBranching& tree,
                                const ManipulationOrder& lambda) {
  const auto pos = lambda.positions();
  for (CandidateId x = 0; x < tree.parent.size(); ++x) {
    const auto path = tree.path_to(x);
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
      if (pos[path[i]] >= pos[path[i + 1]]) return false;
    }
  }
  return true;
}

// s(order[i], top) is nonincreasing for i >= 1.
inline bool strength_to_top_nonincreasing(const ManipulationOrder& lambda,
                                          const StrengthMatrix& s) {
  const CandidateId c = lambda.top();
  for (std::size_t i = 2; i < lambda.order.size(); ++i) {
    if (s(lambda.order[i - 1], c) < s(lambda.order[i], c)) return false;
  }
  return true;
}

inline bool is_full_order_with_top(const ManipulationOrder& lambda,
                                   std::size_t m, CandidateId c) {
  return is_permutation_of_candidates(lambda.order, m) && lambda.top() == c;
}

// Brute-force co-winner / unique-winner membership, sharing nothing with the
// Schulze engine.
inline bool brute_wins(const WeightedMajorityGraph& g, CandidateId c,
                       WinGoal goal) {
  const StrengthMatrix s = oracle::brute_strengths(g);
  for (CandidateId y = 0; y < g.size(); ++y) {
    if (y == c) continue;
    if (goal == WinGoal::kCoWinner ? s(c, y) < s(y, c) : s(c, y) <= s(y, c)) {
      return false;
    }
  }
  return true;
}

inline std::vector<std::vector<CandidateId>> all_orders(std::size_t m) {
  std::vector<CandidateId> order(m);
  for (CandidateId i = 0; i < m; ++i) order[i] = i;
  std::vector<std::vector<CandidateId>> out;
  do {
    out.push_back(order);
  } while (std::next_permutation(order.begin(), order.end()));
  return out;
}

}  // namespace beatpath::testing

#endif  // BEATPATH_TESTS_SUPPORT_HPP_
