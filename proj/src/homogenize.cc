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

#include "beatpath/homogenize.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "beatpath/errors.hpp"

namespace beatpath {

std::vector<CandidateId> OutBranching::path_to(CandidateId target) const {
  std::vector<CandidateId> path{target};
  while (path.back() != root) {
    const auto& up = parent.at(path.back());
    if (!up || path.size() > parent.size()) {
      throw InvariantViolation("out-branching is not connected to its root");
    }
    path.push_back(*up);
  }
  std::reverse(path.begin(), path.end());
  return path;
}

std::vector<std::size_t> ManipulationOrder::positions() const {
  std::vector<std::size_t> pos(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) pos[order[i]] = i;
  return pos;
}

OutBranching critical_out_branching(const WeightedMajorityGraph& g,
                                    CandidateId c) {
  const std::size_t m = g.size();
  if (c >= m) throw ValidationError("preferred candidate out of range");

  OutBranching tree{c, std::vector<std::optional<CandidateId>>(m)};
  std::vector<bool> reached(m, false);
  reached[c] = true;
  for (std::size_t step = 1; step < m; ++step) {
    std::optional<std::pair<CandidateId, CandidateId>> best;
    for (CandidateId a = 0; a < m; ++a) {
      if (!reached[a]) continue;
      for (CandidateId b = 0; b < m; ++b) {
        if (reached[b]) continue;
        if (!best || g.weight(a, b) > g.weight(best->first, best->second)) {
          best.emplace(a, b);
        }
      }
    }
    tree.parent[best->second] = best->first;
    reached[best->second] = true;
  }
  return tree;
}

namespace {

bool wins_under(const StrengthMatrix& s, CandidateId c) {
  for (CandidateId x = 0; x < s.size(); ++x) {
    if (x != c && s(x, c) > s(c, x)) return false;
  }
  return true;
}

}  // namespace

ManipulationOrder homogenizing_order(CandidateId c, const OutBranching& tree,
                                     const StrengthMatrix& s) {
  const std::size_t m = s.size();
  if (c >= m || tree.root != c || tree.parent.size() != m) {
    throw ValidationError("out-branching does not match the candidate set");
  }
  if (!wins_under(s, c)) {
    throw RejectedInput("candidate is not in the winning set");
  }

  ManipulationOrder lambda{{c}};
  std::vector<bool> placed(m, false);
  placed[c] = true;
  while (lambda.order.size() < m) {
    std::optional<CandidateId> target;
    for (CandidateId x = 0; x < m; ++x) {
      if (!placed[x] && (!target || s(x, c) > s(*target, c))) target = x;
    }
    for (CandidateId v : tree.path_to(*target)) {
      if (!placed[v]) {
        placed[v] = true;
        lambda.order.push_back(v);
      }
    }
  }
  return lambda;
}

Profile homogenize(const Profile& profile,
                   std::span<const std::size_t> subprofile, CandidateId c) {
  const auto& ballots = profile.ballots();
  for (std::size_t index : subprofile) {
    if (index >= ballots.size()) {
      throw ValidationError("subprofile index " + std::to_string(index) +
                            " out of range");
    }
  }
  const WeightedMajorityGraph g = build_wmg(profile);
  if (c >= g.size()) throw ValidationError("preferred candidate out of range");
  const StrengthMatrix s = strength_matrix(g);
  if (!wins_under(s, c)) {
    throw RejectedInput("candidate is not in the winning set");
  }
  if (subprofile.empty()) return profile;

  const ManipulationOrder lambda =
      homogenizing_order(c, critical_out_branching(g, c), s);
  std::vector<Ballot> rewritten = ballots;
  for (std::size_t index : subprofile) rewritten[index].order = lambda.order;
  return Profile(profile.registry(), std::move(rewritten));
}

std::optional<ManipulationOrder> solve_wcm_bounded(
    const WeightedMajorityGraph& non_manipulators,
    std::span<const Weight> manipulator_weights, CandidateId c,
    std::size_t max_candidates) {
  const std::size_t m = non_manipulators.size();
  if (c >= m) throw ValidationError("preferred candidate out of range");
  if (m > max_candidates) {
    throw CapacityError("weighted manipulation enumerates m! orders; " +
                        std::to_string(m) + " candidates exceeds the cap of " +
                        std::to_string(max_candidates));
  }
  Weight total = 0;
  for (Weight w : manipulator_weights) {
    if (w < 1) throw ValidationError("manipulator weights must be positive");
    total = checked_add(total, w);
  }

  std::vector<CandidateId> order(m);
  std::iota(order.begin(), order.end(), CandidateId{0});
  do {
    const WeightedMajorityGraph combined =
        total == 0 ? non_manipulators
                   : non_manipulators.with_ballot(order, total);
    if (winning_set(combined).contains(c)) return ManipulationOrder{order};
  } while (std::next_permutation(order.begin(), order.end()));
  return std::nullopt;
}

std::optional<ManipulationOrder> solve_wcm_bounded(
    const Profile& non_manipulators, std::span<const Weight> manipulator_weights,
    CandidateId c, std::size_t max_candidates) {
  return solve_wcm_bounded(build_wmg(non_manipulators), manipulator_weights, c,
                           max_candidates);
}

}  // namespace beatpath
