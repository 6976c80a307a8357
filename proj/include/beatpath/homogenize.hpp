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

// Vote homogenization for Schulze co-winner manipulation.
//
// If c wins profile P, any subprofile of P can be replaced by copies of one
// order Lambda (with c on top) without c losing. Lambda is read off an
// out-branching rooted at c whose tree paths are all strongest paths,
// visiting vertices by nonincreasing s(x, c). As a consequence weighted
// manipulators may as well vote identically, which makes weighted
// co-winner manipulation an m!-enumeration for a fixed candidate count.

#ifndef BEATPATH_HOMOGENIZE_HPP_
#define BEATPATH_HOMOGENIZE_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "beatpath/election.hpp"
#include "beatpath/schulze.hpp"

namespace beatpath {

// Spanning arborescence rooted at `root`.
struct OutBranching {
  CandidateId root = 0;
  // parent[root] is empty; every other vertex has exactly one parent.
  std::vector<std::optional<CandidateId>> parent;

  // Tree path root -> target, both endpoints included.
  std::vector<CandidateId> path_to(CandidateId target) const;
};

// A full ranking that manipulators cast, preferred candidate first.
struct ManipulationOrder {
  std::vector<CandidateId> order;

  CandidateId top() const { return order.front(); }
  // positions()[x] = rank of x in `order`, 0 for the top.
  std::vector<std::size_t> positions() const;

  bool operator==(const ManipulationOrder&) const = default;
};

// Prim-style greedy: repeatedly attach the outside vertex reached by the
// heaviest arc leaving the tree. Every root -> x tree path then has strength
// s(root, x). Ties go to the smallest (tail id, head id).
OutBranching critical_out_branching(const WeightedMajorityGraph& g,
                                    CandidateId c);

// Repeatedly picks the remaining candidate a with the largest s(a, c)
// (smallest id on ties) and appends the not-yet-placed suffix of the tree
// path c -> a. Throws RejectedInput unless c is a winner under `s`.
ManipulationOrder homogenizing_order(CandidateId c, const OutBranching& tree,
                                     const StrengthMatrix& s);

// Replaces the order of every ballot listed in `subprofile` by Lambda,
// keeping weights. Throws RejectedInput unless c wins `profile`.
Profile homogenize(const Profile& profile,
                   std::span<const std::size_t> subprofile, CandidateId c);

inline constexpr std::size_t kDefaultWcmCandidateCap = 8;

// Weighted co-winner manipulation for few candidates: returns the
// lexicographically first order that, cast by every manipulator, makes c a
// co-winner, or nullopt when none exists (in which case no manipulation of
// any shape exists). Throws CapacityError when m > max_candidates and
// ValidationError on non-positive weights.
std::optional<ManipulationOrder> solve_wcm_bounded(
    const WeightedMajorityGraph& non_manipulators,
    std::span<const Weight> manipulator_weights, CandidateId c,
    std::size_t max_candidates = kDefaultWcmCandidateCap);
std::optional<ManipulationOrder> solve_wcm_bounded(
    const Profile& non_manipulators, std::span<const Weight> manipulator_weights,
    CandidateId c, std::size_t max_candidates = kDefaultWcmCandidateCap);

}  // namespace beatpath

#endif  // BEATPATH_HOMOGENIZE_HPP_
