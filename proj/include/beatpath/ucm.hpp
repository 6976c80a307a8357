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

// Unweighted coalitional manipulation of Schulze's rule.
//
// Co-winner: tighten upper bounds U(x, c) on the post-manipulation strength
// s'(x, c) with three sound rules until a fixpoint; if some bound drops below
// s(x, c) - |M| no manipulation exists, otherwise a greedy traversal by
// nonincreasing U(., c) yields one order Lambda that all manipulators cast.
//
// Unique winner: solve co-winner with |M| - 1 manipulators, then spend the
// last vote on a resolvability ballot that breaks every tie in favour of c.

#ifndef BEATPATH_UCM_HPP_
#define BEATPATH_UCM_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "beatpath/election.hpp"
#include "beatpath/homogenize.hpp"
#include "beatpath/matrix.hpp"
#include "beatpath/schulze.hpp"

namespace beatpath {

struct BoundTable {
  CandidateId preferred = 0;
  Weight manipulators = 0;
  // U(x, c) indexed by x; the entry for c itself is unused.
  std::vector<Weight> to_preferred;
  // U(c, x) = s(c, x) + |M|. Read-only after initialisation.
  std::vector<Weight> from_preferred;
  // Bounds on post-manipulation arc weights: w + |M| and w - |M|.
  SquareMatrix<Weight> arc_upper;
  SquareMatrix<Weight> arc_lower;
};

enum class BoundRule : int {
  kDominance = 1,     // U(x, c) <= U(c, x)
  kReachability = 2,  // c must reach x through arcs and vertices at level U(x, c)
  kPropagation = 3,   // an arc x -> y heavier than U(x, c) caps U(y, c)
};

struct RuleFiring {
  int pass = 0;
  BoundRule rule = BoundRule::kDominance;
  CandidateId target = 0;
  Weight old_bound = 0;
  Weight new_bound = 0;

  bool operator==(const RuleFiring&) const = default;
};

struct PreprocessingResult {
  bool failed = false;
  // Bounds at the fixpoint, or at the moment of failure.
  BoundTable bounds;
  std::vector<RuleFiring> trace;
  int passes = 0;
};

// `s` must be strength_matrix(g). A failed result is an ordinary answer: no
// set of |manipulators| ballots can make c a co-winner.
PreprocessingResult preprocessing_bounds(const WeightedMajorityGraph& g,
                                         const StrengthMatrix& s, CandidateId c,
                                         Weight manipulators);

struct OrderConstruction {
  ManipulationOrder order;
  // For each non-top candidate y, the already-placed x whose arc x -> y
  // admitted it (arc_upper(x, y) >= U(y, c)).
  std::vector<std::optional<CandidateId>> attached_from;

  // c -> target path along attached_from; it respects `order`.
  std::vector<CandidateId> witness_path(CandidateId target) const;
};

// Requires a non-failed fixpoint. Throws InvariantViolation if the greedy
// step ever finds no eligible candidate.
OrderConstruction construct_manipulation_order(const BoundTable& bounds);

struct UcmOutcome {
  bool found = false;
  std::optional<ManipulationOrder> lambda;
  // The manipulators' ballots; each weight is a number of manipulators.
  std::vector<Ballot> manipulator_ballots;
  std::vector<RuleFiring> trace;
};

// Exact. Every found outcome has been re-verified with the Schulze engine;
// a failed re-check throws InvariantViolation.
UcmOutcome solve_ucm_cowinner(const WeightedMajorityGraph& non_manipulators,
                              CandidateId c, Weight manipulators);
UcmOutcome solve_ucm_cowinner(const Profile& non_manipulators, CandidateId c,
                              Weight manipulators);

// Throws RejectedInput when manipulators < 1.
UcmOutcome solve_ucm_unique(const WeightedMajorityGraph& non_manipulators,
                            CandidateId c, Weight manipulators);
UcmOutcome solve_ucm_unique(const Profile& non_manipulators, CandidateId c,
                            Weight manipulators);

// Precedence constraints (a, b) meaning a must be ranked above b:
// tree-parent before child along strongest c -> x paths, and x before y
// whenever s(x, c) > s(y, c). Throws RejectedInput unless c is a co-winner.
std::vector<std::pair<CandidateId, CandidateId>> resolvability_constraints(
    const WeightedMajorityGraph& g, CandidateId c);

// Topological order of 0..m-1 under `constraints`, smallest id first among
// the available candidates; nullopt if the constraints contain a cycle.
std::optional<std::vector<CandidateId>> linear_extension(
    std::size_t m,
    const std::vector<std::pair<CandidateId, CandidateId>>& constraints);

// One ballot that, added to g, makes the co-winner c the unique winner.
Ballot resolvability_vote(const WeightedMajorityGraph& g, CandidateId c);

// s(x, c) <= s(c, x) + 2 for every x. Necessary, not sufficient, for a single
// extra vote to make c a co-winner.
bool check_single_vote_necessary(const WeightedMajorityGraph& g, CandidateId c);

// One line per firing: "pass=<k> rule=<r> target=<name> old=<u> new=<u>".
std::string format_trace(const std::vector<RuleFiring>& trace,
                         const CandidateRegistry& registry);

}  // namespace beatpath

#endif  // BEATPATH_UCM_HPP_
