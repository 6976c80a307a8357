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

#include "beatpath/ucm.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <queue>

#include "beatpath/errors.hpp"

namespace beatpath {
namespace {

void require_candidate(const WeightedMajorityGraph& g, CandidateId c) {
  if (c >= g.size()) throw ValidationError("preferred candidate out of range");
}

class BoundTightener {
 public:
  BoundTightener(const WeightedMajorityGraph& g, const StrengthMatrix& s,
                 CandidateId c, Weight manipulators)
      : s_(s), m_(g.size()), c_(c) {
    BoundTable& t = result_.bounds;
    t.preferred = c;
    t.manipulators = manipulators;
    t.to_preferred.assign(m_, 0);
    t.from_preferred.assign(m_, 0);
    t.arc_upper = SquareMatrix<Weight>(m_, 0);
    t.arc_lower = SquareMatrix<Weight>(m_, 0);
    for (CandidateId x = 0; x < m_; ++x) {
      for (CandidateId y = 0; y < m_; ++y) {
        if (x == y) continue;
        t.arc_upper(x, y) = checked_add(g.weight(x, y), manipulators);
        t.arc_lower(x, y) = checked_add(g.weight(x, y), -manipulators);
      }
      if (x != c) {
        t.to_preferred[x] = checked_add(s(x, c), manipulators);
        t.from_preferred[x] = checked_add(s(c, x), manipulators);
      }
    }
  }

  PreprocessingResult run() {
    if (m_ < 2) return std::move(result_);
    for (int pass = 1;; ++pass) {
      result_.passes = pass;
      const std::size_t before = result_.trace.size();
      if (!dominance_sweep(pass) || !reachability_sweep(pass) ||
          !propagation_sweep(pass)) {
        result_.failed = true;
        break;
      }
      if (result_.trace.size() == before) break;
    }
    return std::move(result_);
  }

 private:
  Weight& bound(CandidateId x) { return result_.bounds.to_preferred[x]; }

  // Records the change and reports whether the instance is still feasible.
  // A bound below s(x, c) - |M| can never be met, and bounds only decrease,
  // so failing at the first such firing is equivalent to failing at the end
  // of the pass.
  bool lower(int pass, BoundRule rule, CandidateId x, Weight value) {
    result_.trace.push_back({pass, rule, x, bound(x), value});
    bound(x) = value;
    return value >= s_(x, c_) - result_.bounds.manipulators;
  }

  bool dominance_sweep(int pass) {
    for (CandidateId x = 0; x < m_; ++x) {
      if (x == c_) continue;
      const Weight cap = result_.bounds.from_preferred[x];
      if (cap < bound(x) && !lower(pass, BoundRule::kDominance, x, cap)) {
        return false;
      }
    }
    return true;
  }

  // Breadth-first search from c in G^x: drop vertices y != c with
  // U(y, c) < U(x, c) and arcs with arc_upper < U(x, c).
  bool preferred_reaches(CandidateId x) {
    const Weight level = bound(x);
    const auto& upper = result_.bounds.arc_upper;
    std::vector<bool> seen(m_, false);
    std::deque<CandidateId> queue{c_};
    seen[c_] = true;
    while (!queue.empty()) {
      const CandidateId f = queue.front();
      queue.pop_front();
      if (f == x) return true;
      for (CandidateId h = 0; h < m_; ++h) {
        if (seen[h] || h == c_ || bound(h) < level || upper(f, h) < level) {
          continue;
        }
        seen[h] = true;
        queue.push_back(h);
      }
    }
    return false;
  }

  bool reachability_sweep(int pass) {
    for (CandidateId x = 0; x < m_; ++x) {
      if (x == c_ || preferred_reaches(x)) continue;
      if (!lower(pass, BoundRule::kReachability, x, bound(x) - 2)) return false;
    }
    return true;
  }

  bool propagation_sweep(int pass) {
    const auto& lower_arc = result_.bounds.arc_lower;
    for (CandidateId x = 0; x < m_; ++x) {
      if (x == c_) continue;
      for (CandidateId y = 0; y < m_; ++y) {
        if (y == x || y == c_) continue;
        if (bound(x) < lower_arc(x, y) && bound(y) > bound(x) &&
            !lower(pass, BoundRule::kPropagation, y, bound(x))) {
          return false;
        }
      }
    }
    return true;
  }

  const StrengthMatrix& s_;
  std::size_t m_;
  CandidateId c_;
  PreprocessingResult result_;
};

WeightedMajorityGraph with_copies(const WeightedMajorityGraph& g,
                                  const std::vector<Ballot>& ballots) {
  WeightedMajorityGraph out = g;
  for (const Ballot& b : ballots) out.add_ballot(b.order, b.weight);
  return out;
}

}  // namespace

PreprocessingResult preprocessing_bounds(const WeightedMajorityGraph& g,
                                         const StrengthMatrix& s, CandidateId c,
                                         Weight manipulators) {
  require_candidate(g, c);
  if (s.size() != g.size()) {
    throw ValidationError("strength matrix does not match the WMG");
  }
  if (manipulators < 0) {
    throw ValidationError("number of manipulators must be non-negative");
  }
  return BoundTightener(g, s, c, manipulators).run();
}

std::vector<CandidateId> OrderConstruction::witness_path(
    CandidateId target) const {
  std::vector<CandidateId> path{target};
  while (attached_from.at(path.back())) {
    path.push_back(*attached_from[path.back()]);
    if (path.size() > attached_from.size()) {
      throw InvariantViolation("cycle in manipulation-order witnesses");
    }
  }
  std::reverse(path.begin(), path.end());
  return path;
}

OrderConstruction construct_manipulation_order(const BoundTable& bounds) {
  const std::size_t m = bounds.to_preferred.size();
  const CandidateId c = bounds.preferred;
  OrderConstruction out{ManipulationOrder{{c}},
                        std::vector<std::optional<CandidateId>>(m)};
  std::vector<bool> placed(m, false);
  placed[c] = true;

  for (std::size_t step = 1; step < m; ++step) {
    Weight level = 0;
    bool any = false;
    for (CandidateId y = 0; y < m; ++y) {
      if (!placed[y] && (!any || bounds.to_preferred[y] > level)) {
        level = bounds.to_preferred[y];
        any = true;
      }
    }
    std::optional<std::pair<CandidateId, CandidateId>> pick;
    for (CandidateId y = 0; y < m && !pick; ++y) {
      if (placed[y] || bounds.to_preferred[y] != level) continue;
      for (CandidateId x = 0; x < m; ++x) {
        if (placed[x] && bounds.arc_upper(x, y) >= level) {
          pick.emplace(x, y);
          break;
        }
      }
    }
    if (!pick) {
      throw InvariantViolation(
          "no candidate can be appended to the manipulation order; the bounds "
          "are not a fixpoint");
    }
    const auto [x, y] = *pick;
    placed[y] = true;
    out.attached_from[y] = x;
    out.order.order.push_back(y);
  }
  return out;
}

UcmOutcome solve_ucm_cowinner(const WeightedMajorityGraph& non_manipulators,
                              CandidateId c, Weight manipulators) {
  require_candidate(non_manipulators, c);
  const StrengthMatrix s = strength_matrix(non_manipulators);
  PreprocessingResult pre =
      preprocessing_bounds(non_manipulators, s, c, manipulators);

  UcmOutcome outcome;
  outcome.trace = std::move(pre.trace);
  if (pre.failed) return outcome;

  ManipulationOrder lambda = construct_manipulation_order(pre.bounds).order;
  if (manipulators > 0) {
    outcome.manipulator_ballots.push_back(Ballot{lambda.order, manipulators});
  }
  if (!winning_set(with_copies(non_manipulators, outcome.manipulator_ballots))
           .contains(c)) {
    throw InvariantViolation(
        "constructed manipulation does not make the candidate a co-winner");
  }
  outcome.found = true;
  outcome.lambda = std::move(lambda);
  return outcome;
}

UcmOutcome solve_ucm_cowinner(const Profile& non_manipulators, CandidateId c,
                              Weight manipulators) {
  return solve_ucm_cowinner(build_wmg(non_manipulators), c, manipulators);
}

UcmOutcome solve_ucm_unique(const WeightedMajorityGraph& non_manipulators,
                            CandidateId c, Weight manipulators) {
  require_candidate(non_manipulators, c);
  if (manipulators < 1) {
    throw RejectedInput(
        "unique-winner manipulation needs at least one manipulator");
  }
  UcmOutcome outcome =
      solve_ucm_cowinner(non_manipulators, c, manipulators - 1);
  if (!outcome.found) return outcome;

  const WeightedMajorityGraph partial =
      with_copies(non_manipulators, outcome.manipulator_ballots);
  outcome.manipulator_ballots.push_back(resolvability_vote(partial, c));
  if (!winning_set(with_copies(non_manipulators, outcome.manipulator_ballots))
           .is_unique_winner(c)) {
    throw InvariantViolation(
        "constructed manipulation does not make the candidate the unique "
        "winner");
  }
  return outcome;
}

UcmOutcome solve_ucm_unique(const Profile& non_manipulators, CandidateId c,
                            Weight manipulators) {
  return solve_ucm_unique(build_wmg(non_manipulators), c, manipulators);
}

std::vector<std::pair<CandidateId, CandidateId>> resolvability_constraints(
    const WeightedMajorityGraph& g, CandidateId c) {
  require_candidate(g, c);
  const StrengthMatrix s = strength_matrix(g);
  if (!winning_set(s).contains(c)) {
    throw RejectedInput("candidate is not a co-winner");
  }
  const std::size_t m = g.size();
  std::vector<std::pair<CandidateId, CandidateId>> constraints;
  const OutBranching tree = critical_out_branching(g, c);
  for (CandidateId x = 0; x < m; ++x) {
    if (tree.parent[x]) constraints.emplace_back(*tree.parent[x], x);
  }
  for (CandidateId x = 0; x < m; ++x) {
    for (CandidateId y = 0; y < m; ++y) {
      if (x != c && y != c && x != y && s(x, c) > s(y, c)) {
        constraints.emplace_back(x, y);
      }
    }
  }
  return constraints;
}

std::optional<std::vector<CandidateId>> linear_extension(
    std::size_t m,
    const std::vector<std::pair<CandidateId, CandidateId>>& constraints) {
  std::vector<std::vector<CandidateId>> successors(m);
  std::vector<std::size_t> in_degree(m, 0);
  for (const auto& [above, below] : constraints) {
    successors.at(above).push_back(below);
    ++in_degree.at(below);
  }
  std::priority_queue<CandidateId, std::vector<CandidateId>,
                      std::greater<CandidateId>>
      ready;
  for (CandidateId x = 0; x < m; ++x) {
    if (in_degree[x] == 0) ready.push(x);
  }
  std::vector<CandidateId> order;
  while (!ready.empty()) {
    const CandidateId x = ready.top();
    ready.pop();
    order.push_back(x);
    for (CandidateId y : successors[x]) {
      if (--in_degree[y] == 0) ready.push(y);
    }
  }
  if (order.size() != m) return std::nullopt;
  return order;
}

Ballot resolvability_vote(const WeightedMajorityGraph& g, CandidateId c) {
  auto order = linear_extension(g.size(), resolvability_constraints(g, c));
  if (!order) {
    throw InvariantViolation("resolvability constraints contain a cycle");
  }
  Ballot vote{std::move(*order), 1};
  if (!winning_set(g.with_ballot(vote.order, 1)).is_unique_winner(c)) {
    throw InvariantViolation(
        "resolvability vote does not make the candidate the unique winner");
  }
  return vote;
}

bool check_single_vote_necessary(const WeightedMajorityGraph& g,
                                 CandidateId c) {
  require_candidate(g, c);
  const StrengthMatrix s = strength_matrix(g);
  for (CandidateId x = 0; x < g.size(); ++x) {
    if (x != c && s(x, c) > s(c, x) + 2) return false;
  }
  return true;
}

std::string format_trace(const std::vector<RuleFiring>& trace,
                         const CandidateRegistry& registry) {
  std::string out;
  for (const RuleFiring& f : trace) {
    out += "pass=" + std::to_string(f.pass) +
           " rule=" + std::to_string(static_cast<int>(f.rule)) +
           " target=" + registry.name(f.target) +
           " old=" + std::to_string(f.old_bound) +
           " new=" + std::to_string(f.new_bound) + '\n';
  }
  return out;
}

}  // namespace beatpath
