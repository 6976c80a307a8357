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

#include "beatpath/oracle.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>

#include "beatpath/errors.hpp"

namespace beatpath::oracle {
namespace {

using Grid = std::vector<std::vector<Weight>>;
constexpr Weight kUnset = std::numeric_limits<Weight>::min();

Grid copy_margins(const WeightedMajorityGraph& g) {
  const std::size_t m = g.size();
  Grid w(m, std::vector<Weight>(m, 0));
  for (CandidateId x = 0; x < m; ++x) {
    for (CandidateId y = 0; y < m; ++y) w[x][y] = g.weight(x, y);
  }
  return w;
}

void cast(Grid& w, const std::vector<CandidateId>& order, Weight times) {
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (std::size_t j = i + 1; j < order.size(); ++j) {
      w[order[i]][order[j]] += times;
      w[order[j]][order[i]] -= times;
    }
  }
}

void extend_paths(const Grid& w, CandidateId at, Weight bottleneck,
                  std::vector<bool>& on_path, std::vector<Weight>& best) {
  for (CandidateId next = 0; next < w.size(); ++next) {
    if (on_path[next]) continue;
    const Weight strength = std::min(bottleneck, w[at][next]);
    best[next] = std::max(best[next], strength);
    on_path[next] = true;
    extend_paths(w, next, strength, on_path, best);
    on_path[next] = false;
  }
}

Grid path_strengths(const Grid& w) {
  const std::size_t m = w.size();
  Grid best(m, std::vector<Weight>(m, kUnset));
  for (CandidateId source = 0; source < m; ++source) {
    std::vector<bool> on_path(m, false);
    on_path[source] = true;
    extend_paths(w, source, std::numeric_limits<Weight>::max(), on_path,
                 best[source]);
  }
  return best;
}

bool achieves(const Grid& w, CandidateId c, WinGoal goal) {
  const Grid s = path_strengths(w);
  for (CandidateId y = 0; y < w.size(); ++y) {
    if (y == c) continue;
    if (goal == WinGoal::kCoWinner ? s[c][y] < s[y][c] : s[c][y] <= s[y][c]) {
      return false;
    }
  }
  return true;
}

void require_path_capacity(std::size_t m) {
  if (m > kMaxPathEnumerationCandidates) {
    throw CapacityError("path enumeration supports at most " +
                        std::to_string(kMaxPathEnumerationCandidates) +
                        " candidates, got " + std::to_string(m));
  }
}

std::vector<std::vector<CandidateId>> all_orders(std::size_t m) {
  std::vector<CandidateId> order(m);
  std::iota(order.begin(), order.end(), CandidateId{0});
  std::vector<std::vector<CandidateId>> out;
  do {
    out.push_back(order);
  } while (std::next_permutation(order.begin(), order.end()));
  return out;
}

}  // namespace

StrengthMatrix brute_strengths(const WeightedMajorityGraph& g) {
  require_path_capacity(g.size());
  const Grid best = path_strengths(copy_margins(g));
  SquareMatrix<Weight> s(g.size(), 0);
  for (CandidateId x = 0; x < g.size(); ++x) {
    for (CandidateId y = 0; y < g.size(); ++y) s(x, y) = best[x][y];
  }
  return StrengthMatrix(std::move(s));
}

BruteOutcome brute_ucm(const WeightedMajorityGraph& non_manipulators,
                       CandidateId c, Weight manipulators, WinGoal goal,
                       SearchSpace search) {
  const std::size_t m = non_manipulators.size();
  if (c >= m) throw ValidationError("preferred candidate out of range");
  if (manipulators < 0) {
    throw ValidationError("number of manipulators must be non-negative");
  }
  require_path_capacity(m);
  const Grid base = copy_margins(non_manipulators);
  if (manipulators == 0) return BruteOutcome{achieves(base, c, goal), {}};

  const auto orders = all_orders(m);
  if (search == SearchSpace::kIdentical) {
    for (const auto& order : orders) {
      Grid w = base;
      cast(w, order, manipulators);
      if (achieves(w, c, goal)) {
        return BruteOutcome{
            true, std::vector<std::vector<CandidateId>>(
                      static_cast<std::size_t>(manipulators), order)};
      }
    }
    return BruteOutcome{};
  }

  std::uint64_t assignments = 1;
  for (Weight i = 0; i < manipulators; ++i) {
    if (assignments > kMaxIndependentAssignments / orders.size()) {
      throw CapacityError("independent search space exceeds " +
                          std::to_string(kMaxIndependentAssignments) +
                          " assignments");
    }
    assignments *= orders.size();
  }
  // Odometer over per-manipulator order indices, last manipulator fastest.
  std::vector<std::size_t> pick(static_cast<std::size_t>(manipulators), 0);
  while (true) {
    Grid w = base;
    for (std::size_t k : pick) cast(w, orders[k], 1);
    if (achieves(w, c, goal)) {
      BruteOutcome out{true, {}};
      for (std::size_t k : pick) out.votes.push_back(orders[k]);
      return out;
    }
    std::size_t digit = pick.size();
    while (digit > 0 && ++pick[digit - 1] == orders.size()) {
      pick[--digit] = 0;
    }
    if (digit == 0) return BruteOutcome{};
  }
}

std::optional<std::vector<CandidateId>> brute_wcm(
    const WeightedMajorityGraph& non_manipulators,
    std::span<const Weight> manipulator_weights, CandidateId c) {
  const std::size_t m = non_manipulators.size();
  if (c >= m) throw ValidationError("preferred candidate out of range");
  Weight total = 0;
  for (Weight weight : manipulator_weights) {
    if (weight < 1) throw ValidationError("manipulator weights must be positive");
    total = checked_add(total, weight);
  }
  require_path_capacity(m);
  const Grid base = copy_margins(non_manipulators);
  for (const auto& order : all_orders(m)) {
    Grid w = base;
    cast(w, order, total);
    if (achieves(w, c, WinGoal::kCoWinner)) return order;
  }
  return std::nullopt;
}

InstanceGenerator::InstanceGenerator(GeneratorConfig config)
    : config_(config), engine_(config.seed) {
  if (config_.min_candidates < 1 ||
      config_.min_candidates > config_.max_candidates ||
      config_.min_voters > config_.max_voters ||
      config_.min_weight > config_.max_weight ||
      (config_.culture == Culture::kImpartial && config_.min_weight < 1) ||
      config_.max_weight < 0) {
    throw ValidationError("inconsistent generator configuration");
  }
}

std::uint64_t InstanceGenerator::below(std::uint64_t bound) {
  return bound == 0 ? 0 : engine_() % bound;
}

std::int64_t InstanceGenerator::between(std::int64_t lo, std::int64_t hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<std::int64_t>(span == 0 ? engine_() : below(span));
}

std::vector<CandidateId> InstanceGenerator::random_order(std::size_t m) {
  std::vector<CandidateId> order(m);
  std::iota(order.begin(), order.end(), CandidateId{0});
  for (std::size_t i = m; i > 1; --i) {
    std::swap(order[i - 1], order[below(i)]);
  }
  return order;
}

std::size_t InstanceGenerator::draw_candidate_count() {
  return static_cast<std::size_t>(
      between(static_cast<std::int64_t>(config_.min_candidates),
              static_cast<std::int64_t>(config_.max_candidates)));
}

Profile InstanceGenerator::next_profile() {
  const std::size_t m = draw_candidate_count();
  const auto n = static_cast<std::size_t>(
      between(static_cast<std::int64_t>(config_.min_voters),
              static_cast<std::int64_t>(config_.max_voters)));
  std::vector<Ballot> ballots;
  ballots.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    Ballot ballot;
    ballot.order = random_order(m);
    ballot.weight = between(std::max<Weight>(1, config_.min_weight),
                            std::max<Weight>(1, config_.max_weight));
    ballots.push_back(std::move(ballot));
  }
  return Profile(CandidateRegistry::with_default_names(m), std::move(ballots));
}

WeightedMajorityGraph InstanceGenerator::next_wmg() {
  const std::size_t m = draw_candidate_count();
  const Weight bound = config_.max_weight;
  // Odd arcs need room for at least +-1.
  const Weight parity = bound > 0 ? static_cast<Weight>(below(2)) : 0;
  Weight lo = -bound;
  Weight hi = bound;
  if ((lo & 1) != parity) ++lo;
  if ((hi & 1) != parity) --hi;
  const auto choices = static_cast<std::uint64_t>((hi - lo) / 2 + 1);

  SquareMatrix<Weight> w(m, 0);
  for (CandidateId x = 0; x < m; ++x) {
    for (CandidateId y = x + 1; y < m; ++y) {
      w(x, y) = lo + 2 * static_cast<Weight>(below(choices));
      w(y, x) = -w(x, y);
    }
  }
  return WeightedMajorityGraph::from_matrix(std::move(w));
}

WeightedMajorityGraph InstanceGenerator::next_graph() {
  return config_.culture == Culture::kWmgDirect ? next_wmg()
                                                : build_wmg(next_profile());
}

}  // namespace beatpath::oracle
