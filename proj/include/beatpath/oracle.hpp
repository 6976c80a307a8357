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

// Exhaustive reference implementations for small instances, plus a seeded
// instance generator.
//
// Nothing here calls into the Schulze engine or the manipulation solvers:
// strengths come from enumerating simple paths, winners from the definition,
// and manipulator ballots are added with local arithmetic.

#ifndef BEATPATH_ORACLE_HPP_
#define BEATPATH_ORACLE_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <vector>

#include "beatpath/election.hpp"
#include "beatpath/schulze.hpp"

namespace beatpath::oracle {

inline constexpr std::size_t kMaxPathEnumerationCandidates = 7;
inline constexpr std::uint64_t kMaxIndependentAssignments = 1'000'000;

// Maximises the minimum arc weight over every simple x -> y path. Throws
// CapacityError for more than kMaxPathEnumerationCandidates candidates.
StrengthMatrix brute_strengths(const WeightedMajorityGraph& g);

enum class SearchSpace {
  kIdentical,    // all manipulators cast the same order: m! candidates
  kIndependent,  // every manipulator picks freely: (m!)^|M| candidates
};

struct BruteOutcome {
  bool found = false;
  // One order per manipulator; lexicographically first witness.
  std::vector<std::vector<CandidateId>> votes;
};

BruteOutcome brute_ucm(const WeightedMajorityGraph& non_manipulators,
                       CandidateId c, Weight manipulators, WinGoal goal,
                       SearchSpace search);

// Identical-order weighted co-winner search. Throws ValidationError on
// non-positive weights.
std::optional<std::vector<CandidateId>> brute_wcm(
    const WeightedMajorityGraph& non_manipulators,
    std::span<const Weight> manipulator_weights, CandidateId c);

enum class Culture {
  kImpartial,  // uniformly random ballots
  kWmgDirect,  // random skew-symmetric matrix of uniform parity
};

struct GeneratorConfig {
  std::uint64_t seed = 0;
  std::size_t min_candidates = 2;
  std::size_t max_candidates = 5;
  std::size_t min_voters = 0;
  std::size_t max_voters = 8;
  // Impartial: per-ballot weight range. WMG-direct: arcs lie in
  // [-max_weight, max_weight].
  Weight min_weight = 1;
  Weight max_weight = 1;
  Culture culture = Culture::kImpartial;
};

// Same seed and configuration give the same stream on every run. Draws use
// raw mt19937_64 output, not the implementation-defined std distributions.
class InstanceGenerator {
 public:
  explicit InstanceGenerator(GeneratorConfig config);

  Profile next_profile();
  WeightedMajorityGraph next_wmg();
  // next_profile() or next_wmg() depending on the culture.
  WeightedMajorityGraph next_graph();

  // Uniform in [0, bound).
  std::uint64_t below(std::uint64_t bound);
  // Uniform in [lo, hi].
  std::int64_t between(std::int64_t lo, std::int64_t hi);
  std::vector<CandidateId> random_order(std::size_t m);

  const GeneratorConfig& config() const { return config_; }

 private:
  std::size_t draw_candidate_count();

  GeneratorConfig config_;
  std::mt19937_64 engine_;
};

}  // namespace beatpath::oracle

#endif  // BEATPATH_ORACLE_HPP_
