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

#include "beatpath/election.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <utility>

#include "beatpath/errors.hpp"

namespace beatpath {

Weight checked_add(Weight a, Weight b) {
  Weight out = 0;
  if (__builtin_add_overflow(a, b, &out)) {
    throw ValidationError("weight arithmetic overflows 64-bit range");
  }
  return out;
}

Weight checked_mul(Weight a, Weight b) {
  Weight out = 0;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw ValidationError("weight arithmetic overflows 64-bit range");
  }
  return out;
}

bool CandidateRegistry::is_valid_name(std::string_view name) {
  if (name.empty()) return false;
  return std::none_of(name.begin(), name.end(), [](char ch) {
    return std::isspace(static_cast<unsigned char>(ch)) || ch == '>' ||
           ch == ',' || ch == '#';
  });
}

CandidateRegistry::CandidateRegistry(std::vector<std::string> names)
    : names_(std::move(names)) {
  for (CandidateId id = 0; id < names_.size(); ++id) {
    const std::string& name = names_[id];
    if (!is_valid_name(name)) {
      throw ValidationError("invalid candidate name '" + name + "'");
    }
    if (!index_.emplace(name, id).second) {
      throw ValidationError("duplicate candidate name '" + name + "'");
    }
  }
}

CandidateRegistry CandidateRegistry::with_default_names(std::size_t m) {
  std::vector<std::string> names;
  names.reserve(m);
  for (std::size_t i = 0; i < m; ++i) {
    if (m <= 26) {
      names.emplace_back(1, static_cast<char>('a' + i));
    } else {
      names.push_back("c" + std::to_string(i + 1));
    }
  }
  return CandidateRegistry(std::move(names));
}

std::optional<CandidateId> CandidateRegistry::find(std::string_view name) const {
  auto it = index_.find(name);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

CandidateId CandidateRegistry::id(std::string_view name) const {
  auto found = find(name);
  if (!found) {
    throw ValidationError("unknown candidate '" + std::string(name) + "'");
  }
  return *found;
}

bool is_permutation_of_candidates(std::span<const CandidateId> order,
                                  std::size_t m) {
  if (order.size() != m) return false;
  std::vector<bool> seen(m, false);
  for (CandidateId id : order) {
    if (id >= m || seen[id]) return false;
    seen[id] = true;
  }
  return true;
}

namespace {

void validate_ballot(const Ballot& ballot, std::size_t m, std::size_t index) {
  if (!is_permutation_of_candidates(ballot.order, m)) {
    throw ValidationError("ballot " + std::to_string(index) +
                          " is not a permutation of the candidates");
  }
  if (ballot.weight < 1) {
    throw ValidationError("ballot " + std::to_string(index) +
                          " has non-positive weight");
  }
}

}  // namespace

Profile::Profile(CandidateRegistry registry, std::vector<Ballot> ballots)
    : registry_(std::move(registry)), ballots_(std::move(ballots)) {
  Weight total = 0;
  for (std::size_t i = 0; i < ballots_.size(); ++i) {
    validate_ballot(ballots_[i], registry_.size(), i);
    total = checked_add(total, ballots_[i].weight);
  }
}

Weight Profile::total_weight() const {
  Weight total = 0;
  for (const Ballot& b : ballots_) total += b.weight;
  return total;
}

void Profile::add(Ballot ballot) {
  validate_ballot(ballot, registry_.size(), ballots_.size());
  checked_add(total_weight(), ballot.weight);
  ballots_.push_back(std::move(ballot));
}

PairwiseMatrix pairwise_tally(const Profile& profile) {
  const std::size_t m = profile.candidate_count();
  PairwiseMatrix out{SquareMatrix<Weight>(m, 0), 0};
  std::vector<std::size_t> position(m);
  for (const Ballot& ballot : profile.ballots()) {
    for (std::size_t i = 0; i < m; ++i) position[ballot.order[i]] = i;
    for (CandidateId x = 0; x < m; ++x) {
      for (CandidateId y = 0; y < m; ++y) {
        if (x != y && position[x] < position[y]) {
          out.n(x, y) = checked_add(out.n(x, y), ballot.weight);
        }
      }
    }
    out.total_weight = checked_add(out.total_weight, ballot.weight);
  }
  return out;
}

WeightedMajorityGraph WeightedMajorityGraph::from_matrix(SquareMatrix<Weight> w) {
  const std::size_t m = w.size();
  for (CandidateId x = 0; x < m; ++x) {
    if (w(x, x) != 0) {
      throw ValidationError("WMG diagonal must be zero");
    }
    for (CandidateId y = x + 1; y < m; ++y) {
      if (w(x, y) == std::numeric_limits<Weight>::min() ||
          w(x, y) != -w(y, x)) {
        throw ValidationError("WMG is not skew-symmetric at pair (" +
                              std::to_string(x) + ", " + std::to_string(y) +
                              ")");
      }
      if ((w(x, y) & 1) != (w(0, 1) & 1)) {
        throw ValidationError("WMG arcs have mixed parity");
      }
    }
  }
  WeightedMajorityGraph g;
  g.w_ = std::move(w);
  return g;
}

void WeightedMajorityGraph::add_ballot(std::span<const CandidateId> order,
                                       Weight times) {
  const std::size_t m = size();
  if (!is_permutation_of_candidates(order, m)) {
    throw ValidationError("ballot is not a permutation of the candidates");
  }
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      const CandidateId hi = order[i];
      const CandidateId lo = order[j];
      w_(hi, lo) = checked_add(w_(hi, lo), times);
      w_(lo, hi) = -w_(hi, lo);
    }
  }
}

WeightedMajorityGraph WeightedMajorityGraph::with_ballot(
    std::span<const CandidateId> order, Weight times) const {
  WeightedMajorityGraph out = *this;
  out.add_ballot(order, times);
  return out;
}

WeightedMajorityGraph build_wmg(const Profile& profile) {
  const PairwiseMatrix tally = pairwise_tally(profile);
  const std::size_t m = profile.candidate_count();
  SquareMatrix<Weight> w(m, 0);
  for (CandidateId x = 0; x < m; ++x) {
    for (CandidateId y = 0; y < m; ++y) {
      if (x != y) w(x, y) = tally.n(x, y) - tally.n(y, x);
    }
  }
  return WeightedMajorityGraph::from_matrix(std::move(w));
}

Profile mcgarvey_profile(const WeightedMajorityGraph& g,
                         const CandidateRegistry& registry) {
  const std::size_t m = g.size();
  if (registry.size() != m) {
    throw ValidationError("registry size does not match the WMG");
  }
  // Revalidate: g may have been built by hand.
  WeightedMajorityGraph::from_matrix(g.matrix());

  std::vector<Ballot> ballots;
  SquareMatrix<Weight> residual = g.matrix();
  if (g.is_odd()) {
    Ballot base;
    for (CandidateId id = 0; id < m; ++id) base.order.push_back(id);
    for (CandidateId x = 0; x < m; ++x) {
      for (CandidateId y = x + 1; y < m; ++y) {
        residual(x, y) -= 1;
        residual(y, x) += 1;
      }
    }
    ballots.push_back(std::move(base));
  }

  for (CandidateId a = 0; a < m; ++a) {
    for (CandidateId b = a + 1; b < m; ++b) {
      const Weight r = residual(a, b);
      if (r == 0) continue;
      const CandidateId winner = r > 0 ? a : b;
      const CandidateId loser = r > 0 ? b : a;
      // |r| is even and at most 2^63 - 2 here, so halving is safe.
      const Weight copies = r > 0 ? r / 2 : -(r / 2);

      std::vector<CandidateId> rest;
      for (CandidateId id = 0; id < m; ++id) {
        if (id != winner && id != loser) rest.push_back(id);
      }
      Ballot forward{{winner, loser}, copies};
      forward.order.insert(forward.order.end(), rest.begin(), rest.end());
      Ballot backward{{rest.rbegin(), rest.rend()}, copies};
      backward.order.push_back(winner);
      backward.order.push_back(loser);
      ballots.push_back(std::move(forward));
      ballots.push_back(std::move(backward));
    }
  }
  return Profile(registry, std::move(ballots));
}

}  // namespace beatpath
