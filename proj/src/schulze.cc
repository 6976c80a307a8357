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

#include "beatpath/schulze.hpp"

#include <algorithm>
#include <utility>

#include "beatpath/errors.hpp"

namespace beatpath {

StrengthMatrix::StrengthMatrix(SquareMatrix<Weight> s) : s_(std::move(s)) {
  for (CandidateId x = 0; x < s_.size(); ++x) s_(x, x) = kUndefinedStrength;
}

Weight StrengthMatrix::operator()(CandidateId x, CandidateId y) const {
  if (x == y) {
    throw InvariantViolation("path strength from a candidate to itself");
  }
  return s_(x, y);
}

StrengthMatrix strength_matrix(const WeightedMajorityGraph& g) {
  const std::size_t m = g.size();
  SquareMatrix<Weight> s = g.matrix();
  for (CandidateId k = 0; k < m; ++k) {
    for (CandidateId i = 0; i < m; ++i) {
      if (i == k) continue;
      const Weight via = s(i, k);
      for (CandidateId j = 0; j < m; ++j) {
        if (j == i || j == k) continue;
        s(i, j) = std::max(s(i, j), std::min(via, s(k, j)));
      }
    }
  }
  return StrengthMatrix(std::move(s));
}

WinningSet::WinningSet(const StrengthMatrix& s)
    : dominance_(s.size(), 0) {
  const std::size_t m = s.size();
  for (CandidateId x = 0; x < m; ++x) {
    for (CandidateId y = 0; y < m; ++y) {
      if (x != y && s(x, y) > s(y, x)) dominance_(x, y) = 1;
    }
  }
  for (CandidateId x = 0; x < m; ++x) {
    bool dominated = false;
    for (CandidateId y = 0; y < m && !dominated; ++y) {
      dominated = dominance_(y, x) != 0;
    }
    if (!dominated) winners_.push_back(x);
  }
  if (m > 0 && winners_.empty()) {
    throw InvariantViolation("empty winning set");
  }
}

bool WinningSet::contains(CandidateId c) const {
  return std::binary_search(winners_.begin(), winners_.end(), c);
}

WinningSet winning_set(const StrengthMatrix& s) { return WinningSet(s); }

WinningSet winning_set(const WeightedMajorityGraph& g) {
  return WinningSet(strength_matrix(g));
}

std::string render_strength_table(const StrengthMatrix& s,
                                  const CandidateRegistry& registry) {
  const std::size_t m = s.size();
  // Cells are measured in code points so the UTF-8 "·" aligns.
  std::vector<std::vector<std::string>> cells(m + 1,
                                              std::vector<std::string>(m + 1));
  for (CandidateId x = 0; x < m; ++x) {
    cells[0][x + 1] = registry.name(x);
    cells[x + 1][0] = registry.name(x);
    for (CandidateId y = 0; y < m; ++y) {
      cells[x + 1][y + 1] = x == y ? "·" : std::to_string(s(x, y));
    }
  }
  const auto width = [](const std::string& cell) {
    return static_cast<std::size_t>(std::count_if(
        cell.begin(), cell.end(), [](char ch) { return (ch & 0xC0) != 0x80; }));
  };
  std::vector<std::size_t> col_width(m + 1, 0);
  for (const auto& row : cells) {
    for (std::size_t j = 0; j <= m; ++j) {
      col_width[j] = std::max(col_width[j], width(row[j]));
    }
  }
  std::string out;
  for (const auto& row : cells) {
    std::string line;
    for (std::size_t j = 0; j <= m; ++j) {
      if (j > 0) line += "  ";
      line.append(col_width[j] - width(row[j]), ' ');
      line += row[j];
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out += line + '\n';
  }
  return out;
}

}  // namespace beatpath
