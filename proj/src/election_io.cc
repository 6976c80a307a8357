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

#include "beatpath/election_io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <limits>
#include <map>
#include <optional>
#include <sstream>
#include <utility>
#include <vector>

#include "beatpath/errors.hpp"

namespace beatpath {
namespace {

std::string_view trim(std::string_view s) {
  const auto is_space = [](char ch) {
    return ch == ' ' || ch == '\t' || ch == '\r' || ch == '\n' || ch == '\f' ||
           ch == '\v';
  };
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

// Splits on `sep`, trimming each piece.
std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = s.find(sep, start);
    out.push_back(trim(s.substr(start, pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

std::vector<std::string_view> split_whitespace(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

std::optional<Weight> parse_int(std::string_view s) {
  Weight value = 0;
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return value;
}

// Returns the remainder after `keyword:` or nullopt if the line is not of
// that kind.
std::optional<std::string_view> strip_keyword(std::string_view line,
                                              std::string_view keyword) {
  if (line.substr(0, keyword.size()) != keyword) return std::nullopt;
  std::string_view rest = trim(line.substr(keyword.size()));
  if (rest.empty() || rest.front() != ':') return std::nullopt;
  return trim(rest.substr(1));
}

class Parser {
 public:
  Election run(std::string_view text) {
    int line_no = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
      std::size_t end = text.find('\n', start);
      if (end == std::string_view::npos) end = text.size();
      ++line_no;
      std::string_view line = text.substr(start, end - start);
      if (const std::size_t hash = line.find('#');
          hash != std::string_view::npos) {
        line = line.substr(0, hash);
      }
      line = trim(line);
      if (!line.empty()) handle(line, line_no);
      if (end == text.size()) break;
      start = end + 1;
    }
    if (!registry_) throw ParseError(line_no, "missing 'candidates:' line");
    if (!wmg_) {
      return Election{*registry_, Profile(*registry_, std::move(ballots_))};
    }
    return Election{*registry_,
                    WeightedMajorityGraph::from_matrix(std::move(*wmg_))};
  }

 private:
  void handle(std::string_view line, int line_no) {
    if (!registry_) {
      auto rest = strip_keyword(line, "candidates");
      if (!rest) {
        throw ParseError(line_no, "first line must be 'candidates: ...'");
      }
      parse_candidates(*rest, line_no);
      return;
    }
    if (auto rest = strip_keyword(line, "vote")) {
      if (wmg_) throw ParseError(line_no, "vote line in a wmg file");
      parse_vote(*rest, line_no);
    } else if (auto rest = strip_keyword(line, "wmg")) {
      if (!ballots_.empty()) throw ParseError(line_no, "wmg line in a vote file");
      parse_wmg(*rest, line_no);
    } else if (strip_keyword(line, "candidates")) {
      throw ParseError(line_no, "duplicate 'candidates:' line");
    } else {
      throw ParseError(line_no, "unrecognised line");
    }
  }

  void parse_candidates(std::string_view rest, int line_no) {
    if (rest.empty()) throw ParseError(line_no, "no candidates listed");
    std::vector<std::string> names;
    for (std::string_view name : split(rest, ',')) names.emplace_back(name);
    try {
      registry_.emplace(std::move(names));
    } catch (const ValidationError& e) {
      throw ParseError(line_no, e.what());
    }
  }

  CandidateId lookup(std::string_view name, int line_no) const {
    auto id = registry_->find(name);
    if (!id) {
      throw ParseError(line_no, "unknown candidate '" + std::string(name) + "'");
    }
    return *id;
  }

  void parse_vote(std::string_view rest, int line_no) {
    const std::size_t colon = rest.find(':');
    if (colon == std::string_view::npos) {
      throw ParseError(line_no, "expected 'vote: <weight>: <order>'");
    }
    const auto weight = parse_int(trim(rest.substr(0, colon)));
    if (!weight) throw ParseError(line_no, "weight is not an integer");
    if (*weight < 1) throw ParseError(line_no, "weight must be positive");

    Ballot ballot{{}, *weight};
    std::vector<bool> seen(registry_->size(), false);
    for (std::string_view name : split(rest.substr(colon + 1), '>')) {
      const CandidateId id = lookup(name, line_no);
      if (seen[id]) {
        throw ParseError(line_no,
                         "candidate '" + std::string(name) + "' ranked twice");
      }
      seen[id] = true;
      ballot.order.push_back(id);
    }
    if (ballot.order.size() != registry_->size()) {
      throw ParseError(line_no, "ballot does not rank every candidate");
    }
    try {
      total_ = checked_add(total_, ballot.weight);
    } catch (const ValidationError& e) {
      throw ParseError(line_no, e.what());
    }
    ballots_.push_back(std::move(ballot));
  }

  void parse_wmg(std::string_view rest, int line_no) {
    const auto tokens = split_whitespace(rest);
    if (tokens.size() != 3) {
      throw ParseError(line_no, "expected 'wmg: <x> <y> <int>'");
    }
    const CandidateId x = lookup(tokens[0], line_no);
    const CandidateId y = lookup(tokens[1], line_no);
    const auto value = parse_int(tokens[2]);
    if (!value || *value == std::numeric_limits<Weight>::min()) {
      throw ParseError(line_no, "weight is not an integer");
    }
    if (x == y) throw ParseError(line_no, "wmg entry on the diagonal");

    if (!wmg_) wmg_.emplace(registry_->size(), 0);
    const auto key = std::minmax(x, y);
    const Weight forward = x < y ? *value : -*value;
    if (auto it = assigned_.find(key); it != assigned_.end()) {
      if (it->second != forward) {
        throw ParseError(line_no, "inconsistent redundant wmg entry");
      }
      return;
    }
    if (parity_ && (*value & 1) != *parity_) {
      throw ParseError(line_no, "wmg entry breaks uniform parity");
    }
    parity_ = *value & 1;
    assigned_.emplace(key, forward);
    (*wmg_)(x, y) = *value;
    (*wmg_)(y, x) = -*value;
  }

  std::optional<CandidateRegistry> registry_;
  std::vector<Ballot> ballots_;
  Weight total_ = 0;
  std::optional<SquareMatrix<Weight>> wmg_;
  std::map<std::pair<CandidateId, CandidateId>, Weight> assigned_;
  std::optional<Weight> parity_;
};

}  // namespace

WeightedMajorityGraph Election::graph() const {
  if (const auto* profile = std::get_if<Profile>(&body)) {
    return build_wmg(*profile);
  }
  return std::get<WeightedMajorityGraph>(body);
}

Election parse_election(std::string_view text) { return Parser().run(text); }

Election read_election_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw ValidationError("cannot read '" + path.string() + "'");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_election(buffer.str());
}

std::string format_order(std::span<const CandidateId> order,
                         const CandidateRegistry& registry) {
  std::string out;
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (i > 0) out += " > ";
    out += registry.name(order[i]);
  }
  return out;
}

namespace {

std::string candidates_line(const CandidateRegistry& registry) {
  std::string out = "candidates: ";
  for (std::size_t i = 0; i < registry.size(); ++i) {
    if (i > 0) out += ',';
    out += registry.name(i);
  }
  out += '\n';
  return out;
}

}  // namespace

std::string serialize_election(const Profile& profile) {
  std::string out = candidates_line(profile.registry());
  for (const Ballot& ballot : profile.ballots()) {
    out += "vote: " + std::to_string(ballot.weight) + ": " +
           format_order(ballot.order, profile.registry()) + '\n';
  }
  return out;
}

std::string serialize_election(const CandidateRegistry& registry,
                               const WeightedMajorityGraph& g) {
  if (registry.size() != g.size()) {
    throw ValidationError("registry size does not match the WMG");
  }
  std::string out = candidates_line(registry);
  for (CandidateId x = 0; x < g.size(); ++x) {
    for (CandidateId y = x + 1; y < g.size(); ++y) {
      if (g.weight(x, y) == 0) continue;
      out += "wmg: " + registry.name(x) + ' ' + registry.name(y) + ' ' +
             std::to_string(g.weight(x, y)) + '\n';
    }
  }
  return out;
}

std::string serialize_election(const Election& election) {
  if (const auto* profile = std::get_if<Profile>(&election.body)) {
    return serialize_election(*profile);
  }
  return serialize_election(election.registry,
                            std::get<WeightedMajorityGraph>(election.body));
}

}  // namespace beatpath
