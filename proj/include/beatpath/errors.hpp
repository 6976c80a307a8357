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

#ifndef BEATPATH_ERRORS_HPP_
#define BEATPATH_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace beatpath {

// Malformed input: bad names, non-permutation ballots, broken WMG invariants.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Election-file syntax or semantic error, tagged with a 1-based line number.
class ParseError : public ValidationError {
 public:
  ParseError(int line, const std::string& message)
      : ValidationError("line " + std::to_string(line) + ": " + message),
        line_(line) {}

  int line() const { return line_; }

 private:
  int line_;
};

// Input is well-formed but violates an operation's precondition, e.g. asking
// for a resolvability vote for a candidate that is not a co-winner.
class RejectedInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Instance exceeds an exhaustive-search bound.
class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An internal guarantee failed. Reaching this means a bug, not bad input.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace beatpath

#endif  // BEATPATH_ERRORS_HPP_
