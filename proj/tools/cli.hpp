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

#ifndef BEATPATH_TOOLS_CLI_HPP_
#define BEATPATH_TOOLS_CLI_HPP_

#include <ostream>
#include <string>
#include <vector>

namespace beatpath::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitInternal = 2;

// Runs one command. `args` excludes the program name. Returns 0 when the
// question was answered (IMPOSSIBLE included), 1 on usage or input errors and
// 2 when an internal invariant check fails.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace beatpath::cli

#endif  // BEATPATH_TOOLS_CLI_HPP_
