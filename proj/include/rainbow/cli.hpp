// Copyright 2026 The Rainbow Factor Authors.
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

#ifndef RAINBOW_CLI_HPP_
#define RAINBOW_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace rainbow {

// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitAbsent = 1;  // verified absence or failed verification
inline constexpr int kExitUsage = 2;   // bad flags, unreadable or malformed input
inline constexpr int kExitContradiction = 3;

// Runs `rainbow <args...>` (args excludes the program name).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rainbow

#endif  // RAINBOW_CLI_HPP_
