// Copyright 2026 The ctsched Authors.
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

#ifndef CTSCHED_TOOLS_CLI_HPP_
#define CTSCHED_TOOLS_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace ctsched::tools {

// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;  // violations, solver errors
inline constexpr int kExitUsage = 2;    // bad flags, unreadable files

// Runs the ctsched command line. `args` excludes the program name. A file
// argument of "-" (or an omitted -i/-o) means `in`/`out`.
int run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out, std::ostream& err);

}  // namespace ctsched::tools

#endif  // CTSCHED_TOOLS_CLI_HPP_
