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

#ifndef CTSCHED_ERROR_HPP_
#define CTSCHED_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace ctsched {

enum class ErrorKind {
  kInvalidParameter,
  kInvalidInstance,
  kUnsupportedTaskShape,
  kInvalidPartition,
  kIncompleteSchedule,
  kUnknownTask,
  kUnsupportedInstance,
  kSizeLimit,
  kInvalidSource,
  kParseError,
};

std::string_view to_string(ErrorKind kind);

// Every failure raised by the library carries one of the kinds above so
// callers (the CLI in particular) can map it to an exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message),
        kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace ctsched

#endif  // CTSCHED_ERROR_HPP_
