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

// Static timeline rendering of a schedule, one row per task.

#ifndef CTSCHED_TOOLS_GANTT_HPP_
#define CTSCHED_TOOLS_GANTT_HPP_

#include <string>

#include "ctsched/model.hpp"

namespace ctsched::tools {

// Text rows: 'a' and 'b' mark the two sub-tasks, '-' the idle gap. Each
// column covers `ceil(makespan / max_columns)` time units; a column shows
// a sub-task if any unit in it does.
std::string render_text(const Instance& inst, const Schedule& s,
                        std::size_t max_columns = 100);

std::string render_svg(const Instance& inst, const Schedule& s);

}  // namespace ctsched::tools

#endif  // CTSCHED_TOOLS_GANTT_HPP_
