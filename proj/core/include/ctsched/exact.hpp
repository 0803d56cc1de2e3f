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

#ifndef CTSCHED_EXACT_HPP_
#define CTSCHED_EXACT_HPP_

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "ctsched/model.hpp"

namespace ctsched {

struct NestedPair {
  TaskIndex first;
  TaskIndex second;
  TaskIndex host;
  friend bool operator==(const NestedPair&, const NestedPair&) = default;
};

struct NestedSingle {
  TaskIndex task;
  TaskIndex host;
  friend bool operator==(const NestedSingle&, const NestedSingle&) = default;
};

// Role of every X task in a structured schedule: Y blocks hosting nested
// pairs and singles, followed by interleaved outside pairs, followed by
// isolated tasks.
struct Decomposition {
  std::vector<NestedPair> nested_pairs;
  std::vector<NestedSingle> nested_singles;
  std::vector<std::pair<TaskIndex, TaskIndex>> outside_pairs;
  std::vector<TaskIndex> isolated;

  std::size_t p() const { return nested_pairs.size(); }
  std::size_t r() const { return nested_singles.size(); }
  std::size_t m() const { return outside_pairs.size(); }
  std::size_t s() const { return isolated.size(); }
};

// Makespan of the left-packed schedule realizing `d`:
// sum_y 3 alpha(y) + sum_{outside pairs} 4 alpha + sum_{isolated} 3 alpha.
Time decomposition_cost(const Instance& inst, const Decomposition& d);

// Left-packed schedule for `d`: Y tasks by ascending id, each hosting its
// pairs and then its singles back to back from the start of its idle window;
// then outside pairs; then isolated tasks. Does not check feasibility.
Schedule realize(const Instance& inst, const Decomposition& d);

struct ExactOptions {
  std::size_t max_x = 20;
};

struct ExactSolution {
  Time optimum = 0;
  Decomposition decomposition;
  Schedule schedule;
  std::uint64_t nodes = 0;  // search nodes visited
};

// Branch-and-bound over the role of each X task. Requires the nesting
// structure of require_nesting_structure and a single Y stretch class; X
// tasks may mix stretch factors. Throws kUnsupportedInstance or kSizeLimit
// (|X| > options.max_x).
ExactSolution exact_optimum(const Instance& inst,
                            const ExactOptions& options = {});

// Minimum makespan over all feasible schedules of a tiny instance, found by
// enumerating left-justified placements on the integer timeline. Works for
// arbitrary (a, L, b) tasks and graphs. Limited to 6 tasks with total span at
// most 120 (kSizeLimit otherwise).
Time timeline_oracle(const Instance& inst);

}  // namespace ctsched

#endif  // CTSCHED_EXACT_HPP_
