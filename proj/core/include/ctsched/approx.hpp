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

// Flow-then-matching approximation for instances whose compatibility graph
// splits into an X side (one stretch class) nesting into an independent Y
// side (one stretch class). Worst-case makespan ratio 5/4.
//
// Pipeline:
//   1. normalize      X stretch -> 1, Y stretch -> floor(alpha_y / alpha_x)
//   2. build_network  s -> x (1), x -> y (1), y -> t (floor(alpha_y / 3))
//   3. max_flow       saturated x -> y arcs nest single X tasks into Y
//   4. max_matching   on the X-subgraph of unnested tasks
//   5. layout         Y blocks, then matched pairs, then isolated tasks

#ifndef CTSCHED_APPROX_HPP_
#define CTSCHED_APPROX_HPP_

#include <cstddef>
#include <utility>
#include <vector>

#include "ctsched/graphalg.hpp"
#include "ctsched/model.hpp"

namespace ctsched {

struct NormalizedInstance {
  Instance base;
  // Common X stretch factor before normalization (1 when X is empty).
  Time alpha_x = 1;
  // Per task index: 1 for X tasks, floor(alpha / alpha_x) for Y tasks.
  std::vector<Time> normalized_alpha;

  Time normalized_alpha_y(TaskIndex y) const {
    return normalized_alpha.at(y);
  }
};

// Throws kUnsupportedInstance unless the instance has the nesting structure
// (see require_nesting_structure) with at most one stretch class per side.
NormalizedInstance normalize(const Instance& inst);

struct NestingArc {
  TaskIndex x;
  TaskIndex y;
  std::size_t arc;
};

// Node layout: 0 = source, 1 = sink, task i = i + 2.
struct NestingNetwork {
  FlowNetwork network;
  std::vector<NestingArc> nesting_arcs;

  static NodeId node_of(TaskIndex task) { return task + 2; }
};

NestingNetwork build_network(const NormalizedInstance& n);

struct ApproxSolution {
  Schedule schedule;
  std::size_t f = 0;  // X tasks nested as singles (flow value)
  std::size_t m = 0;  // matched outside pairs
  std::size_t s = 0;  // isolated X tasks
  std::vector<std::pair<TaskIndex, TaskIndex>> nest_assignment;  // (x, y)
  std::vector<std::pair<TaskIndex, TaskIndex>> pairs;
  std::vector<TaskIndex> isolated;
  Time alpha_x = 1;
  // sum_y 3 floor(alpha_y / alpha_x) + 4m + 3s, in normalized units.
  Time normalized_bound = 0;
  // normalized_bound * alpha_x.
  Time rescaled_bound = 0;
  // sum_y 3 alpha_y + alpha_x (4m + 3s), in instance units. Equals the
  // makespan of `schedule`.
  Time bound_value = 0;
};

ApproxSolution approx_solve(const Instance& inst);

}  // namespace ctsched

#endif  // CTSCHED_APPROX_HPP_
