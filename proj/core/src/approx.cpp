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

#include "ctsched/approx.hpp"

#include <algorithm>
#include <cassert>

#include "ctsched/error.hpp"

namespace ctsched {

NormalizedInstance normalize(const Instance& inst) {
  require_nesting_structure(inst);
  if (stretch_class_count(inst, inst.x_tasks()) > 1 ||
      stretch_class_count(inst, inst.y_tasks()) > 1) {
    throw Error(ErrorKind::kUnsupportedInstance,
                "the approximation needs one stretch class per side");
  }
  NormalizedInstance n{inst, 1, std::vector<Time>(inst.size(), 1)};
  if (!inst.x_tasks().empty()) {
    n.alpha_x = *inst.task(inst.x_tasks().front()).alpha();
  }
  for (TaskIndex y : inst.y_tasks()) {
    n.normalized_alpha[y] = *inst.task(y).alpha() / n.alpha_x;
  }
  return n;
}

NestingNetwork build_network(const NormalizedInstance& n) {
  const Instance& inst = n.base;
  NestingNetwork out{FlowNetwork(inst.size() + 2, 0, 1), {}};
  for (TaskIndex x : inst.x_tasks()) {
    out.network.add_arc(0, NestingNetwork::node_of(x), 1);
  }
  for (const auto& e : inst.graph().edges()) {
    if (inst.side(e.u) == inst.side(e.v)) continue;
    const TaskIndex x = inst.side(e.u) == Side::kX ? e.u : e.v;
    const TaskIndex y = x == e.u ? e.v : e.u;
    const std::size_t arc = out.network.add_arc(NestingNetwork::node_of(x),
                                                NestingNetwork::node_of(y), 1);
    out.nesting_arcs.push_back({x, y, arc});
  }
  for (TaskIndex y : inst.y_tasks()) {
    out.network.add_arc(NestingNetwork::node_of(y), 1,
                        n.normalized_alpha_y(y) / 3);
  }
  return out;
}

namespace {

std::vector<TaskIndex> y_by_id(const Instance& inst) {
  std::vector<TaskIndex> ys = inst.y_tasks();
  std::sort(ys.begin(), ys.end(), [&](TaskIndex l, TaskIndex r) {
    return inst.task(l).id() < inst.task(r).id();
  });
  return ys;
}

}  // namespace

ApproxSolution approx_solve(const Instance& inst) {
  const NormalizedInstance n = normalize(inst);
  const NestingNetwork nn = build_network(n);
  const FlowResult flow = max_flow(nn.network);

  ApproxSolution sol;
  sol.alpha_x = n.alpha_x;
  sol.f = static_cast<std::size_t>(flow.value);

  std::vector<bool> nested(inst.size(), false);
  for (const auto& arc : nn.nesting_arcs) {
    if (flow.arc_flows[arc.arc] > 0) {
      sol.nest_assignment.emplace_back(arc.x, arc.y);
      nested[arc.x] = true;
    }
  }
  assert(sol.nest_assignment.size() == sol.f);

  // Maximum matching on the X-subgraph induced by the unnested tasks.
  std::vector<TaskIndex> leftover;
  std::vector<std::size_t> local(inst.size(), 0);
  for (TaskIndex x : inst.x_tasks()) {
    if (!nested[x]) {
      local[x] = leftover.size();
      leftover.push_back(x);
    }
  }
  std::vector<bool> is_leftover(inst.size(), false);
  for (TaskIndex x : leftover) is_leftover[x] = true;
  CompatibilityGraph sub(leftover.size());
  for (const auto& e : inst.graph().edges()) {
    if (is_leftover[e.u] && is_leftover[e.v]) {
      sub.add_edge(local[e.u], local[e.v]);
    }
  }
  std::vector<bool> paired(inst.size(), false);
  for (const auto& e : max_matching(sub).edges) {
    sol.pairs.emplace_back(leftover[e.u], leftover[e.v]);
    paired[leftover[e.u]] = paired[leftover[e.v]] = true;
  }
  for (TaskIndex x : leftover) {
    if (!paired[x]) sol.isolated.push_back(x);
  }
  sol.m = sol.pairs.size();
  sol.s = sol.isolated.size();

  // Layout, in instance units.
  const Time ax = n.alpha_x;
  Time clock = 0;
  Time y_total = 0;
  Time y_total_normalized = 0;
  for (TaskIndex y : y_by_id(inst)) {
    const Time ay = *inst.task(y).alpha();
    sol.schedule.starts[inst.task(y).id()] = clock;
    Time slot = clock + ay;
    for (const auto& [x, host] : sol.nest_assignment) {
      if (host != y) continue;
      sol.schedule.starts[inst.task(x).id()] = slot;
      slot += 3 * ax;
    }
    assert(slot <= clock + 2 * ay);
    clock += 3 * ay;
    y_total += 3 * ay;
    y_total_normalized += 3 * n.normalized_alpha_y(y);
  }
  for (const auto& [u, v] : sol.pairs) {
    sol.schedule.starts[inst.task(u).id()] = clock;
    sol.schedule.starts[inst.task(v).id()] = clock + ax;
    clock += 4 * ax;
  }
  for (TaskIndex x : sol.isolated) {
    sol.schedule.starts[inst.task(x).id()] = clock;
    clock += 3 * ax;
  }

  const auto tail = static_cast<Time>(4 * sol.m + 3 * sol.s);
  sol.normalized_bound = y_total_normalized + tail;
  sol.rescaled_bound = sol.normalized_bound * ax;
  sol.bound_value = y_total + ax * tail;
  assert(sol.bound_value == clock);
  return sol;
}

}  // namespace ctsched
