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

#include "ctsched/model.hpp"

#include <algorithm>
#include <array>
#include <queue>
#include <tuple>

#include "ctsched/error.hpp"

namespace ctsched {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kInvalidParameter:
      return "invalid-parameter";
    case ErrorKind::kInvalidInstance:
      return "invalid-instance";
    case ErrorKind::kUnsupportedTaskShape:
      return "unsupported-task-shape";
    case ErrorKind::kInvalidPartition:
      return "invalid-partition";
    case ErrorKind::kIncompleteSchedule:
      return "incomplete-schedule";
    case ErrorKind::kUnknownTask:
      return "unknown-task";
    case ErrorKind::kUnsupportedInstance:
      return "unsupported-instance";
    case ErrorKind::kSizeLimit:
      return "size-limit";
    case ErrorKind::kInvalidSource:
      return "invalid-source";
    case ErrorKind::kParseError:
      return "parse-error";
  }
  return "unknown";
}

// ---------------------------------------------------------------------------
// CoupledTask

CoupledTask::CoupledTask(std::string id, Time a, Time idle, Time b)
    : id_(std::move(id)), a_(a), idle_(idle), b_(b) {
  if (id_.empty()) {
    throw Error(ErrorKind::kInvalidParameter, "task id must not be empty");
  }
  if (a_ < 1 || b_ < 1 || idle_ < 0) {
    throw Error(ErrorKind::kInvalidParameter,
                "task '" + id_ + "' needs a >= 1, b >= 1, L >= 0");
  }
}

std::optional<Time> CoupledTask::alpha() const {
  if (a_ == idle_ && idle_ == b_) return a_;
  return std::nullopt;
}

CoupledTask new_stretched(std::string id, Time alpha) {
  if (alpha < 1) {
    throw Error(ErrorKind::kInvalidParameter,
                "stretch factor of '" + id + "' must be >= 1");
  }
  return CoupledTask(std::move(id), alpha, alpha, alpha);
}

Time task_span(const CoupledTask& task) {
  return task.a() + task.idle() + task.b();
}

// ---------------------------------------------------------------------------
// CompatibilityGraph

CompatibilityGraph::CompatibilityGraph(std::size_t num_vertices)
    : adjacency_(num_vertices) {}

void CompatibilityGraph::add_edge(TaskIndex u, TaskIndex v) {
  if (u >= adjacency_.size() || v >= adjacency_.size()) {
    throw Error(ErrorKind::kInvalidInstance, "edge endpoint out of range");
  }
  if (u == v) throw Error(ErrorKind::kInvalidInstance, "self-loop");
  if (!edge_set_.emplace(std::min(u, v), std::max(u, v)).second) {
    throw Error(ErrorKind::kInvalidInstance, "duplicate edge");
  }
  edges_.push_back({u, v});
  adjacency_[u].push_back(v);
  adjacency_[v].push_back(u);
}

bool CompatibilityGraph::has_edge(TaskIndex u, TaskIndex v) const {
  return edge_set_.contains({std::min(u, v), std::max(u, v)});
}

// ---------------------------------------------------------------------------
// Instance

namespace {

bool stretched_edge_valid(Time x, Time y) {
  return x == y || 3 * std::min(x, y) <= std::max(x, y);
}

}  // namespace

Instance::Instance(std::vector<CoupledTask> tasks,
                   const std::vector<IdEdge>& edges, Time scale,
                   std::optional<Partition> partition)
    : tasks_(std::move(tasks)),
      graph_(tasks_.size()),
      scale_(scale),
      partition_(std::move(partition)) {
  if (scale_ < 1) {
    throw Error(ErrorKind::kInvalidInstance, "scale must be >= 1");
  }
  for (TaskIndex i = 0; i < tasks_.size(); ++i) {
    if (!index_.emplace(tasks_[i].id(), i).second) {
      throw Error(ErrorKind::kInvalidInstance,
                  "duplicate task id '" + tasks_[i].id() + "'");
    }
  }
  for (const auto& [u, v] : edges) {
    auto iu = find(u);
    auto iv = find(v);
    if (!iu || !iv) {
      throw Error(ErrorKind::kInvalidInstance,
                  "edge {" + u + ", " + v + "} names an unknown task");
    }
    const auto& tu = tasks_[*iu];
    const auto& tv = tasks_[*iv];
    if (tu.stretched() && tv.stretched() &&
        !stretched_edge_valid(*tu.alpha(), *tv.alpha())) {
      throw Error(ErrorKind::kInvalidInstance,
                  "edge {" + u + ", " + v +
                      "} joins stretch factors that can neither interleave "
                      "nor nest");
    }
    try {
      graph_.add_edge(*iu, *iv);
    } catch (const Error& e) {
      throw Error(ErrorKind::kInvalidInstance,
                  "edge {" + u + ", " + v + "}: " + e.what());
    }
  }
  if (partition_) {
    constexpr auto kUnset = static_cast<int>(-1);
    std::vector<int> side(tasks_.size(), kUnset);
    auto assign = [&](const std::vector<std::string>& ids, Side s,
                      std::vector<TaskIndex>& out) {
      for (const auto& id : ids) {
        auto i = find(id);
        if (!i) {
          throw Error(ErrorKind::kInvalidPartition,
                      "unknown task '" + id + "' in partition");
        }
        if (side[*i] != kUnset) {
          throw Error(ErrorKind::kInvalidPartition,
                      "task '" + id + "' listed twice in partition");
        }
        side[*i] = static_cast<int>(s);
        out.push_back(*i);
      }
    };
    assign(partition_->x, Side::kX, x_tasks_);
    assign(partition_->y, Side::kY, y_tasks_);
    sides_.reserve(tasks_.size());
    for (TaskIndex i = 0; i < tasks_.size(); ++i) {
      if (side[i] == kUnset) {
        throw Error(ErrorKind::kInvalidPartition,
                    "task '" + tasks_[i].id() + "' missing from partition");
      }
      sides_.push_back(static_cast<Side>(side[i]));
    }
  }
}

std::optional<TaskIndex> Instance::find(std::string_view id) const {
  auto it = index_.find(std::string(id));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

TaskIndex Instance::index_of(std::string_view id) const {
  auto i = find(id);
  if (!i) {
    throw Error(ErrorKind::kUnknownTask,
                "no task with id '" + std::string(id) + "'");
  }
  return *i;
}

Side Instance::side(TaskIndex i) const {
  if (!partition_) {
    throw Error(ErrorKind::kInvalidPartition, "instance has no partition");
  }
  return sides_.at(i);
}

std::vector<Instance::IdEdge> Instance::id_edges() const {
  std::vector<IdEdge> out;
  out.reserve(graph_.edges().size());
  for (const auto& e : graph_.edges()) {
    out.emplace_back(tasks_[e.u].id(), tasks_[e.v].id());
  }
  return out;
}

Instance Instance::without_edge(TaskIndex u, TaskIndex v) const {
  std::vector<IdEdge> kept;
  for (const auto& e : graph_.edges()) {
    if ((e.u == u && e.v == v) || (e.u == v && e.v == u)) continue;
    kept.emplace_back(tasks_[e.u].id(), tasks_[e.v].id());
  }
  return Instance(tasks_, kept, scale_, partition_);
}

// ---------------------------------------------------------------------------
// Compatibility and classification

std::string_view to_string(CompatibilityKind kind) {
  switch (kind) {
    case CompatibilityKind::kInterleave:
      return "interleave";
    case CompatibilityKind::kNestXInY:
      return "nest_x_in_y";
    case CompatibilityKind::kNestYInX:
      return "nest_y_in_x";
    case CompatibilityKind::kIncompatible:
      return "incompatible";
  }
  return "unknown";
}

CompatibilityKind compatibility_kind(const Instance& inst, TaskIndex x,
                                     TaskIndex y) {
  const auto& tx = inst.task(x);
  const auto& ty = inst.task(y);
  if (!tx.stretched() || !ty.stretched()) {
    throw Error(ErrorKind::kUnsupportedTaskShape,
                "compatibility kinds are defined for stretched tasks only");
  }
  if (!inst.graph().has_edge(x, y)) return CompatibilityKind::kIncompatible;
  const Time ax = *tx.alpha();
  const Time ay = *ty.alpha();
  if (ax == ay) return CompatibilityKind::kInterleave;
  if (3 * ax <= ay) return CompatibilityKind::kNestXInY;
  if (3 * ay <= ax) return CompatibilityKind::kNestYInX;
  // Unreachable: Instance rejects such edges.
  return CompatibilityKind::kIncompatible;
}

std::string_view to_string(InstanceClass cls) {
  switch (cls) {
    case InstanceClass::kGeneral:
      return "general";
    case InstanceClass::kOneStageBipartite:
      return "one-stage-bipartite";
    case InstanceClass::kQuasiSplit:
      return "quasi-split";
  }
  return "unknown";
}

std::size_t stretch_class_count(const Instance& inst,
                                std::span<const TaskIndex> tasks) {
  std::set<std::tuple<Time, Time, Time>> shapes;
  for (TaskIndex i : tasks) {
    const auto& t = inst.task(i);
    shapes.emplace(t.a(), t.idle(), t.b());
  }
  return shapes.size();
}

namespace {

DegreeRange degree_range(const Instance& inst,
                         std::span<const TaskIndex> tasks) {
  if (tasks.empty()) return {};
  DegreeRange r{inst.graph().degree(tasks.front()),
                inst.graph().degree(tasks.front())};
  for (TaskIndex i : tasks) {
    r.min = std::min(r.min, inst.graph().degree(i));
    r.max = std::max(r.max, inst.graph().degree(i));
  }
  return r;
}

// Connectivity of the subgraph induced by `members` (flags by index).
bool induced_connected(const Instance& inst, const std::vector<bool>& members,
                       std::size_t count) {
  if (count == 0) return true;
  TaskIndex start = 0;
  while (!members[start]) ++start;
  std::vector<bool> seen(inst.size(), false);
  std::queue<TaskIndex> queue;
  queue.push(start);
  seen[start] = true;
  std::size_t reached = 1;
  while (!queue.empty()) {
    TaskIndex u = queue.front();
    queue.pop();
    for (TaskIndex v : inst.graph().neighbors(u)) {
      if (members[v] && !seen[v]) {
        seen[v] = true;
        ++reached;
        queue.push(v);
      }
    }
  }
  return reached == count;
}

std::size_t edges_within(const Instance& inst, const std::vector<bool>& in) {
  std::size_t count = 0;
  for (const auto& e : inst.graph().edges()) {
    if (in[e.u] && in[e.v]) ++count;
  }
  return count;
}

bool cross_edges_nest_x_into_y(const Instance& inst) {
  for (const auto& e : inst.graph().edges()) {
    if (inst.side(e.u) == inst.side(e.v)) continue;
    TaskIndex x = inst.side(e.u) == Side::kX ? e.u : e.v;
    TaskIndex y = x == e.u ? e.v : e.u;
    if (!inst.task(x).stretched() || !inst.task(y).stretched()) return false;
    if (compatibility_kind(inst, x, y) != CompatibilityKind::kNestXInY) {
      return false;
    }
  }
  return true;
}

}  // namespace

ClassReport classify(const Instance& inst) {
  ClassReport report;
  if (!inst.partition()) {
    std::vector<TaskIndex> all(inst.size());
    for (TaskIndex i = 0; i < all.size(); ++i) all[i] = i;
    report.stretch_class_counts["all"] = stretch_class_count(inst, all);
    report.degree_ranges["all"] = degree_range(inst, all);
    return report;
  }
  const auto& xs = inst.x_tasks();
  const auto& ys = inst.y_tasks();
  report.stretch_class_counts["X"] = stretch_class_count(inst, xs);
  report.stretch_class_counts["Y"] = stretch_class_count(inst, ys);
  report.degree_ranges["X"] = degree_range(inst, xs);
  report.degree_ranges["Y"] = degree_range(inst, ys);

  std::vector<bool> in_x(inst.size(), false);
  std::vector<bool> in_y(inst.size(), false);
  for (TaskIndex i : xs) in_x[i] = true;
  for (TaskIndex i : ys) in_y[i] = true;

  const std::size_t nx = xs.size();
  const std::size_t x_edges = edges_within(inst, in_x);
  report.x_connected = induced_connected(inst, in_x, nx);
  report.x_complete = x_edges == nx * (nx - (nx > 0 ? 1 : 0)) / 2;
  report.y_independent = edges_within(inst, in_y) == 0;

  const bool oriented = cross_edges_nest_x_into_y(inst);
  std::vector<bool> everything(inst.size(), true);
  const bool connected = induced_connected(inst, everything, inst.size());

  if (report.y_independent && oriented && x_edges == 0) {
    report.cls = InstanceClass::kOneStageBipartite;
  } else if (report.y_independent && oriented && nx > 0 &&
             report.x_connected && !report.x_complete && connected) {
    report.cls = InstanceClass::kQuasiSplit;
  }
  return report;
}

void require_nesting_structure(const Instance& inst) {
  if (!inst.partition()) {
    throw Error(ErrorKind::kUnsupportedInstance,
                "an X/Y partition is required");
  }
  for (const auto& t : inst.tasks()) {
    if (!t.stretched()) {
      throw Error(ErrorKind::kUnsupportedInstance,
                  "task '" + t.id() + "' is not stretched");
    }
  }
  for (const auto& e : inst.graph().edges()) {
    const Side su = inst.side(e.u);
    const Side sv = inst.side(e.v);
    const auto kind = compatibility_kind(inst, e.u, e.v);
    const std::string pair =
        "{" + inst.task(e.u).id() + ", " + inst.task(e.v).id() + "}";
    if (su == Side::kY && sv == Side::kY) {
      throw Error(ErrorKind::kUnsupportedInstance,
                  "Y side is not independent: edge " + pair);
    }
    if (su == Side::kX && sv == Side::kX) {
      if (kind != CompatibilityKind::kInterleave) {
        throw Error(ErrorKind::kUnsupportedInstance,
                    "X-X edge " + pair + " joins unequal stretch factors");
      }
      continue;
    }
    const bool x_first = su == Side::kX;
    const auto wanted =
        x_first ? CompatibilityKind::kNestXInY : CompatibilityKind::kNestYInX;
    if (kind != wanted) {
      throw Error(ErrorKind::kUnsupportedInstance,
                  "X-Y edge " + pair + " does not nest the X task into Y");
    }
  }
}

// ---------------------------------------------------------------------------
// Schedules

std::string_view to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::kOverlap:
      return "overlap";
    case ViolationKind::kIncompatibleNesting:
      return "incompatible-nesting";
  }
  return "unknown";
}

std::vector<Time> resolve_starts(const Instance& inst, const Schedule& s) {
  for (const auto& [id, start] : s.starts) {
    if (!inst.find(id)) {
      throw Error(ErrorKind::kUnknownTask,
                  "schedule names unknown task '" + id + "'");
    }
    if (start < 0) {
      throw Error(ErrorKind::kInvalidParameter,
                  "negative start for task '" + id + "'");
    }
  }
  std::vector<Time> starts(inst.size());
  for (TaskIndex i = 0; i < inst.size(); ++i) {
    auto it = s.starts.find(inst.task(i).id());
    if (it == s.starts.end()) {
      throw Error(ErrorKind::kIncompleteSchedule,
                  "task '" + inst.task(i).id() + "' is not scheduled");
    }
    starts[i] = it->second;
  }
  return starts;
}

namespace {

struct Interval {
  Time begin;
  Time end;  // exclusive
};

struct Placement {
  std::array<Interval, 2> subtasks;
  Interval idle;
};

Placement place(const CoupledTask& t, Time start) {
  const Time idle_begin = start + t.a();
  const Time b_begin = idle_begin + t.idle();
  return {{Interval{start, idle_begin}, Interval{b_begin, b_begin + t.b()}},
          Interval{idle_begin, b_begin}};
}

bool overlaps(Interval x, Interval y) {
  return x.begin < y.end && y.begin < x.end;
}

bool inside(Interval inner, Interval outer) {
  return outer.begin <= inner.begin && inner.end <= outer.end;
}

bool hosts(const Placement& host, const Placement& guest) {
  return inside(guest.subtasks[0], host.idle) ||
         inside(guest.subtasks[1], host.idle);
}

std::vector<Placement> placements(const Instance& inst,
                                  const std::vector<Time>& starts) {
  std::vector<Placement> out;
  out.reserve(inst.size());
  for (TaskIndex i = 0; i < inst.size(); ++i) {
    out.push_back(place(inst.task(i), starts[i]));
  }
  return out;
}

}  // namespace

std::vector<Violation> validate(const Instance& inst, const Schedule& s) {
  const auto starts = resolve_starts(inst, s);
  const auto placed = placements(inst, starts);
  std::vector<Violation> violations;
  for (TaskIndex i = 0; i < placed.size(); ++i) {
    for (TaskIndex j = i + 1; j < placed.size(); ++j) {
      bool overlap = false;
      for (const auto& si : placed[i].subtasks) {
        for (const auto& sj : placed[j].subtasks) {
          overlap = overlap || overlaps(si, sj);
        }
      }
      if (overlap) {
        violations.push_back({ViolationKind::kOverlap, inst.task(i).id(),
                              inst.task(j).id()});
      }
      // A sub-task that straddles an idle window boundary necessarily
      // overlaps the neighbouring sub-task of the host, so full containment
      // is the only sharing case left to check.
      if ((hosts(placed[i], placed[j]) || hosts(placed[j], placed[i])) &&
          !inst.graph().has_edge(i, j)) {
        violations.push_back({ViolationKind::kIncompatibleNesting,
                              inst.task(i).id(), inst.task(j).id()});
      }
    }
  }
  return violations;
}

Time makespan(const Instance& inst, const Schedule& s) {
  const auto starts = resolve_starts(inst, s);
  Time end = 0;
  for (TaskIndex i = 0; i < inst.size(); ++i) {
    end = std::max(end, starts[i] + task_span(inst.task(i)));
  }
  return end;
}

std::vector<std::pair<TaskIndex, TaskIndex>> idle_sharing_pairs(
    const Instance& inst, const Schedule& s) {
  const auto placed = placements(inst, resolve_starts(inst, s));
  std::vector<std::pair<TaskIndex, TaskIndex>> out;
  for (TaskIndex host = 0; host < placed.size(); ++host) {
    for (TaskIndex guest = 0; guest < placed.size(); ++guest) {
      if (host != guest && hosts(placed[host], placed[guest])) {
        out.emplace_back(host, guest);
      }
    }
  }
  return out;
}

}  // namespace ctsched
