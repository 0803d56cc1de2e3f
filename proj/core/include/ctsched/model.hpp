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

// Core data model for single-machine coupled-task scheduling: tasks
// (a, L, b), the compatibility graph, instances with an optional X/Y
// partition, schedules and their validation.

#ifndef CTSCHED_MODEL_HPP_
#define CTSCHED_MODEL_HPP_

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace ctsched {

using Time = std::int64_t;
using TaskIndex = std::size_t;

// A coupled task: sub-task `a`, then an exact idle gap `idle`, then sub-task
// `b`. The task is stretched with factor alpha iff a == idle == b == alpha.
class CoupledTask {
 public:
  CoupledTask(std::string id, Time a, Time idle, Time b);

  const std::string& id() const { return id_; }
  Time a() const { return a_; }
  Time idle() const { return idle_; }
  Time b() const { return b_; }

  std::optional<Time> alpha() const;
  bool stretched() const { return alpha().has_value(); }

  friend bool operator==(const CoupledTask&, const CoupledTask&) = default;

 private:
  std::string id_;
  Time a_;
  Time idle_;
  Time b_;
};

// Stretched task (alpha, alpha, alpha). Throws kInvalidParameter on alpha < 1.
CoupledTask new_stretched(std::string id, Time alpha);

// Total machine occupation window a + L + b.
Time task_span(const CoupledTask& task);

struct Edge {
  TaskIndex u;
  TaskIndex v;
  friend bool operator==(const Edge&, const Edge&) = default;
};

// Simple undirected graph over task indices. Edge and adjacency order follow
// insertion order, which the flow and matching engines rely on for
// reproducible tie-breaking.
class CompatibilityGraph {
 public:
  explicit CompatibilityGraph(std::size_t num_vertices = 0);

  void add_edge(TaskIndex u, TaskIndex v);
  bool has_edge(TaskIndex u, TaskIndex v) const;

  std::size_t num_vertices() const { return adjacency_.size(); }
  std::span<const Edge> edges() const { return edges_; }
  std::span<const TaskIndex> neighbors(TaskIndex u) const {
    return adjacency_.at(u);
  }
  std::size_t degree(TaskIndex u) const { return adjacency_.at(u).size(); }

  friend bool operator==(const CompatibilityGraph& l,
                         const CompatibilityGraph& r) {
    return l.edges_ == r.edges_ && l.adjacency_.size() == r.adjacency_.size();
  }

 private:
  std::vector<Edge> edges_;
  std::vector<std::vector<TaskIndex>> adjacency_;
  std::set<std::pair<TaskIndex, TaskIndex>> edge_set_;
};

enum class Side { kX, kY };

struct Partition {
  std::vector<std::string> x;
  std::vector<std::string> y;
  friend bool operator==(const Partition&, const Partition&) = default;
};

// Immutable problem instance. The constructor enforces every structural
// invariant (unique ids, known endpoints, simple graph, partition cover,
// stretched edge validity) and throws kInvalidInstance / kInvalidPartition.
//
// `scale` is the global time denominator: a duration d in the instance is
// d / scale original time units.
class Instance {
 public:
  using IdEdge = std::pair<std::string, std::string>;

  Instance(std::vector<CoupledTask> tasks, const std::vector<IdEdge>& edges,
           Time scale = 1, std::optional<Partition> partition = std::nullopt);

  std::span<const CoupledTask> tasks() const { return tasks_; }
  const CoupledTask& task(TaskIndex i) const { return tasks_.at(i); }
  std::size_t size() const { return tasks_.size(); }
  const CompatibilityGraph& graph() const { return graph_; }
  Time scale() const { return scale_; }
  const std::optional<Partition>& partition() const { return partition_; }

  std::optional<TaskIndex> find(std::string_view id) const;
  // Throws kUnknownTask.
  TaskIndex index_of(std::string_view id) const;

  // Requires a partition.
  Side side(TaskIndex i) const;
  // Partition members in declaration order (empty without a partition).
  const std::vector<TaskIndex>& x_tasks() const { return x_tasks_; }
  const std::vector<TaskIndex>& y_tasks() const { return y_tasks_; }

  std::vector<IdEdge> id_edges() const;

  // Copy of this instance with edge {u, v} removed.
  Instance without_edge(TaskIndex u, TaskIndex v) const;

  friend bool operator==(const Instance& l, const Instance& r) {
    return l.tasks_ == r.tasks_ && l.graph_ == r.graph_ &&
           l.scale_ == r.scale_ && l.partition_ == r.partition_;
  }

 private:
  std::vector<CoupledTask> tasks_;
  CompatibilityGraph graph_;
  Time scale_;
  std::optional<Partition> partition_;
  std::unordered_map<std::string, TaskIndex> index_;
  std::vector<Side> sides_;
  std::vector<TaskIndex> x_tasks_;
  std::vector<TaskIndex> y_tasks_;
};

enum class CompatibilityKind {
  kInterleave,
  kNestXInY,
  kNestYInX,
  kIncompatible,
};

std::string_view to_string(CompatibilityKind kind);

// How stretched tasks x and y may share idle time. Throws
// kUnsupportedTaskShape if either task is not stretched.
CompatibilityKind compatibility_kind(const Instance& inst, TaskIndex x,
                                     TaskIndex y);

enum class InstanceClass { kGeneral, kOneStageBipartite, kQuasiSplit };

std::string_view to_string(InstanceClass cls);

struct DegreeRange {
  std::size_t min = 0;
  std::size_t max = 0;
  friend bool operator==(const DegreeRange&, const DegreeRange&) = default;
};

// Keys of the per-part maps are "X", "Y" and "all" ("all" only without a
// partition).
struct ClassReport {
  InstanceClass cls = InstanceClass::kGeneral;
  std::map<std::string, std::size_t> stretch_class_counts;
  std::map<std::string, DegreeRange> degree_ranges;
  bool x_connected = false;
  bool x_complete = false;
  bool y_independent = false;
};

ClassReport classify(const Instance& inst);

// Structural requirements shared by the approximation and exact solvers:
// partition present, all tasks stretched, Y independent, every X-Y edge lets
// the X task nest into the Y task (3 alpha(x) <= alpha(y)) and every X-X edge
// joins equal stretch factors. Throws kUnsupportedInstance otherwise.
void require_nesting_structure(const Instance& inst);

// Number of distinct stretch factors (distinct (a, L, b) shapes for
// non-stretched tasks) among `tasks`.
std::size_t stretch_class_count(const Instance& inst,
                                std::span<const TaskIndex> tasks);

struct Schedule {
  std::map<std::string, Time> starts;
  friend bool operator==(const Schedule&, const Schedule&) = default;
};

// Start of sub-task a per task index. Throws kIncompleteSchedule when a task
// is missing, kUnknownTask for foreign ids and kInvalidParameter for
// negative starts.
std::vector<Time> resolve_starts(const Instance& inst, const Schedule& s);

enum class ViolationKind { kOverlap, kIncompatibleNesting };

std::string_view to_string(ViolationKind kind);

struct Violation {
  ViolationKind kind;
  std::string first;
  std::string second;
  friend bool operator==(const Violation&, const Violation&) = default;
};

// Empty result means the schedule is feasible. All violations are reported,
// at most one per (kind, pair).
std::vector<Violation> validate(const Instance& inst, const Schedule& s);

Time makespan(const Instance& inst, const Schedule& s);

// Pairs (host, guest) where some sub-task of `guest` lies inside the idle
// window of `host`. Each such pair consumes the compatibility edge between
// them. Overlapping placements are ignored here; use validate for those.
std::vector<std::pair<TaskIndex, TaskIndex>> idle_sharing_pairs(
    const Instance& inst, const Schedule& s);

}  // namespace ctsched

#endif  // CTSCHED_MODEL_HPP_
