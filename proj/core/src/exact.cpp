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

#include "ctsched/exact.hpp"

#include <algorithm>
#include <cassert>
#include <limits>
#include <set>

#include "ctsched/error.hpp"

namespace ctsched {

namespace {

Time alpha_of(const Instance& inst, TaskIndex i) {
  return *inst.task(i).alpha();
}

std::vector<TaskIndex> y_by_id(const Instance& inst) {
  std::vector<TaskIndex> ys = inst.y_tasks();
  std::sort(ys.begin(), ys.end(), [&](TaskIndex l, TaskIndex r) {
    return inst.task(l).id() < inst.task(r).id();
  });
  return ys;
}

}  // namespace

Time decomposition_cost(const Instance& inst, const Decomposition& d) {
  Time cost = 0;
  for (TaskIndex y : inst.y_tasks()) cost += task_span(inst.task(y));
  for (const auto& [u, v] : d.outside_pairs) cost += 4 * alpha_of(inst, u);
  for (TaskIndex x : d.isolated) cost += 3 * alpha_of(inst, x);
  return cost;
}

Schedule realize(const Instance& inst, const Decomposition& d) {
  Schedule out;
  Time clock = 0;
  for (TaskIndex y : y_by_id(inst)) {
    const Time ay = alpha_of(inst, y);
    out.starts[inst.task(y).id()] = clock;
    Time slot = clock + ay;
    for (const auto& pair : d.nested_pairs) {
      if (pair.host != y) continue;
      const Time ax = alpha_of(inst, pair.first);
      out.starts[inst.task(pair.first).id()] = slot;
      out.starts[inst.task(pair.second).id()] = slot + ax;
      slot += 4 * ax;
    }
    for (const auto& single : d.nested_singles) {
      if (single.host != y) continue;
      out.starts[inst.task(single.task).id()] = slot;
      slot += 3 * alpha_of(inst, single.task);
    }
    clock += 3 * ay;
  }
  for (const auto& [u, v] : d.outside_pairs) {
    const Time ax = alpha_of(inst, u);
    out.starts[inst.task(u).id()] = clock;
    out.starts[inst.task(v).id()] = clock + ax;
    clock += 4 * ax;
  }
  for (TaskIndex x : d.isolated) {
    out.starts[inst.task(x).id()] = clock;
    clock += 3 * alpha_of(inst, x);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Branch and bound

namespace {

class RoleSearch {
 public:
  explicit RoleSearch(const Instance& inst)
      : inst_(inst),
        assigned_(inst.size(), false),
        capacity_(inst.size(), 0),
        y_neighbors_(inst.size()),
        x_neighbors_(inst.size()) {
    order_ = inst.x_tasks();
    std::stable_sort(order_.begin(), order_.end(),
                     [&](TaskIndex l, TaskIndex r) {
                       return inst.graph().degree(l) > inst.graph().degree(r);
                     });
    for (TaskIndex y : inst.y_tasks()) capacity_[y] = inst.task(y).idle();
    for (TaskIndex x : inst.x_tasks()) {
      for (TaskIndex v : inst.graph().neighbors(x)) {
        (inst.side(v) == Side::kY ? y_neighbors_ : x_neighbors_)[x].push_back(
            v);
      }
    }
    base_cost_ = 0;
    for (TaskIndex y : inst.y_tasks()) base_cost_ += task_span(inst.task(y));
  }

  ExactSolution run() {
    search(0, base_cost_);
    assert(found_);
    ExactSolution out;
    out.optimum = best_cost_;
    out.decomposition = best_;
    out.schedule = realize(inst_, best_);
    out.nodes = nodes_;
    return out;
  }

 private:
  bool nestable(TaskIndex x) const {
    const Time need = 3 * alpha_of(inst_, x);
    return std::any_of(y_neighbors_[x].begin(), y_neighbors_[x].end(),
                       [&](TaskIndex y) { return capacity_[y] >= need; });
  }

  bool has_free_partner(TaskIndex x) const {
    return std::any_of(x_neighbors_[x].begin(), x_neighbors_[x].end(),
                       [&](TaskIndex v) { return !assigned_[v]; });
  }

  // Every unassigned task costs at least: 0 if some host still has room for
  // it, half an outside pair if it has a free partner, a full isolated slot
  // otherwise. Host capacity only shrinks along a branch.
  Time lower_bound() const {
    Time lb = 0;
    for (TaskIndex x : order_) {
      if (assigned_[x] || nestable(x)) continue;
      lb += (has_free_partner(x) ? 2 : 3) * alpha_of(inst_, x);
    }
    return lb;
  }

  void search(std::size_t pos, Time cost) {
    ++nodes_;
    while (pos < order_.size() && assigned_[order_[pos]]) ++pos;
    if (pos == order_.size()) {
      if (!found_ || cost < best_cost_) {
        found_ = true;
        best_cost_ = cost;
        best_ = current_;
      }
      return;
    }
    if (found_ && cost + lower_bound() >= best_cost_) return;

    const TaskIndex x = order_[pos];
    const Time ax = alpha_of(inst_, x);
    assigned_[x] = true;

    // Nest as a pair: partner and host must both be compatible with x, and
    // the partner with the host.
    for (TaskIndex partner : x_neighbors_[x]) {
      if (assigned_[partner]) continue;
      assigned_[partner] = true;
      for (TaskIndex y : y_neighbors_[x]) {
        if (capacity_[y] < 4 * ax || !inst_.graph().has_edge(partner, y)) {
          continue;
        }
        capacity_[y] -= 4 * ax;
        current_.nested_pairs.push_back({x, partner, y});
        search(pos + 1, cost);
        current_.nested_pairs.pop_back();
        capacity_[y] += 4 * ax;
      }
      assigned_[partner] = false;
    }

    for (TaskIndex y : y_neighbors_[x]) {
      if (capacity_[y] < 3 * ax) continue;
      capacity_[y] -= 3 * ax;
      current_.nested_singles.push_back({x, y});
      search(pos + 1, cost);
      current_.nested_singles.pop_back();
      capacity_[y] += 3 * ax;
    }

    for (TaskIndex partner : x_neighbors_[x]) {
      if (assigned_[partner]) continue;
      assigned_[partner] = true;
      current_.outside_pairs.emplace_back(x, partner);
      search(pos + 1, cost + 4 * ax);
      current_.outside_pairs.pop_back();
      assigned_[partner] = false;
    }

    current_.isolated.push_back(x);
    search(pos + 1, cost + 3 * ax);
    current_.isolated.pop_back();

    assigned_[x] = false;
  }

  const Instance& inst_;
  std::vector<TaskIndex> order_;
  std::vector<bool> assigned_;
  std::vector<Time> capacity_;
  std::vector<std::vector<TaskIndex>> y_neighbors_;
  std::vector<std::vector<TaskIndex>> x_neighbors_;
  Time base_cost_ = 0;

  Decomposition current_;
  Decomposition best_;
  Time best_cost_ = 0;
  bool found_ = false;
  std::uint64_t nodes_ = 0;
};

}  // namespace

ExactSolution exact_optimum(const Instance& inst, const ExactOptions& options) {
  require_nesting_structure(inst);
  if (stretch_class_count(inst, inst.y_tasks()) > 1) {
    throw Error(ErrorKind::kUnsupportedInstance,
                "the exact solver needs a single Y stretch class");
  }
  if (inst.x_tasks().size() > options.max_x) {
    throw Error(ErrorKind::kSizeLimit,
                "|X| = " + std::to_string(inst.x_tasks().size()) +
                    " exceeds the exact solver cap of " +
                    std::to_string(options.max_x));
  }
  ExactSolution sol = RoleSearch(inst).run();
  assert(sol.optimum == decomposition_cost(inst, sol.decomposition));
  return sol;
}

// ---------------------------------------------------------------------------
// Timeline oracle
//
// Take an optimal schedule whose sum of start times is minimal. No set of
// tasks can then slide left by one unit, which forces every task with a
// positive start to have a sub-task beginning exactly where a sub-task of
// some other task ends, and every task to be reachable through such contacts
// from a task starting at 0. Placing tasks one at a time with starts drawn
// from {0} and those contact points of already placed tasks therefore
// reaches an optimal schedule.

namespace {

class TimelineSearch {
 public:
  explicit TimelineSearch(const Instance& inst)
      : inst_(inst), starts_(inst.size(), kUnplaced) {
    for (const auto& t : inst.tasks()) best_ += task_span(t);
  }

  Time run() {
    search(0, 0);
    return best_;
  }

 private:
  static constexpr Time kUnplaced = -1;

  struct Parts {
    Time a_begin, a_end, idle_end, b_end;
  };

  Parts parts(TaskIndex i, Time start) const {
    const auto& t = inst_.task(i);
    return {start, start + t.a(), start + t.a() + t.idle(),
            start + task_span(t)};
  }

  static bool overlap(Time b1, Time e1, Time b2, Time e2) {
    return b1 < e2 && b2 < e1;
  }

  static bool hosts(const Parts& host, const Parts& guest) {
    auto inside = [&](Time b, Time e) {
      return host.a_end <= b && e <= host.idle_end;
    };
    return inside(guest.a_begin, guest.a_end) ||
           inside(guest.idle_end, guest.b_end);
  }

  bool compatible(TaskIndex i, Time si, TaskIndex j, Time sj) const {
    const Parts p = parts(i, si);
    const Parts q = parts(j, sj);
    if (overlap(p.a_begin, p.a_end, q.a_begin, q.a_end) ||
        overlap(p.a_begin, p.a_end, q.idle_end, q.b_end) ||
        overlap(p.idle_end, p.b_end, q.a_begin, q.a_end) ||
        overlap(p.idle_end, p.b_end, q.idle_end, q.b_end)) {
      return false;
    }
    if ((hosts(p, q) || hosts(q, p)) && !inst_.graph().has_edge(i, j)) {
      return false;
    }
    return true;
  }

  void search(std::size_t placed, Time end) {
    if (!visited_.insert(starts_).second) return;
    if (placed == inst_.size()) {
      best_ = std::min(best_, end);
      return;
    }
    for (TaskIndex i = 0; i < inst_.size(); ++i) {
      if (starts_[i] != kUnplaced) continue;
      const auto& t = inst_.task(i);
      std::set<Time> candidates;
      for (TaskIndex j = 0; j < inst_.size(); ++j) {
        if (starts_[j] == kUnplaced) continue;
        const Parts q = parts(j, starts_[j]);
        for (Time contact : {q.a_end, q.b_end}) {
          candidates.insert(contact);
          candidates.insert(contact - t.a() - t.idle());
        }
      }
      candidates.insert(0);
      for (Time s : candidates) {
        if (s < 0 || s + task_span(t) >= best_) continue;
        bool ok = true;
        for (TaskIndex j = 0; j < inst_.size() && ok; ++j) {
          if (starts_[j] != kUnplaced) ok = compatible(i, s, j, starts_[j]);
        }
        if (!ok) continue;
        starts_[i] = s;
        search(placed + 1, std::max(end, s + task_span(t)));
        starts_[i] = kUnplaced;
      }
    }
  }

  const Instance& inst_;
  std::vector<Time> starts_;
  std::set<std::vector<Time>> visited_;
  Time best_ = 0;
};

}  // namespace

Time timeline_oracle(const Instance& inst) {
  constexpr std::size_t kMaxTasks = 6;
  constexpr Time kMaxTotalSpan = 120;
  Time total = 0;
  for (const auto& t : inst.tasks()) total += task_span(t);
  if (inst.size() > kMaxTasks || total > kMaxTotalSpan) {
    throw Error(ErrorKind::kSizeLimit,
                "timeline_oracle handles at most 6 tasks with total span "
                "<= 120");
  }
  if (inst.size() == 0) return 0;
  // The all-sequential schedule (makespan = total) is always feasible; the
  // search only records strictly shorter ones.
  return TimelineSearch(inst).run();
}

}  // namespace ctsched
