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

#include <algorithm>
#include <random>

#include "ctsched/error.hpp"
#include "ctsched/generators.hpp"
#include "ctsched/model.hpp"
#include "doctest.h"
#include "test_util.hpp"

namespace ctsched {
namespace {

TEST_CASE("new_stretched builds (alpha, alpha, alpha)") {
  for (Time alpha : {1, 9, 4}) {
    const CoupledTask t = new_stretched("t", alpha);
    CHECK(t.a() == alpha);
    CHECK(t.idle() == alpha);
    CHECK(t.b() == alpha);
    REQUIRE(t.alpha());
    CHECK(*t.alpha() == alpha);
  }
  CHECK_THROWS_AS(new_stretched("z", 0), Error);
  try {
    new_stretched("z", 0);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kInvalidParameter);
  }
}

TEST_CASE("coupled task shape") {
  CHECK(task_span(new_stretched("x", 1)) == 3);
  CHECK(task_span(new_stretched("y", 9)) == 27);
  const CoupledTask flat("f", 4, 0, 4);
  CHECK(task_span(flat) == 8);
  CHECK_FALSE(flat.stretched());
  CHECK_THROWS_AS(CoupledTask("bad", 0, 1, 1), Error);
  CHECK_THROWS_AS(CoupledTask("bad", 1, -1, 1), Error);
  CHECK_THROWS_AS(CoupledTask("", 1, 1, 1), Error);
}

TEST_CASE("instance invariants") {
  auto x = new_stretched("x", 1);
  auto y = new_stretched("y", 1);
  CHECK(error_kind([&] { Instance({x, x}, {}); }) ==
        ErrorKind::kInvalidInstance);
  CHECK(error_kind([&] { Instance({x, y}, {{"x", "q"}}); }) ==
        ErrorKind::kInvalidInstance);
  CHECK(error_kind([&] { Instance({x, y}, {{"x", "x"}}); }) ==
        ErrorKind::kInvalidInstance);
  CHECK(error_kind([&] { Instance({x, y}, {{"x", "y"}, {"y", "x"}}); }) ==
        ErrorKind::kInvalidInstance);
  CHECK(error_kind([&] { Instance({x, y}, {}, 0); }) ==
        ErrorKind::kInvalidInstance);
  CHECK(error_kind([&] {
          Instance({x, y}, {}, 1, Partition{{"x"}, {"q"}});
        }) == ErrorKind::kInvalidPartition);
  CHECK(error_kind([&] {
          Instance({x, y}, {}, 1, Partition{{"x"}, {}});
        }) == ErrorKind::kInvalidPartition);
  CHECK(error_kind([&] {
          Instance({x, y}, {}, 1, Partition{{"x", "y"}, {"y"}});
        }) == ErrorKind::kInvalidPartition);
}

TEST_CASE("compatibility_kind") {
  const Instance inst({new_stretched("x", 1), new_stretched("x2", 1),
                       new_stretched("y", 9), new_stretched("w", 1),
                       CoupledTask("g", 1, 2, 1)},
                      {{"x", "x2"}, {"x", "y"}});
  CHECK(compatibility_kind(inst, 0, 1) == CompatibilityKind::kInterleave);
  CHECK(compatibility_kind(inst, 0, 2) == CompatibilityKind::kNestXInY);
  CHECK(compatibility_kind(inst, 2, 0) == CompatibilityKind::kNestYInX);
  CHECK(compatibility_kind(inst, 0, 3) == CompatibilityKind::kIncompatible);
  CHECK(error_kind([&] { compatibility_kind(inst, 0, 4); }) ==
        ErrorKind::kUnsupportedTaskShape);

  // alpha 1 next to alpha 2 can neither interleave nor nest.
  CHECK(error_kind([] {
          Instance({new_stretched("x", 1), new_stretched("y", 2)},
                   {{"x", "y"}});
        }) == ErrorKind::kInvalidInstance);
}

TEST_CASE("classify the tightness instance") {
  const ClassReport r = classify(gen_tightness());
  // X-subgraph is three disjoint edges.
  CHECK_FALSE(r.x_connected);
  CHECK(r.y_independent);
  CHECK(r.cls == InstanceClass::kGeneral);
  CHECK(r.stretch_class_counts.at("X") == 1);
  CHECK(r.stretch_class_counts.at("Y") == 1);
}

TEST_CASE("classify without partition is general") {
  const Instance inst({new_stretched("x", 1)}, {});
  const ClassReport r = classify(inst);
  CHECK(r.cls == InstanceClass::kGeneral);
  CHECK(r.stretch_class_counts.at("all") == 1);
}

TEST_CASE("classify distinguishes quasi-split from complete X") {
  // Triangle on X is complete, hence not quasi-split.
  const Instance tri(
      {new_stretched("x1", 1), new_stretched("x2", 1), new_stretched("x3", 1),
       new_stretched("y", 3)},
      {{"x1", "x2"}, {"x2", "x3"}, {"x1", "x3"}, {"x1", "y"}}, 1,
      Partition{{"x1", "x2", "x3"}, {"y"}});
  ClassReport r = classify(tri);
  CHECK(r.x_connected);
  CHECK(r.x_complete);
  CHECK(r.cls == InstanceClass::kGeneral);

  const Instance path = tri.without_edge(0, 2);
  r = classify(path);
  CHECK_FALSE(r.x_complete);
  CHECK(r.cls == InstanceClass::kQuasiSplit);
  CHECK(r.degree_ranges.at("X") == DegreeRange{1, 2});
  CHECK(r.degree_ranges.at("Y") == DegreeRange{1, 1});
}

TEST_CASE("validate: single task and interleaved pair") {
  const Instance single({new_stretched("t", 1)}, {});
  Schedule s{{{"t", 0}}};
  CHECK(validate(single, s).empty());
  CHECK(makespan(single, s) == 3);

  const auto pair_with_edge = [](bool edge) {
    std::vector<Instance::IdEdge> edges;
    if (edge) edges.emplace_back("x", "y");
    return Instance({new_stretched("x", 1), new_stretched("y", 1)}, edges);
  };
  const Schedule interleaved{{{"x", 0}, {"y", 1}}};
  CHECK(validate(pair_with_edge(true), interleaved).empty());

  const auto v = validate(pair_with_edge(false), interleaved);
  REQUIRE(v.size() == 1);
  CHECK(v[0] == Violation{ViolationKind::kIncompatibleNesting, "x", "y"});
}

TEST_CASE("validate reports overlaps and every violation") {
  const Instance inst({new_stretched("x", 1), new_stretched("y", 1),
                       new_stretched("z", 1)},
                      {});
  const Schedule s{{{"x", 0}, {"y", 0}, {"z", 1}}};
  const auto v = validate(inst, s);
  // x and y collide; z's a sits in both idle windows without an edge.
  CHECK(std::count_if(v.begin(), v.end(), [](const Violation& w) {
          return w.kind == ViolationKind::kOverlap;
        }) == 1);
  CHECK(std::count_if(v.begin(), v.end(), [](const Violation& w) {
          return w.kind == ViolationKind::kIncompatibleNesting;
        }) == 2);
}

TEST_CASE("validate errors on incomplete or foreign schedules") {
  const Instance inst({new_stretched("x", 1), new_stretched("y", 1)}, {});
  CHECK(error_kind([&] { validate(inst, Schedule{{{"x", 0}}}); }) ==
        ErrorKind::kIncompleteSchedule);
  CHECK(error_kind([&] { makespan(inst, Schedule{{{"x", 0}}}); }) ==
        ErrorKind::kIncompleteSchedule);
  CHECK(error_kind([&] {
          validate(inst, Schedule{{{"x", 0}, {"y", 3}, {"q", 9}}});
        }) == ErrorKind::kUnknownTask);
}

TEST_CASE("makespan of stretched patterns") {
  const Instance big({new_stretched("y", 9)}, {});
  CHECK(makespan(big, Schedule{{{"y", 0}}}) == 27);

  // a_x a_y b_x b_y laid end to end: four sub-tasks of length alpha.
  for (Time alpha = 1; alpha <= 6; ++alpha) {
    const Instance inst({new_stretched("x", alpha), new_stretched("y", alpha)},
                        {{"x", "y"}});
    const Schedule s{{{"x", 0}, {"y", alpha}}};
    CHECK(validate(inst, s).empty());
    CHECK(makespan(inst, s) == 4 * alpha);
  }

  // Full nesting leaves the host span unchanged.
  for (Time ay = 3; ay <= 8; ++ay) {
    const Instance inst({new_stretched("x", 1), new_stretched("y", ay)},
                        {{"x", "y"}});
    for (Time offset = 0; offset + 3 <= ay; ++offset) {
      const Schedule s{{{"y", 0}, {"x", ay + offset}}};
      CHECK(validate(inst, s).empty());
      CHECK(makespan(inst, s) == 3 * ay);
    }
  }
}

TEST_CASE("idle_sharing_pairs lists host and guest") {
  const Instance inst({new_stretched("x", 1), new_stretched("y", 1)},
                      {{"x", "y"}});
  const auto pairs = idle_sharing_pairs(inst, Schedule{{{"x", 0}, {"y", 1}}});
  REQUIRE(pairs.size() == 2);
  CHECK(pairs[0] == std::pair<TaskIndex, TaskIndex>{0, 1});
  CHECK(pairs[1] == std::pair<TaskIndex, TaskIndex>{1, 0});
}

// Slot-painting oracle: a unit slot claimed by two sub-tasks is an overlap.
bool painted_overlap(const Instance& inst, const std::vector<Time>& starts) {
  std::vector<int> owner(512, -1);
  for (TaskIndex i = 0; i < inst.size(); ++i) {
    const auto& t = inst.task(i);
    const Time b0 = starts[i] + t.a() + t.idle();
    for (Time k = 0; k < t.a(); ++k) {
      if (owner[starts[i] + k] >= 0) return true;
      owner[starts[i] + k] = static_cast<int>(i);
    }
    for (Time k = 0; k < t.b(); ++k) {
      if (owner[b0 + k] >= 0) return true;
      owner[b0 + k] = static_cast<int>(i);
    }
  }
  return false;
}

TEST_CASE("property: validate against slot painting and machine bounds") {
  std::mt19937_64 rng(20261016);
  std::size_t feasible = 0;
  for (int trial = 0; trial < 4000; ++trial) {
    const std::size_t n = 2 + rng() % 3;
    std::vector<CoupledTask> tasks;
    for (std::size_t i = 0; i < n; ++i) {
      tasks.emplace_back("t" + std::to_string(i), 1 + rng() % 3, rng() % 5,
                         1 + rng() % 3);
    }
    std::vector<Instance::IdEdge> edges;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        // Two stretched tasks may be unable to share at all; skip those.
        const bool both = tasks[i].stretched() && tasks[j].stretched();
        if (rng() % 2 && !both) {
          edges.emplace_back(tasks[i].id(), tasks[j].id());
        }
      }
    }
    const Instance inst(tasks, edges);
    Schedule s;
    std::vector<Time> starts;
    for (const auto& t : tasks) {
      starts.push_back(static_cast<Time>(rng() % 12));
      s.starts[t.id()] = starts.back();
    }
    const auto v = validate(inst, s);
    const bool overlap = std::any_of(v.begin(), v.end(), [](const auto& w) {
      return w.kind == ViolationKind::kOverlap;
    });
    CHECK(overlap == painted_overlap(inst, starts));
    if (v.empty()) {
      ++feasible;
      Time load = 0;
      Time widest = 0;
      for (const auto& t : tasks) {
        load += t.a() + t.b();
        widest = std::max(widest, task_span(t));
      }
      CHECK(makespan(inst, s) >= load);
      CHECK(makespan(inst, s) >= widest);
    }
  }
  CHECK(feasible > 50);
}

}  // namespace
}  // namespace ctsched
