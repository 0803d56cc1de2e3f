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

// Acceptance gate. Prints one PASS/FAIL line per criterion and exits
// non-zero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "ctsched/approx.hpp"
#include "ctsched/exact.hpp"
#include "ctsched/generators.hpp"
#include "ctsched/graphalg.hpp"
#include "oracles.hpp"

namespace ctsched {
namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Collects the first few failures of a criterion.
class Tally {
 public:
  void expect(bool ok, const std::string& what) {
    ++checks_;
    if (ok) return;
    ++failures_;
    if (failures_ <= 3) first_ += (first_.empty() ? "" : "; ") + what;
  }
  std::size_t checks() const { return checks_; }
  Outcome outcome(const std::string& summary) const {
    if (failures_ == 0) return {true, summary};
    return {false, std::to_string(failures_) + " failures: " + first_};
  }

 private:
  std::size_t checks_ = 0;
  std::size_t failures_ = 0;
  std::string first_;
};

Time y_load(const Instance& inst) {
  Time sum = 0;
  for (TaskIndex y : inst.y_tasks()) sum += 3 * *inst.task(y).alpha();
  return sum;
}

// Every edge a schedule actually uses must be essential: deleting it makes
// validate fail. Returns the number of mutations tried.
std::size_t check_edge_deletions(const Instance& inst, const Schedule& s,
                                 Tally& t, const std::string& label) {
  std::size_t tried = 0;
  for (const auto& [host, guest] : idle_sharing_pairs(inst, s)) {
    const Instance cut = inst.without_edge(host, guest);
    ++tried;
    t.expect(!validate(cut, s).empty(),
             label + ": deleting {" + inst.task(host).id() + ", " +
                 inst.task(guest).id() + "} kept the schedule valid");
  }
  return tried;
}

Outcome tightness() {
  const Instance inst = gen_tightness();
  const ExactSolution exact = exact_optimum(inst);
  const ApproxSolution approx = approx_solve(inst);
  Tally t;
  t.expect(exact.optimum == 36, "exact " + std::to_string(exact.optimum));
  t.expect(approx.bound_value == 45,
           "approx " + std::to_string(approx.bound_value));
  t.expect(makespan(inst, exact.schedule) == 36, "exact schedule makespan");
  t.expect(makespan(inst, approx.schedule) == 45, "approx schedule makespan");
  t.expect(4 * approx.bound_value == 5 * exact.optimum, "ratio is not 5/4");
  return t.outcome("exact 36, approx 45, ratio 5/4");
}

Outcome ratio_suite() {
  Tally t;
  std::size_t instances = 0;
  std::size_t tight = 0;
  std::uint64_t seed = 1000;
  for (std::size_t nx = 3; nx <= 10; ++nx) {
    for (std::size_t ny = 1; ny <= 3; ++ny) {
      for (Time alpha_y = 3; alpha_y <= 12; ++alpha_y) {
        for (std::int64_t density = 1; density <= 3; ++density) {
          const Instance inst = gen_random_quasi_split(
              {nx, ny, alpha_y, density, 4, seed++});
          const std::string label = "seed " + std::to_string(seed - 1);
          ++instances;
          t.expect(classify(inst).cls == InstanceClass::kQuasiSplit,
                   label + " not quasi-split");
          const ApproxSolution a = approx_solve(inst);
          const ExactSolution e = exact_optimum(inst);
          t.expect(2 * a.m + a.s + a.f == nx, label + " 2m+s+f != |X|");
          t.expect(makespan(inst, a.schedule) ==
                       y_load(inst) + static_cast<Time>(4 * a.m + 3 * a.s),
                   label + " makespan != sum 3a(y) + 4m + 3s");
          t.expect(a.bound_value == makespan(inst, a.schedule),
                   label + " reported bound differs from schedule");
          t.expect(4 * a.bound_value <= 5 * e.optimum,
                   label + " ratio above 5/4");
          t.expect(e.optimum <= a.bound_value, label + " exact above approx");
          if (4 * a.bound_value == 5 * e.optimum) ++tight;
        }
      }
    }
  }
  return t.outcome(std::to_string(instances) + " instances, " +
                   std::to_string(tight) + " at exactly 5/4");
}

Outcome matching_gadget() {
  Tally t;
  std::size_t sources = 0;
  for (std::uint64_t seed = 0; seed < 24; ++seed) {
    const ThreeDMInstance src = random_3dm2(2 + seed % 2, seed);
    const ThreeDMGadget g = gen_3dm(src, 1, 3);
    const std::size_t k = brute_3dm(src);
    const Time opt = exact_optimum(g.instance).optimum;
    ++sources;
    t.expect(opt == g.target(k), "seed " + std::to_string(seed) + ": " +
                                     std::to_string(opt) + " vs target " +
                                     std::to_string(g.target(k)));
  }
  const ThreeDMInstance four{2, {{0, 0, 0}, {0, 1, 1}, {1, 0, 1}, {1, 1, 0}}};
  const ThreeDMGadget g = gen_3dm(four, 1, 3);
  t.expect(exact_optimum(g.instance).optimum == g.target(brute_3dm(four)),
           "four-triple example");
  return t.outcome(std::to_string(sources + 1) + " sources");
}

Outcome triangle_gadget() {
  Tally t;
  std::size_t yes = 0;
  std::size_t no = 0;
  std::uint64_t seed = 0;
  for (std::size_t q = 1; q <= 3; ++q) {
    for (std::int64_t num = 1; num <= 4; ++num) {
      for (int rep = 0; rep < 5; ++rep, ++seed) {
        const TripartiteGraph src = random_tripartite(q, num, 4, seed);
        const PitGadget g = gen_pit(src);
        const bool partition = brute_pit(src);
        const bool at_target = exact_optimum(g.instance).optimum == g.target;
        (partition ? yes : no) += 1;
        t.expect(partition == at_target,
                 "seed " + std::to_string(seed) + " q " + std::to_string(q));
      }
    }
  }
  t.expect(yes > 0 && no > 0, "corpus lacks one of the two outcomes");
  return t.outcome(std::to_string(yes + no) + " sources (" +
                   std::to_string(yes) + " with a partition)");
}

// Small instances with the nesting structure the exact solver accepts:
// X stretch in {1, 2}, one Y stretch class, X-X edges between equal stretch,
// X-Y edges only where x fits three times into y.
Instance small_nesting_instance(std::mt19937_64& rng) {
  const std::size_t n = 2 + rng() % 5;  // 2..6 tasks
  const std::size_t ny = 1 + rng() % std::min<std::size_t>(2, n - 1);
  const Time alpha_y = 3 + static_cast<Time>(rng() % 8);
  std::vector<CoupledTask> tasks;
  Partition part;
  for (std::size_t i = 0; i + ny < n; ++i) {
    const std::string id = "x" + std::to_string(i);
    tasks.push_back(new_stretched(id, 1 + static_cast<Time>(rng() % 2)));
    part.x.push_back(id);
  }
  for (std::size_t j = 0; j < ny; ++j) {
    const std::string id = "y" + std::to_string(j);
    tasks.push_back(new_stretched(id, alpha_y));
    part.y.push_back(id);
  }
  std::vector<Instance::IdEdge> edges;
  const std::size_t nx = n - ny;
  for (std::size_t u = 0; u < nx; ++u) {
    for (std::size_t v = u + 1; v < nx; ++v) {
      if (tasks[u].alpha() == tasks[v].alpha() && rng() % 3 != 0) {
        edges.emplace_back(tasks[u].id(), tasks[v].id());
      }
    }
    for (std::size_t j = nx; j < n; ++j) {
      if (3 * *tasks[u].alpha() <= alpha_y && rng() % 3 != 0) {
        edges.emplace_back(tasks[u].id(), tasks[j].id());
      }
    }
  }
  return Instance(std::move(tasks), edges, 1, std::move(part));
}

Outcome oracle_agreement() {
  Tally t;
  std::mt19937_64 rng(2026);
  std::size_t samples = 0;
  for (int k = 0; k < 150; ++k) {
    const Instance inst = small_nesting_instance(rng);
    const Time exact = exact_optimum(inst).optimum;
    const Time oracle = timeline_oracle(inst);
    ++samples;
    t.expect(exact == oracle, "sample " + std::to_string(k) + ": exact " +
                                  std::to_string(exact) + ", oracle " +
                                  std::to_string(oracle));
  }
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const Instance inst = gen_random_quasi_split(
        {3 + seed % 3, 1, 3 + static_cast<Time>(seed % 10), 1, 2, seed});
    ++samples;
    t.expect(exact_optimum(inst).optimum == timeline_oracle(inst),
             "quasi-split seed " + std::to_string(seed));
  }
  t.expect(exact_optimum(gen_tightness()).optimum == 36, "tightness");
  return t.outcome(std::to_string(samples) + " samples");
}

Outcome matching_engine() {
  Tally t;
  std::mt19937_64 rng(500);
  std::size_t graphs = 0;
  for (int k = 0; k < 600; ++k) {
    const std::size_t n = 1 + rng() % 10;
    const double p = 0.1 + 0.1 * static_cast<double>(rng() % 8);
    const CompatibilityGraph g = oracle::random_graph(n, p, rng);
    ++graphs;
    t.expect(max_matching(g).size() == brute_matching(g),
             "graph " + std::to_string(k));
  }
  std::size_t flows = 0;
  for (int k = 0; k < 300; ++k) {
    const FlowNetwork net =
        oracle::random_network(3 + rng() % 10, 20, 4, rng);
    const FlowResult r = max_flow(net);
    ++flows;
    const auto bad = flow_invariant_violation(net, r);
    t.expect(!bad, "random network: " + bad.value_or(""));
  }
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const Instance inst = gen_random_quasi_split(
        {3 + seed % 8, 1 + seed % 3, 3 + static_cast<Time>(seed % 10), 1, 2,
         seed});
    const NestingNetwork nn = build_network(normalize(inst));
    const FlowResult r = max_flow(nn.network);
    ++flows;
    const auto bad = flow_invariant_violation(nn.network, r);
    t.expect(!bad, "nesting network: " + bad.value_or(""));
  }
  return t.outcome(std::to_string(graphs) + " graphs, " +
                   std::to_string(flows) + " flow runs checked");
}

Outcome validator_soundness() {
  Tally t;
  std::size_t schedules = 0;
  std::size_t mutations = 0;
  const auto check = [&](const Instance& inst, const Schedule& s,
                         const std::string& label) {
    ++schedules;
    t.expect(validate(inst, s).empty(), label + " invalid schedule");
    mutations += check_edge_deletions(inst, s, t, label);
  };
  const Instance tight = gen_tightness();
  check(tight, approx_solve(tight).schedule, "tightness approx");
  check(tight, exact_optimum(tight).schedule, "tightness exact");
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const Instance inst = gen_random_quasi_split(
        {3 + seed % 8, 1 + seed % 3, 3 + static_cast<Time>(seed % 10), 1, 2,
         seed});
    const std::string label = "seed " + std::to_string(seed);
    check(inst, approx_solve(inst).schedule, label + " approx");
    check(inst, exact_optimum(inst).schedule, label + " exact");
  }
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const Instance inst = gen_3dm(random_3dm2(2 + seed % 2, seed)).instance;
    check(inst, exact_optimum(inst).schedule, "3dm " + std::to_string(seed));
  }
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const Instance inst = gen_pit(random_tripartite(2, 1, 2, seed)).instance;
    check(inst, exact_optimum(inst).schedule, "pit " + std::to_string(seed));
  }
  t.expect(mutations > 0, "no schedule used a compatibility edge");
  return t.outcome(std::to_string(schedules) + " schedules, " +
                   std::to_string(mutations) + " edge deletions rejected");
}

struct Criterion {
  const char* name;
  double budget_seconds;  // 0 means no limit
  std::function<Outcome()> run;
};

}  // namespace
}  // namespace ctsched

int main() {
  using namespace ctsched;
  const std::vector<Criterion> criteria = {
      {"tightness reproduction", 1.0, tightness},
      {"ratio property suite", 120.0, ratio_suite},
      {"3DM gadget equivalence", 60.0, matching_gadget},
      {"triangle gadget equivalence", 60.0, triangle_gadget},
      {"exact vs timeline oracle", 0.0, oracle_agreement},
      {"matching engine and flow invariants", 0.0, matching_engine},
      {"validator soundness", 0.0, validator_soundness},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const Criterion& c = criteria[i];
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(
                            std::chrono::steady_clock::now() - start)
                            .count();
    if (c.budget_seconds > 0 && secs > c.budget_seconds) {
      o.pass = false;
      o.detail += "; over the " + std::to_string(c.budget_seconds) +
                  " s budget";
    }
    std::printf("%s %zu. %s (%.3f s): %s\n", o.pass ? "PASS" : "FAIL", i + 1,
                c.name, secs, o.detail.c_str());
    failed += o.pass ? 0 : 1;
  }
  std::fflush(stdout);
  return failed == 0 ? 0 : 1;
}
