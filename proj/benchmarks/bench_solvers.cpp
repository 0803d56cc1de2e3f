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

#include <random>

#include <benchmark/benchmark.h>

#include "ctsched/approx.hpp"
#include "ctsched/exact.hpp"
#include "ctsched/generators.hpp"
#include "ctsched/graphalg.hpp"

namespace ctsched {
namespace {

Instance corpus_instance(std::size_t nx, std::uint64_t seed) {
  return gen_random_quasi_split({nx, 3, 12, 1, 2, seed});
}

void BM_ApproxSolve(benchmark::State& state) {
  const Instance inst =
      corpus_instance(static_cast<std::size_t>(state.range(0)), 17);
  for (auto _ : state) {
    benchmark::DoNotOptimize(approx_solve(inst).bound_value);
  }
}
BENCHMARK(BM_ApproxSolve)->RangeMultiplier(2)->Range(4, 256);

void BM_ExactOptimum(benchmark::State& state) {
  const Instance inst =
      corpus_instance(static_cast<std::size_t>(state.range(0)), 17);
  std::uint64_t nodes = 0;
  for (auto _ : state) {
    const ExactSolution sol = exact_optimum(inst);
    nodes = sol.nodes;
    benchmark::DoNotOptimize(sol.optimum);
  }
  state.counters["nodes"] = static_cast<double>(nodes);
}
BENCHMARK(BM_ExactOptimum)->DenseRange(4, 16, 4);

void BM_MaxFlowNesting(benchmark::State& state) {
  const NestingNetwork nn = build_network(normalize(
      corpus_instance(static_cast<std::size_t>(state.range(0)), 5)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(max_flow(nn.network).value);
  }
}
BENCHMARK(BM_MaxFlowNesting)->RangeMultiplier(4)->Range(16, 1024);

void BM_MaxMatching(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(9);
  CompatibilityGraph g(n);
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      if (rng() % 8 == 0) g.add_edge(u, v);
    }
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(max_matching(g).size());
  }
}
BENCHMARK(BM_MaxMatching)->RangeMultiplier(4)->Range(16, 1024);

}  // namespace
}  // namespace ctsched

BENCHMARK_MAIN();
