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

// Test-only brute-force oracles. None of these share code with the library
// paths they check.

#ifndef CTSCHED_TESTS_ORACLES_HPP_
#define CTSCHED_TESTS_ORACLES_HPP_

#include <algorithm>
#include <cstdint>
#include <limits>
#include <random>
#include <vector>

#include "ctsched/graphalg.hpp"

namespace ctsched::oracle {

// Largest value over every integral arc assignment that respects capacities
// and conservation. Exponential in the arc count; keep networks tiny.
inline Capacity enumerate_max_flow(const FlowNetwork& net) {
  const auto arcs = net.arcs();
  std::vector<Capacity> flow(arcs.size(), 0);
  Capacity best = 0;
  while (true) {
    std::vector<Capacity> balance(net.num_nodes(), 0);
    for (std::size_t k = 0; k < arcs.size(); ++k) {
      balance[arcs[k].from] -= flow[k];
      balance[arcs[k].to] += flow[k];
    }
    bool conserved = true;
    for (NodeId v = 0; v < net.num_nodes(); ++v) {
      if (v != net.source() && v != net.sink() && balance[v] != 0) {
        conserved = false;
      }
    }
    if (conserved) best = std::max(best, -balance[net.source()]);
    std::size_t k = 0;
    while (k < arcs.size() && flow[k] == arcs[k].capacity) flow[k++] = 0;
    if (k == arcs.size()) break;
    ++flow[k];
  }
  return best;
}

// Minimum s-t cut capacity over all vertex bipartitions.
inline Capacity enumerate_min_cut(const FlowNetwork& net) {
  const std::size_t n = net.num_nodes();
  Capacity best = std::numeric_limits<Capacity>::max();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    if (!(mask >> net.source() & 1) || (mask >> net.sink() & 1)) continue;
    Capacity cut = 0;
    for (const auto& arc : net.arcs()) {
      if ((mask >> arc.from & 1) && !(mask >> arc.to & 1)) cut += arc.capacity;
    }
    best = std::min(best, cut);
  }
  return best;
}

inline CompatibilityGraph random_graph(std::size_t n, double p,
                                       std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  CompatibilityGraph g(n);
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      if (coin(rng)) g.add_edge(u, v);
    }
  }
  return g;
}

// Random network on `nodes` nodes (source 0, sink nodes-1) with at most
// `max_arcs` arcs of capacity 0..max_cap.
inline FlowNetwork random_network(std::size_t nodes, std::size_t max_arcs,
                                  Capacity max_cap, std::mt19937_64& rng) {
  FlowNetwork net(nodes, 0, nodes - 1);
  std::uniform_int_distribution<std::size_t> pick(0, nodes - 1);
  std::uniform_int_distribution<Capacity> cap(0, max_cap);
  std::size_t tries = 0;
  while (net.arcs().size() < max_arcs && tries++ < 10 * max_arcs) {
    const NodeId u = pick(rng);
    const NodeId v = pick(rng);
    if (u == v || v == net.source() || u == net.sink()) continue;
    net.add_arc(u, v, cap(rng));
  }
  return net;
}

}  // namespace ctsched::oracle

#endif  // CTSCHED_TESTS_ORACLES_HPP_
