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

// Integral maximum flow (layered augmentation) and maximum-cardinality
// matching on general graphs (Edmonds' blossom contraction). Both are
// deterministic in the insertion order of their input.

#ifndef CTSCHED_GRAPHALG_HPP_
#define CTSCHED_GRAPHALG_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ctsched/model.hpp"

namespace ctsched {

using NodeId = std::size_t;
using Capacity = std::int64_t;

struct FlowArc {
  NodeId from;
  NodeId to;
  Capacity capacity;
};

class FlowNetwork {
 public:
  // Nodes are 0..num_nodes-1; more can be appended with add_node.
  FlowNetwork(std::size_t num_nodes, NodeId source, NodeId sink);

  NodeId add_node();
  // Returns the arc index. Rejects arcs into the source, out of the sink,
  // self-loops and negative capacities with kInvalidParameter.
  std::size_t add_arc(NodeId from, NodeId to, Capacity capacity);

  std::size_t num_nodes() const { return num_nodes_; }
  NodeId source() const { return source_; }
  NodeId sink() const { return sink_; }
  std::span<const FlowArc> arcs() const { return arcs_; }

 private:
  std::size_t num_nodes_;
  NodeId source_;
  NodeId sink_;
  std::vector<FlowArc> arcs_;
};

struct FlowResult {
  Capacity value = 0;
  std::vector<Capacity> arc_flows;  // indexed like FlowNetwork::arcs()
};

// Dinic's algorithm. Within a phase, each node scans its incident residual
// arcs in insertion order, so the lowest-index arc wins ties.
FlowResult max_flow(const FlowNetwork& net);

// Describes the first broken FlowResult invariant (capacity bounds,
// conservation, value = net outflow of the source), if any.
std::optional<std::string> flow_invariant_violation(const FlowNetwork& net,
                                                    const FlowResult& result);

struct MatchingResult {
  std::vector<Edge> edges;
  std::size_t size() const { return edges.size(); }
};

// Maximum-cardinality matching on a general simple graph. Roots are grown in
// vertex order and neighbours scanned in adjacency order.
MatchingResult max_matching(const CompatibilityGraph& g);

// Exhaustive maximum matching size, for graphs with at most 16 vertices.
// Throws kSizeLimit beyond that.
std::size_t brute_matching(const CompatibilityGraph& g);

}  // namespace ctsched

#endif  // CTSCHED_GRAPHALG_HPP_
