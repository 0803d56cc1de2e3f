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

#include "ctsched/graphalg.hpp"

#include <algorithm>
#include <cassert>
#include <limits>
#include <queue>

#include "ctsched/error.hpp"

namespace ctsched {

FlowNetwork::FlowNetwork(std::size_t num_nodes, NodeId source, NodeId sink)
    : num_nodes_(num_nodes), source_(source), sink_(sink) {
  if (source >= num_nodes || sink >= num_nodes || source == sink) {
    throw Error(ErrorKind::kInvalidParameter,
                "source and sink must be distinct existing nodes");
  }
}

NodeId FlowNetwork::add_node() { return num_nodes_++; }

std::size_t FlowNetwork::add_arc(NodeId from, NodeId to, Capacity capacity) {
  if (from >= num_nodes_ || to >= num_nodes_ || from == to) {
    throw Error(ErrorKind::kInvalidParameter, "bad arc endpoints");
  }
  if (to == source_ || from == sink_) {
    throw Error(ErrorKind::kInvalidParameter,
                "arcs may not enter the source or leave the sink");
  }
  if (capacity < 0) {
    throw Error(ErrorKind::kInvalidParameter, "negative capacity");
  }
  arcs_.push_back({from, to, capacity});
  return arcs_.size() - 1;
}

namespace {

// Residual graph: arc 2k is the forward copy of network arc k, 2k+1 its
// reverse.
class Dinic {
 public:
  explicit Dinic(const FlowNetwork& net)
      : net_(net),
        residual_(2 * net.arcs().size()),
        incident_(net.num_nodes()),
        level_(net.num_nodes()),
        next_(net.num_nodes()) {
    for (std::size_t k = 0; k < net.arcs().size(); ++k) {
      const auto& arc = net.arcs()[k];
      residual_[2 * k] = arc.capacity;
      residual_[2 * k + 1] = 0;
      incident_[arc.from].push_back(2 * k);
      incident_[arc.to].push_back(2 * k + 1);
    }
  }

  FlowResult run() {
    Capacity value = 0;
    while (build_levels()) {
      std::fill(next_.begin(), next_.end(), 0);
      while (Capacity pushed = augment(net_.source(),
                                       std::numeric_limits<Capacity>::max())) {
        value += pushed;
      }
    }
    FlowResult result;
    result.value = value;
    result.arc_flows.resize(net_.arcs().size());
    for (std::size_t k = 0; k < net_.arcs().size(); ++k) {
      result.arc_flows[k] = residual_[2 * k + 1];
    }
    return result;
  }

 private:
  NodeId head(std::size_t r) const {
    const auto& arc = net_.arcs()[r / 2];
    return r % 2 == 0 ? arc.to : arc.from;
  }

  bool build_levels() {
    std::fill(level_.begin(), level_.end(), -1);
    std::queue<NodeId> queue;
    level_[net_.source()] = 0;
    queue.push(net_.source());
    while (!queue.empty()) {
      NodeId u = queue.front();
      queue.pop();
      for (std::size_t r : incident_[u]) {
        NodeId v = head(r);
        if (residual_[r] > 0 && level_[v] < 0) {
          level_[v] = level_[u] + 1;
          queue.push(v);
        }
      }
    }
    return level_[net_.sink()] >= 0;
  }

  Capacity augment(NodeId u, Capacity limit) {
    if (u == net_.sink()) return limit;
    for (auto& i = next_[u]; i < incident_[u].size(); ++i) {
      std::size_t r = incident_[u][i];
      NodeId v = head(r);
      if (residual_[r] <= 0 || level_[v] != level_[u] + 1) continue;
      if (Capacity pushed = augment(v, std::min(limit, residual_[r]))) {
        residual_[r] -= pushed;
        residual_[r ^ 1] += pushed;
        return pushed;
      }
    }
    return 0;
  }

  const FlowNetwork& net_;
  std::vector<Capacity> residual_;
  std::vector<std::vector<std::size_t>> incident_;
  std::vector<int> level_;
  std::vector<std::size_t> next_;
};

}  // namespace

FlowResult max_flow(const FlowNetwork& net) {
  FlowResult result = Dinic(net).run();
  assert(!flow_invariant_violation(net, result));
  return result;
}

std::optional<std::string> flow_invariant_violation(const FlowNetwork& net,
                                                    const FlowResult& result) {
  const auto arcs = net.arcs();
  if (result.arc_flows.size() != arcs.size()) {
    return "arc flow vector has the wrong length";
  }
  std::vector<Capacity> balance(net.num_nodes(), 0);
  for (std::size_t k = 0; k < arcs.size(); ++k) {
    const Capacity f = result.arc_flows[k];
    if (f < 0 || f > arcs[k].capacity) {
      return "flow on arc " + std::to_string(k) + " outside [0, capacity]";
    }
    balance[arcs[k].from] -= f;
    balance[arcs[k].to] += f;
  }
  for (NodeId v = 0; v < net.num_nodes(); ++v) {
    if (v != net.source() && v != net.sink() && balance[v] != 0) {
      return "conservation broken at node " + std::to_string(v);
    }
  }
  if (-balance[net.source()] != result.value) {
    return "value differs from net outflow of the source";
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Matching

namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

class Blossom {
 public:
  explicit Blossom(const CompatibilityGraph& g)
      : g_(g),
        n_(g.num_vertices()),
        match_(n_, kNone),
        parent_(n_),
        base_(n_),
        used_(n_),
        in_blossom_(n_) {}

  std::vector<std::size_t> run() {
    for (std::size_t root = 0; root < n_; ++root) {
      if (match_[root] != kNone) continue;
      std::size_t v = find_path(root);
      while (v != kNone) {
        std::size_t pv = parent_[v];
        std::size_t ppv = match_[pv];
        match_[v] = pv;
        match_[pv] = v;
        v = ppv;
      }
    }
    return match_;
  }

 private:
  std::size_t lowest_common_base(std::size_t a, std::size_t b) {
    std::vector<bool> seen(n_, false);
    while (true) {
      a = base_[a];
      seen[a] = true;
      if (match_[a] == kNone) break;
      a = parent_[match_[a]];
    }
    while (true) {
      b = base_[b];
      if (seen[b]) return b;
      b = parent_[match_[b]];
    }
  }

  void mark_path(std::size_t v, std::size_t b, std::size_t child) {
    while (base_[v] != b) {
      in_blossom_[base_[v]] = true;
      in_blossom_[base_[match_[v]]] = true;
      parent_[v] = child;
      child = match_[v];
      v = parent_[match_[v]];
    }
  }

  // BFS over alternating paths from `root`; returns the free vertex ending an
  // augmenting path, or kNone.
  std::size_t find_path(std::size_t root) {
    std::fill(used_.begin(), used_.end(), false);
    std::fill(parent_.begin(), parent_.end(), kNone);
    for (std::size_t i = 0; i < n_; ++i) base_[i] = i;
    used_[root] = true;
    std::queue<std::size_t> queue;
    queue.push(root);
    while (!queue.empty()) {
      std::size_t v = queue.front();
      queue.pop();
      for (std::size_t to : g_.neighbors(v)) {
        if (base_[v] == base_[to] || match_[v] == to) continue;
        if (to == root ||
            (match_[to] != kNone && parent_[match_[to]] != kNone)) {
          std::size_t current = lowest_common_base(v, to);
          std::fill(in_blossom_.begin(), in_blossom_.end(), false);
          mark_path(v, current, to);
          mark_path(to, current, v);
          for (std::size_t i = 0; i < n_; ++i) {
            if (in_blossom_[base_[i]]) {
              base_[i] = current;
              if (!used_[i]) {
                used_[i] = true;
                queue.push(i);
              }
            }
          }
        } else if (parent_[to] == kNone) {
          parent_[to] = v;
          if (match_[to] == kNone) return to;
          used_[match_[to]] = true;
          queue.push(match_[to]);
        }
      }
    }
    return kNone;
  }

  const CompatibilityGraph& g_;
  std::size_t n_;
  std::vector<std::size_t> match_;
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> base_;
  std::vector<bool> used_;
  std::vector<bool> in_blossom_;
};

std::size_t brute_from(const std::vector<std::vector<bool>>& adj,
                       std::vector<bool>& taken, std::size_t v) {
  const std::size_t n = adj.size();
  while (v < n && taken[v]) ++v;
  if (v == n) return 0;
  taken[v] = true;
  // v stays unmatched.
  std::size_t best = brute_from(adj, taken, v + 1);
  for (std::size_t w = v + 1; w < n; ++w) {
    if (!taken[w] && adj[v][w]) {
      taken[w] = true;
      best = std::max(best, 1 + brute_from(adj, taken, v + 1));
      taken[w] = false;
    }
  }
  taken[v] = false;
  return best;
}

}  // namespace

MatchingResult max_matching(const CompatibilityGraph& g) {
  const auto mate = Blossom(g).run();
  MatchingResult result;
  for (std::size_t v = 0; v < mate.size(); ++v) {
    if (mate[v] != kNone && v < mate[v]) result.edges.push_back({v, mate[v]});
  }
  return result;
}

std::size_t brute_matching(const CompatibilityGraph& g) {
  constexpr std::size_t kMaxVertices = 16;
  const std::size_t n = g.num_vertices();
  if (n > kMaxVertices) {
    throw Error(ErrorKind::kSizeLimit,
                "brute_matching supports at most 16 vertices");
  }
  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
  for (const auto& e : g.edges()) {
    adj[e.u][e.v] = true;
    adj[e.v][e.u] = true;
  }
  std::vector<bool> taken(n, false);
  return brute_from(adj, taken, 0);
}

}  // namespace ctsched
