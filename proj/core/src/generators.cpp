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

#include "ctsched/generators.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "ctsched/error.hpp"

namespace ctsched {

namespace {

std::string numbered(const char* prefix, std::size_t i) {
  return prefix + std::to_string(i + 1);
}

bool coin(std::mt19937_64& rng, std::int64_t num, std::int64_t den) {
  std::uniform_int_distribution<std::int64_t> dist(0, den - 1);
  return dist(rng) < num;
}

}  // namespace

// ---------------------------------------------------------------------------
// 3-dimensional matching

void check_source(const ThreeDMInstance& src) {
  if (src.n == 0) throw Error(ErrorKind::kInvalidSource, "n must be >= 1");
  std::set<std::array<std::size_t, 3>> seen;
  for (const auto& t : src.triples) {
    for (std::size_t e : t) {
      if (e >= src.n) {
        throw Error(ErrorKind::kInvalidSource, "triple element out of range");
      }
    }
    if (!seen.insert(t).second) {
      throw Error(ErrorKind::kInvalidSource, "duplicate triple");
    }
  }
}

bool is_two_occurrence(const ThreeDMInstance& src) {
  std::vector<std::array<int, 3>> count(src.n, {0, 0, 0});
  for (const auto& t : src.triples) {
    for (std::size_t d = 0; d < 3; ++d) ++count[t[d]][d];
  }
  for (const auto& c : count) {
    if (c[0] != 2 || c[1] != 2 || c[2] != 2) return false;
  }
  return src.triples.size() == 2 * src.n;
}

Time ThreeDMGadget::target(std::size_t k) const {
  // eps_den * (63 n - 3 k (1 - eps_num / eps_den))
  return eps_den * 63 * static_cast<Time>(n) -
         3 * static_cast<Time>(k) * (eps_den - eps_num);
}

ThreeDMGadget gen_3dm(const ThreeDMInstance& src, Time eps_num,
                      Time eps_den) {
  if (eps_den < 1 || eps_num < 1 || eps_num >= eps_den) {
    throw Error(ErrorKind::kInvalidParameter, "need 0 < eps < 1");
  }
  check_source(src);
  const char* dims[3] = {"a", "b", "c"};
  std::vector<CoupledTask> tasks;
  Partition part;
  for (std::size_t d = 0; d < 3; ++d) {
    for (std::size_t i = 0; i < src.n; ++i) {
      tasks.push_back(new_stretched(numbered(dims[d], i), eps_den));
      part.x.push_back(tasks.back().id());
    }
  }
  std::vector<Instance::IdEdge> edges;
  for (std::size_t j = 0; j < src.triples.size(); ++j) {
    const std::string box = numbered("t", j);
    const std::string item = box + "'";
    tasks.push_back(new_stretched(box, 9 * eps_den));
    tasks.push_back(new_stretched(item, 2 * eps_den + eps_num));
    part.y.push_back(box);
    part.x.push_back(item);
    for (std::size_t d = 0; d < 3; ++d) {
      edges.emplace_back(numbered(dims[d], src.triples[j][d]), box);
    }
    edges.emplace_back(item, box);
  }
  return ThreeDMGadget{Instance(std::move(tasks), edges, eps_den, part),
                       src.n, eps_num, eps_den};
}

namespace {

std::size_t best_disjoint(const ThreeDMInstance& src, std::size_t from,
                          std::vector<std::array<bool, 3>>& used) {
  if (from == src.triples.size()) return 0;
  std::size_t best = best_disjoint(src, from + 1, used);
  const auto& t = src.triples[from];
  if (!used[t[0]][0] && !used[t[1]][1] && !used[t[2]][2]) {
    for (std::size_t d = 0; d < 3; ++d) used[t[d]][d] = true;
    best = std::max(best, 1 + best_disjoint(src, from + 1, used));
    for (std::size_t d = 0; d < 3; ++d) used[t[d]][d] = false;
  }
  return best;
}

}  // namespace

std::size_t brute_3dm(const ThreeDMInstance& src) {
  if (src.triples.size() > 20) {
    throw Error(ErrorKind::kSizeLimit, "brute_3dm handles at most 20 triples");
  }
  check_source(src);
  std::vector<std::array<bool, 3>> used(src.n, {false, false, false});
  return best_disjoint(src, 0, used);
}

ThreeDMInstance random_3dm2(std::size_t n, std::uint64_t seed) {
  // n = 1 would need the triple (0, 0, 0) twice.
  if (n < 2) throw Error(ErrorKind::kInvalidParameter, "need n >= 2");
  std::mt19937_64 rng(seed);
  std::vector<std::size_t> occurrences;
  for (std::size_t i = 0; i < n; ++i) {
    occurrences.push_back(i);
    occurrences.push_back(i);
  }
  for (int attempt = 0; attempt < 10000; ++attempt) {
    std::array<std::vector<std::size_t>, 3> cols{occurrences, occurrences,
                                                 occurrences};
    for (auto& c : cols) std::shuffle(c.begin(), c.end(), rng);
    ThreeDMInstance src{n, {}};
    std::set<std::array<std::size_t, 3>> seen;
    bool distinct = true;
    for (std::size_t j = 0; j < 2 * n && distinct; ++j) {
      std::array<std::size_t, 3> t{cols[0][j], cols[1][j], cols[2][j]};
      distinct = seen.insert(t).second;
      src.triples.push_back(t);
    }
    if (distinct) return src;
  }
  throw Error(ErrorKind::kInvalidParameter, "could not draw distinct triples");
}

// ---------------------------------------------------------------------------
// Partition into triangles

void check_source(const TripartiteGraph& src) {
  if (src.a.size() != src.b.size() || src.b.size() != src.c.size()) {
    throw Error(ErrorKind::kInvalidSource, "parts must have equal size");
  }
  std::map<std::string, int> part;
  const std::vector<std::string>* parts[3] = {&src.a, &src.b, &src.c};
  for (int p = 0; p < 3; ++p) {
    for (const auto& v : *parts[p]) {
      if (v == "z0" || v == "z1" || v == "z2") {
        throw Error(ErrorKind::kInvalidSource,
                    "vertex name '" + v + "' is reserved");
      }
      if (!part.emplace(v, p).second) {
        throw Error(ErrorKind::kInvalidSource,
                    "vertex '" + v + "' appears twice");
      }
    }
  }
  std::set<std::pair<std::string, std::string>> seen;
  for (const auto& [u, v] : src.edges) {
    auto pu = part.find(u);
    auto pv = part.find(v);
    if (pu == part.end() || pv == part.end()) {
      throw Error(ErrorKind::kInvalidSource,
                  "edge {" + u + ", " + v + "} names an unknown vertex");
    }
    if (pu->second == pv->second) {
      throw Error(ErrorKind::kInvalidSource,
                  "edge {" + u + ", " + v + "} lies inside one part");
    }
    if (!seen.emplace(std::min(u, v), std::max(u, v)).second) {
      throw Error(ErrorKind::kInvalidSource, "duplicate edge");
    }
  }
}

PitGadget gen_pit(const TripartiteGraph& src) {
  check_source(src);
  std::vector<CoupledTask> tasks;
  Partition part;
  for (const auto& v : src.a) tasks.push_back(new_stretched(v, 1));
  for (const auto& v : src.b) tasks.push_back(new_stretched(v, 1));
  tasks.push_back(new_stretched("z0", 1));
  tasks.push_back(new_stretched("z1", 1));
  for (const auto& t : tasks) part.x.push_back(t.id());
  for (const auto& v : src.c) {
    tasks.push_back(new_stretched(v, 4));
    part.y.push_back(v);
  }
  tasks.push_back(new_stretched("z2", 4));
  part.y.push_back("z2");

  std::vector<Instance::IdEdge> edges = src.edges;
  for (const auto& v : src.a) edges.emplace_back("z0", v);
  for (const auto& v : src.b) edges.emplace_back("z1", v);
  edges.emplace_back("z0", "z2");
  edges.emplace_back("z1", "z2");
  edges.emplace_back("z0", "z1");

  const Time target = 12 * static_cast<Time>(src.c.size() + 1);
  return PitGadget{Instance(std::move(tasks), edges, 1, part), target};
}

namespace {

bool cover_triangles(const std::vector<std::vector<bool>>& adj,
                     std::vector<bool>& used) {
  const std::size_t n = adj.size();
  std::size_t u = 0;
  while (u < n && used[u]) ++u;
  if (u == n) return true;
  used[u] = true;
  for (std::size_t v = u + 1; v < n; ++v) {
    if (used[v] || !adj[u][v]) continue;
    for (std::size_t w = v + 1; w < n; ++w) {
      if (used[w] || !adj[u][w] || !adj[v][w]) continue;
      used[v] = used[w] = true;
      if (cover_triangles(adj, used)) return true;
      used[v] = used[w] = false;
    }
  }
  used[u] = false;
  return false;
}

}  // namespace

bool brute_pit(const TripartiteGraph& src) {
  check_source(src);
  std::vector<std::string> names = src.a;
  names.insert(names.end(), src.b.begin(), src.b.end());
  names.insert(names.end(), src.c.begin(), src.c.end());
  if (names.size() > 15) {
    throw Error(ErrorKind::kSizeLimit, "brute_pit handles at most 15 vertices");
  }
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < names.size(); ++i) index[names[i]] = i;
  std::vector<std::vector<bool>> adj(names.size(),
                                     std::vector<bool>(names.size(), false));
  for (const auto& [u, v] : src.edges) {
    adj[index[u]][index[v]] = adj[index[v]][index[u]] = true;
  }
  std::vector<bool> used(names.size(), false);
  return cover_triangles(adj, used);
}

TripartiteGraph random_tripartite(std::size_t q, std::int64_t num,
                                  std::int64_t den, std::uint64_t seed) {
  if (den < 1 || num < 0 || num > den) {
    throw Error(ErrorKind::kInvalidParameter, "density must lie in [0, 1]");
  }
  std::mt19937_64 rng(seed);
  TripartiteGraph g;
  for (std::size_t i = 0; i < q; ++i) {
    g.a.push_back(numbered("a", i));
    g.b.push_back(numbered("b", i));
    g.c.push_back(numbered("c", i));
  }
  auto connect = [&](const std::vector<std::string>& l,
                     const std::vector<std::string>& r) {
    for (const auto& u : l) {
      for (const auto& v : r) {
        if (coin(rng, num, den)) g.edges.emplace_back(u, v);
      }
    }
  };
  connect(g.a, g.b);
  connect(g.a, g.c);
  connect(g.b, g.c);
  return g;
}

// ---------------------------------------------------------------------------
// Tightness and random instances

Instance gen_tightness() {
  std::vector<CoupledTask> tasks;
  for (const char* id : {"x2", "x3", "x5", "x1", "x4", "x6"}) {
    tasks.push_back(new_stretched(id, 1));
  }
  for (const char* id : {"y1", "y2", "y3"}) {
    tasks.push_back(new_stretched(id, 4));
  }
  const std::vector<Instance::IdEdge> edges = {
      {"x2", "y3"}, {"x3", "y1"}, {"x5", "y2"},  // saturated by the flow
      {"x1", "x2"}, {"x3", "x4"}, {"x5", "x6"},  // the three X pairs
      {"x1", "y1"}, {"x2", "y1"}, {"x3", "y2"},
      {"x4", "y2"}, {"x5", "y3"}, {"x6", "y3"},
  };
  Partition part{{"x2", "x3", "x5", "x1", "x4", "x6"}, {"y1", "y2", "y3"}};
  return Instance(std::move(tasks), edges, 1, part);
}

Instance gen_random_quasi_split(const RandomQuasiSplitParams& p) {
  if (p.nx < 3) {
    throw Error(ErrorKind::kInvalidParameter,
                "nx must be >= 3 (two X tasks are always complete)");
  }
  if (p.ny < 1) throw Error(ErrorKind::kInvalidParameter, "ny must be >= 1");
  if (p.alpha_y < 3) {
    throw Error(ErrorKind::kInvalidParameter, "alpha_y must be >= 3");
  }
  if (p.density_den < 1 || p.density_num < 0 ||
      p.density_num > p.density_den) {
    throw Error(ErrorKind::kInvalidParameter, "density must lie in [0, 1]");
  }
  std::mt19937_64 rng(p.seed);
  std::vector<CoupledTask> tasks;
  Partition part;
  for (std::size_t i = 0; i < p.nx; ++i) {
    tasks.push_back(new_stretched(numbered("x", i), 1));
    part.x.push_back(tasks.back().id());
  }
  for (std::size_t j = 0; j < p.ny; ++j) {
    tasks.push_back(new_stretched(numbered("y", j), p.alpha_y));
    part.y.push_back(tasks.back().id());
  }

  // Random spanning tree: attach each vertex of a shuffled order to an
  // earlier one.
  std::vector<std::size_t> order(p.nx);
  for (std::size_t i = 0; i < p.nx; ++i) order[i] = i;
  std::shuffle(order.begin(), order.end(), rng);
  std::set<std::pair<std::size_t, std::size_t>> x_edges;
  std::vector<Instance::IdEdge> edges;
  auto add_x_edge = [&](std::size_t u, std::size_t v) {
    x_edges.emplace(std::min(u, v), std::max(u, v));
    edges.emplace_back(part.x[u], part.x[v]);
  };
  for (std::size_t k = 1; k < p.nx; ++k) {
    std::uniform_int_distribution<std::size_t> pick(0, k - 1);
    add_x_edge(order[pick(rng)], order[k]);
  }
  const std::size_t complete = p.nx * (p.nx - 1) / 2;
  for (std::size_t u = 0; u < p.nx; ++u) {
    for (std::size_t v = u + 1; v < p.nx; ++v) {
      if (x_edges.contains({u, v})) continue;
      if (x_edges.size() + 1 == complete) break;
      if (coin(rng, p.density_num, p.density_den)) add_x_edge(u, v);
    }
  }

  for (std::size_t j = 0; j < p.ny; ++j) {
    bool touched = false;
    for (std::size_t i = 0; i < p.nx; ++i) {
      if (coin(rng, p.density_num, p.density_den)) {
        edges.emplace_back(part.x[i], part.y[j]);
        touched = true;
      }
    }
    if (!touched) {
      std::uniform_int_distribution<std::size_t> pick(0, p.nx - 1);
      edges.emplace_back(part.x[pick(rng)], part.y[j]);
    }
  }
  return Instance(std::move(tasks), edges, 1, part);
}

}  // namespace ctsched
