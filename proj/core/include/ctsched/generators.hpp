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

// Instance constructors: the 3-dimensional-matching and triangle-partition
// reduction gadgets, the worst-case instance of the approximation, and
// seeded random corpora. Brute-force solvers for the two source problems live
// here as well.

#ifndef CTSCHED_GENERATORS_HPP_
#define CTSCHED_GENERATORS_HPP_

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "ctsched/model.hpp"

namespace ctsched {

// Elements of each dimension are 0..n-1; triple = (a, b, c).
struct ThreeDMInstance {
  std::size_t n = 0;
  std::vector<std::array<std::size_t, 3>> triples;
};

// Throws kInvalidSource on out-of-range elements or duplicate triples.
void check_source(const ThreeDMInstance& src);

// Every element occurs in exactly two triples (so m = 2n).
bool is_two_occurrence(const ThreeDMInstance& src);

struct ThreeDMGadget {
  Instance instance;
  std::size_t n = 0;
  Time eps_num = 1;
  Time eps_den = 3;

  // 63n - 3k(1 - eps), multiplied by the instance scale eps_den.
  Time target(std::size_t k) const;
};

// Element tasks "a<i>", "b<i>", "c<i>" with stretch 1, one box task "t<j>"
// with stretch 9 and one item task "t<j>'" with stretch 2 + eps per triple;
// all stretches multiplied by eps_den. Throws kInvalidParameter unless
// 0 < eps_num / eps_den < 1.
ThreeDMGadget gen_3dm(const ThreeDMInstance& src, Time eps_num = 1,
                      Time eps_den = 3);

// Maximum number of pairwise disjoint triples. Throws kSizeLimit for more
// than 20 triples.
std::size_t brute_3dm(const ThreeDMInstance& src);

// Random source where every element occurs exactly twice; distinct triples.
ThreeDMInstance random_3dm2(std::size_t n, std::uint64_t seed);

struct TripartiteGraph {
  std::vector<std::string> a;
  std::vector<std::string> b;
  std::vector<std::string> c;
  std::vector<std::pair<std::string, std::string>> edges;
};

// Throws kInvalidSource unless the parts have equal size, vertex names are
// unique (and not z0/z1/z2), and every edge joins two different parts.
void check_source(const TripartiteGraph& src);

struct PitGadget {
  Instance instance;
  Time target = 0;  // 12 (|C| + 1)
};

PitGadget gen_pit(const TripartiteGraph& src);

// True iff the vertices split into vertex-disjoint triangles. At most 15
// vertices (kSizeLimit).
bool brute_pit(const TripartiteGraph& src);

// Parts of size q; each A-B, A-C, B-C pair is an edge with probability
// num/den.
TripartiteGraph random_tripartite(std::size_t q, std::int64_t num,
                                  std::int64_t den, std::uint64_t seed);

// Six X tasks (stretch 1) forming three matched pairs and three Y tasks
// (stretch 4). Declaration order makes the flow nest x2 -> y3, x3 -> y1,
// x5 -> y2, which strands one member of every pair.
Instance gen_tightness();

struct RandomQuasiSplitParams {
  std::size_t nx = 4;
  std::size_t ny = 2;
  Time alpha_y = 4;
  std::int64_t density_num = 1;
  std::int64_t density_den = 2;
  std::uint64_t seed = 0;
};

// X tasks "x1".."xN" (stretch 1) on a random spanning tree plus extra edges
// (kept non-complete), Y tasks "y1".."yM" (stretch alpha_y), random X-Y edges
// with every Y task touched at least once. Passes classify == quasi-split.
// Throws kInvalidParameter for nx < 3, ny < 1, alpha_y < 3 or a density
// outside [0, 1].
Instance gen_random_quasi_split(const RandomQuasiSplitParams& params);

}  // namespace ctsched

#endif  // CTSCHED_GENERATORS_HPP_
