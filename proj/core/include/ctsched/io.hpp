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

// JSON file formats.
//
// Instance:
//   {"scale": 1,
//    "tasks": [{"id": "x1", "alpha": 1}, {"id": "g", "a": 2, "L": 0, "b": 1}],
//    "edges": [["x1", "g"]],
//    "partition": {"x": ["x1"], "y": ["g"]}}          (partition optional)
// Schedule:
//   {"instance_hash": "<16 hex digits>", "starts": {"x1": 0, "g": 3}}
// 3DM source (elements 0-based per dimension):
//   {"n": 2, "triples": [[0, 0, 0], [1, 1, 1]]}
// Tripartite source:
//   {"parts": {"A": ["a1"], "B": ["b1"], "C": ["c1"]},
//    "edges": [["a1", "b1"]]}
//
// Serializers emit a canonical form (two-space indent, fixed key order,
// trailing newline); parsing a canonical file and serializing it again is
// byte-identical. Parsers throw Error(kParseError) naming the offending line
// or field.

#ifndef CTSCHED_IO_HPP_
#define CTSCHED_IO_HPP_

#include <string>
#include <string_view>

#include "ctsched/generators.hpp"
#include "ctsched/model.hpp"

namespace ctsched {

Instance parse_instance(std::string_view text);
std::string serialize_instance(const Instance& inst);

// FNV-1a 64 of the canonical instance text, as 16 lowercase hex digits.
std::string instance_hash(const Instance& inst);

struct ScheduleFile {
  std::string instance_hash;
  Schedule schedule;
};

ScheduleFile parse_schedule(std::string_view text);
std::string serialize_schedule(const Instance& inst, const Schedule& s);

ThreeDMInstance parse_3dm(std::string_view text);
std::string serialize_3dm(const ThreeDMInstance& src);

TripartiteGraph parse_tripartite(std::string_view text);
std::string serialize_tripartite(const TripartiteGraph& src);

}  // namespace ctsched

#endif  // CTSCHED_IO_HPP_
