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

#include "ctsched/io.hpp"

#include <cstdint>
#include <cstdio>
#include <initializer_list>

#include <nlohmann/json.hpp>

#include "ctsched/error.hpp"

namespace ctsched {

namespace {

using json = nlohmann::ordered_json;

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw Error(ErrorKind::kParseError, where + ": " + what);
}

json parse_text(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    // nlohmann reports "at line L, column C" in its message.
    throw Error(ErrorKind::kParseError, e.what());
  }
}

const json& field(const json& obj, const std::string& where,
                  const char* key) {
  if (!obj.is_object()) fail(where, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) fail(where, std::string("missing field '") + key + "'");
  return *it;
}

void only_keys(const json& obj, const std::string& where,
               std::initializer_list<const char*> allowed) {
  for (const auto& [key, value] : obj.items()) {
    bool ok = false;
    for (const char* a : allowed) ok = ok || key == a;
    if (!ok) fail(where, "unexpected field '" + key + "'");
  }
}

std::int64_t integer(const json& v, const std::string& where,
                     std::int64_t min) {
  if (!v.is_number_integer()) fail(where, "expected an integer");
  const auto x = v.get<std::int64_t>();
  if (x < min) fail(where, "must be >= " + std::to_string(min));
  return x;
}

std::string string_at(const json& v, const std::string& where) {
  if (!v.is_string()) fail(where, "expected a string");
  return v.get<std::string>();
}

const json& array_at(const json& v, const std::string& where) {
  if (!v.is_array()) fail(where, "expected an array");
  return v;
}

std::vector<std::string> string_list(const json& v, const std::string& where) {
  std::vector<std::string> out;
  const json& arr = array_at(v, where);
  for (std::size_t i = 0; i < arr.size(); ++i) {
    out.push_back(string_at(arr[i], where + "[" + std::to_string(i) + "]"));
  }
  return out;
}

std::vector<std::pair<std::string, std::string>> id_pairs(
    const json& v, const std::string& where) {
  std::vector<std::pair<std::string, std::string>> out;
  const json& arr = array_at(v, where);
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const std::string at = where + "[" + std::to_string(i) + "]";
    if (!arr[i].is_array() || arr[i].size() != 2) {
      fail(at, "expected a pair [u, v]");
    }
    out.emplace_back(string_at(arr[i][0], at + "[0]"),
                     string_at(arr[i][1], at + "[1]"));
  }
  return out;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

json instance_json(const Instance& inst) {
  json tasks = json::array();
  for (const auto& t : inst.tasks()) {
    json jt;
    jt["id"] = t.id();
    if (t.stretched()) {
      jt["alpha"] = *t.alpha();
    } else {
      jt["a"] = t.a();
      jt["L"] = t.idle();
      jt["b"] = t.b();
    }
    tasks.push_back(std::move(jt));
  }
  json edges = json::array();
  for (const auto& [u, v] : inst.id_edges()) edges.push_back({u, v});
  json out;
  out["scale"] = inst.scale();
  out["tasks"] = std::move(tasks);
  out["edges"] = std::move(edges);
  if (inst.partition()) {
    out["partition"] = {{"x", inst.partition()->x},
                        {"y", inst.partition()->y}};
  }
  return out;
}

}  // namespace

Instance parse_instance(std::string_view text) {
  const json j = parse_text(text);
  if (!j.is_object()) fail("instance", "expected an object");
  only_keys(j, "instance", {"scale", "tasks", "edges", "partition"});
  Time scale = 1;
  if (j.contains("scale")) scale = integer(j["scale"], "scale", 1);

  std::vector<CoupledTask> tasks;
  const json& jt = array_at(field(j, "instance", "tasks"), "tasks");
  for (std::size_t i = 0; i < jt.size(); ++i) {
    const std::string at = "tasks[" + std::to_string(i) + "]";
    const json& t = jt[i];
    if (!t.is_object()) fail(at, "expected an object");
    const std::string id = string_at(field(t, at, "id"), at + ".id");
    if (t.contains("alpha")) {
      only_keys(t, at, {"id", "alpha"});
      tasks.push_back(new_stretched(id, integer(t["alpha"], at + ".alpha", 1)));
    } else {
      only_keys(t, at, {"id", "a", "L", "b"});
      tasks.emplace_back(id, integer(field(t, at, "a"), at + ".a", 1),
                         integer(field(t, at, "L"), at + ".L", 0),
                         integer(field(t, at, "b"), at + ".b", 1));
    }
  }
  const auto edges = id_pairs(field(j, "instance", "edges"), "edges");
  std::optional<Partition> part;
  if (j.contains("partition")) {
    const json& jp = j["partition"];
    if (!jp.is_object()) fail("partition", "expected an object");
    only_keys(jp, "partition", {"x", "y"});
    part = Partition{string_list(field(jp, "partition", "x"), "partition.x"),
                     string_list(field(jp, "partition", "y"), "partition.y")};
  }
  return Instance(std::move(tasks), edges, scale, std::move(part));
}

std::string serialize_instance(const Instance& inst) {
  return dump(instance_json(inst));
}

std::string instance_hash(const Instance& inst) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : serialize_instance(inst)) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

ScheduleFile parse_schedule(std::string_view text) {
  const json j = parse_text(text);
  if (!j.is_object()) fail("schedule", "expected an object");
  only_keys(j, "schedule", {"instance_hash", "starts"});
  ScheduleFile out;
  out.instance_hash =
      string_at(field(j, "schedule", "instance_hash"), "instance_hash");
  const json& starts = field(j, "schedule", "starts");
  if (!starts.is_object()) fail("starts", "expected an object");
  for (const auto& [id, value] : starts.items()) {
    out.schedule.starts[id] = integer(value, "starts." + id, 0);
  }
  return out;
}

std::string serialize_schedule(const Instance& inst, const Schedule& s) {
  json starts = json::object();
  for (const auto& [id, start] : s.starts) starts[id] = start;
  json out;
  out["instance_hash"] = instance_hash(inst);
  out["starts"] = std::move(starts);
  return dump(out);
}

ThreeDMInstance parse_3dm(std::string_view text) {
  const json j = parse_text(text);
  if (!j.is_object()) fail("3dm", "expected an object");
  only_keys(j, "3dm", {"n", "triples"});
  ThreeDMInstance src;
  src.n = static_cast<std::size_t>(integer(field(j, "3dm", "n"), "n", 1));
  const json& triples = array_at(field(j, "3dm", "triples"), "triples");
  for (std::size_t i = 0; i < triples.size(); ++i) {
    const std::string at = "triples[" + std::to_string(i) + "]";
    if (!triples[i].is_array() || triples[i].size() != 3) {
      fail(at, "expected [a, b, c]");
    }
    std::array<std::size_t, 3> t{};
    for (std::size_t d = 0; d < 3; ++d) {
      const auto e = integer(triples[i][d],
                             at + "[" + std::to_string(d) + "]", 0);
      if (static_cast<std::size_t>(e) >= src.n) {
        fail(at + "[" + std::to_string(d) + "]", "element must be < n");
      }
      t[d] = static_cast<std::size_t>(e);
    }
    src.triples.push_back(t);
  }
  return src;
}

std::string serialize_3dm(const ThreeDMInstance& src) {
  json triples = json::array();
  for (const auto& t : src.triples) triples.push_back({t[0], t[1], t[2]});
  json out;
  out["n"] = src.n;
  out["triples"] = std::move(triples);
  return dump(out);
}

TripartiteGraph parse_tripartite(std::string_view text) {
  const json j = parse_text(text);
  if (!j.is_object()) fail("tripartite", "expected an object");
  only_keys(j, "tripartite", {"parts", "edges"});
  const json& parts = field(j, "tripartite", "parts");
  if (!parts.is_object()) fail("parts", "expected an object");
  only_keys(parts, "parts", {"A", "B", "C"});
  TripartiteGraph g;
  g.a = string_list(field(parts, "parts", "A"), "parts.A");
  g.b = string_list(field(parts, "parts", "B"), "parts.B");
  g.c = string_list(field(parts, "parts", "C"), "parts.C");
  g.edges = id_pairs(field(j, "tripartite", "edges"), "edges");
  return g;
}

std::string serialize_tripartite(const TripartiteGraph& src) {
  json edges = json::array();
  for (const auto& [u, v] : src.edges) edges.push_back({u, v});
  json out;
  out["parts"] = {{"A", src.a}, {"B", src.b}, {"C", src.c}};
  out["edges"] = std::move(edges);
  return dump(out);
}

}  // namespace ctsched
