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

#include "experiment.hpp"

#include <algorithm>
#include <cstdio>
#include <random>

#include <nlohmann/json.hpp>

#include "ctsched/approx.hpp"
#include "ctsched/error.hpp"
#include "ctsched/exact.hpp"
#include "ctsched/generators.hpp"

namespace ctsched::tools {

ExperimentReport run_experiment(const ExperimentParams& params) {
  if (params.max_x < 3) {
    throw Error(ErrorKind::kInvalidParameter, "max-x must be >= 3");
  }
  std::mt19937_64 rng(params.seed);
  const auto draw = [&](std::uint64_t lo, std::uint64_t hi) {
    return std::uniform_int_distribution<std::uint64_t>(lo, hi)(rng);
  };

  ExperimentReport report;
  double total = 0.0;
  for (std::size_t k = 0; k < params.corpus_size; ++k) {
    RandomQuasiSplitParams p;
    p.nx = draw(3, params.max_x);
    p.ny = draw(1, 3);
    p.alpha_y = static_cast<Time>(draw(3, 12));
    p.density_num = static_cast<std::int64_t>(draw(0, 4));
    p.density_den = 4;
    p.seed = rng();
    const Instance inst = gen_random_quasi_split(p);

    ExperimentRow row;
    char id[32];
    std::snprintf(id, sizeof id, "q%06zu", k);
    row.id = id;
    row.num_x = p.nx;
    row.num_y = p.ny;
    row.alpha_y = p.alpha_y;
    row.approx_makespan = approx_solve(inst).bound_value;
    row.exact_makespan = exact_optimum(inst).optimum;
    row.ratio = static_cast<double>(row.approx_makespan) /
                static_cast<double>(row.exact_makespan);
    if (4 * row.approx_makespan > 5 * row.exact_makespan) {
      ++report.bound_violations;
    }
    total += row.ratio;
    report.max_ratio = std::max(report.max_ratio, row.ratio);
    report.rows.push_back(std::move(row));
  }
  std::sort(report.rows.begin(), report.rows.end(),
            [](const auto& l, const auto& r) { return l.id < r.id; });
  if (!report.rows.empty()) {
    report.mean_ratio = total / static_cast<double>(report.rows.size());
  }
  return report;
}

std::string report_json(const ExperimentReport& report) {
  using json = nlohmann::ordered_json;
  json rows = json::array();
  for (const auto& r : report.rows) {
    json j;
    j["id"] = r.id;
    j["num_x"] = r.num_x;
    j["num_y"] = r.num_y;
    j["alpha_y"] = r.alpha_y;
    j["approx_makespan"] = r.approx_makespan;
    j["exact_makespan"] = r.exact_makespan;
    j["ratio"] = r.ratio;
    rows.push_back(std::move(j));
  }
  json out;
  out["rows"] = std::move(rows);
  out["summary"] = {{"instances", report.rows.size()},
                    {"max_ratio", report.max_ratio},
                    {"mean_ratio", report.mean_ratio},
                    {"bound_violations", report.bound_violations}};
  return out.dump(2) + "\n";
}

}  // namespace ctsched::tools
