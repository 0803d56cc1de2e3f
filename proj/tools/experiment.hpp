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

// Ratio experiment: approximation against the exact optimum over a seeded
// corpus of random quasi split-graph instances.

#ifndef CTSCHED_TOOLS_EXPERIMENT_HPP_
#define CTSCHED_TOOLS_EXPERIMENT_HPP_

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "ctsched/model.hpp"

namespace ctsched::tools {

struct ExperimentParams {
  std::size_t corpus_size = 200;
  std::uint64_t seed = 1;
  std::size_t max_x = 10;  // |X| is drawn from [3, max_x]
};

struct ExperimentRow {
  std::string id;
  std::size_t num_x = 0;
  std::size_t num_y = 0;
  Time alpha_y = 0;
  Time approx_makespan = 0;
  Time exact_makespan = 0;
  double ratio = 1.0;
};

struct ExperimentReport {
  std::vector<ExperimentRow> rows;  // sorted by id
  double max_ratio = 1.0;
  double mean_ratio = 1.0;
  // Rows with 4 * approx > 5 * exact; compared in integers.
  std::size_t bound_violations = 0;
};

ExperimentReport run_experiment(const ExperimentParams& params);

std::string report_json(const ExperimentReport& report);

}  // namespace ctsched::tools

#endif  // CTSCHED_TOOLS_EXPERIMENT_HPP_
