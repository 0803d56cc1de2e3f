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

#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "ctsched/approx.hpp"
#include "ctsched/error.hpp"
#include "ctsched/exact.hpp"
#include "ctsched/generators.hpp"
#include "ctsched/io.hpp"
#include "experiment.hpp"
#include "gantt.hpp"

namespace ctsched::tools {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path, std::istream& in) {
  std::ostringstream ss;
  if (path.empty() || path == "-") {
    ss << in.rdbuf();
    return ss.str();
  }
  std::ifstream file(path);
  if (!file) throw UsageError("cannot open '" + path + "' for reading");
  ss << file.rdbuf();
  return ss.str();
}

void write_output(const std::string& path, const std::string& text,
                  std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path);
  if (!file) throw UsageError("cannot open '" + path + "' for writing");
  file << text;
}

// "num/den" or a plain integer.
std::pair<std::int64_t, std::int64_t> parse_fraction(const std::string& s) {
  const auto slash = s.find('/');
  try {
    std::size_t used = 0;
    const std::int64_t num = std::stoll(s.substr(0, slash), &used);
    if (used != s.substr(0, slash).size()) throw std::invalid_argument(s);
    if (slash == std::string::npos) return {num, 1};
    const std::string rest = s.substr(slash + 1);
    const std::int64_t den = std::stoll(rest, &used);
    if (used != rest.size() || den <= 0) throw std::invalid_argument(s);
    return {num, den};
  } catch (const std::logic_error&) {
    throw UsageError("expected a fraction like 1/2, got '" + s + "'");
  }
}

// Makespan in instance units, plus original units when the instance is
// scaled.
std::string with_units(Time value, Time scale) {
  std::string text = std::to_string(value);
  if (scale == 1) return text;
  const Time g = std::gcd(value, scale);
  text += " (original units: " + std::to_string(value / g);
  if (scale / g != 1) text += "/" + std::to_string(scale / g);
  return text + ")";
}

struct GenOptions {
  std::string output;
  std::string source;
  std::size_t n = 2;
  std::size_t q = 2;
  std::uint64_t seed = 1;
  std::string eps = "1/3";
  std::string density = "1/2";
  std::size_t nx = 4;
  std::size_t ny = 2;
  Time alpha_y = 4;
};

int run_gen(const std::string& kind, const GenOptions& o, std::istream& in,
            std::ostream& out, std::ostream& err) {
  if (kind == "tightness") {
    write_output(o.output, serialize_instance(gen_tightness()), out);
  } else if (kind == "3dm") {
    const ThreeDMInstance src = o.source.empty()
                                    ? random_3dm2(o.n, o.seed)
                                    : parse_3dm(read_input(o.source, in));
    const auto [num, den] = parse_fraction(o.eps);
    const ThreeDMGadget g = gen_3dm(src, num, den);
    write_output(o.output, serialize_instance(g.instance), out);
    if (src.triples.size() <= 20) {
      const std::size_t k = brute_3dm(src);
      err << "max matching k*=" << k << ", target "
          << with_units(g.target(k), g.instance.scale()) << "\n";
    }
  } else if (kind == "pit") {
    TripartiteGraph src;
    if (o.source.empty()) {
      const auto [num, den] = parse_fraction(o.density);
      src = random_tripartite(o.q, num, den, o.seed);
    } else {
      src = parse_tripartite(read_input(o.source, in));
    }
    const PitGadget g = gen_pit(src);
    write_output(o.output, serialize_instance(g.instance), out);
    err << "target " << g.target << "\n";
  } else {
    const auto [num, den] = parse_fraction(o.density);
    const Instance inst = gen_random_quasi_split(
        {o.nx, o.ny, o.alpha_y, num, den, o.seed});
    write_output(o.output, serialize_instance(inst), out);
  }
  return kExitOk;
}

int run_solve(const std::string& algo, const std::string& input,
              const std::string& schedule_out, std::istream& in,
              std::ostream& out) {
  const Instance inst = parse_instance(read_input(input, in));
  Schedule schedule;
  std::ostringstream report;
  if (algo == "approx") {
    const ApproxSolution sol = approx_solve(inst);
    report << "algorithm: approx\n"
           << "makespan: " << with_units(sol.bound_value, inst.scale()) << "\n"
           << "f=" << sol.f << " m=" << sol.m << " s=" << sol.s << "\n";
    schedule = sol.schedule;
  } else {
    const ExactSolution sol = exact_optimum(inst);
    const Decomposition& d = sol.decomposition;
    report << "algorithm: exact\n"
           << "makespan: " << with_units(sol.optimum, inst.scale()) << "\n"
           << "p=" << d.p() << " r=" << d.r() << " m=" << d.m()
           << " s=" << d.s() << "\n"
           << "nodes: " << sol.nodes << "\n";
    schedule = sol.schedule;
  }
  out << report.str();
  if (!schedule_out.empty()) {
    write_output(schedule_out, serialize_schedule(inst, schedule), out);
  }
  return kExitOk;
}

int run_validate(const std::string& input, const std::string& schedule_path,
                 std::istream& in, std::ostream& out, std::ostream& err) {
  const Instance inst = parse_instance(read_input(input, in));
  const ScheduleFile file = parse_schedule(read_input(schedule_path, in));
  if (file.instance_hash != instance_hash(inst)) {
    err << "warning: schedule was written for instance " << file.instance_hash
        << ", validating against " << instance_hash(inst) << "\n";
  }
  const std::vector<Violation> violations = validate(inst, file.schedule);
  if (violations.empty()) {
    out << "valid, makespan: "
        << with_units(makespan(inst, file.schedule), inst.scale()) << "\n";
    return kExitOk;
  }
  for (const auto& v : violations) {
    out << to_string(v.kind) << " " << v.first << " " << v.second << "\n";
  }
  return kExitFailure;
}

int run_gantt(const std::string& input, const std::string& schedule_path,
              bool svg, const std::string& output, std::istream& in,
              std::ostream& out) {
  const Instance inst = parse_instance(read_input(input, in));
  const ScheduleFile file = parse_schedule(read_input(schedule_path, in));
  write_output(output,
               svg ? render_svg(inst, file.schedule)
                   : render_text(inst, file.schedule),
               out);
  return kExitOk;
}

int run_experiment_cmd(const ExperimentParams& params,
                       const std::string& output, std::ostream& out) {
  const ExperimentReport report = run_experiment(params);
  write_output(output, report_json(report), out);
  if (!output.empty() && output != "-") {
    out << "instances: " << report.rows.size()
        << "\nmax ratio: " << report.max_ratio
        << "\nmean ratio: " << report.mean_ratio
        << "\nbound violations: " << report.bound_violations << "\n";
  }
  return report.bound_violations == 0 ? kExitOk : kExitFailure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out, std::ostream& err) {
  CLI::App app{"Stretched coupled-task scheduling under compatibility "
               "constraints",
               "ctsched"};
  app.require_subcommand(1);

  // gen
  auto* gen = app.add_subcommand("gen", "Generate an instance");
  gen->require_subcommand(1);
  GenOptions go;
  std::string gen_kind;
  const auto gen_kind_cmd = [&](const char* name, const char* help) {
    auto* cmd = gen->add_subcommand(name, help);
    cmd->add_option("-o,--output", go.output, "Instance file (default stdout)");
    cmd->callback([&gen_kind, name] { gen_kind = name; });
    return cmd;
  };
  gen_kind_cmd("tightness", "Instance on which the approximation is tight");
  auto* g3 = gen_kind_cmd("3dm", "Gadget from a 3DM-2 source");
  g3->add_option("--source", go.source, "3DM source file (default: random)");
  g3->add_option("--n", go.n, "Random source size")->check(CLI::Range(2, 64));
  g3->add_option("--seed", go.seed, "Random seed");
  g3->add_option("--eps", go.eps, "Item stretch offset, 0 < eps < 1");
  auto* gp = gen_kind_cmd("pit", "Gadget from a tripartite graph");
  gp->add_option("--source", go.source, "Tripartite file (default: random)");
  gp->add_option("--q", go.q, "Random part size")->check(CLI::Range(1, 64));
  gp->add_option("--seed", go.seed, "Random seed");
  gp->add_option("--density", go.density, "Random edge density, e.g. 1/2");
  auto* gr = gen_kind_cmd("random", "Random quasi split-graph instance");
  gr->add_option("--nx", go.nx, "Number of X tasks");
  gr->add_option("--ny", go.ny, "Number of Y tasks");
  gr->add_option("--alpha-y", go.alpha_y, "Stretch factor of Y tasks");
  gr->add_option("--density", go.density, "Edge density, e.g. 1/2");
  gr->add_option("--seed", go.seed, "Random seed");

  // solve
  auto* solve = app.add_subcommand("solve", "Solve an instance");
  std::string algo = "approx";
  std::string input;
  std::string schedule_path;
  solve->add_option("--algo", algo, "approx or exact")
      ->check(CLI::IsMember({"approx", "exact"}));
  solve->add_option("-i,--input", input, "Instance file (default stdin)");
  solve->add_option("-s,--schedule", schedule_path, "Write the schedule here");

  // validate
  auto* val = app.add_subcommand("validate", "Check a schedule");
  val->add_option("-i,--input", input, "Instance file (default stdin)");
  val->add_option("-s,--schedule", schedule_path, "Schedule file")->required();

  // experiment
  auto* exp = app.add_subcommand("experiment", "Approximation ratio study");
  ExperimentParams ep;
  std::string report_path;
  exp->add_option("--corpus-size", ep.corpus_size, "Number of instances");
  exp->add_option("--seed", ep.seed, "Corpus seed");
  exp->add_option("--max-x", ep.max_x, "Largest X side")
      ->check(CLI::Range(3, 20));
  exp->add_option("-o,--output", report_path, "Report file (default stdout)");

  // gantt
  auto* gantt = app.add_subcommand("gantt", "Render a schedule");
  bool svg = false;
  std::string gantt_out;
  gantt->add_option("-i,--input", input, "Instance file (default stdin)");
  gantt->add_option("-s,--schedule", schedule_path, "Schedule file")
      ->required();
  gantt->add_flag("--svg", svg, "Emit SVG instead of text rows");
  gantt->add_option("-o,--output", gantt_out, "Output file (default stdout)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*gen) return run_gen(gen_kind, go, in, out, err);
    if (*solve) return run_solve(algo, input, schedule_path, in, out);
    if (*val) return run_validate(input, schedule_path, in, out, err);
    if (*exp) return run_experiment_cmd(ep, report_path, out);
    if (*gantt) {
      return run_gantt(input, schedule_path, svg, gantt_out, in, out);
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.kind() == ErrorKind::kParseError ? kExitUsage : kExitFailure;
  }
  return kExitUsage;
}

}  // namespace ctsched::tools
