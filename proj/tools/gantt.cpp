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

#include "gantt.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

namespace ctsched::tools {

namespace {

// Rank of what a task is doing at time t: 2 for a sub-task, 1 idle, 0 off.
int activity(const CoupledTask& t, Time start, Time at) {
  const Time rel = at - start;
  if (rel < 0 || rel >= task_span(t)) return 0;
  if (rel < t.a() || rel >= t.a() + t.idle()) return 2;
  return 1;
}

std::string escape(const std::string& text) {
  std::string out;
  for (char c : text) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

std::string render_text(const Instance& inst, const Schedule& s,
                        std::size_t max_columns) {
  const std::vector<Time> starts = resolve_starts(inst, s);
  const Time span = makespan(inst, s);
  const Time cols = static_cast<Time>(std::max<std::size_t>(max_columns, 1));
  const Time unit = std::max<Time>(1, (span + cols - 1) / cols);
  std::size_t width = 0;
  for (const auto& t : inst.tasks()) width = std::max(width, t.id().size());

  std::ostringstream os;
  os << "makespan " << span;
  if (unit > 1) os << ", one column = " << unit << " time units";
  os << "\n";
  for (TaskIndex i = 0; i < inst.size(); ++i) {
    const CoupledTask& t = inst.task(i);
    os << t.id() << std::string(width - t.id().size(), ' ') << " |";
    for (Time c = 0; c * unit < span; ++c) {
      int best = 0;
      bool second = false;
      for (Time at = c * unit; at < std::min(span, (c + 1) * unit); ++at) {
        const int act = activity(t, starts[i], at);
        if (act > best) {
          best = act;
          second = at - starts[i] >= t.a();
        }
      }
      os << (best == 2 ? (second ? 'b' : 'a') : best == 1 ? '-' : ' ');
    }
    os << "|\n";
  }
  return os.str();
}

std::string render_svg(const Instance& inst, const Schedule& s) {
  const std::vector<Time> starts = resolve_starts(inst, s);
  const Time span = std::max<Time>(makespan(inst, s), 1);
  constexpr int kRow = 24;
  constexpr int kLabel = 80;
  constexpr int kPlot = 800;
  const double px = static_cast<double>(kPlot) / static_cast<double>(span);
  const int height = kRow * static_cast<int>(inst.size() + 1) + 10;

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\""
     << kLabel + kPlot + 20 << "\" height=\"" << height
     << "\" font-family=\"monospace\" font-size=\"12\">\n";
  for (TaskIndex i = 0; i < inst.size(); ++i) {
    const CoupledTask& t = inst.task(i);
    const int y = kRow * static_cast<int>(i) + 5;
    const auto x_at = [&](Time at) { return kLabel + px * static_cast<double>(at); };
    os << "  <text x=\"4\" y=\"" << y + 16 << "\">" << escape(t.id())
       << "</text>\n";
    const Time a0 = starts[i];
    const Time b0 = a0 + t.a() + t.idle();
    os << "  <rect x=\"" << x_at(a0 + t.a()) << "\" y=\"" << y + 9
       << "\" width=\"" << px * static_cast<double>(t.idle())
       << "\" height=\"2\" fill=\"#999\"/>\n";
    os << "  <rect x=\"" << x_at(a0) << "\" y=\"" << y << "\" width=\""
       << px * static_cast<double>(t.a()) << "\" height=\"20\" fill=\"#4a7fb5\"/>\n";
    os << "  <rect x=\"" << x_at(b0) << "\" y=\"" << y << "\" width=\""
       << px * static_cast<double>(t.b()) << "\" height=\"20\" fill=\"#d9822b\"/>\n";
  }
  const int axis = kRow * static_cast<int>(inst.size()) + 5;
  os << "  <line x1=\"" << kLabel << "\" y1=\"" << axis << "\" x2=\""
     << kLabel + kPlot << "\" y2=\"" << axis << "\" stroke=\"#000\"/>\n";
  const Time step = std::max<Time>(1, span / 10);
  for (Time at = 0; at <= span; at += step) {
    const double x = kLabel + px * static_cast<double>(at);
    os << "  <text x=\"" << x << "\" y=\"" << axis + 16
       << "\" text-anchor=\"middle\">" << at << "</text>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace ctsched::tools
