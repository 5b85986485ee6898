// Copyright 2026 The Authors.
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

#include "resq/svg.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <string_view>

namespace resq {

namespace {

constexpr double kCanvas = 840.0;
constexpr double kMargin = 30.0;

std::string_view run_color(const std::string& algorithm, std::size_t index) {
  if (algorithm == "sg") return "#d62728";
  if (algorithm == "resque") return "#ff7f0e";
  if (algorithm == "random-rewire") return "#2ca02c";
  constexpr std::string_view extras[] = {"#9467bd", "#8c564b", "#17becf"};
  return extras[index % std::size(extras)];
}

}  // namespace

std::string render_deployment_svg(const Instance& inst,
                                  std::span<const SolutionTrace> runs) {
  for (const SolutionTrace& t : runs)
    if (!t.fingerprint.empty() && t.fingerprint != inst.fingerprint)
      throw Error("mismatched-instance",
                  "trace " + t.algorithm + " was made on another instance");

  double max_radius = 0.0;
  for (const Site& s : inst.sites) max_radius = std::max(max_radius, s.radius);
  BoundingBox bb{inst.points[0].x, inst.points[0].y, inst.points[0].x,
                 inst.points[0].y};
  const auto widen = [&](double x, double y) {
    bb.xmin = std::min(bb.xmin, x);
    bb.ymin = std::min(bb.ymin, y);
    bb.xmax = std::max(bb.xmax, x);
    bb.ymax = std::max(bb.ymax, y);
  };
  for (const Point& p : inst.points) widen(p.x, p.y);
  for (const Site& s : inst.sites) widen(s.x, s.y);
  const double pad = std::max(max_radius, 1e-9 + 0.02 * bb.extent());
  bb = {bb.xmin - pad, bb.ymin - pad, bb.xmax + pad, bb.ymax + pad};

  const double scale = (kCanvas - 2.0 * kMargin) / bb.extent();
  const auto px = [&](double x) { return kMargin + (x - bb.xmin) * scale; };
  const auto py = [&](double y) {
    return kCanvas - kMargin - (y - bb.ymin) * scale;
  };

  std::string out = fmt::format(
      "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{0}\" "
      "height=\"{0}\" viewBox=\"0 0 {0} {0}\">\n"
      "<rect width=\"{0}\" height=\"{0}\" fill=\"#ffffff\"/>\n",
      kCanvas);

  for (const Point& p : inst.points)
    out += fmt::format(
        "<circle class=\"point\" cx=\"{:.2f}\" cy=\"{:.2f}\" r=\"1.5\" "
        "fill=\"#1f77b4\" fill-opacity=\"0.55\"/>\n",
        px(p.x), py(p.y));

  for (const Site& s : inst.sites)
    out += fmt::format(
        "<circle class=\"site\" cx=\"{:.2f}\" cy=\"{:.2f}\" r=\"3\" "
        "fill=\"#222222\"/>\n",
        px(s.x), py(s.y));

  for (std::size_t i = 0; i < runs.size(); ++i) {
    const std::string_view color = run_color(runs[i].algorithm, i);
    // Slight per-run radius inflation keeps identical selections visible.
    const double inflate = 1.0 + 0.035 * static_cast<double>(i);
    for (ElementId e : runs[i].final_set.order()) {
      const Site& s = inst.sites.at(static_cast<std::size_t>(e));
      out += fmt::format(
          "<circle class=\"disk algo-{}\" cx=\"{:.2f}\" cy=\"{:.2f}\" "
          "r=\"{:.2f}\" fill=\"none\" stroke=\"{}\" stroke-width=\"1.6\" "
          "stroke-opacity=\"0.9\"/>\n",
          runs[i].algorithm, px(s.x), py(s.y),
          std::max(s.radius * scale, 2.0) * inflate, color);
    }
    out += fmt::format(
        "<text x=\"{:.2f}\" y=\"{:.2f}\" font-family=\"monospace\" "
        "font-size=\"14\" fill=\"{}\">{} ({} sites)</text>\n",
        kMargin, 20.0 + 16.0 * static_cast<double>(i), color,
        runs[i].algorithm, runs[i].final_set.size());
  }

  out += "</svg>\n";
  return out;
}

}  // namespace resq
