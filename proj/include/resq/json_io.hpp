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

#ifndef RESQ_JSON_IO_HPP_
#define RESQ_JSON_IO_HPP_

#include <string>

#include "json.hpp"
#include "resq/bench.hpp"
#include "resq/coverage.hpp"
#include "resq/exact.hpp"
#include "resq/trace.hpp"

namespace resq {

// Instance document:
//   {"kappa": 2,
//    "sites": [{"id": 0, "x": 0.0, "y": 0.0, "radius": 1.05}, ...],
//    "points": [[0.0, 0.0], [1.0, 0.0], ...]}
nlohmann::json instance_to_json(const Instance& inst);
Instance instance_from_json(const nlohmann::json& j);

nlohmann::json trace_to_json(const SolutionTrace& trace);
SolutionTrace trace_from_json(const nlohmann::json& j);

nlohmann::json run_report_to_json(const RunReport& r);
nlohmann::json certificate_to_json(const OptimalCertificate& c);
nlohmann::json bound_report_to_json(const BoundReport& r);
nlohmann::json comparison_to_json(const RunComparison& c);
nlohmann::json bench_summary_to_json(const BenchSummary& s);
nlohmann::json bench_config_to_json(const BenchConfig& c);

// Accepts a partial document; absent keys keep their defaults. Ranges are
// [lo, hi] pairs, the domain is [xmin, ymin, xmax, ymax], kappa_rule is
// {"fixed": int} and/or {"fraction": double}.
BenchConfig bench_config_from_json(const nlohmann::json& j);

nlohmann::json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace resq

#endif  // RESQ_JSON_IO_HPP_
