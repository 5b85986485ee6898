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

#ifndef RESQ_SVG_HPP_
#define RESQ_SVG_HPP_

#include <span>
#include <string>

#include "resq/coverage.hpp"
#include "resq/trace.hpp"

namespace resq {

// Renders the instance and zero or more runs' selections as a standalone
// SVG: demand points as small blue dots, candidate sites as dark markers,
// and each run's selected coverage disks as colored outlines (plain greedy
// red, rewired orange, random baseline green, extra runs from a fallback
// palette). Disk radii get a small per-run scale offset so coincident
// selections stay distinguishable. Output is deterministic byte-for-byte in
// its inputs. Throws mismatched-instance if a trace carries a different
// instance fingerprint.
std::string render_deployment_svg(const Instance& inst,
                                  std::span<const SolutionTrace> runs);

}  // namespace resq

#endif  // RESQ_SVG_HPP_
