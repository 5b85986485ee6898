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

#ifndef RESQ_TRACE_HPP_
#define RESQ_TRACE_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "resq/curvature.hpp"
#include "resq/types.hpp"

namespace resq {

// One committed selection stage. When `trigger_fired` is set the stage also
// removed `removed` (occupying ledger stage `removed_stage`, if it was a
// recorded source) before selecting `chosen` from the shrunken set's
// complement.
struct StageRecord {
  ElementId chosen = -1;
  double gain = 0.0;     // marginal of `chosen` on the base it was added to
  double f_after = 0.0;  // objective value after this stage committed
  double set_curvature_recorded = 0.0;  // saturation of the pre-pick base
  bool trigger_fired = false;
  std::optional<ElementId> removed;
  std::optional<int> removed_stage;
};

// Detail record of one rewire, enough to audit the trigger/step-back/repair
// arithmetic offline.
struct RewireEvent {
  int stage = 0;  // 1-based selection stage at which the rewire happened
  ElementId provisional = -1;         // pick that was made and then revisited
  double f_before_rewire = 0.0;       // value including the provisional pick
  ElementId removed_element = -1;
  int removed_ledger_stage = -1;      // -1: removed element was not a source
  std::vector<double> ledger_before;  // including the provisional entry
  std::vector<double> ledger_after;   // after repair, before the fresh entry
  ElementId reselected = -1;
};

// Full record of one solver run against one oracle session.
struct SolutionTrace {
  std::string algorithm;
  std::string fingerprint;  // of the instance behind the session, may be ""
  int kappa = 0;
  std::vector<StageRecord> stages;
  SolutionSet final_set;
  CurvatureLedger ledger;
  int rewire_count = 0;
  std::vector<RewireEvent> rewires;
  OracleStats stats;
};

// Replays the trace and returns the committed set after each stage;
// result[i] corresponds to stages[i]. Throws malformed-trace when the
// records are inconsistent (bad removal, duplicate add, ...).
std::vector<SolutionSet> stage_sets(const SolutionTrace& trace);

// The base each stage's pick was added to: the previous committed set, plus
// the stage's provisional pick and minus its removal when the stage rewired.
// result[i] + stages[i].chosen = stage_sets[i].
std::vector<SolutionSet> stage_bases(const SolutionTrace& trace);

}  // namespace resq

#endif  // RESQ_TRACE_HPP_
