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

#ifndef RESQ_ALGORITHMS_HPP_
#define RESQ_ALGORITHMS_HPP_

#include <cstdint>

#include "resq/curvature.hpp"
#include "resq/oracle.hpp"
#include "resq/trace.hpp"
#include "resq/types.hpp"

namespace resq {

// True when the current stage's saturation drops strictly below the largest
// value already on the ledger and that maximum is positive. Never true on a
// ledger holding only the zero stage-0 entry.
bool trigger_law(const CurvatureLedger& ledger, double current);

struct StepBack {
  ElementId element = -1;  // source to remove from the working set
  int ledger_stage = -1;   // its stage on the ledger
};

// Picks the stage to undo: the ledger argmax, earliest stage on ties.
// Stage 0 has no source, so a ledger whose maximum sits only at stage 0 (or
// an all-zero ledger) has nothing to undo and raises no-removable-stage.
// `current` must contain the chosen source.
StepBack step_back(const CurvatureLedger& ledger, const SolutionSet& current);

// Repairs a ledger after the entry at `removed_stage` (>= 1) is dropped:
// every surviving entry above the gap is re-estimated as the midpoint of its
// own pre-removal value and its pre-removal predecessor's (skipping the
// removed slot), then stages are renumbered consecutively. Entries below the
// gap are untouched. Pure function of the ledger; costs no queries.
CurvatureLedger ledger_update_after_removal(const CurvatureLedger& ledger,
                                            int removed_stage);

enum class ResqueMode {
  kHeuristicLedger,  // repair by midpoint interpolation (query-free)
  kExactRecompute,   // re-measure repaired stages against the full complement
};

// Plain cost-greedy baseline: kappa stages, each adding the candidate with
// the largest marginal gain (lowest id on ties). Spends exactly
// sum_{i=0}^{kappa-1} (n - i) queries on a fresh session.
SolutionTrace sequential_greedy(ValueOracle& oracle, int kappa);

// Greedy with saturation-triggered rewiring. Each stage first makes the
// greedy pick; if the trigger fires, the run steps back (undoing the most
// saturated recorded stage), repairs the ledger per `mode`, and reselects
// from the shrunken set's complement. The undone element stays eligible, so
// the committed value never drops below the plain pick's.
SolutionTrace resque_greedy(ValueOracle& oracle, int kappa,
                            ResqueMode mode = ResqueMode::kHeuristicLedger);

// Ablation baseline: rewires with probability p_rewire per stage (from the
// second selection on) and removes a uniformly random element of the working
// set instead of consulting the ledger. Ledger bookkeeping matches
// resque_greedy so the traces are comparable.
SolutionTrace random_rewiring_greedy(ValueOracle& oracle, int kappa,
                                     double p_rewire, std::uint64_t seed);

}  // namespace resq

#endif  // RESQ_ALGORITHMS_HPP_
