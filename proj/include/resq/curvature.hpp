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

#ifndef RESQ_CURVATURE_HPP_
#define RESQ_CURVATURE_HPP_

#include <optional>
#include <span>
#include <vector>

#include "resq/oracle.hpp"
#include "resq/types.hpp"

namespace resq {

struct SolutionTrace;  // trace.hpp

// One per-stage record of how saturated the objective was when a stage was
// committed. `source` is the element whose addition formed the stage's base
// set; stage 0 (the empty base) has none.
struct LedgerEntry {
  int stage = 0;
  double value = 0.0;
  std::optional<ElementId> source;
};

// Append-only list of per-stage saturation values, kept by the rewiring
// solver and consulted by its trigger and step-back rules. Stages are
// always consecutive 0..size()-1; removal-and-repair is done by
// ledger_update_after_removal (algorithms.hpp), which returns a fresh
// reindexed ledger.
class CurvatureLedger {
 public:
  void append(double value, std::optional<ElementId> source) {
    entries_.push_back({static_cast<int>(entries_.size()), value, source});
  }

  void pop_back() {
    if (entries_.empty()) throw Error("empty-ledger", "pop on empty ledger");
    entries_.pop_back();
  }

  const LedgerEntry& entry(int stage) const {
    if (stage < 0 || stage >= size())
      throw Error("stage-out-of-range", std::to_string(stage));
    return entries_[stage];
  }

  const std::vector<LedgerEntry>& entries() const { return entries_; }

  std::vector<double> values() const {
    std::vector<double> v;
    v.reserve(entries_.size());
    for (const auto& e : entries_) v.push_back(e.value);
    return v;
  }

  // Ledger stage whose source is `e`, or -1 if no entry has that source.
  int stage_of_source(ElementId e) const {
    for (const auto& entry : entries_)
      if (entry.source && *entry.source == e) return entry.stage;
    return -1;
  }

  int size() const { return static_cast<int>(entries_.size()); }
  bool empty() const { return entries_.empty(); }

 private:
  std::vector<LedgerEntry> entries_;
};

// Saturation of expansion set A relative to base S:
//   1 - min_{e in A} [f(S + e) - f(S)] / f({e}),
// clamped to [0,1]. Elements with f({e}) = 0 contribute ratio 1 (they are
// saturation-neutral). 0 for an empty base regardless of A. A must be
// non-empty and disjoint from S. Every evaluation goes through `oracle`,
// so calls over already-scanned pairs cost no fresh queries.
double set_curvature(ValueOracle& oracle, const SolutionSet& base,
                     std::span<const ElementId> expansion);

// Largest ledger value over stages 0..size()-1; 0 for a ledger holding only
// stage 0. Monotone in the stage count by construction.
double expansion_curvature(const CurvatureLedger& ledger);

struct PathCurvatureRecord {
  // stage_terms[i] = 1 - [f(S_{i+1}) - f(S_i)] / f({s_{i+1}}), clamped.
  std::vector<double> stage_terms;
  // running_max[i] = max of stage_terms[0..i]; back() is the whole-chain value.
  std::vector<double> running_max;

  double final_value() const {
    return running_max.empty() ? 0.0 : running_max.back();
  }
};

// Per-stage saturation of a selection chain measured only along the chain
// itself (each stage against the single element it added). Cheaper than the
// ledger view and never above it.
PathCurvatureRecord path_curvature(ValueOracle& oracle,
                                   const SolutionTrace& trace);

// Total curvature of the objective:
//   1 - min_e [f(P) - f(P - e)] / f({e}),
// the worst-case saturation over the whole ground set. Costs at most
// 2n + 1 fresh queries on a cold session.
double total_curvature(ValueOracle& oracle);

// Optimum-aware saturation of a greedy chain: the max over stages i whose
// pick s_i lies outside `opt` of
//   1 - [f(opt + S_{i-1} + s_i) - f(opt + S_{i-1})] / f({s_i}),
// clamped; 0 if every pick lies in opt. Throws invalid-opt if opt is larger
// than the trace's kappa.
double gamma_star(ValueOracle& oracle, const SolutionTrace& trace,
                  const SolutionSet& opt);

}  // namespace resq

#endif  // RESQ_CURVATURE_HPP_
