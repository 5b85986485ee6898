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

#ifndef RESQ_EXACT_HPP_
#define RESQ_EXACT_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "resq/oracle.hpp"
#include "resq/trace.hpp"
#include "resq/types.hpp"

namespace resq {

struct OptimalCertificate {
  std::vector<ElementId> members;  // ascending; lexicographically smallest
                                   // among maximizers
  double value = 0.0;
  std::uint64_t subsets_enumerated = 0;
  std::string fingerprint;
};

// Exhaustive optimum over all subsets of size exactly kappa. Enumeration is
// by combination rank, split across OpenMP threads, each unranking its first
// subset and stepping lexicographically from there; the reduction is
// deterministic (value, then lexicographic members). Guarded by `max_n` and
// a generous cap on C(n, kappa); throws instance-too-large beyond either.
// Evaluates the function directly (no memo session): every subset is
// visited exactly once.
OptimalCertificate brute_force_opt(const SetFunction& f, int kappa,
                                   int max_n = 20);

// Single-threaded recursive enumerator over the same subsets. Kept as the
// independently-coded reference for the ranked enumerator above.
OptimalCertificate brute_force_opt_serial(const SetFunction& f, int kappa,
                                          int max_n = 20);

// C(n, k) with saturation at UINT64_MAX.
std::uint64_t binomial(int n, int k);

struct BoundReport {
  double opt_value = 0.0;
  double final_value = 0.0;
  double final_ratio = 0.0;  // final_value / opt_value
  // floor_ratio[i] = 1 - (1 - 1/kappa)^(i+1): the guaranteed fraction of the
  // optimum after stage i+1. stage_ratio[i] is the achieved fraction.
  std::vector<double> floor_ratio;
  std::vector<double> stage_ratio;
  double classic_floor = 0.0;    // 1 - 1/e
  double curvature_floor = 0.0;  // (1/c)(1 - e^-c), -> 1 as c -> 0
  double total_curvature = 0.0;
  bool violated = false;  // any stage under its floor, or a value decrease
  std::string detail;     // first violation, "" if none
};

// Checks a trace against its exhaustive optimum: the per-stage floors, the
// final classic and curvature-aware floors, and monotonicity of the
// committed values. Tolerance is absolute 1e-9 on each comparison. Throws
// mismatched-instance when the trace and certificate fingerprints differ.
BoundReport certify_bounds(const SolutionTrace& trace,
                           const OptimalCertificate& opt, int kappa,
                           double total_curvature);

struct StageComparison {
  int stage = 0;              // 1-based, over the shared prefix
  double value_gap = 0.0;     // f(rewired stage set) - f(plain stage set)
  double lhs = 0.0;           // chain saturation + normalized previous gap
  double rhs = 0.0;           // saturation of the rewired set against the
                              // plain run's remaining candidates
  bool sufficient = false;    // lhs >= rhs - 1e-9
  bool gap_nonnegative = false;
};

struct RunComparison {
  std::vector<StageComparison> stages;
  double final_gap = 0.0;
  int stages_sufficient = 0;  // count with `sufficient` set
};

// Stage-by-stage diagnostic of a plain greedy run against a rewired one on
// the same instance. Reports, per stage, the value gap and whether the
// saturation-based sufficient condition for a non-negative gap held. Purely
// observational: nothing here asserts.
RunComparison compare_runs(ValueOracle& oracle, const SolutionTrace& plain,
                           const SolutionTrace& rewired);

}  // namespace resq

#endif  // RESQ_EXACT_HPP_
