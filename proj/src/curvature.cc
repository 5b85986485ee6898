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

#include "resq/curvature.hpp"

#include <algorithm>

#include "resq/trace.hpp"

namespace resq {

namespace {

// gain / f({e}) with the 0/0 convention: a worthless element saturates
// nothing new, so its ratio counts as 1 (curvature contribution 0).
double saturation_ratio(double gain, double singleton) {
  if (singleton <= 0.0) return 1.0;
  return gain / singleton;
}

}  // namespace

double set_curvature(ValueOracle& oracle, const SolutionSet& base,
                     std::span<const ElementId> expansion) {
  if (expansion.empty()) throw Error("empty-expansion", "no expansion elements");
  for (ElementId e : expansion)
    if (base.contains(e))
      throw Error("expansion-overlaps-base", std::to_string(e));
  if (base.empty()) return 0.0;

  const std::vector<double>& singles = singleton_values(oracle);
  double min_ratio = 1.0;
  bool first = true;
  for (ElementId e : expansion) {
    const double r = saturation_ratio(marginal_gain(oracle, base, e),
                                      singles[e]);
    if (first || r < min_ratio) min_ratio = r;
    first = false;
  }
  return clamp01(1.0 - min_ratio);
}

double expansion_curvature(const CurvatureLedger& ledger) {
  if (ledger.empty()) throw Error("empty-ledger", "no stages recorded");
  double m = 0.0;
  for (const LedgerEntry& e : ledger.entries()) m = std::max(m, e.value);
  return m;
}

PathCurvatureRecord path_curvature(ValueOracle& oracle,
                                   const SolutionTrace& trace) {
  stage_sets(trace);  // validates the records
  const std::vector<double>& singles = singleton_values(oracle);
  PathCurvatureRecord rec;
  rec.stage_terms.reserve(trace.stages.size());
  rec.running_max.reserve(trace.stages.size());
  double prev_value = 0.0;
  double running = 0.0;
  for (const StageRecord& st : trace.stages) {
    const double delta = st.f_after - prev_value;
    const double term =
        clamp01(1.0 - saturation_ratio(delta, singles[st.chosen]));
    prev_value = st.f_after;
    running = std::max(running, term);
    rec.stage_terms.push_back(term);
    rec.running_max.push_back(running);
  }
  return rec;
}

double total_curvature(ValueOracle& oracle) {
  const int n = oracle.ground_size();
  if (n <= 0) throw Error("empty-candidates", "ground set is empty");
  const std::vector<double>& singles = singleton_values(oracle);

  SolutionSet all_but(n);
  for (ElementId e = 0; e < n; ++e) all_but.add(e);
  double min_ratio = 1.0;
  for (ElementId e = 0; e < n; ++e) {
    all_but.remove(e);
    const double gain = marginal_gain(oracle, all_but, e);
    all_but.add(e);
    min_ratio = std::min(min_ratio, saturation_ratio(gain, singles[e]));
  }
  return clamp01(1.0 - min_ratio);
}

double gamma_star(ValueOracle& oracle, const SolutionTrace& trace,
                  const SolutionSet& opt) {
  if (opt.size() > trace.kappa)
    throw Error("invalid-opt",
                "reference set larger than the trace's cardinality budget");
  const std::vector<SolutionSet> bases = stage_bases(trace);
  const std::vector<double>& singles = singleton_values(oracle);

  double worst = 0.0;
  for (std::size_t i = 0; i < trace.stages.size(); ++i) {
    const ElementId s = trace.stages[i].chosen;
    if (opt.contains(s)) continue;
    SolutionSet joint = bases[i];
    for (ElementId e : opt.order())
      if (!joint.contains(e)) joint.add(e);
    const double gain = marginal_gain(oracle, joint, s);
    worst = std::max(
        worst, clamp01(1.0 - saturation_ratio(gain, singles[s])));
  }
  return worst;
}

}  // namespace resq
