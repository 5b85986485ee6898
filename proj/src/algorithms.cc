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

#include "resq/algorithms.hpp"

#include <algorithm>
#include <functional>
#include <memory>

#include "resq/rng.hpp"

namespace resq {

bool trigger_law(const CurvatureLedger& ledger, double current) {
  const double peak = expansion_curvature(ledger);  // throws on empty
  return peak > 0.0 && current < peak;
}

StepBack step_back(const CurvatureLedger& ledger, const SolutionSet& current) {
  if (ledger.size() < 2)
    throw Error("no-removable-stage", "ledger has no source-bearing entry");
  int arg = 0;
  double peak = ledger.entry(0).value;
  for (int t = 1; t < ledger.size(); ++t) {
    if (ledger.entry(t).value > peak) {  // earliest stage wins ties
      peak = ledger.entry(t).value;
      arg = t;
    }
  }
  if (arg == 0 || peak <= 0.0)
    throw Error("no-removable-stage",
                "ledger peak sits at the sourceless zero stage");
  const LedgerEntry& e = ledger.entry(arg);
  if (!e.source)
    throw Error("no-removable-stage",
                "entry " + std::to_string(arg) + " has no source");
  if (!current.contains(*e.source))
    throw Error("element-not-in-set",
                "ledger source " + std::to_string(*e.source) +
                    " is not in the working set");
  return {*e.source, arg};
}

CurvatureLedger ledger_update_after_removal(const CurvatureLedger& ledger,
                                            int removed_stage) {
  if (removed_stage < 1 || removed_stage >= ledger.size())
    throw Error("stage-out-of-range",
                "cannot remove stage " + std::to_string(removed_stage) +
                    " from a ledger of size " + std::to_string(ledger.size()));
  const std::vector<double> pre = ledger.values();
  CurvatureLedger out;
  for (const LedgerEntry& e : ledger.entries()) {
    if (e.stage == removed_stage) continue;
    if (e.stage < removed_stage) {
      out.append(e.value, e.source);
      continue;
    }
    // The entry slides down one stage; its value is re-estimated as the
    // midpoint of itself and the entry preceding it once the gap closes.
    const int prev = (e.stage - 1 == removed_stage) ? removed_stage - 1
                                                    : e.stage - 1;
    out.append(pre[prev] + (pre[e.stage] - pre[prev]) / 2.0, e.source);
  }
  return out;
}

namespace {

// Greedy stage loop shared by all three solvers. `fire` (nullable) decides
// whether iteration i >= 1 rewires; `choose_removal` picks the element to
// drop from the working set (which at that point includes the provisional
// pick, whose would-be ledger entry is the last one).
SolutionTrace run_stages(
    ValueOracle& oracle, int kappa, const std::string& name, ResqueMode mode,
    const std::function<bool(int, const CurvatureLedger&, double)>& fire,
    const std::function<StepBack(const CurvatureLedger&, const SolutionSet&)>&
        choose_removal) {
  const int n = oracle.ground_size();
  if (kappa < 1 || kappa > n)
    throw Error("kappa-out-of-range",
                std::to_string(kappa) + " with " + std::to_string(n) +
                    " sites");

  SolutionTrace trace;
  trace.algorithm = name;
  trace.fingerprint = oracle.function().fingerprint();
  trace.kappa = kappa;

  singleton_values(oracle);  // n queries; every later scan of size-1 sets hits

  SolutionSet set(n);
  CurvatureLedger ledger;
  for (int i = 0; i < kappa; ++i) {
    const std::vector<ElementId> candidates = complement_of(set, n);
    ScanResult scan = scan_marginals(oracle, set, candidates);
    const double current = set_curvature(oracle, set, candidates);

    StageRecord st;
    if (i >= 1 && fire && fire(i, ledger, current)) {
      // Provisional commit: the pick joins the working set and the current
      // stage's saturation joins the ledger, both subject to the step-back.
      ledger.append(current, set.order().back());
      SolutionSet working = set;
      working.add(scan.best);

      RewireEvent ev;
      ev.stage = i + 1;
      ev.provisional = scan.best;
      ev.f_before_rewire = oracle.evaluate(working);
      ev.ledger_before = ledger.values();

      const StepBack sb = choose_removal(ledger, working);
      working.remove(sb.element);
      if (sb.ledger_stage >= 1) {
        if (mode == ResqueMode::kHeuristicLedger) {
          ledger = ledger_update_after_removal(ledger, sb.ledger_stage);
        } else {
          CurvatureLedger repaired =
              ledger_update_after_removal(ledger, sb.ledger_stage);
          // Replace the interpolated values with fresh measurements of the
          // surviving chain's prefixes (paid for in queries).
          CurvatureLedger exact;
          SolutionSet prefix(n);
          for (int t = 0; t < repaired.size(); ++t) {
            const LedgerEntry& e = repaired.entry(t);
            if (t < sb.ledger_stage) {
              exact.append(e.value, e.source);
            } else {
              exact.append(set_curvature(oracle, prefix,
                                         complement_of(prefix, n)),
                           e.source);
            }
            // Entry t+1's base is the surviving chain's prefix working[0..t].
            prefix.add(working.order()[t]);
          }
          ledger = exact;
        }
      } else {
        // The removed element was the provisional pick itself; no recorded
        // stage is affected.
        ledger.pop_back();
      }
      ev.removed_element = sb.element;
      ev.removed_ledger_stage = sb.ledger_stage;
      ev.ledger_after = ledger.values();

      const std::vector<ElementId> again = complement_of(working, n);
      scan = scan_marginals(oracle, working, again);
      const double fresh = set_curvature(oracle, working, again);
      ledger.append(fresh, working.order().back());

      ev.reselected = scan.best;
      trace.rewires.push_back(std::move(ev));
      ++trace.rewire_count;

      st.trigger_fired = true;
      st.removed = sb.element;
      if (sb.ledger_stage >= 1) st.removed_stage = sb.ledger_stage;
      st.set_curvature_recorded = fresh;
      set = std::move(working);
    } else {
      ledger.append(current,
                    set.empty() ? std::optional<ElementId>{}
                                : std::optional<ElementId>{set.order().back()});
      st.set_curvature_recorded = current;
    }

    st.chosen = scan.best;
    st.gain = scan.max_gain;
    set.add(scan.best);
    st.f_after = oracle.evaluate(set);
    trace.stages.push_back(st);
  }

  trace.final_set = set;
  trace.ledger = ledger;
  trace.stats = oracle.stats();
  return trace;
}

}  // namespace

SolutionTrace sequential_greedy(ValueOracle& oracle, int kappa) {
  return run_stages(oracle, kappa, "sg", ResqueMode::kHeuristicLedger,
                    nullptr, nullptr);
}

SolutionTrace resque_greedy(ValueOracle& oracle, int kappa, ResqueMode mode) {
  return run_stages(
      oracle, kappa, "resque", mode,
      [](int, const CurvatureLedger& ledger, double current) {
        return trigger_law(ledger, current);
      },
      [](const CurvatureLedger& ledger, const SolutionSet& working) {
        return step_back(ledger, working);
      });
}

SolutionTrace random_rewiring_greedy(ValueOracle& oracle, int kappa,
                                     double p_rewire, std::uint64_t seed) {
  auto rng = std::make_shared<Rng>(seed);
  if (!(p_rewire >= 0.0 && p_rewire <= 1.0))
    throw Error("invalid-probability", "p_rewire must lie in [0,1]");
  return run_stages(
      oracle, kappa, "random-rewire", ResqueMode::kHeuristicLedger,
      [rng, p_rewire](int, const CurvatureLedger&, double) {
        return rng->bernoulli(p_rewire);
      },
      [rng](const CurvatureLedger& ledger, const SolutionSet& working) {
        const int idx =
            static_cast<int>(rng->uniform_int(0, working.size() - 1));
        const ElementId victim = working.order()[idx];
        return StepBack{victim, ledger.stage_of_source(victim)};
      });
}

}  // namespace resq
