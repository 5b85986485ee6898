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

#include "resq/trace.hpp"

#include <map>

namespace resq {

namespace {

void replay(const SolutionTrace& trace, std::vector<SolutionSet>* bases,
            std::vector<SolutionSet>* committed) {
  if (trace.stages.empty())
    throw Error("malformed-trace", "trace has no stages");
  // A rewired stage nets out to: provisional pick joins, the stepped-back
  // element leaves, then the reselected pick joins (it may re-add the leaver).
  std::map<int, ElementId> provisional;
  for (const RewireEvent& ev : trace.rewires) provisional[ev.stage] = ev.provisional;
  SolutionSet cur;
  for (std::size_t i = 0; i < trace.stages.size(); ++i) {
    const StageRecord& st = trace.stages[i];
    try {
      if (st.removed) {
        const auto prov = provisional.find(static_cast<int>(i) + 1);
        if (prov == provisional.end())
          throw Error("malformed-trace", "removal without a rewire event");
        cur.add(prov->second);
        cur.remove(*st.removed);
      }
      if (bases) bases->push_back(cur);
      cur.add(st.chosen);
    } catch (const Error& e) {
      throw Error("malformed-trace",
                  "stage " + std::to_string(i + 1) + ": " + e.what());
    }
    if (committed) committed->push_back(cur);
  }
  if (cur.sorted() != trace.final_set.sorted())
    throw Error("malformed-trace", "replayed set differs from final_set");
}

}  // namespace

std::vector<SolutionSet> stage_sets(const SolutionTrace& trace) {
  std::vector<SolutionSet> committed;
  committed.reserve(trace.stages.size());
  replay(trace, nullptr, &committed);
  return committed;
}

std::vector<SolutionSet> stage_bases(const SolutionTrace& trace) {
  std::vector<SolutionSet> bases;
  bases.reserve(trace.stages.size());
  replay(trace, &bases, nullptr);
  return bases;
}

}  // namespace resq
