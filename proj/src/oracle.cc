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

#include "resq/oracle.hpp"

#include <algorithm>

namespace resq {

std::size_t ValueOracle::KeyHash::operator()(
    const std::vector<ElementId>& v) const {
  // FNV-1a over the id stream; keys are canonical (sorted) so this is a
  // well-defined set hash.
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (ElementId e : v) {
    for (int b = 0; b < 4; ++b) {
      h ^= static_cast<std::uint64_t>((static_cast<std::uint32_t>(e) >> (8 * b)) & 0xff);
      h *= 0x100000001b3ULL;
    }
  }
  return static_cast<std::size_t>(h);
}

ValueOracle::ValueOracle(const SetFunction& f)
    : f_(&f), ground_size_(f.ground_size()) {
  cache_.emplace(std::vector<ElementId>{}, 0.0);
}

double ValueOracle::evaluate_sorted(std::vector<ElementId> key) {
  auto it = cache_.find(key);
  if (it != cache_.end()) {
    if (key.size() > 0) ++stats_.cache_hits;  // empty set is free, not a hit
    return it->second;
  }
  for (ElementId e : key)
    if (e < 0 || e >= ground_size_)
      throw Error("element-out-of-range", std::to_string(e));
  const double v = f_->value(key);
  ++stats_.queries;
  cache_.emplace(std::move(key), v);
  return v;
}

double ValueOracle::evaluate(std::span<const ElementId> members) {
  std::vector<ElementId> key(members.begin(), members.end());
  std::sort(key.begin(), key.end());
  if (std::adjacent_find(key.begin(), key.end()) != key.end())
    throw Error("duplicate-element", "evaluation set has a repeated id");
  return evaluate_sorted(std::move(key));
}

double marginal_gain(ValueOracle& oracle, const SolutionSet& base,
                     ElementId e) {
  if (base.contains(e)) throw Error("element-already-in-set", std::to_string(e));
  std::vector<ElementId> key = base.sorted();
  key.insert(std::lower_bound(key.begin(), key.end(), e), e);
  const double with = oracle.evaluate_sorted(std::move(key));
  const double without = oracle.evaluate_sorted(base.sorted());
  double gain = with - without;
  if (gain < 0.0) {
    ++oracle.stats_.negative_clamps;
    gain = 0.0;
  }
  return gain;
}

ScanResult scan_marginals(ValueOracle& oracle, const SolutionSet& base,
                          std::span<const ElementId> candidates) {
  if (candidates.empty()) throw Error("empty-candidates", "nothing to scan");
  ScanResult r;
  bool first = true;
  for (ElementId e : candidates) {
    const double g = marginal_gain(oracle, base, e);
    if (first || g > r.max_gain || (g == r.max_gain && e < r.best)) {
      r.best = e;
      r.max_gain = g;
    }
    if (first || g < r.min_gain) r.min_gain = g;
    first = false;
  }
  return r;
}

const std::vector<double>& singleton_values(ValueOracle& oracle) {
  if (!oracle.singletons_) {
    std::vector<double> s(oracle.ground_size_);
    for (ElementId e = 0; e < oracle.ground_size_; ++e)
      s[e] = oracle.evaluate_sorted({e});
    oracle.singletons_ = std::move(s);
  }
  return *oracle.singletons_;
}

}  // namespace resq
