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

#ifndef RESQ_ORACLE_HPP_
#define RESQ_ORACLE_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "resq/types.hpp"

namespace resq {

// A monotone submodular set function over ground set {0,...,ground_size()-1}
// with f(empty) = 0. value() must be pure and safe to call concurrently.
class SetFunction {
 public:
  virtual ~SetFunction() = default;

  // `members` need not be sorted; may contain no duplicates.
  virtual double value(std::span<const ElementId> members) const = 0;

  virtual int ground_size() const = 0;

  // Stable identifier of the underlying instance, "" if not applicable.
  virtual std::string fingerprint() const { return ""; }
};

// Memoizing evaluation session. All algorithm and diagnostic code funnels
// evaluations through one of these; stats().queries is the number of
// distinct sets evaluated, which is the cost model every query bound in
// this library refers to. The empty set is preseeded as 0 and never counts.
class ValueOracle {
 public:
  explicit ValueOracle(const SetFunction& f);

  double evaluate(std::span<const ElementId> members);
  double evaluate(const SolutionSet& s) { return evaluate_sorted(s.sorted()); }

  int ground_size() const { return ground_size_; }
  const SetFunction& function() const { return *f_; }
  const OracleStats& stats() const { return stats_; }

 private:
  friend double marginal_gain(ValueOracle&, const SolutionSet&, ElementId);

  struct KeyHash {
    std::size_t operator()(const std::vector<ElementId>& v) const;
  };

  double evaluate_sorted(std::vector<ElementId> key);

  const SetFunction* f_;
  int ground_size_;
  std::unordered_map<std::vector<ElementId>, double, KeyHash> cache_;
  std::optional<std::vector<double>> singletons_;
  OracleStats stats_;

  friend const std::vector<double>& singleton_values(ValueOracle&);
};

// f(base + e) - f(base), clamped at 0 (a negative difference can only be
// floating-point noise for a monotone f; clamps are counted in stats).
// Throws element-already-in-set if e is a member of base.
double marginal_gain(ValueOracle& oracle, const SolutionSet& base,
                     ElementId e);

struct ScanResult {
  ElementId best = -1;   // candidate with the largest gain, lowest id on ties
  double max_gain = 0.0;
  double min_gain = 0.0;
};

// Evaluates the gain of every candidate on top of `base`. Exactly
// |candidates| + 1 distinct sets are touched, so a fresh session spends
// |candidates| + 1 queries and a warm one spends only what is missing.
ScanResult scan_marginals(ValueOracle& oracle, const SolutionSet& base,
                          std::span<const ElementId> candidates);

// f({e}) for every element, computed once per session and cached.
const std::vector<double>& singleton_values(ValueOracle& oracle);

}  // namespace resq

#endif  // RESQ_ORACLE_HPP_
