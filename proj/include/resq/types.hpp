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

#ifndef RESQ_TYPES_HPP_
#define RESQ_TYPES_HPP_

#include <algorithm>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace resq {

// Index of a site in the ground set. Ground sets are always {0, ..., n-1}.
using ElementId = std::int32_t;

// Error with a stable machine-readable code ("kappa-out-of-range: ...").
// The code is the part before the first colon of what().
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& detail)
      : std::runtime_error(code + ": " + detail), code_(std::move(code)) {}

  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

// Counters for one oracle session. `queries` counts distinct evaluated sets
// (cache misses); repeated evaluations of the same set are free.
struct OracleStats {
  std::uint64_t queries = 0;
  std::uint64_t cache_hits = 0;
  std::uint64_t negative_clamps = 0;
};

// A solution under construction. Keeps both insertion order (the selection
// chain s_1, s_2, ...) and a membership bitmap for O(1) lookups. Elements are
// unique; add() on a member and remove() on a non-member throw.
class SolutionSet {
 public:
  SolutionSet() = default;
  explicit SolutionSet(int ground_size) : member_(ground_size, false) {}

  void add(ElementId e) {
    grow(e);
    if (member_[e]) throw Error("element-already-in-set", std::to_string(e));
    member_[e] = true;
    order_.push_back(e);
  }

  void remove(ElementId e) {
    if (e < 0 || e >= static_cast<ElementId>(member_.size()) || !member_[e])
      throw Error("element-not-in-set", std::to_string(e));
    member_[e] = false;
    order_.erase(std::find(order_.begin(), order_.end(), e));
  }

  bool contains(ElementId e) const {
    return e >= 0 && e < static_cast<ElementId>(member_.size()) && member_[e];
  }

  // Selection order: order()[i] is the element whose addition formed the
  // (i+1)-th set in the chain.
  const std::vector<ElementId>& order() const { return order_; }

  // Members in ascending id order (canonical form for oracle keys).
  std::vector<ElementId> sorted() const {
    std::vector<ElementId> s = order_;
    std::sort(s.begin(), s.end());
    return s;
  }

  int size() const { return static_cast<int>(order_.size()); }
  bool empty() const { return order_.empty(); }

 private:
  void grow(ElementId e) {
    if (e < 0) throw Error("element-not-in-set", std::to_string(e));
    if (e >= static_cast<ElementId>(member_.size())) member_.resize(e + 1, false);
  }

  std::vector<ElementId> order_;
  std::vector<bool> member_;
};

inline double clamp01(double x) { return std::clamp(x, 0.0, 1.0); }

// Elements of {0,...,ground_size-1} not in `s`, ascending.
inline std::vector<ElementId> complement_of(const SolutionSet& s,
                                            int ground_size) {
  std::vector<ElementId> out;
  out.reserve(ground_size - s.size());
  for (ElementId e = 0; e < ground_size; ++e)
    if (!s.contains(e)) out.push_back(e);
  return out;
}

}  // namespace resq

#endif  // RESQ_TYPES_HPP_
