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

#include "resq/exact.hpp"

#include <algorithm>
#include <cmath>

#include "resq/curvature.hpp"

namespace resq {

namespace {

constexpr std::uint64_t kEnumerationCap = 20'000'000;
constexpr double kTol = 1e-9;

void check_enumerable(int n, int kappa, int max_n) {
  if (kappa < 1 || kappa > n)
    throw Error("kappa-out-of-range",
                std::to_string(kappa) + " with " + std::to_string(n) +
                    " sites");
  if (n > max_n)
    throw Error("instance-too-large",
                std::to_string(n) + " sites exceeds the exhaustive limit " +
                    std::to_string(max_n));
  if (binomial(n, kappa) > kEnumerationCap)
    throw Error("instance-too-large", "too many subsets to enumerate");
}

struct Best {
  double value = -1.0;
  std::vector<ElementId> members;

  void offer(double v, const std::vector<ElementId>& m) {
    // Enumeration is lexicographic, so keeping strict improvements leaves
    // the lexicographically smallest maximizer in place.
    if (v > value) {
      value = v;
      members = m;
    }
  }

  // Cross-chunk combine where `other` covers later ranks than *this.
  void merge_later(const Best& other) {
    if (other.value > value) {
      value = other.value;
      members = other.members;
    }
  }
};

// Lexicographically `rank`-th ascending kappa-subset of {0..n-1}.
std::vector<ElementId> unrank_combination(std::uint64_t rank, int n,
                                          int kappa) {
  std::vector<ElementId> out;
  out.reserve(kappa);
  int v = 0;
  for (int pos = 0; pos < kappa; ++pos) {
    for (;; ++v) {
      const std::uint64_t with_v = binomial(n - v - 1, kappa - pos - 1);
      if (rank < with_v) break;
      rank -= with_v;
    }
    out.push_back(v++);
  }
  return out;
}

// In-place lexicographic successor; combo must not be the last one.
void next_combination(std::vector<ElementId>* combo, int n) {
  const int k = static_cast<int>(combo->size());
  int i = k - 1;
  while ((*combo)[i] == n - k + i) --i;
  ElementId v = ++(*combo)[i];
  for (int j = i + 1; j < k; ++j) (*combo)[j] = ++v;
}

void dfs_subsets(const SetFunction& f, int n, int kappa, int start,
                 std::vector<ElementId>* cur, Best* best,
                 std::uint64_t* visited) {
  if (static_cast<int>(cur->size()) == kappa) {
    ++*visited;
    best->offer(f.value(*cur), *cur);
    return;
  }
  const int slots = kappa - static_cast<int>(cur->size());
  for (int v = start; v <= n - slots; ++v) {
    cur->push_back(v);
    dfs_subsets(f, n, kappa, v + 1, cur, best, visited);
    cur->pop_back();
  }
}

}  // namespace

std::uint64_t binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 r = 1;
  for (int i = 1; i <= k; ++i) {
    r = r * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
    if (r > UINT64_MAX) return UINT64_MAX;
  }
  return static_cast<std::uint64_t>(r);
}

OptimalCertificate brute_force_opt(const SetFunction& f, int kappa,
                                   int max_n) {
  const int n = f.ground_size();
  check_enumerable(n, kappa, max_n);
  const std::uint64_t total = binomial(n, kappa);
  // Fixed chunk grid, parallelized over chunks: the per-chunk winners and
  // the ordered merge below are independent of the thread count.
  const int chunks = static_cast<int>(std::min<std::uint64_t>(total, 64));
  std::vector<Best> best(chunks);

#pragma omp parallel for schedule(dynamic)
  for (int c = 0; c < chunks; ++c) {
    const std::uint64_t lo = total * c / chunks;
    const std::uint64_t hi = total * (c + 1) / chunks;
    if (lo >= hi) continue;
    std::vector<ElementId> combo = unrank_combination(lo, n, kappa);
    for (std::uint64_t r = lo;;) {
      best[c].offer(f.value(combo), combo);
      if (++r >= hi) break;
      next_combination(&combo, n);
    }
  }

  Best overall = best[0];
  for (int c = 1; c < chunks; ++c) overall.merge_later(best[c]);
  return {overall.members, overall.value, total, f.fingerprint()};
}

OptimalCertificate brute_force_opt_serial(const SetFunction& f, int kappa,
                                          int max_n) {
  const int n = f.ground_size();
  check_enumerable(n, kappa, max_n);
  Best best;
  std::vector<ElementId> cur;
  std::uint64_t visited = 0;
  dfs_subsets(f, n, kappa, 0, &cur, &best, &visited);
  return {best.members, best.value, visited, f.fingerprint()};
}

BoundReport certify_bounds(const SolutionTrace& trace,
                           const OptimalCertificate& opt, int kappa,
                           double total_curvature) {
  if (trace.fingerprint != opt.fingerprint)
    throw Error("mismatched-instance",
                "trace and certificate come from different instances");
  if (kappa != trace.kappa)
    throw Error("kappa-out-of-range",
                "certification kappa differs from the trace's");
  if (trace.stages.empty()) throw Error("malformed-trace", "no stages");

  BoundReport rep;
  rep.opt_value = opt.value;
  rep.final_value = trace.stages.back().f_after;
  rep.final_ratio =
      opt.value > 0.0 ? rep.final_value / opt.value : 1.0;
  rep.classic_floor = 1.0 - std::exp(-1.0);
  rep.total_curvature = total_curvature;
  rep.curvature_floor =
      total_curvature > 0.0
          ? (1.0 - std::exp(-total_curvature)) / total_curvature
          : 1.0;

  const auto flag = [&](const std::string& what) {
    if (!rep.violated) {
      rep.violated = true;
      rep.detail = what;
    }
  };

  double prev = 0.0;
  for (std::size_t i = 0; i < trace.stages.size(); ++i) {
    const double achieved = trace.stages[i].f_after;
    const double floor =
        1.0 - std::pow(1.0 - 1.0 / kappa, static_cast<double>(i) + 1.0);
    rep.floor_ratio.push_back(floor);
    rep.stage_ratio.push_back(opt.value > 0.0 ? achieved / opt.value : 1.0);
    if (achieved + kTol < floor * opt.value)
      flag("stage " + std::to_string(i + 1) + " under its floor");
    if (achieved + kTol < prev)
      flag("value decreased at stage " + std::to_string(i + 1));
    prev = achieved;
  }
  if (static_cast<int>(trace.stages.size()) == kappa &&
      rep.final_value + kTol < rep.classic_floor * opt.value)
    flag("final value under the 1-1/e floor");
  return rep;
}

RunComparison compare_runs(ValueOracle& oracle, const SolutionTrace& plain,
                           const SolutionTrace& rewired) {
  if (plain.fingerprint != rewired.fingerprint)
    throw Error("mismatched-instance",
                "traces come from different instances");
  const std::vector<SolutionSet> p_sets = stage_sets(plain);
  const std::vector<SolutionSet> r_sets = stage_sets(rewired);
  const std::vector<double>& singles = singleton_values(oracle);
  const int n = oracle.ground_size();
  const int m = static_cast<int>(std::min(p_sets.size(), r_sets.size()));

  RunComparison out;
  const SolutionSet empty(n);
  double prev_gap = 0.0;
  for (int i = 0; i < m; ++i) {
    StageComparison sc;
    sc.stage = i + 1;
    const double fp = oracle.evaluate(p_sets[i]);
    const double fr = oracle.evaluate(r_sets[i]);
    sc.value_gap = fr - fp;
    sc.gap_nonnegative = sc.value_gap >= -kTol;

    const ElementId pick = plain.stages[i].chosen;
    const double fp_prev = i > 0 ? oracle.evaluate(p_sets[i - 1]) : 0.0;
    const double single = singles[pick];
    const double chain_term =
        single > 0.0 ? clamp01(1.0 - (fp - fp_prev) / single) : 0.0;
    sc.lhs = chain_term + (single > 0.0 ? prev_gap / single : 0.0);

    // Saturation of the rewired set against what the plain run still had
    // available at this stage.
    const SolutionSet& r_prev_ref = i > 0 ? r_sets[i - 1] : empty;
    std::vector<ElementId> candidates;
    for (ElementId e = 0; e < n; ++e)
      if (!r_prev_ref.contains(e) &&
          (i == 0 || !p_sets[i - 1].contains(e)))
        candidates.push_back(e);
    sc.rhs = candidates.empty()
                 ? 0.0
                 : set_curvature(oracle, r_prev_ref, candidates);
    sc.sufficient = sc.lhs >= sc.rhs - kTol;
    if (sc.sufficient) ++out.stages_sufficient;

    prev_gap = sc.value_gap;
    out.stages.push_back(sc);
  }
  out.final_gap = out.stages.empty() ? 0.0 : out.stages.back().value_gap;
  return out;
}

}  // namespace resq
