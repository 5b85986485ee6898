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

#include <cmath>
#include <cstdint>
#include <vector>

#include "doctest.h"
#include "fixtures.hpp"
#include "resq/algorithms.hpp"
#include "resq/coverage.hpp"
#include "resq/curvature.hpp"
#include "resq/oracle.hpp"

namespace resq {
namespace {

using testing::error_code_of;
using testing::rewire_showcase_instance;
using testing::small_random_instance;
using testing::unit_square_instance;

constexpr double kTol = 1e-12;

TEST_CASE("binomial coefficients with saturation") {
  CHECK(binomial(0, 0) == 1);
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(20, 10) == 184756);
  CHECK(binomial(64, 32) == 1832624140942590534ull);
  CHECK(binomial(5, 7) == 0);
  CHECK(binomial(200, 100) == UINT64_MAX);  // saturated, not overflowed
}

TEST_CASE("exhaustive optimum on the unit square") {
  const Instance inst = unit_square_instance();
  const CoverageOracle f(inst);
  const OptimalCertificate cert = brute_force_opt(f, 2);
  CHECK(cert.members == std::vector<ElementId>{0, 1});
  CHECK(cert.value == 4.0);
  CHECK(cert.subsets_enumerated == 1);
  CHECK(cert.fingerprint == inst.fingerprint);
}

TEST_CASE("exhaustive optimum on the showcase geometry") {
  const Instance inst = rewire_showcase_instance();
  const CoverageOracle f(inst);
  const OptimalCertificate cert = brute_force_opt(f, 4);
  CHECK(cert.members == std::vector<ElementId>{1, 2, 3, 4});
  CHECK(cert.value == 212.0);
  CHECK(cert.subsets_enumerated == 70);  // C(8, 4)
}

TEST_CASE("optimum edge cases: full budget, ties, size guard") {
  const Instance mod = testing::modular_instance(6, 6);
  const CoverageOracle fm(mod);
  const OptimalCertificate full = brute_force_opt(fm, 6);
  CHECK(full.members == std::vector<ElementId>{0, 1, 2, 3, 4, 5});

  // Three identical disjoint disks: every pair is optimal; the certificate
  // must pick the lexicographically smallest.
  std::vector<Point> pts = {{0, 0}, {20, 0}, {40, 0}};
  std::vector<Site> sites = {{0, 0, 0, 1}, {1, 20, 0, 1}, {2, 40, 0, 1}};
  const Instance tie = make_instance(pts, sites, 2);
  const CoverageOracle ft(tie);
  CHECK(brute_force_opt(ft, 2).members == std::vector<ElementId>{0, 1});

  const Instance big = small_random_instance(1, 25, 7, 100);
  const CoverageOracle fb(big);
  CHECK(error_code_of([&] { brute_force_opt(fb, 7, 20); }) ==
        "instance-too-large");
}

TEST_CASE("ranked parallel enumeration matches the recursive reference") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const int n = 6 + static_cast<int>(seed % 5);
    const int kappa = 2 + static_cast<int>(seed % 3);
    const Instance inst = small_random_instance(seed, n, kappa, 150);
    const CoverageOracle f(inst);
    const OptimalCertificate fast = brute_force_opt(f, kappa);
    const OptimalCertificate slow = brute_force_opt_serial(f, kappa);
    CHECK(fast.value == slow.value);
    CHECK(fast.members == slow.members);
    CHECK(fast.subsets_enumerated == slow.subsets_enumerated);
  }
}

TEST_CASE("bound certification on the unit square") {
  const Instance inst = unit_square_instance();
  const CoverageOracle f(inst);
  ValueOracle session(f);
  const SolutionTrace trace = sequential_greedy(session, 2);
  const OptimalCertificate cert = brute_force_opt(f, 2);
  ValueOracle curv_session(f);
  const double c = total_curvature(curv_session);

  const BoundReport report = certify_bounds(trace, cert, 2, c);
  CHECK_FALSE(report.violated);
  CHECK(report.final_ratio == 1.0);
  REQUIRE(report.floor_ratio.size() == 2);
  CHECK(std::abs(report.floor_ratio[0] - 0.5) < kTol);
  CHECK(std::abs(report.floor_ratio[1] - 0.75) < kTol);
  CHECK(report.stage_ratio[0] == 0.75);
  CHECK(report.stage_ratio[1] == 1.0);
  CHECK(std::abs(report.classic_floor - (1.0 - std::exp(-1.0))) < kTol);
  const double expected_floor = (1.0 - std::exp(-c)) / c;
  CHECK(std::abs(report.curvature_floor - expected_floor) < kTol);
  CHECK(report.total_curvature == c);
}

TEST_CASE("certification flags dips and rejects foreign certificates") {
  const Instance inst = unit_square_instance();
  const CoverageOracle f(inst);
  ValueOracle session(f);
  SolutionTrace trace = sequential_greedy(session, 2);
  const OptimalCertificate cert = brute_force_opt(f, 2);

  SolutionTrace dipping = trace;
  dipping.stages[1].f_after = 2.0;  // below both the floor and stage 1
  const BoundReport bad = certify_bounds(dipping, cert, 2, 0.5);
  CHECK(bad.violated);
  CHECK_FALSE(bad.detail.empty());

  const Instance other = rewire_showcase_instance();
  const CoverageOracle fo(other);
  const OptimalCertificate foreign = brute_force_opt(fo, 4);
  CHECK(error_code_of([&] { certify_bounds(trace, foreign, 2, 0.5); }) ==
        "mismatched-instance");
  CHECK(error_code_of([&] { certify_bounds(trace, cert, 4, 0.5); }) ==
        "kappa-out-of-range");
}

TEST_CASE("run comparison is all-zero for identical runs") {
  const Instance inst = unit_square_instance();
  const CoverageOracle f(inst);
  ValueOracle a(f), b(f), probe(f);
  const SolutionTrace sg = sequential_greedy(a, 2);
  const SolutionTrace rs = resque_greedy(b, 2);
  const RunComparison cmp = compare_runs(probe, sg, rs);
  REQUIRE(cmp.stages.size() == 2);
  for (const StageComparison& sc : cmp.stages) {
    CHECK(sc.value_gap == 0.0);
    CHECK(sc.gap_nonnegative);
    CHECK(sc.sufficient);
  }
  CHECK(cmp.final_gap == 0.0);
  CHECK(cmp.stages_sufficient == 2);
}

TEST_CASE("run comparison on the showcase geometry") {
  const Instance inst = rewire_showcase_instance();
  const CoverageOracle f(inst);
  ValueOracle a(f), b(f), probe(f);
  const SolutionTrace sg = sequential_greedy(a, 4);
  const SolutionTrace rs = resque_greedy(b, 4);
  const RunComparison cmp = compare_runs(probe, sg, rs);

  REQUIRE(cmp.stages.size() == 4);
  const double gaps[] = {0.0, 0.0, 12.0, 5.0};
  for (int i = 0; i < 4; ++i) {
    CHECK(cmp.stages[i].value_gap == gaps[i]);
    CHECK(cmp.stages[i].gap_nonnegative);
    CHECK(cmp.stages[i].sufficient);
  }
  // At the rewire stage the chain term and the saturation term coincide:
  // the provisional pick was itself the most saturated candidate.
  CHECK(std::abs(cmp.stages[2].lhs - (1.0 - 20.0 / 65.0)) < kTol);
  CHECK(std::abs(cmp.stages[2].rhs - (1.0 - 20.0 / 65.0)) < kTol);
  CHECK(cmp.final_gap == 5.0);
  CHECK(cmp.stages_sufficient == 4);

  const Instance other = unit_square_instance();
  const CoverageOracle fo(other);
  ValueOracle c(fo), probe2(fo);
  const SolutionTrace foreign = sequential_greedy(c, 2);
  CHECK(error_code_of([&] { compare_runs(probe2, sg, foreign); }) ==
        "mismatched-instance");
}

TEST_CASE("tightest-bound identity: measured ratios respect gamma star") {
  int optimal_runs = 0;
  for (std::uint64_t seed = 200; seed < 240; ++seed) {
    const int n = 9 + static_cast<int>(seed % 2);
    const int kappa = 3 + static_cast<int>(seed % 2);
    const Instance inst = small_random_instance(seed, n, kappa, 250, 0.2, 0.6);
    const CoverageOracle f(inst);
    const OptimalCertificate cert = brute_force_opt(f, kappa);
    SolutionSet opt(n);
    for (ElementId e : cert.members) opt.add(e);

    for (int variant = 0; variant < 2; ++variant) {
      ValueOracle session(f);
      const SolutionTrace trace = variant == 0 ? sequential_greedy(session, kappa)
                                               : resque_greedy(session, kappa);
      const double ratio = trace.stages.back().f_after / cert.value;
      ValueOracle probe(f);
      const double gs = gamma_star(probe, trace, opt);
      if (gs > 0.0) {
        CHECK(ratio >= (1.0 / gs) * (1.0 - std::exp(-gs)) - 1e-6);
      } else {
        CHECK(trace.stages.back().f_after == cert.value);
        ++optimal_runs;
      }
    }
  }
  CHECK(optimal_runs > 0);  // the zero-curvature branch must be exercised
}

}  // namespace
}  // namespace resq
