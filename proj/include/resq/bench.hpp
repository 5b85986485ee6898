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

#ifndef RESQ_BENCH_HPP_
#define RESQ_BENCH_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "resq/algorithms.hpp"
#include "resq/coverage.hpp"
#include "resq/exact.hpp"
#include "resq/trace.hpp"

namespace resq {

struct IntRange {
  int lo = 0;
  int hi = 0;
};

struct DoubleRange {
  double lo = 0.0;
  double hi = 0.0;
};

// Budget rule for a sampled instance: the minimum of whichever of `fixed`
// and round(fraction * n_sites) are present, clamped to [1, n_sites].
struct KappaRule {
  std::optional<int> fixed;
  std::optional<double> fraction;
};

int apply_kappa_rule(const KappaRule& rule, int n_sites);

struct BenchConfig {
  std::uint64_t base_seed = 0;
  int n_instances = 1;
  IntRange n_sites{10, 30};
  IntRange n_points{1000, 5000};
  IntRange n_components{2, 6};
  // Center coverage radius per instance, as a fraction of the domain
  // extent; the low end gives nearly disjoint disks, the high end heavy
  // overlap, so a sweep spans the saturation spectrum.
  DoubleRange radius_fraction{0.05, 0.35};
  // Per-site radii are drawn uniformly from center * [1 - h, 1 + h]. At 0
  // every site in an instance shares one radius; larger values mix big and
  // small disks, which is where stepping back recorded picks pays off.
  double radius_heterogeneity = 0.5;
  BoundingBox domain{0.0, 0.0, 100.0, 100.0};
  double spread_fraction = 0.10;  // demand cluster sigma / domain extent
  bool diversify_sites = true;
  KappaRule kappa_rule{5, 0.5};
  std::vector<std::string> algorithms{"sg", "resque", "random-rewire"};
  ResqueMode resque_mode = ResqueMode::kHeuristicLedger;
  double p_rewire = 0.5;
  // Instances with at most this many sites also get an exhaustive optimum
  // and a floor certification for every run.
  int exact_threshold = 12;
  bool timing = true;
};

// One CSV row of a sweep (also the per-run report of the run subcommand).
struct RunReport {
  int instance_index = 0;
  std::string fingerprint;
  std::string algorithm;
  int n_sites = 0;
  int n_points = 0;
  int kappa = 0;
  double coverage = 0.0;
  double normalized_coverage = 0.0;  // coverage / n_points
  std::uint64_t queries = 0;
  int rewires = 0;
  double wall_ms = 0.0;  // 0 when timing is disabled
};

struct AlgoStats {
  std::string algorithm;
  int runs = 0;
  double mean_coverage = 0.0;
  double mean_normalized = 0.0;
  double stddev_normalized = 0.0;
  double mean_queries = 0.0;
  double stddev_queries = 0.0;
  double mean_wall_ms = 0.0;
  std::int64_t total_rewires = 0;
};

struct BenchSummary {
  int n_instances = 0;
  int completed = 0;
  std::vector<int> failed_instances;
  std::vector<std::string> failure_reasons;
  std::vector<AlgoStats> algorithms;
  // Paired per-instance gap of normalized coverage, rewired minus plain.
  int paired_instances = 0;
  double gap_mean = 0.0;
  double gap_std_err = 0.0;
  double fraction_rewired_not_worse = 0.0;
  int certified_instances = 0;
  int bound_violations = 0;
  std::vector<std::string> violation_details;
};

struct BenchResult {
  std::vector<RunReport> rows;  // instance-major, algorithms in config order
  BenchSummary summary;
};

// Runs one algorithm on one instance with a fresh oracle session.
struct SingleRun {
  RunReport report;
  SolutionTrace trace;
};
SingleRun run_algorithm(const Instance& inst, const std::string& algorithm,
                        int kappa, ResqueMode mode, double p_rewire,
                        std::uint64_t seed, bool timing);

// Seeded sweep: instance i is generated from seed base_seed + i, all
// configured algorithms run on it, and small instances are certified
// against their exhaustive optimum. Instances are processed in parallel
// when OpenMP is enabled; outputs are position-keyed so the artifact bytes
// do not depend on the thread count. A failing instance is recorded in the
// summary and skipped, not fatal.
BenchResult run_bench(const BenchConfig& config);

// Fixed-column CSV (header included, LF line ends, round-trip-exact floats).
std::string render_bench_csv(const std::vector<RunReport>& rows);

}  // namespace resq

#endif  // RESQ_BENCH_HPP_
