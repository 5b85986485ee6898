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

#include "resq/bench.hpp"

#include <fmt/format.h>

#include <chrono>
#include <cmath>

#include "resq/rng.hpp"

namespace resq {

namespace {

double elapsed_ms(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now() - t0)
      .count();
}

double mean_of(const std::vector<double>& v) {
  if (v.empty()) return 0.0;
  double s = 0.0;
  for (double x : v) s += x;
  return s / static_cast<double>(v.size());
}

// Sample standard deviation; 0 for fewer than two observations.
double stddev_of(const std::vector<double>& v) {
  if (v.size() < 2) return 0.0;
  const double m = mean_of(v);
  double s = 0.0;
  for (double x : v) s += (x - m) * (x - m);
  return std::sqrt(s / static_cast<double>(v.size() - 1));
}

struct InstanceOutcome {
  bool failed = false;
  std::string failure;
  std::vector<RunReport> rows;
  bool certified = false;
  std::vector<std::string> violations;
};

}  // namespace

int apply_kappa_rule(const KappaRule& rule, int n_sites) {
  if (!rule.fixed && !rule.fraction)
    throw Error("invalid-config", "kappa rule has no terms");
  int k = n_sites;
  if (rule.fixed) k = std::min(k, *rule.fixed);
  if (rule.fraction)
    k = std::min(k, static_cast<int>(std::llround(*rule.fraction * n_sites)));
  return std::clamp(k, 1, n_sites);
}

SingleRun run_algorithm(const Instance& inst, const std::string& algorithm,
                        int kappa, ResqueMode mode, double p_rewire,
                        std::uint64_t seed, bool timing) {
  const CoverageOracle f(inst);
  ValueOracle session(f);
  const auto t0 = std::chrono::steady_clock::now();
  SolutionTrace trace;
  if (algorithm == "sg") {
    trace = sequential_greedy(session, kappa);
  } else if (algorithm == "resque") {
    trace = resque_greedy(session, kappa, mode);
  } else if (algorithm == "random-rewire") {
    trace = random_rewiring_greedy(session, kappa, p_rewire, seed);
  } else {
    throw Error("bad-algo", algorithm);
  }
  const double ms = timing ? elapsed_ms(t0) : 0.0;

  RunReport rep;
  rep.fingerprint = inst.fingerprint;
  rep.algorithm = algorithm;
  rep.n_sites = static_cast<int>(inst.sites.size());
  rep.n_points = static_cast<int>(inst.points.size());
  rep.kappa = kappa;
  rep.coverage = trace.stages.back().f_after;
  rep.normalized_coverage = rep.coverage / static_cast<double>(rep.n_points);
  rep.queries = trace.stats.queries;
  rep.rewires = trace.rewire_count;
  rep.wall_ms = ms;
  return {std::move(rep), std::move(trace)};
}

BenchResult run_bench(const BenchConfig& config) {
  if (config.n_instances < 1)
    throw Error("invalid-config", "n_instances must be positive");
  if (config.algorithms.empty())
    throw Error("invalid-config", "no algorithms configured");
  for (const std::string& a : config.algorithms)
    if (a != "sg" && a != "resque" && a != "random-rewire")
      throw Error("bad-algo", a);
  const auto check_range = [](IntRange r, const char* what) {
    if (r.lo < 1 || r.hi < r.lo)
      throw Error("invalid-config", std::string(what) + " range is empty");
  };
  check_range(config.n_sites, "n_sites");
  check_range(config.n_points, "n_points");
  check_range(config.n_components, "n_components");
  if (!(config.radius_fraction.lo >= 0.0 &&
        config.radius_fraction.hi >= config.radius_fraction.lo))
    throw Error("invalid-config", "radius_fraction range is empty");

  std::vector<InstanceOutcome> outcomes(config.n_instances);

#pragma omp parallel for schedule(dynamic)
  for (int i = 0; i < config.n_instances; ++i) {
    InstanceOutcome& out = outcomes[i];
    try {
      const std::uint64_t seed = config.base_seed + static_cast<std::uint64_t>(i);
      Rng sampler(stream_seed(seed, "bench-config"));
      GeneratorConfig g;
      g.seed = seed;
      g.n_sites = static_cast<int>(
          sampler.uniform_int(config.n_sites.lo, config.n_sites.hi));
      g.n_points = static_cast<int>(
          sampler.uniform_int(config.n_points.lo, config.n_points.hi));
      g.n_components = static_cast<int>(sampler.uniform_int(
          config.n_components.lo, config.n_components.hi));
      const double rf = sampler.uniform(config.radius_fraction.lo,
                                        config.radius_fraction.hi);
      const double radius = rf * config.domain.extent();
      const double h = config.radius_heterogeneity;
      g.radius = {radius * (1.0 - h), radius * (1.0 + h)};
      g.domain = config.domain;
      g.spread_fraction = config.spread_fraction;
      g.diversify_sites = config.diversify_sites;
      g.kappa = apply_kappa_rule(config.kappa_rule, g.n_sites);
      const Instance inst = generate_instance(g);

      std::optional<OptimalCertificate> cert;
      double curvature = 0.0;
      if (g.n_sites <= config.exact_threshold) {
        const CoverageOracle f(inst);
        cert = brute_force_opt(f, inst.kappa, config.exact_threshold);
        ValueOracle diag(f);
        curvature = total_curvature(diag);
        out.certified = true;
      }

      for (std::size_t a = 0; a < config.algorithms.size(); ++a) {
        SingleRun run = run_algorithm(
            inst, config.algorithms[a], inst.kappa, config.resque_mode,
            config.p_rewire, stream_seed(seed, "rewire"), config.timing);
        run.report.instance_index = i;
        out.rows.push_back(run.report);

        if (cert) {
          const BoundReport rep =
              certify_bounds(run.trace, *cert, inst.kappa, curvature);
          if (rep.violated)
            out.violations.push_back(fmt::format("instance {} {}: {}", i,
                                                 config.algorithms[a],
                                                 rep.detail));
        }
      }
    } catch (const std::exception& e) {
      out.failed = true;
      out.failure = e.what();
      out.rows.clear();
    }
  }

  BenchResult result;
  BenchSummary& sum = result.summary;
  sum.n_instances = config.n_instances;

  std::vector<std::vector<double>> cov(config.algorithms.size());
  std::vector<std::vector<double>> norm(config.algorithms.size());
  std::vector<std::vector<double>> queries(config.algorithms.size());
  std::vector<std::vector<double>> wall(config.algorithms.size());
  std::vector<std::int64_t> rewires(config.algorithms.size(), 0);
  std::vector<double> gaps;

  int sg_at = -1;
  int resque_at = -1;
  for (std::size_t a = 0; a < config.algorithms.size(); ++a) {
    if (config.algorithms[a] == "sg") sg_at = static_cast<int>(a);
    if (config.algorithms[a] == "resque") resque_at = static_cast<int>(a);
  }

  for (int i = 0; i < config.n_instances; ++i) {
    InstanceOutcome& out = outcomes[i];
    if (out.failed) {
      sum.failed_instances.push_back(i);
      sum.failure_reasons.push_back(out.failure);
      continue;
    }
    ++sum.completed;
    if (out.certified) ++sum.certified_instances;
    for (const std::string& v : out.violations) {
      ++sum.bound_violations;
      sum.violation_details.push_back(v);
    }
    for (std::size_t a = 0; a < config.algorithms.size(); ++a) {
      const RunReport& r = out.rows[a];
      cov[a].push_back(r.coverage);
      norm[a].push_back(r.normalized_coverage);
      queries[a].push_back(static_cast<double>(r.queries));
      wall[a].push_back(r.wall_ms);
      rewires[a] += r.rewires;
      result.rows.push_back(r);
    }
    if (sg_at >= 0 && resque_at >= 0)
      gaps.push_back(out.rows[resque_at].normalized_coverage -
                     out.rows[sg_at].normalized_coverage);
  }

  for (std::size_t a = 0; a < config.algorithms.size(); ++a) {
    AlgoStats st;
    st.algorithm = config.algorithms[a];
    st.runs = static_cast<int>(cov[a].size());
    st.mean_coverage = mean_of(cov[a]);
    st.mean_normalized = mean_of(norm[a]);
    st.stddev_normalized = stddev_of(norm[a]);
    st.mean_queries = mean_of(queries[a]);
    st.stddev_queries = stddev_of(queries[a]);
    st.mean_wall_ms = mean_of(wall[a]);
    st.total_rewires = rewires[a];
    sum.algorithms.push_back(std::move(st));
  }

  sum.paired_instances = static_cast<int>(gaps.size());
  if (!gaps.empty()) {
    sum.gap_mean = mean_of(gaps);
    sum.gap_std_err = stddev_of(gaps) / std::sqrt(double(gaps.size()));
    int not_worse = 0;
    for (double g : gaps)
      if (g >= 0.0) ++not_worse;
    sum.fraction_rewired_not_worse =
        static_cast<double>(not_worse) / static_cast<double>(gaps.size());
  }
  return result;
}

std::string render_bench_csv(const std::vector<RunReport>& rows) {
  std::string out =
      "instance_index,fingerprint,algorithm,n_sites,n_points,kappa,coverage,"
      "normalized_coverage,queries,rewires,wall_ms\n";
  for (const RunReport& r : rows)
    out += fmt::format("{},{},{},{},{},{},{},{},{},{},{}\n",
                       r.instance_index, r.fingerprint, r.algorithm,
                       r.n_sites, r.n_points, r.kappa, r.coverage,
                       r.normalized_coverage, r.queries, r.rewires,
                       r.wall_ms);
  return out;
}

}  // namespace resq
