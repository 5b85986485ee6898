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

// Command-line front end: generate instances, run the solvers, sweep
// benchmarks, certify small instances exhaustively, and render SVG maps.
//
// Exit codes: 0 success, 1 usage error, 2 runtime failure, 3 a certified
// floor was violated.

#include <fmt/format.h>

#include <cstdio>
#include <filesystem>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "resq/algorithms.hpp"
#include "resq/bench.hpp"
#include "resq/coverage.hpp"
#include "resq/curvature.hpp"
#include "resq/exact.hpp"
#include "resq/json_io.hpp"
#include "resq/rng.hpp"
#include "resq/svg.hpp"

namespace {

constexpr int kExitViolation = 3;

resq::ResqueMode parse_mode(const std::string& mode) {
  if (mode == "heuristic") return resq::ResqueMode::kHeuristicLedger;
  if (mode == "exact") return resq::ResqueMode::kExactRecompute;
  throw resq::Error("invalid-config", "mode must be heuristic|exact");
}

struct GenerateArgs {
  resq::GeneratorConfig config;
  std::vector<double> radius;
  double extent = 100.0;
  std::string points_csv;
  std::string out;
};

int cmd_generate(GenerateArgs& args) {
  resq::GeneratorConfig& cfg = args.config;
  cfg.domain = {0.0, 0.0, args.extent, args.extent};
  if (args.radius.empty()) {
    const double r = 0.15 * cfg.domain.extent();
    cfg.radius = {r, r};
  } else if (args.radius.size() == 1) {
    cfg.radius = {args.radius[0], args.radius[0]};
  } else {
    cfg.radius = {args.radius[0], args.radius[1]};
  }

  resq::Instance inst;
  if (args.points_csv.empty()) {
    inst = resq::generate_instance(cfg);
  } else {
    // External demand points: generate sites over their bounding box, then
    // splice the points in. The site stream does not depend on the points,
    // so the result is still fully seed-determined.
    std::vector<resq::Point> pts = resq::load_points_csv(args.points_csv);
    if (pts.empty())
      throw resq::Error("invalid-instance", args.points_csv + " has no rows");
    resq::BoundingBox bb{pts[0].x, pts[0].y, pts[0].x, pts[0].y};
    for (const resq::Point& p : pts) {
      bb.xmin = std::min(bb.xmin, p.x);
      bb.ymin = std::min(bb.ymin, p.y);
      bb.xmax = std::max(bb.xmax, p.x);
      bb.ymax = std::max(bb.ymax, p.y);
    }
    const double pad = std::max(bb.extent(), 1.0) * 0.01;
    cfg.domain = {bb.xmin - pad, bb.ymin - pad, bb.xmax + pad, bb.ymax + pad};
    if (args.radius.empty()) {
      const double r = 0.15 * cfg.domain.extent();
      cfg.radius = {r, r};
    }
    resq::GeneratorConfig site_cfg = cfg;
    site_cfg.n_points = 1;  // replaced below
    resq::Instance scaffold = resq::generate_instance(site_cfg);
    inst = resq::make_instance(std::move(pts), scaffold.sites,
                               scaffold.kappa);
  }
  resq::save_instance_json(inst, args.out);
  fmt::print("{}\n", inst.fingerprint);
  return 0;
}

struct RunArgs {
  std::string instance;
  std::string algo;
  int kappa = 0;
  std::string mode = "heuristic";
  double p_rewire = 0.5;
  std::uint64_t seed = 0;
  std::string trace_out;
  bool timing = true;
};

int cmd_run(const RunArgs& args) {
  const resq::Instance inst = resq::load_instance_json(args.instance);
  const int kappa = args.kappa > 0 ? args.kappa : inst.kappa;
  resq::SingleRun run =
      resq::run_algorithm(inst, args.algo, kappa, parse_mode(args.mode),
                          args.p_rewire, args.seed, args.timing);
  if (!args.trace_out.empty())
    resq::write_text_file(args.trace_out,
                          resq::trace_to_json(run.trace).dump(2) + "\n");
  nlohmann::json rep = resq::run_report_to_json(run.report);
  rep["final_set"] = run.trace.final_set.order();
  fmt::print("{}\n", rep.dump(2));
  return 0;
}

struct BenchArgs {
  std::string config_path;
  std::string out_dir = ".";
  bool no_timing = false;
};

int cmd_bench(const BenchArgs& args) {
  resq::BenchConfig config =
      resq::bench_config_from_json(resq::read_json_file(args.config_path));
  if (args.no_timing) config.timing = false;
  const resq::BenchResult result = resq::run_bench(config);

  std::filesystem::create_directories(args.out_dir);
  const auto path = [&](const char* name) {
    return (std::filesystem::path(args.out_dir) / name).string();
  };
  resq::write_text_file(path("bench.csv"),
                        resq::render_bench_csv(result.rows));
  nlohmann::json summary{
      {"config", resq::bench_config_to_json(config)},
      {"summary", resq::bench_summary_to_json(result.summary)}};
  resq::write_text_file(path("summary.json"), summary.dump(2) + "\n");

  fmt::print("{} instances ({} failed), {} rows, gap mean {:+.6f} (se {:.6f})\n",
             result.summary.n_instances,
             static_cast<int>(result.summary.failed_instances.size()),
             static_cast<int>(result.rows.size()), result.summary.gap_mean,
             result.summary.gap_std_err);
  for (const std::string& v : result.summary.violation_details)
    fmt::print(stderr, "floor violation: {}\n", v);
  return result.summary.bound_violations > 0 ? kExitViolation : 0;
}

struct ExactArgs {
  std::string instance;
  int kappa = 0;
  std::vector<std::string> algos{"sg", "resque", "random-rewire"};
  std::string mode = "heuristic";
  double p_rewire = 0.5;
  std::uint64_t seed = 0;
  std::string json_out;
  int max_n = 18;
};

int cmd_exact(const ExactArgs& args) {
  const resq::Instance inst = resq::load_instance_json(args.instance);
  const int kappa = args.kappa > 0 ? args.kappa : inst.kappa;
  const resq::CoverageOracle f(inst);
  const resq::OptimalCertificate cert =
      resq::brute_force_opt(f, kappa, args.max_n);
  resq::ValueOracle diag(f);
  const double curvature = resq::total_curvature(diag);

  fmt::print("instance {}  sites {}  points {}  kappa {}\n", inst.fingerprint,
             inst.sites.size(), inst.points.size(), kappa);
  fmt::print("optimum {} covering {} ({} subsets enumerated)\n",
             fmt::join(cert.members, ","), cert.value,
             cert.subsets_enumerated);
  fmt::print("total curvature {:.6f}\n\n", curvature);

  bool violated = false;
  nlohmann::json out{{"certificate", resq::certificate_to_json(cert)},
                     {"total_curvature", curvature},
                     {"runs", nlohmann::json::array()}};
  for (const std::string& algo : args.algos) {
    resq::SingleRun run =
        resq::run_algorithm(inst, algo, kappa, parse_mode(args.mode),
                            args.p_rewire, args.seed, false);
    const resq::BoundReport rep =
        resq::certify_bounds(run.trace, cert, kappa, curvature);
    violated = violated || rep.violated;

    fmt::print("{}: picked {}  value {}  ratio {:.4f}  queries {}  rewires {}\n",
               algo, fmt::join(run.trace.final_set.order(), ","),
               rep.final_value, rep.final_ratio, run.report.queries,
               run.report.rewires);
    fmt::print("  stage   f_after   floor_ratio   achieved_ratio\n");
    for (std::size_t i = 0; i < run.trace.stages.size(); ++i)
      fmt::print("  {:>5}   {:>7}   {:>11.4f}   {:>14.4f}\n", i + 1,
                 run.trace.stages[i].f_after, rep.floor_ratio[i],
                 rep.stage_ratio[i]);
    fmt::print("  classic floor {:.4f}  curvature floor {:.4f}  {}\n\n",
               rep.classic_floor, rep.curvature_floor,
               rep.violated ? "VIOLATED: " + rep.detail : "ok");

    nlohmann::json jr{{"algorithm", algo},
                      {"report", resq::bound_report_to_json(rep)},
                      {"final_set", run.trace.final_set.order()}};
    out["runs"].push_back(std::move(jr));
  }
  if (!args.json_out.empty())
    resq::write_text_file(args.json_out, out.dump(2) + "\n");
  return violated ? kExitViolation : 0;
}

struct PlotArgs {
  std::string instance;
  std::vector<std::string> traces;
  std::string out;
};

int cmd_plot(const PlotArgs& args) {
  const resq::Instance inst = resq::load_instance_json(args.instance);
  std::vector<resq::SolutionTrace> runs;
  runs.reserve(args.traces.size());
  for (const std::string& path : args.traces)
    runs.push_back(resq::trace_from_json(resq::read_json_file(path)));
  resq::write_text_file(args.out, resq::render_deployment_svg(inst, runs));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"curvature-aware coverage maximization toolkit"};
  app.require_subcommand(1);

  GenerateArgs gen;
  CLI::App* g = app.add_subcommand("generate", "write a random instance");
  g->add_option("--seed", gen.config.seed, "generator seed");
  g->add_option("--sites", gen.config.n_sites, "number of candidate sites");
  g->add_option("--points", gen.config.n_points, "number of demand points");
  g->add_option("--components", gen.config.n_components,
                "demand clusters in the mixture");
  g->add_option("--radius", gen.radius,
                "coverage radius, one value or a lo hi range")
      ->expected(1, 2);
  g->add_option("--extent", gen.extent, "square domain edge length");
  g->add_flag("--diversify,!--no-diversify", gen.config.diversify_sites,
              "spread sites by greedy log-det selection");
  g->add_option("--kappa", gen.config.kappa, "stored budget (0: min(5, sites))");
  g->add_option("--points-csv", gen.points_csv,
                "read demand points from an x,y CSV instead of sampling");
  g->add_option("--out", gen.out, "instance JSON path")->required();

  RunArgs run;
  CLI::App* r = app.add_subcommand("run", "run one solver on an instance");
  r->add_option("--instance", run.instance, "instance JSON path")->required();
  r->add_option("--algo", run.algo, "sg | resque | random-rewire")
      ->required()
      ->check(CLI::IsMember({"sg", "resque", "random-rewire"}));
  r->add_option("--kappa", run.kappa, "override the stored budget");
  r->add_option("--mode", run.mode, "resque ledger repair: heuristic | exact")
      ->check(CLI::IsMember({"heuristic", "exact"}));
  r->add_option("--p-rewire", run.p_rewire,
                "per-stage rewire probability (random-rewire)");
  r->add_option("--seed", run.seed, "seed for random-rewire");
  r->add_option("--trace", run.trace_out, "write the full trace JSON here");
  r->add_flag("--timing,!--no-timing", run.timing,
              "measure wall time (disable for byte-reproducible output)");

  BenchArgs bench;
  CLI::App* b = app.add_subcommand("bench", "run a seeded sweep");
  b->add_option("--config", bench.config_path, "sweep config JSON")
      ->required();
  b->add_option("--out", bench.out_dir, "output directory");
  b->add_flag("--no-timing", bench.no_timing,
              "record wall_ms as 0 for byte-reproducible artifacts");

  ExactArgs exact;
  CLI::App* e = app.add_subcommand(
      "exact", "certify runs against the exhaustive optimum");
  e->add_option("--instance", exact.instance, "instance JSON path")
      ->required();
  e->add_option("--kappa", exact.kappa, "override the stored budget");
  e->add_option("--algos", exact.algos, "algorithms to certify")
      ->delimiter(',');
  e->add_option("--mode", exact.mode, "resque ledger repair")
      ->check(CLI::IsMember({"heuristic", "exact"}));
  e->add_option("--p-rewire", exact.p_rewire, "random-rewire probability");
  e->add_option("--seed", exact.seed, "seed for random-rewire");
  e->add_option("--json", exact.json_out, "also write a JSON report here");
  e->add_option("--max-sites", exact.max_n,
                "refuse enumeration beyond this many sites");

  PlotArgs plot;
  CLI::App* p = app.add_subcommand("plot", "render an SVG deployment map");
  p->add_option("--instance", plot.instance, "instance JSON path")
      ->required();
  p->add_option("--trace", plot.traces, "trace JSON (repeatable)")
      ->take_all();
  p->add_option("--out", plot.out, "SVG path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    const int code = app.exit(err);
    return code == 0 ? 0 : 1;
  }

  try {
    if (g->parsed()) return cmd_generate(gen);
    if (r->parsed()) return cmd_run(run);
    if (b->parsed()) return cmd_bench(bench);
    if (e->parsed()) return cmd_exact(exact);
    if (p->parsed()) return cmd_plot(plot);
  } catch (const std::exception& err) {
    fmt::print(stderr, "error: {}\n", err.what());
    return 2;
  }
  return 0;
}
