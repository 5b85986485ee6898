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

#include "resq/json_io.hpp"

#include <fstream>

namespace resq {

using nlohmann::json;

namespace {

// Wraps nlohmann's type errors into this library's parse-error code so CLI
// users see one consistent failure shape.
template <typename Fn>
auto reshape(const char* what, Fn&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const json::exception& e) {
    throw Error("parse-error", std::string(what) + ": " + e.what());
  }
}

std::optional<ElementId> opt_id_from(const json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return j.at(key).get<ElementId>();
}

}  // namespace

json instance_to_json(const Instance& inst) {
  json sites = json::array();
  for (const Site& s : inst.sites)
    sites.push_back(
        {{"id", s.id}, {"x", s.x}, {"y", s.y}, {"radius", s.radius}});
  json points = json::array();
  for (const Point& p : inst.points) points.push_back({p.x, p.y});
  return {{"kappa", inst.kappa}, {"sites", sites}, {"points", points}};
}

Instance instance_from_json(const json& j) {
  return reshape("instance", [&] {
    std::vector<Site> sites;
    for (const json& s : j.at("sites"))
      sites.push_back({s.at("id").get<ElementId>(), s.at("x").get<double>(),
                       s.at("y").get<double>(),
                       s.at("radius").get<double>()});
    std::vector<Point> points;
    for (const json& p : j.at("points")) {
      if (!p.is_array() || p.size() != 2)
        throw Error("parse-error", "each point must be an [x, y] pair");
      points.push_back({p.at(0).get<double>(), p.at(1).get<double>()});
    }
    return make_instance(std::move(points), std::move(sites),
                         j.at("kappa").get<int>());
  });
}

json trace_to_json(const SolutionTrace& trace) {
  json stages = json::array();
  for (const StageRecord& st : trace.stages) {
    json s{{"chosen", st.chosen},
           {"gain", st.gain},
           {"f_after", st.f_after},
           {"set_curvature", st.set_curvature_recorded},
           {"trigger_fired", st.trigger_fired},
           {"removed", nullptr},
           {"removed_stage", nullptr}};
    if (st.removed) s["removed"] = *st.removed;
    if (st.removed_stage) s["removed_stage"] = *st.removed_stage;
    stages.push_back(std::move(s));
  }
  json ledger = json::array();
  for (const LedgerEntry& e : trace.ledger.entries()) {
    json entry{{"stage", e.stage}, {"value", e.value}, {"source", nullptr}};
    if (e.source) entry["source"] = *e.source;
    ledger.push_back(std::move(entry));
  }
  json rewires = json::array();
  for (const RewireEvent& ev : trace.rewires)
    rewires.push_back({{"stage", ev.stage},
                       {"provisional", ev.provisional},
                       {"f_before_rewire", ev.f_before_rewire},
                       {"removed_element", ev.removed_element},
                       {"removed_ledger_stage", ev.removed_ledger_stage},
                       {"ledger_before", ev.ledger_before},
                       {"ledger_after", ev.ledger_after},
                       {"reselected", ev.reselected}});
  return {{"algorithm", trace.algorithm},
          {"fingerprint", trace.fingerprint},
          {"kappa", trace.kappa},
          {"stages", stages},
          {"final_set", trace.final_set.order()},
          {"ledger", ledger},
          {"rewire_count", trace.rewire_count},
          {"rewires", rewires},
          {"stats",
           {{"queries", trace.stats.queries},
            {"cache_hits", trace.stats.cache_hits},
            {"negative_clamps", trace.stats.negative_clamps}}}};
}

SolutionTrace trace_from_json(const json& j) {
  return reshape("trace", [&] {
    SolutionTrace t;
    t.algorithm = j.at("algorithm").get<std::string>();
    t.fingerprint = j.at("fingerprint").get<std::string>();
    t.kappa = j.at("kappa").get<int>();
    for (const json& s : j.at("stages")) {
      StageRecord st;
      st.chosen = s.at("chosen").get<ElementId>();
      st.gain = s.at("gain").get<double>();
      st.f_after = s.at("f_after").get<double>();
      st.set_curvature_recorded = s.at("set_curvature").get<double>();
      st.trigger_fired = s.at("trigger_fired").get<bool>();
      st.removed = opt_id_from(s, "removed");
      if (s.contains("removed_stage") && !s.at("removed_stage").is_null())
        st.removed_stage = s.at("removed_stage").get<int>();
      t.stages.push_back(std::move(st));
    }
    for (ElementId e : j.at("final_set").get<std::vector<ElementId>>())
      t.final_set.add(e);
    for (const json& entry : j.at("ledger"))
      t.ledger.append(entry.at("value").get<double>(),
                      opt_id_from(entry, "source"));
    t.rewire_count = j.at("rewire_count").get<int>();
    for (const json& r : j.value("rewires", json::array())) {
      RewireEvent ev;
      ev.stage = r.at("stage").get<int>();
      ev.provisional = r.at("provisional").get<ElementId>();
      ev.f_before_rewire = r.at("f_before_rewire").get<double>();
      ev.removed_element = r.at("removed_element").get<ElementId>();
      ev.removed_ledger_stage = r.at("removed_ledger_stage").get<int>();
      ev.ledger_before = r.at("ledger_before").get<std::vector<double>>();
      ev.ledger_after = r.at("ledger_after").get<std::vector<double>>();
      ev.reselected = r.at("reselected").get<ElementId>();
      t.rewires.push_back(std::move(ev));
    }
    const json& st = j.at("stats");
    t.stats.queries = st.at("queries").get<std::uint64_t>();
    t.stats.cache_hits = st.at("cache_hits").get<std::uint64_t>();
    t.stats.negative_clamps = st.at("negative_clamps").get<std::uint64_t>();
    stage_sets(t);  // validates consistency
    return t;
  });
}

json run_report_to_json(const RunReport& r) {
  return {{"instance_index", r.instance_index},
          {"fingerprint", r.fingerprint},
          {"algorithm", r.algorithm},
          {"n_sites", r.n_sites},
          {"n_points", r.n_points},
          {"kappa", r.kappa},
          {"coverage", r.coverage},
          {"normalized_coverage", r.normalized_coverage},
          {"queries", r.queries},
          {"rewires", r.rewires},
          {"wall_ms", r.wall_ms}};
}

json certificate_to_json(const OptimalCertificate& c) {
  return {{"members", c.members},
          {"value", c.value},
          {"subsets_enumerated", c.subsets_enumerated},
          {"fingerprint", c.fingerprint}};
}

json bound_report_to_json(const BoundReport& r) {
  return {{"opt_value", r.opt_value},
          {"final_value", r.final_value},
          {"final_ratio", r.final_ratio},
          {"floor_ratio", r.floor_ratio},
          {"stage_ratio", r.stage_ratio},
          {"classic_floor", r.classic_floor},
          {"curvature_floor", r.curvature_floor},
          {"total_curvature", r.total_curvature},
          {"violated", r.violated},
          {"detail", r.detail}};
}

json comparison_to_json(const RunComparison& c) {
  json stages = json::array();
  for (const StageComparison& s : c.stages)
    stages.push_back({{"stage", s.stage},
                      {"value_gap", s.value_gap},
                      {"lhs", s.lhs},
                      {"rhs", s.rhs},
                      {"sufficient", s.sufficient},
                      {"gap_nonnegative", s.gap_nonnegative}});
  return {{"stages", stages},
          {"final_gap", c.final_gap},
          {"stages_sufficient", c.stages_sufficient}};
}

json bench_summary_to_json(const BenchSummary& s) {
  json algos = json::array();
  for (const AlgoStats& a : s.algorithms)
    algos.push_back({{"algorithm", a.algorithm},
                     {"runs", a.runs},
                     {"mean_coverage", a.mean_coverage},
                     {"mean_normalized", a.mean_normalized},
                     {"stddev_normalized", a.stddev_normalized},
                     {"mean_queries", a.mean_queries},
                     {"stddev_queries", a.stddev_queries},
                     {"mean_wall_ms", a.mean_wall_ms},
                     {"total_rewires", a.total_rewires}});
  return {{"n_instances", s.n_instances},
          {"completed", s.completed},
          {"failed_instances", s.failed_instances},
          {"failure_reasons", s.failure_reasons},
          {"algorithms", algos},
          {"paired_instances", s.paired_instances},
          {"gap_mean", s.gap_mean},
          {"gap_std_err", s.gap_std_err},
          {"fraction_rewired_not_worse", s.fraction_rewired_not_worse},
          {"certified_instances", s.certified_instances},
          {"bound_violations", s.bound_violations},
          {"violation_details", s.violation_details}};
}

json bench_config_to_json(const BenchConfig& c) {
  json kappa_rule = json::object();
  if (c.kappa_rule.fixed) kappa_rule["fixed"] = *c.kappa_rule.fixed;
  if (c.kappa_rule.fraction) kappa_rule["fraction"] = *c.kappa_rule.fraction;
  return {{"base_seed", c.base_seed},
          {"n_instances", c.n_instances},
          {"n_sites", {c.n_sites.lo, c.n_sites.hi}},
          {"n_points", {c.n_points.lo, c.n_points.hi}},
          {"n_components", {c.n_components.lo, c.n_components.hi}},
          {"radius_fraction", {c.radius_fraction.lo, c.radius_fraction.hi}},
          {"radius_heterogeneity", c.radius_heterogeneity},
          {"domain",
           {c.domain.xmin, c.domain.ymin, c.domain.xmax, c.domain.ymax}},
          {"spread_fraction", c.spread_fraction},
          {"diversify_sites", c.diversify_sites},
          {"kappa_rule", kappa_rule},
          {"algorithms", c.algorithms},
          {"resque_mode",
           c.resque_mode == ResqueMode::kHeuristicLedger ? "heuristic"
                                                         : "exact"},
          {"p_rewire", c.p_rewire},
          {"exact_threshold", c.exact_threshold},
          {"timing", c.timing}};
}

BenchConfig bench_config_from_json(const json& j) {
  return reshape("bench config", [&] {
    BenchConfig c;
    const auto int_range = [&](const char* key, IntRange cur) {
      if (!j.contains(key)) return cur;
      const json& r = j.at(key);
      if (!r.is_array() || r.size() != 2)
        throw Error("invalid-config",
                    std::string(key) + " must be a [lo, hi] pair");
      return IntRange{r.at(0).get<int>(), r.at(1).get<int>()};
    };
    c.base_seed = j.value("base_seed", c.base_seed);
    c.n_instances = j.value("n_instances", c.n_instances);
    c.n_sites = int_range("n_sites", c.n_sites);
    c.n_points = int_range("n_points", c.n_points);
    c.n_components = int_range("n_components", c.n_components);
    if (j.contains("radius_fraction")) {
      const json& r = j.at("radius_fraction");
      if (!r.is_array() || r.size() != 2)
        throw Error("invalid-config", "radius_fraction must be [lo, hi]");
      c.radius_fraction = {r.at(0).get<double>(), r.at(1).get<double>()};
    }
    if (j.contains("domain")) {
      const json& d = j.at("domain");
      if (!d.is_array() || d.size() != 4)
        throw Error("invalid-config",
                    "domain must be [xmin, ymin, xmax, ymax]");
      c.domain = {d.at(0).get<double>(), d.at(1).get<double>(),
                  d.at(2).get<double>(), d.at(3).get<double>()};
    }
    c.radius_heterogeneity =
        j.value("radius_heterogeneity", c.radius_heterogeneity);
    if (!(c.radius_heterogeneity >= 0.0 && c.radius_heterogeneity < 1.0))
      throw Error("invalid-config", "radius_heterogeneity must lie in [0,1)");
    c.spread_fraction = j.value("spread_fraction", c.spread_fraction);
    c.diversify_sites = j.value("diversify_sites", c.diversify_sites);
    if (j.contains("kappa_rule")) {
      const json& k = j.at("kappa_rule");
      c.kappa_rule = {};
      if (k.contains("fixed")) c.kappa_rule.fixed = k.at("fixed").get<int>();
      if (k.contains("fraction"))
        c.kappa_rule.fraction = k.at("fraction").get<double>();
      if (!c.kappa_rule.fixed && !c.kappa_rule.fraction)
        throw Error("invalid-config",
                    "kappa_rule needs \"fixed\" and/or \"fraction\"");
    }
    if (j.contains("algorithms"))
      c.algorithms = j.at("algorithms").get<std::vector<std::string>>();
    if (j.contains("resque_mode")) {
      const std::string m = j.at("resque_mode").get<std::string>();
      if (m == "heuristic") {
        c.resque_mode = ResqueMode::kHeuristicLedger;
      } else if (m == "exact") {
        c.resque_mode = ResqueMode::kExactRecompute;
      } else {
        throw Error("invalid-config", "resque_mode must be heuristic|exact");
      }
    }
    c.p_rewire = j.value("p_rewire", c.p_rewire);
    c.exact_threshold = j.value("exact_threshold", c.exact_threshold);
    c.timing = j.value("timing", c.timing);
    return c;
  });
}

json read_json_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("io-error", "cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw Error("parse-error", path + ": " + e.what());
  }
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("io-error", "cannot open " + path + " for writing");
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  if (!out.good()) throw Error("io-error", "short write to " + path);
}

Instance load_instance_json(const std::string& path) {
  return instance_from_json(read_json_file(path));
}

void save_instance_json(const Instance& inst, const std::string& path) {
  write_text_file(path, instance_to_json(inst).dump(2) + "\n");
}

}  // namespace resq
