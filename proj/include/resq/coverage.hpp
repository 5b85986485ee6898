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

#ifndef RESQ_COVERAGE_HPP_
#define RESQ_COVERAGE_HPP_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "resq/oracle.hpp"
#include "resq/types.hpp"

namespace resq {

struct Point {
  double x = 0.0;
  double y = 0.0;
};

// A candidate sensing location with a fixed coverage radius.
struct Site {
  ElementId id = 0;
  double x = 0.0;
  double y = 0.0;
  double radius = 0.0;
};

struct BoundingBox {
  double xmin = 0.0;
  double ymin = 0.0;
  double xmax = 1.0;
  double ymax = 1.0;

  double width() const { return xmax - xmin; }
  double height() const { return ymax - ymin; }
  double extent() const { return std::max(width(), height()); }
};

// One deployment problem: demand points, candidate sites, and the site
// budget. Sites are kept sorted by id; ids are the ground-set indices.
struct Instance {
  std::vector<Point> points;
  std::vector<Site> sites;
  int kappa = 0;
  std::string fingerprint;  // hex digest over the canonical payload
};

// Whether `s` covers `p`. Both the bitmap precompute and the reference
// evaluator funnel through this one predicate so their boundary behavior is
// bit-identical.
inline bool covers(const Site& s, const Point& p) {
  const double dx = p.x - s.x;
  const double dy = p.y - s.y;
  return dx * dx + dy * dy <= s.radius * s.radius;
}

// FNV-1a 64 over the canonical byte stream (counts, kappa, then sites in id
// order and points in listed order, coordinates as raw IEEE-754 bits).
std::string instance_fingerprint(const Instance& inst);

// Validates (finite coordinates, ids forming 0..n-1, kappa within range),
// sorts sites by id, and stamps the fingerprint.
Instance make_instance(std::vector<Point> points, std::vector<Site> sites,
                       int kappa);

// Counts demand points covered by at least one selected site. Evaluation is
// a word-wise OR + popcount over per-site point bitmaps precomputed at
// construction (grid-bucketed, parallelized over sites when OpenMP is
// enabled). naive_value() recomputes the same number from raw coordinates
// and is the reference the fast path is tested and benchmarked against.
class CoverageOracle final : public SetFunction {
 public:
  explicit CoverageOracle(const Instance& inst);

  double value(std::span<const ElementId> members) const override;
  int ground_size() const override { return static_cast<int>(inst_.sites.size()); }
  std::string fingerprint() const override { return inst_.fingerprint; }

  double naive_value(std::span<const ElementId> members) const;

  const Instance& instance() const { return inst_; }
  std::span<const std::uint64_t> site_mask(ElementId e) const;

 private:
  Instance inst_;
  int words_ = 0;
  std::vector<std::uint64_t> masks_;  // site-major, ground_size() x words_
};

struct RadiusRange {
  double lo = 1.0;
  double hi = 1.0;  // lo == hi: homogeneous radii
};

struct GeneratorConfig {
  std::uint64_t seed = 0;
  int n_sites = 10;
  int n_points = 1000;
  int n_components = 3;  // clusters in the demand-point mixture
  RadiusRange radius;
  BoundingBox domain{0.0, 0.0, 100.0, 100.0};
  bool diversify_sites = true;  // spread sites by greedy log-det selection
  double spread_fraction = 0.10;  // cluster sigma as a fraction of extent
  int site_pool_factor = 4;  // candidate pool size multiplier when diversifying
  int kappa = 0;             // 0: default to min(5, n_sites)
};

// Clustered demand points (isotropic Gaussian mixture, means uniform in the
// domain, samples re-drawn into the box) plus uniform candidate sites,
// optionally thinned by greedy log-det selection from an oversampled pool.
// Fully determined by `config`; point and site draws come from independent
// substreams of config.seed.
Instance generate_instance(const GeneratorConfig& config);

// Reads "x,y"-headed CSV (UTF-8, LF or CRLF). Errors carry 1-based line
// numbers.
std::vector<Point> load_points_csv(const std::string& path);

// JSON instance files; see json_io.hpp for the document shape.
Instance load_instance_json(const std::string& path);
void save_instance_json(const Instance& inst, const std::string& path);

}  // namespace resq

#endif  // RESQ_COVERAGE_HPP_
