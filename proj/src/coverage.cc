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

#include "resq/coverage.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <cmath>
#include <cstring>
#include <fstream>

#include "resq/rng.hpp"

namespace resq {

namespace {

void fnv_bytes(std::uint64_t* h, const void* data, std::size_t len) {
  const unsigned char* p = static_cast<const unsigned char*>(data);
  for (std::size_t i = 0; i < len; ++i) {
    *h ^= p[i];
    *h *= 0x100000001b3ULL;
  }
}

void fnv_double(std::uint64_t* h, double v) {
  std::uint64_t bits;
  static_assert(sizeof(bits) == sizeof(v));
  std::memcpy(&bits, &v, sizeof(bits));
  fnv_bytes(h, &bits, sizeof(bits));
}

void fnv_i64(std::uint64_t* h, std::int64_t v) {
  fnv_bytes(h, &v, sizeof(v));
}

void require_finite(double v, const std::string& what) {
  if (!std::isfinite(v)) throw Error("non-finite-coordinate", what);
}

}  // namespace

std::string instance_fingerprint(const Instance& inst) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  fnv_bytes(&h, "cov1", 4);
  fnv_i64(&h, inst.kappa);
  fnv_i64(&h, static_cast<std::int64_t>(inst.sites.size()));
  fnv_i64(&h, static_cast<std::int64_t>(inst.points.size()));
  for (const Site& s : inst.sites) {
    fnv_i64(&h, s.id);
    fnv_double(&h, s.x);
    fnv_double(&h, s.y);
    fnv_double(&h, s.radius);
  }
  for (const Point& p : inst.points) {
    fnv_double(&h, p.x);
    fnv_double(&h, p.y);
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx",
                static_cast<unsigned long long>(h));
  return buf;
}

Instance make_instance(std::vector<Point> points, std::vector<Site> sites,
                       int kappa) {
  if (sites.empty()) throw Error("invalid-instance", "no sites");
  if (points.empty()) throw Error("invalid-instance", "no points");
  std::sort(sites.begin(), sites.end(),
            [](const Site& a, const Site& b) { return a.id < b.id; });
  for (std::size_t i = 0; i < sites.size(); ++i) {
    const Site& s = sites[i];
    if (s.id != static_cast<ElementId>(i))
      throw Error("invalid-instance",
                  "site ids must form 0.." + std::to_string(sites.size() - 1));
    require_finite(s.x, "site x");
    require_finite(s.y, "site y");
    require_finite(s.radius, "site radius");
    if (s.radius < 0.0) throw Error("invalid-instance", "negative radius");
  }
  for (const Point& p : points) {
    require_finite(p.x, "point x");
    require_finite(p.y, "point y");
  }
  if (kappa < 1 || kappa > static_cast<int>(sites.size()))
    throw Error("kappa-out-of-range",
                std::to_string(kappa) + " with " +
                    std::to_string(sites.size()) + " sites");
  Instance inst{std::move(points), std::move(sites), kappa, ""};
  inst.fingerprint = instance_fingerprint(inst);
  return inst;
}

CoverageOracle::CoverageOracle(const Instance& inst) : inst_(inst) {
  const int n_sites = static_cast<int>(inst_.sites.size());
  const int n_points = static_cast<int>(inst_.points.size());
  words_ = (n_points + 63) / 64;
  masks_.assign(static_cast<std::size_t>(n_sites) * words_, 0);

  // Bucket points into a uniform grid so each site only tests points in the
  // cells its disk's bounding square overlaps. Cell edge = the largest
  // radius keeps that square at most 3x3 cells at homogeneous radii.
  BoundingBox bb{inst_.points[0].x, inst_.points[0].y, inst_.points[0].x,
                 inst_.points[0].y};
  for (const Point& p : inst_.points) {
    bb.xmin = std::min(bb.xmin, p.x);
    bb.ymin = std::min(bb.ymin, p.y);
    bb.xmax = std::max(bb.xmax, p.x);
    bb.ymax = std::max(bb.ymax, p.y);
  }
  double cell = 0.0;
  for (const Site& s : inst_.sites) cell = std::max(cell, s.radius);
  if (cell <= 0.0) cell = 1.0;
  const int gx = std::max(1, static_cast<int>(bb.width() / cell) + 1);
  const int gy = std::max(1, static_cast<int>(bb.height() / cell) + 1);
  const auto cell_of = [&](double v, double lo, int cap) {
    const int c = static_cast<int>((v - lo) / cell);
    return std::clamp(c, 0, cap - 1);
  };
  std::vector<std::vector<int>> bucket(static_cast<std::size_t>(gx) * gy);
  for (int i = 0; i < n_points; ++i) {
    const Point& p = inst_.points[i];
    bucket[cell_of(p.x, bb.xmin, gx) * static_cast<std::size_t>(gy) +
           cell_of(p.y, bb.ymin, gy)]
        .push_back(i);
  }

#pragma omp parallel for schedule(dynamic)
  for (int s = 0; s < n_sites; ++s) {
    const Site& site = inst_.sites[s];
    std::uint64_t* mask = &masks_[static_cast<std::size_t>(s) * words_];
    const int cx0 = cell_of(site.x - site.radius, bb.xmin, gx);
    const int cx1 = cell_of(site.x + site.radius, bb.xmin, gx);
    const int cy0 = cell_of(site.y - site.radius, bb.ymin, gy);
    const int cy1 = cell_of(site.y + site.radius, bb.ymin, gy);
    for (int cx = cx0; cx <= cx1; ++cx) {
      for (int cy = cy0; cy <= cy1; ++cy) {
        for (int i : bucket[cx * static_cast<std::size_t>(gy) + cy]) {
          if (covers(site, inst_.points[i]))
            mask[i >> 6] |= 1ULL << (i & 63);
        }
      }
    }
  }
}

double CoverageOracle::value(std::span<const ElementId> members) const {
  if (members.empty()) return 0.0;
  std::vector<std::uint64_t> acc(words_, 0);
  for (ElementId e : members) {
    if (e < 0 || e >= ground_size())
      throw Error("element-out-of-range", std::to_string(e));
    const std::uint64_t* mask = &masks_[static_cast<std::size_t>(e) * words_];
    for (int w = 0; w < words_; ++w) acc[w] |= mask[w];
  }
  std::int64_t covered = 0;
  for (std::uint64_t w : acc) covered += std::popcount(w);
  return static_cast<double>(covered);
}

double CoverageOracle::naive_value(std::span<const ElementId> members) const {
  for (ElementId e : members)
    if (e < 0 || e >= ground_size())
      throw Error("element-out-of-range", std::to_string(e));
  std::int64_t covered = 0;
  for (const Point& p : inst_.points) {
    for (ElementId e : members) {
      if (covers(inst_.sites[e], p)) {
        ++covered;
        break;
      }
    }
  }
  return static_cast<double>(covered);
}

std::span<const std::uint64_t> CoverageOracle::site_mask(ElementId e) const {
  if (e < 0 || e >= ground_size())
    throw Error("element-out-of-range", std::to_string(e));
  return {&masks_[static_cast<std::size_t>(e) * words_],
          static_cast<std::size_t>(words_)};
}

namespace {

// Greedy MAP selection under an RBF similarity kernel: repeatedly takes the
// pool element with the largest squared distance to the span of the chosen
// ones (incremental Cholesky update), which spreads sites apart instead of
// letting uniform sampling clump them.
std::vector<int> greedy_logdet_select(const std::vector<Point>& pool,
                                      int count, double bandwidth) {
  const int m = static_cast<int>(pool.size());
  const auto kernel = [&](int a, int b) {
    const double dx = pool[a].x - pool[b].x;
    const double dy = pool[a].y - pool[b].y;
    return std::exp(-(dx * dx + dy * dy) / (2.0 * bandwidth * bandwidth));
  };
  std::vector<double> di2(m, 1.0 + 1e-10);
  std::vector<std::vector<double>> cis;
  std::vector<bool> taken(m, false);
  std::vector<int> out;
  out.reserve(count);
  for (int j = 0; j < count; ++j) {
    int best = -1;
    for (int c = 0; c < m; ++c)
      if (!taken[c] && (best < 0 || di2[c] > di2[best])) best = c;
    taken[best] = true;
    out.push_back(best);
    if (j + 1 == count) break;
    const double ej = std::sqrt(std::max(di2[best], 1e-300));
    std::vector<double> row(m, 0.0);
    for (int c = 0; c < m; ++c) {
      if (taken[c]) continue;
      double dot = 0.0;
      for (int t = 0; t < j; ++t) dot += cis[t][best] * cis[t][c];
      row[c] = (kernel(best, c) - dot) / ej;
      di2[c] = std::max(di2[c] - row[c] * row[c], 0.0);
    }
    cis.push_back(std::move(row));
  }
  return out;
}

}  // namespace

Instance generate_instance(const GeneratorConfig& config) {
  if (config.n_sites < 1 || config.n_points < 1 || config.n_components < 1 ||
      config.site_pool_factor < 1)
    throw Error("invalid-config", "counts must be positive");
  if (!(config.radius.lo >= 0.0 && config.radius.hi >= config.radius.lo))
    throw Error("invalid-config", "radius range must satisfy 0 <= lo <= hi");
  if (!(config.domain.width() > 0.0 && config.domain.height() > 0.0))
    throw Error("invalid-config", "domain must have positive area");
  if (!(config.spread_fraction > 0.0))
    throw Error("invalid-config", "spread_fraction must be positive");

  const BoundingBox& box = config.domain;
  const double extent = box.extent();

  Rng point_rng(stream_seed(config.seed, "points"));
  std::vector<Point> means(config.n_components);
  for (Point& mu : means) {
    mu.x = point_rng.uniform(box.xmin, box.xmax);
    mu.y = point_rng.uniform(box.ymin, box.ymax);
  }
  const double sigma = config.spread_fraction * extent;
  std::vector<Point> points(config.n_points);
  for (Point& p : points) {
    const Point& mu =
        means[point_rng.uniform_int(0, config.n_components - 1)];
    for (int attempt = 0; attempt < 100; ++attempt) {
      p.x = point_rng.gaussian(mu.x, sigma);
      p.y = point_rng.gaussian(mu.y, sigma);
      if (p.x >= box.xmin && p.x <= box.xmax && p.y >= box.ymin &&
          p.y <= box.ymax)
        break;
    }
    p.x = std::clamp(p.x, box.xmin, box.xmax);
    p.y = std::clamp(p.y, box.ymin, box.ymax);
  }

  Rng site_rng(stream_seed(config.seed, "sites"));
  const int pool_size = config.diversify_sites
                            ? config.site_pool_factor * config.n_sites
                            : config.n_sites;
  std::vector<Point> pool(pool_size);
  for (Point& c : pool) {
    c.x = site_rng.uniform(box.xmin, box.xmax);
    c.y = site_rng.uniform(box.ymin, box.ymax);
  }
  std::vector<int> chosen;
  if (config.diversify_sites) {
    chosen = greedy_logdet_select(pool, config.n_sites,
                                  extent / std::sqrt(double(config.n_sites)));
  } else {
    chosen.resize(pool_size);
    for (int i = 0; i < pool_size; ++i) chosen[i] = i;
  }

  std::vector<Site> sites(config.n_sites);
  for (int i = 0; i < config.n_sites; ++i) {
    sites[i].id = i;
    sites[i].x = pool[chosen[i]].x;
    sites[i].y = pool[chosen[i]].y;
    sites[i].radius = config.radius.lo < config.radius.hi
                          ? site_rng.uniform(config.radius.lo, config.radius.hi)
                          : config.radius.lo;
  }

  int kappa = config.kappa;
  if (kappa == 0) kappa = std::min(5, config.n_sites);
  kappa = std::clamp(kappa, 1, config.n_sites);
  return make_instance(std::move(points), std::move(sites), kappa);
}

std::vector<Point> load_points_csv(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("io-error", "cannot open " + path);
  std::string line;
  auto next_line = [&](std::string* out) {
    if (!std::getline(in, *out)) return false;
    if (!out->empty() && out->back() == '\r') out->pop_back();
    return true;
  };
  if (!next_line(&line)) throw Error("missing-header", path + " is empty");
  if (line.rfind("\xEF\xBB\xBF", 0) == 0) line.erase(0, 3);
  if (line != "x,y")
    throw Error("missing-header", "expected \"x,y\", got \"" + line + "\"");

  const auto parse_field = [](std::string_view s, int lineno) {
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size())
      throw Error("parse-error",
                  "bad number \"" + std::string(s) + "\" on line " +
                      std::to_string(lineno));
    if (!std::isfinite(v))
      throw Error("non-finite-coordinate", "line " + std::to_string(lineno));
    return v;
  };

  std::vector<Point> points;
  for (int lineno = 2; next_line(&line); ++lineno) {
    if (line.empty()) continue;
    const auto comma = line.find(',');
    if (comma == std::string::npos ||
        line.find(',', comma + 1) != std::string::npos)
      throw Error("parse-error",
                  "expected two fields on line " + std::to_string(lineno));
    points.push_back({parse_field({line.data(), comma}, lineno),
                      parse_field({line.data() + comma + 1,
                                   line.size() - comma - 1},
                                  lineno)});
  }
  return points;
}

}  // namespace resq
