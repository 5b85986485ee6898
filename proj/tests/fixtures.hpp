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

#ifndef RESQ_TESTS_FIXTURES_HPP_
#define RESQ_TESTS_FIXTURES_HPP_

#include <functional>
#include <string>
#include <vector>

#include "resq/coverage.hpp"
#include "resq/oracle.hpp"
#include "resq/types.hpp"

namespace resq::testing {

// Four unit-square corners with two opposite-corner sites of radius 1.05.
// Site 0 ("a") covers (0,0),(1,0),(0,1); site 1 ("b") covers the mirror
// three; together they cover all four. f({a}) = f({b}) = 3, f({a,b}) = 4.
inline Instance unit_square_instance(int kappa = 2) {
  std::vector<Point> points = {{0, 0}, {1, 0}, {0, 1}, {1, 1}};
  std::vector<Site> sites = {{0, 0, 0, 1.05}, {1, 1, 1, 1.05}};
  return make_instance(std::move(points), std::move(sites), kappa);
}

// Pairwise-disjoint disks, so coverage is additive (modular). Site i sits
// at (20i, 0) with radius 3 over 3 + (n - i) coincident demand points, so
// singleton values strictly decrease with the id and greedy order is
// id order.
inline Instance modular_instance(int n_sites, int kappa) {
  std::vector<Point> points;
  std::vector<Site> sites;
  for (int i = 0; i < n_sites; ++i) {
    const double x = 20.0 * i;
    for (int p = 0; p < 3 + (n_sites - i); ++p) points.push_back({x, 0.0});
    sites.push_back({i, x, 0.0, 3.0});
  }
  return make_instance(std::move(points), std::move(sites), kappa);
}

// A geometry where a rewire strictly pays off. Demand blobs are coincident
// points on the x axis with weights
//   b1(x=0):30  b2(10):100  b3(20):5  b4(30):40  b5(40):20  b6(60):12
//   b7(80):5
// Site 0 covers b2..b4 (value 145, the greedy opener), sites 1 and 2 cover
// b1..b3 and b3..b5, sites 3 and 4 cover b6 and b7 alone, and sites 5..7
// cover nothing. After picks {0, 1} the saturation drops (site 1 was the
// most redundant candidate, site 2 less so), the stage-3 provisional pick
// is site 2, and stepping back the peak entry removes site 0, whose disks
// are by then fully duplicated by sites 1 and 2. The rescan takes site 3
// and the freed budget reaches site 4: the rewired run ends at the
// exhaustive optimum {1,2,3,4} = 212 while plain greedy ends at 207.
inline Instance rewire_showcase_instance() {
  std::vector<Point> points;
  auto blob = [&points](double x, int weight) {
    for (int i = 0; i < weight; ++i) points.push_back({x, 0.0});
  };
  blob(0, 30);
  blob(10, 100);
  blob(20, 5);
  blob(30, 40);
  blob(40, 20);
  blob(60, 12);
  blob(80, 5);
  std::vector<Site> sites = {{0, 20, 0, 12}, {1, 10, 0, 12}, {2, 30, 0, 12},
                             {3, 60, 0, 5},  {4, 80, 0, 5},  {5, 200, 0, 1},
                             {6, 210, 0, 1}, {7, 220, 0, 1}};
  return make_instance(std::move(points), std::move(sites), 4);
}

// Small seeded instance for property tests. Radius scales with the domain
// so mid-range fractions give partial disk overlap (non-trivial curvature).
inline Instance small_random_instance(std::uint64_t seed, int n_sites,
                                      int kappa, int n_points = 200,
                                      double radius_fraction = 0.18,
                                      double heterogeneity = 0.5) {
  GeneratorConfig g;
  g.seed = seed;
  g.n_sites = n_sites;
  g.n_points = n_points;
  g.n_components = 2 + static_cast<int>(seed % 3);
  const double r = radius_fraction * g.domain.extent();
  g.radius = {r * (1.0 - heterogeneity), r * (1.0 + heterogeneity)};
  g.kappa = kappa;
  return generate_instance(g);
}

inline SolutionSet make_set(int ground, std::initializer_list<ElementId> ids) {
  SolutionSet s(ground);
  for (ElementId e : ids) s.add(e);
  return s;
}

// Runs `fn`, asserting it throws a resq::Error with the given code.
inline std::string error_code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  } catch (...) {
    return "<non-resq-exception>";
  }
  return "<no-throw>";
}

}  // namespace resq::testing

#endif  // RESQ_TESTS_FIXTURES_HPP_
