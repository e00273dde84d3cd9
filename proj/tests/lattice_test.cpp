// Copyright 2026 The Dimerlab Authors.
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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "support.hpp"

using namespace dimerlab;
using dimerlab::test::poly;

TEST_CASE("primitive vectors") {
  CHECK(primitive({2, 4}) == IVec{1, 2});
  CHECK(primitive({-1, 2}) == IVec{-1, 2});
  CHECK(primitive({-2, -2}) == IVec{-1, -1});
  CHECK_THROWS_AS(primitive({0, 0}), std::domain_error);
}

TEST_CASE("edge normals of the square and the figure-4 polygon") {
  auto S = edge_normals(poly({{0, 0}, {1, 0}, {1, 1}, {0, 1}}));
  SlopeMultiset want;
  want.add({0, -1});
  want.add({1, 0});
  want.add({0, 1});
  want.add({-1, 0});
  CHECK(S == want);

  auto F = edge_normals(poly({{1, 0}, {1, 1}, {-1, 0}, {0, -1}}));
  SlopeMultiset wf;
  wf.add({1, 0});
  wf.add({-1, 2});
  wf.add({-1, -1});
  wf.add({1, -1});
  CHECK(F == wf);
}

TEST_CASE("appendix hexagon: top edge multiplicity four") {
  auto H = poly({{2, -1}, {2, 3}, {-2, 3}, {-3, 2}, {-3, 1}, {-2, -1}});
  auto S = edge_normals(H);
  CHECK(S.entries.at({0, 1}) == 4);
  CHECK(S.entries.at({0, -1}) == 4);
  CHECK(S.entries.at({1, 0}) == 4);
  CHECK(S.entries.at({-1, 1}) == 1);
  CHECK(S.entries.at({-1, 0}) == 1);
  CHECK(S.entries.at({-2, -1}) == 1);
  CHECK(S.weighted_sum() == IVec{0, 0});
}

TEST_CASE("polygon_from_slopes inverts edge_normals") {
  for (auto P : {poly({{1, 0}, {1, 1}, {-1, 0}, {0, -1}}),
                 poly({{0, 0}, {3, 0}, {2, 2}}),
                 poly({{2, -1}, {2, 3}, {-2, 3}, {-3, 2}, {-3, 1}, {-2, -1}})}) {
    auto S = edge_normals(P);
    LatticePolygon Q = polygon_from_slopes(S, {0, 0});
    IVec shift;
    CHECK(translate_equal(Q, P, &shift));
    // Re-anchoring at the shifted walk start reproduces P exactly.
    CHECK(polygon_from_slopes(S, shift) == P);
  }
  SlopeMultiset open_sum;
  open_sum.add({1, 0});
  CHECK_THROWS_AS(polygon_from_slopes(open_sum, {0, 0}), std::domain_error);
}

TEST_CASE("heights") {
  auto F = poly({{1, 0}, {1, 1}, {-1, 0}, {0, -1}});
  auto [a, b] = heights(F, {1, 1});
  CHECK(a == -1);
  CHECK(b == 2);
  auto H = poly({{2, -1}, {2, 3}, {-2, 3}, {-3, 2}, {-3, 1}, {-2, -1}});
  auto [c, d] = heights(H, {0, -1});
  CHECK(c == -3);
  CHECK(d == 1);
  auto U = poly({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
  auto [e, f] = heights(U, {1, 0});
  CHECK(e == 0);
  CHECK(f == 1);
}

TEST_CASE("canonical form is a GL(2,Z)+translation orbit invariant") {
  test::Rng rng(42);
  for (auto P : {poly({{1, 0}, {1, 1}, {-1, 0}, {0, -1}}),
                 poly({{0, 0}, {2, 0}, {0, 1}}),
                 poly({{2, -1}, {2, 3}, {-2, 3}, {-3, 2}, {-3, 1}, {-2, -1}})}) {
    auto c0 = gl2z_canonical_form(P);
    for (int k = 0; k < 100; ++k) {
      IMat U = test::random_unimodular(rng);
      IVec t{rng.uniform(-5, 5), rng.uniform(-5, 5)};
      LatticePolygon Q = translate(apply(U, P), t);
      CHECK(gl2z_canonical_form(Q) == c0);
    }
  }
}

TEST_CASE("width at least two when the origin is strictly interior") {
  auto F = poly({{1, 0}, {1, 1}, {-1, 0}, {0, -1}});
  REQUIRE(locate_point(F, {0, 0}) == 0);
  for (IVec w : {IVec{1, 0}, IVec{0, 1}, IVec{1, 1}, IVec{2, -1}, IVec{3, 5}}) {
    auto [lo, hi] = heights(F, primitive(w));
    CHECK(hi - lo >= 2);
  }
}

TEST_CASE("lattice point location and enumeration") {
  auto F = poly({{1, 0}, {1, 1}, {-1, 0}, {0, -1}});
  CHECK(polygon_lattice_points(F).size() == 5);
  CHECK(locate_point(F, {0, 0}) == 0);
  CHECK(locate_point(F, {1, 0}) == 2);
  CHECK(locate_point(F, {0, 1}) == -1);
  CHECK(lattice_length({2, 3}, {2, 3}) == 0);
  CHECK(lattice_length({0, 0}, {4, 6}) == 2);
}
