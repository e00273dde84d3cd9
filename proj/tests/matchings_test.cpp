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
namespace dt = dimerlab::test;

namespace {

// The reference matching and the four corner matchings of the worked model.
PerfectMatching P0(const DimerModel& m) { return dt::pm_by_names(m, {"e3", "e6", "e7"}); }
PerfectMatching P1(const DimerModel& m) { return dt::pm_by_names(m, {"e7", "e8", "e10"}); }
PerfectMatching P2(const DimerModel& m) { return dt::pm_by_names(m, {"e1", "e4", "e10"}); }
PerfectMatching P3(const DimerModel& m) { return dt::pm_by_names(m, {"e3", "e6", "e9"}); }
PerfectMatching P4(const DimerModel& m) { return dt::pm_by_names(m, {"e2", "e5", "e8"}); }

}  // namespace

TEST_CASE("gamma_4b has exactly eight matchings, all exact covers") {
  auto m = dt::gamma_4b();
  auto pms = enumerate_pms(m);
  CHECK(pms.size() == 8);
  for (const auto& P : pms) {
    std::vector<int> cover(m.nodes.size(), 0);
    for (int e : P.edges) {
      cover[m.edges[e].black]++;
      cover[m.edges[e].white]++;
    }
    for (int c : cover) CHECK(c == 1);
  }
  // Duplicate-free.
  auto sorted = pms;
  std::sort(sorted.begin(), sorted.end());
  CHECK(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end());
}

TEST_CASE("height calibration against the worked values") {
  auto m = dt::gamma_4b();
  CHECK(height_change(m, P1(m), P0(m)) == IVec{1, 0});
  CHECK(height_change(m, P2(m), P0(m)) == IVec{1, 1});
  CHECK(height_change(m, P3(m), P0(m)) == IVec{-1, 0});
  CHECK(height_change(m, P4(m), P0(m)) == IVec{0, -1});
  CHECK(height_change(m, P2(m), P3(m)) == IVec{2, 1});
  CHECK(height_change(m, P0(m), P0(m)) == IVec{0, 0});
}

TEST_CASE("cocycle law over all pairs") {
  auto m = dt::gamma_4b();
  auto pms = enumerate_pms(m);
  auto ref = P0(m);
  for (const auto& A : pms)
    for (const auto& B : pms)
      CHECK(height_change(m, A, B) ==
            height_change(m, A, ref) - height_change(m, B, ref));
}

TEST_CASE("pm polygon with the worked reference matching") {
  auto m = dt::gamma_4b();
  auto res = pm_polygon(m, P0(m));
  CHECK(res.polygon == dt::poly({{1, 0}, {1, 1}, {-1, 0}, {0, -1}}));
  // Corner matchings are unique per vertex.
  for (IVec v : res.polygon.vertices) {
    const auto* pi = res.at(v);
    REQUIRE(pi != nullptr);
    CHECK(pi->cls == PmClass::Corner);
    CHECK(pi->count == 1);
  }
  const auto* origin = res.at({0, 0});
  REQUIRE(origin != nullptr);
  CHECK(origin->count == 4);
  CHECK(origin->cls == PmClass::Internal);
  CHECK(res.at({1, 0})->representative == P1(m));
  CHECK(res.at({1, 1})->representative == P2(m));
  CHECK(res.at({-1, 0})->representative == P3(m));
  CHECK(res.at({0, -1})->representative == P4(m));
}

TEST_CASE("changing the reference translates the polygon") {
  auto m = dt::gamma_4b();
  auto a = pm_polygon(m, P0(m));
  auto b = pm_polygon(m, P2(m));
  IVec d = height_change(m, P0(m), P2(m));
  CHECK(translate(a.polygon, d) == b.polygon);
}

TEST_CASE("honeycomb matchings and the unit triangle") {
  auto m = dt::honeycomb();
  auto pms = enumerate_pms(m);
  CHECK(pms.size() == 3);
  auto res = pm_polygon(m);
  CHECK(res.polygon.vertices.size() == 3);
  CHECK(polygon_lattice_points(res.polygon).size() == 3);  // unit triangle
}

TEST_CASE("a black node of degree zero kills the enumeration") {
  DimerModel m;
  int b1 = m.add_node("b1", Color::Black);
  int w1 = m.add_node("w1", Color::White);
  m.add_node("b2", Color::Black);
  int w2 = m.add_node("w2", Color::White);
  m.add_edge("e1", b1, w1, {0, 0});
  m.add_edge("e2", b1, w2, {0, 0});
  CHECK(enumerate_pms(m).empty());
  CHECK_THROWS_AS(pm_polygon(m), std::domain_error);
}

TEST_CASE("nondegeneracy") {
  auto m = dt::gamma_4b();
  CHECK(is_nondegenerate(m));
  CHECK(is_nondegenerate(dt::honeycomb()));
  CHECK(is_nondegenerate(dt::appendix_b_model()));
  // Forcing an edge that can never be matched: add a second black-white pair
  // attached so that using the new edge isolates a node.
  DimerModel bad = m;
  int nb = bad.add_node("bx", Color::Black);
  int nw = bad.add_node("wx", Color::White);
  int e_ok = bad.add_edge("ex1", nb, nw, {0, 0});
  // bx joins W1 too; wx has no other neighbor, so ex2 = (bx,W1) lies in no
  // perfect matching.
  int e_bad = bad.add_edge("ex2", nb, bad.node_by_name("W1"), {0, 0});
  (void)e_ok;
  (void)e_bad;
  CHECK(!is_nondegenerate(bad));
}

TEST_CASE("boundary counts on the worked model are all ones") {
  auto m = dt::gamma_4b();
  auto res = pm_polygon(m, P0(m));
  for (auto& [key, count] : boundary_counts(res)) CHECK(count == 1);
}

TEST_CASE("appendix model: binomial counts on the long edge") {
  auto m = dt::appendix_b_model();
  auto res = pm_polygon(m);
  // Identify the edge with outer normal (0,1); counts along it are C(4,k).
  const auto& P = res.polygon;
  REQUIRE(!P.degenerate());
  int top = -1;
  for (size_t i = 0; i < P.vertices.size(); ++i)
    if (primitive(rot_neg90(P.vertex(i + 1) - P.vertex(i))) == IVec{0, 1})
      top = static_cast<int>(i);
  REQUIRE(top >= 0);
  auto pts = segment_lattice_points(P.vertex(top), P.vertex(top + 1));
  REQUIRE(pts.size() == 5);
  i64 want[5] = {1, 4, 6, 4, 1};
  for (int k = 0; k < 5; ++k) {
    const auto* pi = res.at(pts[k]);
    REQUIRE(pi != nullptr);
    CHECK(pi->count == want[k]);
  }
}
