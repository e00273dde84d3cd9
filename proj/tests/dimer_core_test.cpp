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

TEST_CASE("gamma_4b validates with four faces") {
  auto m = dt::gamma_4b();
  auto rep = validate(m);
  CHECK(rep.ok);
  CHECK(rep.num_faces == 4);
  CHECK(rep.euler_characteristic == 0);
  CHECK(rep.connected);
  // Two quadrangles and two hexagons.
  std::multiset<size_t> sizes;
  for (const auto& f : faces(m)) sizes.insert(f.size());
  CHECK(sizes == std::multiset<size_t>{4, 4, 6, 6});
}

TEST_CASE("faces are counterclockwise and color-alternating") {
  auto m = dt::gamma_4b();
  for (const auto& f : faces(m)) {
    IVec s{0, 0};
    for (size_t k = 0; k < f.size(); ++k) {
      s += dart_offset(m, f.boundary[k]);
      // Consecutive darts chain head to tail.
      CHECK(dart_head(m, f.boundary[k]) ==
            dart_tail(m, f.boundary[(k + 1) % f.size()]));
    }
    CHECK(s == IVec{0, 0});
  }
}

TEST_CASE("perturbing one offset breaks face contractibility") {
  auto m = dt::gamma_4b();
  m.edges[m.edge_by_name("e4")].offset += IVec{1, 0};
  auto rep = validate(m);
  CHECK(!rep.ok);
  CHECK(!rep.faces_contractible);
}

TEST_CASE("two parallel edges on two nodes fail the Euler check") {
  DimerModel m;
  int b = m.add_node("b", Color::Black);
  int w = m.add_node("w", Color::White);
  m.add_edge("e1", b, w, {0, 0});
  m.add_edge("e2", b, w, {1, 0});
  auto rep = validate(m);
  CHECK(!rep.euler_ok);
  CHECK(!rep.ok);
}

TEST_CASE("honeycomb has a single hexagonal face") {
  auto m = dt::honeycomb();
  auto rep = validate(m);
  REQUIRE(rep.ok);
  auto fs = faces(m);
  REQUIRE(fs.size() == 1);
  CHECK(fs[0].size() == 6);
}

TEST_CASE("split and join are inverse") {
  auto m = dt::gamma_4b();
  for (int n = 0; n < static_cast<int>(m.nodes.size()); ++n) {
    int deg = m.degree(n);
    for (int start = 0; start < deg; ++start)
      for (int len = 1; len < deg; ++len) {
        DimerModel s = split_move(m, n, start, len);
        CHECK(validate(s).ok);
        // The fresh 2-valent node is the second-to-last node added.
        int mid = static_cast<int>(s.nodes.size()) - 2;
        REQUIRE(s.degree(mid) == 2);
        DimerModel back = join_move(s, mid);
        CHECK(structural_equal(back, m));
      }
  }
}

TEST_CASE("split preserves validation and the pm polygon") {
  auto m = dt::gamma_4b();
  auto before = pm_polygon(m, dt::pm_by_names(m, {"e3", "e6", "e7"})).polygon;
  DimerModel s = split_move(m, m.node_by_name("B1"), 1, 2);
  CHECK(validate(s).ok);
  auto after = pm_polygon(s).polygon;
  IVec shift;
  CHECK(translate_equal(after, before, &shift));
}

TEST_CASE("reduce removes chains of 2-valent nodes") {
  auto m = dt::gamma_4b();
  DimerModel s = m;
  s = split_move(s, s.node_by_name("B1"), 0, 2);
  s = split_move(s, s.node_by_name("W3"), 1, 1);
  s = split_move(s, s.node_by_name("B2"), 2, 1);
  DimerModel r = reduce(s);
  CHECK(r.nodes.size() == m.nodes.size());
  CHECK(isomorphic(r, m));
  CHECK(structural_equal(reduce(r), r));
}

TEST_CASE("retranslation is invisible to observables") {
  auto m = dt::gamma_4b();
  DimerModel g = retranslate(m, m.node_by_name("W2"), {2, -1});
  CHECK(validate(g).ok);
  CHECK(isomorphic(m, g));
  CHECK(enumerate_pms(g).size() == enumerate_pms(m).size());
  IVec shift;
  CHECK(translate_equal(pm_polygon(g).polygon, pm_polygon(m).polygon, &shift));
}

TEST_CASE("isomorphism respects the GL(2,Z) action on offsets") {
  auto m = dt::gamma_4b();
  DimerModel swapped = m;
  for (auto& e : swapped.edges) e.offset = IVec{e.offset.y, e.offset.x};
  // Axis swap is orientation reversing; it pairs with reversed rotations.
  for (auto& r : swapped.rotation) std::reverse(r.begin(), r.end());
  CHECK(validate(swapped).ok);
  CHECK(isomorphic(m, swapped));

  DimerModel sheared = m;
  for (auto& e : sheared.edges)
    e.offset = IVec{e.offset.x + e.offset.y, e.offset.y};
  CHECK(isomorphic(m, sheared));
}

TEST_CASE("isomorphism distinguishes genuinely different models") {
  CHECK(!isomorphic(dt::gamma_4b(), dt::honeycomb()));
  CHECK(!isomorphic(dt::example_a4_left(), dt::example_a4_mu0()));
}

TEST_CASE("transcribed appendix models validate") {
  for (auto m : {dt::appendix_b_model(), dt::example_4_8_model(),
                 dt::example_a4_left(), dt::example_a4_mu0()}) {
    auto rep = validate(m);
    CHECK(rep.ok);
    CHECK(rep.euler_characteristic == 0);
  }
  CHECK(dt::appendix_b_model().nodes.size() == 40);
  CHECK(dt::appendix_b_model().edges.size() == 77);
}
