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
#include "dimerlab/face_mutation.hpp"

using namespace dimerlab;
namespace dt = dimerlab::test;

namespace {

int face_with_edges(const DimerModel& m, const std::vector<Face>& fs,
                    const std::vector<std::string>& edge_names) {
  std::set<int> want;
  for (const auto& nm : edge_names) want.insert(m.edge_by_name(nm));
  for (size_t i = 0; i < fs.size(); ++i) {
    std::set<int> got;
    for (const Dart& d : fs[i].boundary) got.insert(d.edge);
    if (got == want) return static_cast<int>(i);
  }
  return -1;
}

std::vector<int> quadrangle_faces(const DimerModel& m) {
  auto fs = faces(m);
  std::vector<int> out;
  for (size_t i = 0; i < fs.size(); ++i)
    if (fs[i].size() == 4) out.push_back(static_cast<int>(i));
  return out;
}

bool polygons_translate_equal(const LatticePolygon& A, const LatticePolygon& B) {
  IVec t;
  return translate_equal(A, B, &t);
}

}  // namespace

TEST_CASE("example model mutates to its worked partner") {
  auto left = dt::example_a4_left();
  auto fs = faces(left);
  int f0 = face_with_edges(left, fs, {"a3", "a4", "a5", "a6"});
  REQUIRE(f0 >= 0);
  REQUIRE(fs[f0].size() == 4);
  auto res = mutate_face(left, f0, Color::Black);
  CHECK(validate(res.model).ok);
  CHECK(isomorphic(res.model, dt::example_a4_mu0()));
}

TEST_CASE("mutation is an involution on quadrangle faces") {
  for (auto m : {dt::gamma_4b(), dt::example_a4_left(), dt::example_a4_mu0()}) {
    for (int f : quadrangle_faces(m)) {
      auto once = mutate_face(m, f, Color::Black);
      REQUIRE(validate(once.model).ok);
      REQUIRE(once.face_map[f] >= 0);
      auto twice = mutate_face(once.model, once.face_map[f], Color::Black);
      CHECK(isomorphic(twice.model, m));
    }
  }
}

TEST_CASE("mutation preserves consistency and the pm polygon") {
  for (auto m : {dt::gamma_4b(), dt::example_a4_left(), dt::appendix_b_model()}) {
    REQUIRE(is_consistent(m));
    auto P = pm_polygon(m).polygon;
    auto S = zigzag_slope_multiset(zigzag_paths(m));
    auto quads = quadrangle_faces(m);
    REQUIRE(!quads.empty());
    int tested = 0;
    for (int f : quads) {
      if (tested++ >= 3) break;  // a few faces per fixture keep this quick
      auto res = mutate_face(m, f, Color::Black);
      CHECK(validate(res.model).ok);
      CHECK(is_consistent(res.model));
      CHECK(polygons_translate_equal(pm_polygon(res.model).polygon, P));
      CHECK(zigzag_slope_multiset(zigzag_paths(res.model)) == S);
    }
  }
}

TEST_CASE("white variant works and preserves the polygon") {
  auto m = dt::gamma_4b();
  auto P = pm_polygon(m).polygon;
  for (int f : quadrangle_faces(m)) {
    auto res = mutate_face(m, f, Color::White);
    CHECK(validate(res.model).ok);
    CHECK(is_consistent(res.model));
    CHECK(polygons_translate_equal(pm_polygon(res.model).polygon, P));
    auto twice = mutate_face(res.model, res.face_map[f], Color::White);
    CHECK(isomorphic(twice.model, m));
  }
}

TEST_CASE("spider move demands a quadrangle") {
  auto m = dt::gamma_4b();
  auto fs = faces(m);
  int hexagon = -1;
  for (size_t i = 0; i < fs.size(); ++i)
    if (fs[i].size() == 6) hexagon = static_cast<int>(i);
  REQUIRE(hexagon >= 0);
  CHECK_THROWS_AS(mutate_face(m, hexagon, Color::Black), std::domain_error);
  CHECK_THROWS_AS(spider_move(m, hexagon, Color::Black), std::domain_error);
}

TEST_CASE("type II paths become type I under the worked mutation") {
  auto left = dt::example_a4_left();
  auto paths = zigzag_paths(left);
  bool has_type_two = false;
  for (size_t k = 0; k < paths.size(); ++k)
    if (classify_type(left, paths, static_cast<int>(k)) == ZigzagType::TypeII)
      has_type_two = true;
  REQUIRE(has_type_two);
  auto fs = faces(left);
  int f0 = face_with_edges(left, fs, {"a3", "a4", "a5", "a6"});
  auto res = mutate_face(left, f0, Color::Black);
  auto mp = zigzag_paths(res.model);
  for (size_t k = 0; k < mp.size(); ++k)
    CHECK(classify_type(res.model, mp, static_cast<int>(k)) == ZigzagType::TypeI);
}

TEST_CASE("large example: transcriptions match the pipeline outputs") {
  auto ga = dt::appendix_b_gamma_a();
  auto gb = dt::appendix_b_gamma_b();
  for (auto* m : {&ga, &gb}) {
    auto rep = validate(*m);
    REQUIRE(rep.ok);
    CHECK(is_consistent(*m));
  }
  CHECK(!isomorphic(ga, gb));
}

TEST_CASE("large example: mutations at the ten drawn faces turn B into A") {
  auto gb = dt::appendix_b_gamma_b();
  // Label points of the ten faces in the drawing (12 x 8 domain).
  std::vector<std::pair<Rat, Rat>> labels = {
      {Rat(1, 12), Rat(1, 8)},  {Rat(3, 12), Rat(15, 16)}, {Rat(4, 12), Rat(11, 16)},
      {Rat(13, 24), Rat(7, 16)}, {Rat(8, 12), Rat(2, 8)},  {Rat(9, 12), Rat(3, 8)},
      {Rat(5, 12), Rat(7, 8)},  {Rat(13, 24), Rat(11, 16)}, {Rat(8, 12), Rat(4, 8)},
      {Rat(9, 12), Rat(5, 8)}};
  std::vector<int> fidx;
  for (auto& [x, y] : labels) {
    int f = dt::face_at_point(gb, x, y);
    REQUIRE(f >= 0);
    fidx.push_back(f);
  }
  // All ten labels name distinct faces.
  std::set<int> uniq(fidx.begin(), fidx.end());
  REQUIRE(uniq.size() == 10);
  DimerModel cur = gb;
  for (size_t k = 0; k < fidx.size(); ++k) {
    auto res = mutate_face(cur, fidx[k], Color::Black);
    REQUIRE(validate(res.model).ok);
    for (size_t j = k + 1; j < fidx.size(); ++j) {
      fidx[j] = res.face_map[fidx[j]];
      REQUIRE(fidx[j] >= 0);
    }
    cur = res.model;
  }
  CHECK(isomorphic(cur, dt::appendix_b_gamma_a()));
}
