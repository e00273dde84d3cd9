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

#include "support.hpp"

#include <algorithm>
#include <map>

namespace dimerlab::test {

std::string fixture_path(const std::string& name) {
  return std::string(DIMERLAB_FIXTURE_DIR) + "/" + name;
}

DimerModel load_fixture(const std::string& name) {
  return parse_dimer(fixture_path(name));
}

DimerModel gamma_4b() { return load_fixture("gamma_4b.dimer"); }

DimerModel honeycomb(int nx, int ny) {
  DimerModel m;
  auto bid = [&](int i, int j) { return ((i % nx + nx) % nx) * ny + ((j % ny + ny) % ny); };
  auto wid = [&](int i, int j) { return nx * ny + bid(i, j); };
  for (int i = 0; i < nx; ++i)
    for (int j = 0; j < ny; ++j) {
      int n = m.add_node("b" + std::to_string(i) + "_" + std::to_string(j),
                         Color::Black);
      m.nodes[n].has_pos = true;
      m.nodes[n].px = Rat(3 * i + 1, 3 * nx);
      m.nodes[n].py = Rat(3 * j + 1, 3 * ny);
    }
  for (int i = 0; i < nx; ++i)
    for (int j = 0; j < ny; ++j) {
      int n = m.add_node("w" + std::to_string(i) + "_" + std::to_string(j),
                         Color::White);
      m.nodes[n].has_pos = true;
      m.nodes[n].px = Rat(3 * i + 2, 3 * nx);
      m.nodes[n].py = Rat(3 * j + 2, 3 * ny);
    }
  // Black (i,j) joins whites (i,j), (i-1,j), (i,j-1).
  std::map<std::pair<int, int>, int> eid;  // (black, white-slot) -> edge
  int counter = 0;
  for (int i = 0; i < nx; ++i)
    for (int j = 0; j < ny; ++j) {
      int b = bid(i, j);
      IVec same{0, 0};
      IVec left = i == 0 ? IVec{-1, 0} : IVec{0, 0};
      IVec down = j == 0 ? IVec{0, -1} : IVec{0, 0};
      eid[{b, 0}] = m.add_edge("e" + std::to_string(counter++), b, wid(i, j), same);
      eid[{b, 1}] = m.add_edge("e" + std::to_string(counter++), b, wid(i - 1, j), left);
      eid[{b, 2}] = m.add_edge("e" + std::to_string(counter++), b, wid(i, j - 1), down);
    }
  for (int i = 0; i < nx; ++i)
    for (int j = 0; j < ny; ++j) {
      int b = bid(i, j);
      m.rotation[b] = {eid[{b, 0}], eid[{b, 1}], eid[{b, 2}]};
      // White (i,j) joins blacks (i,j+1) [117deg], (i,j) [225deg], (i+1,j) [333deg].
      int w = wid(i, j);
      m.rotation[w] = {eid[{bid(i, j + 1), 2}], eid[{b, 0}], eid[{bid(i + 1, j), 1}]};
    }
  return m;
}

namespace {

struct GridSpec {
  const char* pairs;  // "w/b w/b ..." with paper indices
};

}  // namespace

DimerModel appendix_b_model() {
  // Transcribed drawing: whites at (2c, 2r+1), blacks at (2c+1, 2r) in a
  // 10 x 8 domain; indices follow the drawing (duplicates folded).
  static const int pair_list[][2] = {
      {1, 1},   {1, 2},   {2, 2},   {2, 3},   {3, 3},   {3, 4},   {4, 4},
      {4, 5},   {5, 1},   {5, 2},   {5, 6},   {5, 7},   {6, 2},   {6, 3},
      {6, 7},   {6, 8},   {7, 3},   {7, 4},   {7, 8},   {7, 9},   {8, 4},
      {8, 5},   {8, 9},   {8, 10},  {9, 6},   {9, 11},  {9, 12},  {10, 7},
      {10, 12}, {10, 13}, {11, 8},  {11, 9},  {11, 13}, {11, 14}, {12, 9},
      {12, 10}, {12, 14}, {12, 15}, {13, 11}, {13, 12}, {13, 16}, {13, 17},
      {14, 12}, {14, 13}, {14, 17}, {14, 18}, {15, 13}, {15, 14}, {15, 18},
      {15, 19}, {16, 14}, {16, 15}, {16, 19}, {16, 20}, {17, 16}, {17, 17},
      {17, 21}, {17, 22}, {18, 17}, {18, 18}, {18, 22}, {18, 23}, {19, 18},
      {19, 19}, {19, 23}, {19, 24}, {20, 19}, {20, 20}, {20, 24}, {21, 21},
      {21, 22}, {22, 22}, {22, 23}, {23, 23}, {23, 24}, {24, 24}, {24, 25}};
  DimerModel m;
  auto wpos = [](int wn) {  // drawn coordinates
    return std::pair<int, int>{2 * ((wn - 1) / 4), 2 * ((wn - 1) % 4) + 1};
  };
  auto bpos = [](int bn) {
    return std::pair<int, int>{2 * ((bn - 1) / 5) + 1, 2 * ((bn - 1) % 5)};
  };
  int widx[25] = {}, bidx[26] = {};
  for (int wn = 1; wn <= 20; ++wn) {
    auto [x, y] = wpos(wn);
    int id = m.add_node("W" + std::to_string(wn), Color::White);
    m.nodes[id].has_pos = true;
    m.nodes[id].px = Rat(x, 10);
    m.nodes[id].py = Rat(y, 8);
    widx[wn] = id;
  }
  for (int bn = 1; bn <= 25; ++bn) {
    if ((bn - 1) % 5 == 4) continue;  // duplicate of the row-0 black
    auto [x, y] = bpos(bn);
    int id = m.add_node("B" + std::to_string(bn), Color::Black);
    m.nodes[id].has_pos = true;
    m.nodes[id].px = Rat(x, 10);
    m.nodes[id].py = Rat(y, 8);
    bidx[bn] = id;
  }
  struct Inc {
    int edge;
    IVec dir;  // drawn direction at this endpoint
  };
  std::vector<std::vector<Inc>> inc(m.nodes.size());
  int counter = 1;
  for (auto [wn, bn] : pair_list) {
    auto [wx, wy] = wpos(wn);
    auto [bx, by] = bpos(bn);
    int cw = wn > 20 ? wn - 20 : wn;          // canonical white
    int cb = (bn - 1) % 5 == 4 ? bn - 4 : bn;  // canonical black
    IVec tw = wn > 20 ? IVec{1, 0} : IVec{0, 0};
    IVec tb = (bn - 1) % 5 == 4 ? IVec{0, 1} : IVec{0, 0};
    int e = m.add_edge("e" + std::to_string(counter++), bidx[cb], widx[cw],
                       tw - tb);
    inc[widx[cw]].push_back({e, IVec{bx - wx, by - wy}});
    inc[bidx[cb]].push_back({e, IVec{wx - bx, wy - by}});
  }
  for (size_t n = 0; n < m.nodes.size(); ++n) {
    auto v = inc[n];
    std::sort(v.begin(), v.end(),
              [](const Inc& a, const Inc& b) { return angle_less(a.dir, b.dir); });
    m.rotation[n].clear();
    for (auto& i : v) m.rotation[n].push_back(i.edge);
  }
  return m;
}

namespace {

// Build a model from a drawing: nodes at drawn grid coordinates, nodes on the
// far boundary folded onto their canonical copies, rotations by angle.
struct Drawing {
  int width, height;
  std::vector<std::pair<int, int>> blacks, whites;  // drawn coordinates
  std::vector<std::pair<int, int>> pairs;           // (white idx, black idx) 1-based
};

DimerModel from_drawing(const Drawing& d) {
  DimerModel m;
  std::map<std::pair<int, int>, int> at;
  auto canon = [&](std::pair<int, int> p) {
    return std::pair<int, int>{p.first % d.width, p.second % d.height};
  };
  for (size_t i = 0; i < d.whites.size(); ++i) {
    auto p = d.whites[i];
    if (canon(p) != p) continue;
    int id = m.add_node("W" + std::to_string(i + 1), Color::White);
    m.nodes[id].has_pos = true;
    m.nodes[id].px = Rat(p.first, d.width);
    m.nodes[id].py = Rat(p.second, d.height);
    at[p] = id;
  }
  for (size_t i = 0; i < d.blacks.size(); ++i) {
    auto p = d.blacks[i];
    if (canon(p) != p) continue;
    int id = m.add_node("B" + std::to_string(i + 1), Color::Black);
    m.nodes[id].has_pos = true;
    m.nodes[id].px = Rat(p.first, d.width);
    m.nodes[id].py = Rat(p.second, d.height);
    at[p] = id;
  }
  struct Inc { int edge; IVec dir; };
  std::vector<std::vector<Inc>> inc(m.nodes.size());
  int counter = 1;
  for (auto [wn, bn] : d.pairs) {
    auto wp = d.whites[wn - 1], bp = d.blacks[bn - 1];
    IVec tw{wp.first / d.width, wp.second / d.height};
    IVec tb{bp.first / d.width, bp.second / d.height};
    int w = at.at(canon(wp)), b = at.at(canon(bp));
    int e = m.add_edge("e" + std::to_string(counter++), b, w, tw - tb);
    inc[w].push_back({e, IVec{bp.first - wp.first, bp.second - wp.second}});
    inc[b].push_back({e, IVec{wp.first - bp.first, wp.second - bp.second}});
  }
  for (size_t n = 0; n < m.nodes.size(); ++n) {
    auto v = inc[n];
    std::sort(v.begin(), v.end(),
              [](const Inc& a, const Inc& b) { return angle_less(a.dir, b.dir); });
    m.rotation[n].clear();
    for (auto& i : v) m.rotation[n].push_back(i.edge);
  }
  return m;
}

}  // namespace

DimerModel appendix_b_gamma_a() {
  Drawing d;
  d.width = 10;
  d.height = 8;
  for (int c = 0; c < 5; ++c)
    for (int r = 0; r < 5; ++r) d.blacks.push_back({2 * c + 1, 2 * r});
  for (int c = 0; c < 6; ++c)
    for (int r = 0; r < 4; ++r) d.whites.push_back({2 * c, 2 * r + 1});
  d.pairs = {{1, 1},   {2, 2},   {2, 3},   {3, 3},   {3, 4},   {4, 4},
             {5, 1},   {5, 2},   {6, 2},   {6, 3},   {7, 3},   {7, 4},
             {8, 4},   {8, 5},   {5, 6},   {6, 7},   {7, 8},   {7, 9},
             {8, 9},   {9, 6},   {9, 7},   {10, 7},  {10, 8},  {11, 8},
             {11, 9},  {12, 9},  {12, 10}, {9, 11},  {10, 12}, {11, 13},
             {12, 14}, {13, 11}, {13, 12}, {13, 16}, {13, 17}, {14, 12},
             {14, 13}, {14, 17}, {14, 18}, {15, 13}, {15, 14}, {15, 18},
             {15, 19}, {16, 14}, {16, 15}, {16, 19}, {16, 20}, {17, 16},
             {17, 17}, {17, 21}, {17, 22}, {18, 17}, {18, 18}, {18, 22},
             {18, 23}, {19, 18}, {19, 19}, {19, 23}, {20, 19}, {20, 20},
             {20, 24}, {21, 21}, {21, 22}, {22, 22}, {22, 23}, {23, 23},
             {23, 24}, {24, 24}, {24, 25}};
  return from_drawing(d);
}

DimerModel appendix_b_gamma_b() {
  Drawing d;
  d.width = 12;
  d.height = 8;
  for (int r = 0; r < 5; ++r) d.blacks.push_back({1, 2 * r});  // B1..B5
  d.blacks.push_back({3, 6});                                  // B6
  for (int c : {5, 7, 9, 11})
    for (int r = 0; r < 5; ++r) d.blacks.push_back({c, 2 * r});  // B7..B26
  for (int c : {0, 2})
    for (int r = 0; r < 4; ++r) d.whites.push_back({c, 2 * r + 1});  // W1..W8
  d.whites.push_back({4, 7});                                        // W9
  for (int c : {6, 8, 10, 12})
    for (int r = 0; r < 4; ++r) d.whites.push_back({c, 2 * r + 1});  // W10..W25
  d.pairs = {{1, 1},   {1, 2},   {2, 2},   {2, 3},   {3, 3},   {3, 4},
             {4, 4},   {5, 1},   {5, 2},   {5, 7},   {6, 2},   {6, 3},
             {6, 8},   {7, 3},   {7, 4},   {7, 6},   {7, 9},   {8, 4},
             {8, 5},   {8, 6},   {9, 6},   {9, 10},  {9, 11},  {10, 7},
             {10, 8},  {10, 12}, {11, 8},  {11, 9},  {11, 13}, {12, 9},
             {12, 10}, {12, 14}, {13, 10}, {13, 11}, {13, 15}, {14, 12},
             {14, 13}, {14, 17}, {14, 18}, {15, 13}, {15, 14}, {15, 18},
             {15, 19}, {16, 14}, {16, 15}, {16, 19}, {16, 20}, {17, 15},
             {17, 16}, {17, 20}, {17, 21}, {18, 17}, {18, 18}, {18, 22},
             {19, 18}, {19, 19}, {19, 23}, {20, 19}, {20, 20}, {20, 24},
             {21, 20}, {21, 21}, {21, 25}, {22, 22}, {22, 23}, {23, 23},
             {23, 24}, {24, 24}, {24, 25}, {25, 25}, {25, 26}};
  return from_drawing(d);
}

int face_at_point(const DimerModel& m, Rat x, Rat y) {
  auto fs = faces(m);
  for (size_t i = 0; i < fs.size(); ++i) {
    // Lift the boundary.
    std::vector<RVec> poly;
    IVec T{0, 0};
    for (const Dart& dd : fs[i].boundary) {
      int t = dart_tail(m, dd);
      poly.push_back(RVec{m.nodes[t].px + Rat(T.x), m.nodes[t].py + Rat(T.y)});
      T += dart_offset(m, dd);
    }
    // Try the query point shifted by small integer translations.
    for (i64 dx = -2; dx <= 2; ++dx)
      for (i64 dy = -2; dy <= 2; ++dy) {
        RVec L{x + Rat(dx), y + Rat(dy)};
        int w = 0;
        for (size_t k = 0; k < poly.size(); ++k) {
          RVec a = poly[k], b = poly[(k + 1) % poly.size()];
          Rat c = cross(b - a, L - a);
          if (a.y <= L.y && L.y < b.y && c.sign() > 0) ++w;
          if (b.y <= L.y && L.y < a.y && c.sign() < 0) --w;
        }
        if (w != 0) return static_cast<int>(i);
      }
  }
  return -1;
}

namespace {

DimerModel build_explicit(
    const std::vector<std::tuple<std::string, Color, Rat, Rat>>& nodes,
    const std::vector<std::tuple<std::string, std::string, std::string, IVec>>& edges,
    const std::vector<std::pair<std::string, std::vector<std::string>>>& rot) {
  DimerModel m;
  for (auto& [name, c, x, y] : nodes) {
    int id = m.add_node(name, c);
    m.nodes[id].has_pos = true;
    m.nodes[id].px = x;
    m.nodes[id].py = y;
  }
  for (auto& [name, b, w, off] : edges)
    m.add_edge(name, m.node_by_name(b), m.node_by_name(w), off);
  for (auto& [name, lst] : rot) {
    int n = m.node_by_name(name);
    m.rotation[n].clear();
    for (auto& e : lst) m.rotation[n].push_back(m.edge_by_name(e));
  }
  return m;
}

}  // namespace

DimerModel example_4_8_model() {
  using C = Color;
  return build_explicit(
      {{"B1", C::Black, Rat(1, 8), Rat(3, 8)},
       {"B2", C::Black, Rat(5, 8), Rat(3, 8)},
       {"B3", C::Black, Rat(3, 8), Rat(7, 8)},
       {"B4", C::Black, Rat(7, 8), Rat(7, 8)},
       {"W1", C::White, Rat(3, 8), Rat(1, 8)},
       {"W2", C::White, Rat(7, 8), Rat(1, 8)},
       {"W3", C::White, Rat(1, 8), Rat(5, 8)},
       {"W4", C::White, Rat(5, 8), Rat(5, 8)}},
      {{"a1", "B1", "W1", {0, 0}},
       {"a2", "B1", "W3", {0, 0}},
       {"a3", "B2", "W1", {0, 0}},
       {"a4", "B2", "W2", {0, 0}},
       {"a5", "B2", "W3", {0, 0}},
       {"a6", "B2", "W4", {0, 0}},
       {"a7", "B3", "W3", {0, 0}},
       {"a8", "B3", "W4", {0, 0}},
       {"a9", "B4", "W4", {0, 0}},
       {"a10", "B3", "W1", {0, 1}},
       {"a11", "B4", "W2", {0, 1}},
       {"a12", "B1", "W2", {-1, 0}},
       {"a13", "B3", "W2", {0, 1}},
       {"a14", "B4", "W3", {1, 0}}},
      {{"B1", {"a2", "a12", "a1"}},
       {"B2", {"a6", "a5", "a3", "a4"}},
       {"B3", {"a13", "a10", "a7", "a8"}},
       {"B4", {"a11", "a9", "a14"}},
       {"W1", {"a3", "a1", "a10"}},
       {"W2", {"a12", "a4", "a13", "a11"}},
       {"W3", {"a7", "a14", "a2", "a5"}},
       {"W4", {"a9", "a8", "a6"}}});
}

DimerModel example_a4_left() {
  using C = Color;
  return build_explicit(
      {{"B1", C::Black, Rat(1, 10), Rat(1, 5)},
       {"B2", C::Black, Rat(7, 10), Rat(2, 5)},
       {"B3", C::Black, Rat(3, 10), Rat(3, 5)},
       {"B4", C::Black, Rat(9, 10), Rat(4, 5)},
       {"W1", C::White, Rat(9, 10), Rat(1, 5)},
       {"W2", C::White, Rat(3, 10), Rat(2, 5)},
       {"W3", C::White, Rat(7, 10), Rat(3, 5)},
       {"W4", C::White, Rat(1, 10), Rat(4, 5)}},
      {{"a1", "B1", "W2", {0, 0}},
       {"a2", "B2", "W1", {0, 0}},
       {"a3", "B2", "W2", {0, 0}},
       {"a4", "B2", "W3", {0, 0}},
       {"a5", "B3", "W2", {0, 0}},
       {"a6", "B3", "W3", {0, 0}},
       {"a7", "B3", "W4", {0, 0}},
       {"a8", "B4", "W3", {0, 0}},
       {"a9", "B4", "W2", {1, 0}},
       {"a10", "B1", "W1", {-1, 0}},
       {"a11", "B1", "W4", {0, -1}},
       {"a12", "B4", "W1", {0, 1}},
       {"a13", "B4", "W4", {1, 0}}},
      {{"B1", {"a1", "a10", "a11"}},
       {"B2", {"a4", "a3", "a2"}},
       {"B3", {"a6", "a7", "a5"}},
       {"B4", {"a13", "a12", "a8", "a9"}},
       {"W1", {"a10", "a2", "a12"}},
       {"W2", {"a3", "a5", "a9", "a1"}},
       {"W3", {"a8", "a6", "a4"}},
       {"W4", {"a11", "a13", "a7"}}});
}

DimerModel example_a4_mu0() {
  using C = Color;
  return build_explicit(
      {{"B1", C::Black, Rat(1, 5), Rat(1, 5)},
       {"B2", C::Black, Rat(1, 2), Rat(2, 5)},
       {"B3", C::Black, Rat(4, 5), Rat(4, 5)},
       {"W1", C::White, Rat(4, 5), Rat(1, 5)},
       {"W2", C::White, Rat(1, 5), Rat(2, 5)},
       {"W3", C::White, Rat(1, 5), Rat(4, 5)}},
      {{"a1", "B1", "W2", {0, 0}},
       {"a2", "B2", "W1", {0, 0}},
       {"a3", "B2", "W2", {0, 0}},
       {"a4", "B2", "W3", {0, 0}},
       {"a5", "B3", "W1", {0, 0}},
       {"a6", "B3", "W3", {0, 0}},
       {"a7", "B3", "W2", {1, 0}},
       {"a8", "B1", "W1", {-1, 0}},
       {"a9", "B1", "W3", {0, -1}},
       {"a10", "B3", "W1", {0, 1}},
       {"a11", "B3", "W3", {1, 0}}},
      {{"B1", {"a1", "a8", "a9"}},
       {"B2", {"a4", "a3", "a2"}},
       {"B3", {"a11", "a10", "a6", "a5", "a7"}},
       {"W1", {"a8", "a5", "a2", "a10"}},
       {"W2", {"a3", "a7", "a1"}},
       {"W3", {"a6", "a9", "a11", "a4"}}});
}

LatticePolygon poly(std::initializer_list<std::pair<i64, i64>> vs) {
  std::vector<IVec> pts;
  for (auto& [x, y] : vs) pts.push_back({x, y});
  return convex_hull(pts);
}

PerfectMatching pm_by_names(const DimerModel& m,
                            const std::vector<std::string>& names) {
  PerfectMatching P;
  for (const auto& nm : names) {
    int e = m.edge_by_name(nm);
    if (e < 0) throw std::runtime_error("no edge " + nm);
    P.edges.push_back(e);
  }
  std::sort(P.edges.begin(), P.edges.end());
  return P;
}

IMat random_unimodular(Rng& rng, int steps) {
  IMat U;
  const IMat S{1, 1, 0, 1}, Sinv{1, -1, 0, 1}, R{0, -1, 1, 0};
  for (int k = 0; k < steps; ++k) {
    switch (rng.next() % 3) {
      case 0: U = U * S; break;
      case 1: U = U * Sinv; break;
      default: U = U * R; break;
    }
  }
  return U;
}

DimerModel random_gauge_perturbation(const DimerModel& m, Rng& rng, int moves) {
  DimerModel cur = m;
  for (int k = 0; k < moves; ++k) {
    switch (rng.next() % 3) {
      case 0: {
        int n = static_cast<int>(rng.next() % cur.nodes.size());
        cur = retranslate(cur, n, {rng.uniform(-2, 2), rng.uniform(-2, 2)});
        break;
      }
      case 1: {
        int n = static_cast<int>(rng.next() % cur.nodes.size());
        int deg = cur.degree(n);
        if (deg < 3) break;
        int start = static_cast<int>(rng.next() % deg);
        int len = static_cast<int>(1 + rng.next() % (deg - 1));
        cur = split_move(cur, n, start, len);
        break;
      }
      default: {
        // Join some 2-valent node back if one exists.
        for (size_t n = 0; n < cur.nodes.size(); ++n) {
          if (cur.degree(static_cast<int>(n)) != 2) continue;
          int e1 = cur.rotation[n][0], e2 = cur.rotation[n][1];
          Color oc = cur.nodes[n].color == Color::Black ? Color::White : Color::Black;
          if (cur.endpoint(e1, oc) == cur.endpoint(e2, oc)) continue;
          cur = join_move(cur, static_cast<int>(n));
          break;
        }
        break;
      }
    }
  }
  return cur;
}

int path_index_by_slope(const std::vector<ZigzagPath>& paths, IVec slope, int which) {
  int seen = 0;
  for (size_t k = 0; k < paths.size(); ++k)
    if (paths[k].slope == slope && seen++ == which) return static_cast<int>(k);
  return -1;
}

}  // namespace dimerlab::test
