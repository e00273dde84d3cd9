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

#ifndef DIMERLAB_DIMER_HPP
#define DIMERLAB_DIMER_HPP

#include <optional>
#include <string>
#include <vector>

#include "dimerlab/geometry.hpp"

namespace dimerlab {

enum class Color { Black, White };

// A dimer model on the two-torus, encoded combinatorially: a bipartite graph
// with a counterclockwise rotation system and a per-edge homology offset.
// The offset of an edge is the translation of the white endpoint's lift
// relative to the black endpoint's lift.
struct DimerModel {
  struct Node {
    std::string name;
    Color color = Color::Black;
    bool has_pos = false;
    Rat px, py;  // optional position in [0,1)^2, rendering only
  };
  struct Edge {
    std::string name;
    int black = -1, white = -1;
    IVec offset;
  };

  std::vector<Node> nodes;
  std::vector<Edge> edges;
  std::vector<std::vector<int>> rotation;  // per node: CCW-ordered edge ids

  int add_node(std::string name, Color c);
  int add_edge(std::string name, int black, int white, IVec offset);
  int node_by_name(const std::string& name) const;  // -1 if absent
  int edge_by_name(const std::string& name) const;
  int endpoint(int e, Color side) const {
    return side == Color::Black ? edges[e].black : edges[e].white;
  }
  int degree(int n) const { return static_cast<int>(rotation[n].size()); }
  int rot_index(int n, int e) const;
  int rot_next(int n, int e) const;
  int rot_prev(int n, int e) const;
  size_t num_black() const;
  std::string fresh_node_name(const std::string& base) const;
  std::string fresh_edge_name(const std::string& base) const;
};

// Directed edge traversal. dir false: black -> white, true: white -> black.
struct Dart {
  int edge = -1;
  bool to_black = false;

  int id() const { return edge * 2 + (to_black ? 1 : 0); }
  static Dart from_id(int id) { return {id / 2, (id % 2) != 0}; }
  Dart reversed() const { return {edge, !to_black}; }
  friend bool operator==(Dart a, Dart b) {
    return a.edge == b.edge && a.to_black == b.to_black;
  }
};

inline int dart_tail(const DimerModel& m, Dart d) {
  return d.to_black ? m.edges[d.edge].white : m.edges[d.edge].black;
}
inline int dart_head(const DimerModel& m, Dart d) {
  return d.to_black ? m.edges[d.edge].black : m.edges[d.edge].white;
}
// Lift displacement gained by traversing d.
inline IVec dart_offset(const DimerModel& m, Dart d) {
  return d.to_black ? -m.edges[d.edge].offset : m.edges[d.edge].offset;
}

// Face of the torus cell decomposition: counterclockwise boundary darts
// (the face lies on the left of each boundary dart).
struct Face {
  std::vector<Dart> boundary;
  size_t size() const { return boundary.size(); }
};

// Next boundary dart of the face on the left of d.
Dart face_next(const DimerModel& m, Dart d);

std::vector<Face> faces(const DimerModel& m);

struct ValidationReport {
  bool ok = false;
  bool bipartite_ok = false;
  bool rotation_ok = false;
  bool euler_ok = false;
  bool faces_contractible = false;
  bool connected = false;
  int num_faces = 0;
  i64 euler_characteristic = 0;
  std::vector<std::string> errors;
  std::vector<std::string> warnings;  // e.g. degree-1 nodes
};

ValidationReport validate(const DimerModel& m);

// Gauge move: retranslate the lift of one node by delta. A no-op for every
// observable quantity.
DimerModel retranslate(const DimerModel& m, int node, IVec delta);

// Split move: detach a contiguous rotation arc of `node` behind a fresh
// 2-valent node of the opposite color. `arc_start` is an index into the
// rotation of `node` and `arc_len >= 1` edges are moved.
DimerModel split_move(const DimerModel& m, int node, int arc_start, int arc_len);

// Join move: contract a 2-valent node, merging its two distinct neighbors.
DimerModel join_move(const DimerModel& m, int two_valent_node);

// Apply join moves until no (joinable) 2-valent node remains.
DimerModel reduce(const DimerModel& m);

// Color-preserving isomorphism of rotation systems, up to a global
// orientation flip, with offsets matching up to GL(2,Z) and per-node lift
// retranslation.
bool isomorphic(const DimerModel& a, const DimerModel& b);

// Exact structural equality (names, offsets, rotations up to cyclic shift).
bool structural_equal(const DimerModel& a, const DimerModel& b);

}  // namespace dimerlab

#endif  // DIMERLAB_DIMER_HPP
