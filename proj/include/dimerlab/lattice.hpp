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

#ifndef DIMERLAB_LATTICE_HPP
#define DIMERLAB_LATTICE_HPP

#include <map>
#include <vector>

#include "dimerlab/geometry.hpp"

namespace dimerlab {

// Convex lattice polygon: vertices counterclockwise, strictly convex (no
// three consecutive vertices collinear). Point and segment degenerations are
// representable and flagged.
struct LatticePolygon {
  std::vector<IVec> vertices;

  bool is_point() const { return vertices.size() == 1; }
  bool is_segment() const { return vertices.size() == 2; }
  bool degenerate() const { return vertices.size() < 3; }
  size_t size() const { return vertices.size(); }
  IVec vertex(size_t i) const { return vertices[i % vertices.size()]; }

  friend bool operator==(const LatticePolygon& a, const LatticePolygon& b) {
    return a.vertices == b.vertices;
  }
  std::string str() const;
};

struct RationalPolygon {
  std::vector<RVec> vertices;  // counterclockwise, strictly convex
  bool degenerate() const { return vertices.size() < 3; }
};

// Multiset of primitive vectors; one entry per primitive side segment (or
// zigzag slope). Entries of a closed polygon boundary sum to zero.
struct SlopeMultiset {
  std::map<IVec, i64> entries;

  void add(IVec primitive_dir, i64 mult = 1) { entries[primitive_dir] += mult; }
  IVec weighted_sum() const {
    IVec s{0, 0};
    for (auto& [v, m] : entries) s += m * v;
    return s;
  }
  i64 total() const {
    i64 t = 0;
    for (auto& [v, m] : entries) t += m;
    return t;
  }
  friend bool operator==(const SlopeMultiset& a, const SlopeMultiset& b) {
    return a.entries == b.entries;
  }
};

// Convex hull of lattice points, counterclockwise, collinear points dropped,
// starting at the lexicographically smallest vertex. Returns a point or
// segment polygon for degenerate input.
LatticePolygon convex_hull(std::vector<IVec> pts);

// Hull of rational points (same conventions).
RationalPolygon convex_hull_rational(std::vector<RVec> pts);

// Lattice length of the segment [a,b].
i64 lattice_length(IVec a, IVec b);

// All lattice points on [a,b], ordered from a to b.
std::vector<IVec> segment_lattice_points(IVec a, IVec b);

// All lattice points inside or on P.
std::vector<IVec> polygon_lattice_points(const LatticePolygon& P);

// Location of a point relative to P: 2 = vertex, 1 = on an edge (not a
// vertex), 0 = strict interior, -1 = outside.
int locate_point(const LatticePolygon& P, IVec p);

// One primitive outer normal per primitive side segment.
SlopeMultiset edge_normals(const LatticePolygon& P);

// Inverse of edge_normals up to translation; `anchor` becomes the walk start
// (the vertex between the angle-maximal and angle-minimal normals).
LatticePolygon polygon_from_slopes(const SlopeMultiset& S, IVec anchor);

// Canonical representative of the GL(2,Z) + translation orbit.
LatticePolygon gl2z_canonical_form(const LatticePolygon& P);

// (h_min, h_max) of <w,.> over P.
std::pair<i64, i64> heights(const LatticePolygon& P, IVec w);

LatticePolygon translate(const LatticePolygon& P, IVec t);
LatticePolygon apply(const IMat& U, const LatticePolygon& P);

// True if the two polygons are translates of each other; reports the shift.
bool translate_equal(const LatticePolygon& A, const LatticePolygon& B, IVec* shift = nullptr);

}  // namespace dimerlab

#endif  // DIMERLAB_LATTICE_HPP
