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

#ifndef DIMERLAB_ZIGZAG_HPP
#define DIMERLAB_ZIGZAG_HPP

#include <optional>
#include <vector>

#include "dimerlab/dimer.hpp"
#include "dimerlab/matchings.hpp"

namespace dimerlab {

// Cyclic alternating dart sequence turning maximally right at white nodes and
// maximally left at black nodes. Darts at even positions (0-based) run
// black -> white and are the zigs.
struct ZigzagPath {
  std::vector<Dart> darts;
  IVec slope;

  struct Visit {
    int edge;
    bool is_zig;   // traversed black -> white by this path
    IVec copy;     // translation of the black endpoint's lift at this visit
  };
  std::vector<Visit> visits;  // one per dart, in dart order

  i64 length() const { return static_cast<i64>(darts.size()); }
  bool is_zig_position(size_t k) const { return k % 2 == 0; }
  std::vector<int> zig_edges() const;
  std::vector<int> zag_edges() const;
  bool contains_edge(int e) const;
};

// Every dart lies on exactly one path; paths in deterministic order.
std::vector<ZigzagPath> zigzag_paths(const DimerModel& m);

// Index of the path owning a dart (positions into the zigzag_paths output).
std::vector<int> dart_to_path(const DimerModel& m,
                              const std::vector<ZigzagPath>& paths);

// Exact universal-cover intersection bookkeeping for a pair of paths.
struct LiftIntersectionTable {
  struct SharedEdge {
    int edge;
    int z_visit, w_visit;  // indices into the two paths' visit lists
    IVec z_copy, w_copy;
    int sign;              // +1 if the shared edge is a zig of z
  };
  std::vector<SharedEdge> shared;
  IVec lambda_a, lambda_b;  // generators of Lambda = Z[z] + Z[w]
  bool self_pair = false;
};

LiftIntersectionTable lift_table(const ZigzagPath& z, const ZigzagPath& w);

// Some lift of z meets itself in an edge.
bool has_lift_self_intersection(const ZigzagPath& z);

// Some lift pair of (z, w) intersects in the same direction more than once
// (condition (3) of zigzag consistency). Pass the same path twice to test
// distinct lifts of one path.
bool same_direction_double_intersection(const ZigzagPath& z, const ZigzagPath& w);

// Largest number of edges shared by a single lift pair; nullopt when some
// pair shares infinitely many.
std::optional<i64> max_shared_edges_per_lift_pair(const ZigzagPath& z,
                                                  const ZigzagPath& w);

// x in Z*a + Z*b; witnesses reported when the lattice has full rank.
bool lattice_member(IVec x, IVec a, IVec b, i64* s = nullptr, i64* t = nullptr);

bool is_consistent(const DimerModel& m);
bool is_properly_ordered(const DimerModel& m);
bool is_isoradial(const DimerModel& m);

enum class ZigzagType { TypeI, TypeII };

ZigzagType classify_type(const DimerModel& m, const std::vector<ZigzagPath>& paths,
                         int path_index);

// Setting of the boundary matchings attached to a zigzag path z:
// P_z is the corner matching at the CCW-start vertex of z's polygon edge and
// P'_z = (P_z \ Zig(z)) u Zag(z). h(P'_z, P_z) is primitive and orthogonal
// to [z] under the intersection pairing.
struct BoundaryMatchings {
  PerfectMatching P_z, P_prime_z;
  IVec h;  // h(P'_z, P_z)
};

BoundaryMatchings boundary_matchings_for(const DimerModel& m,
                                         const PmPolygonResult& poly,
                                         const ZigzagPath& z);

// Slope multiset of all paths (one entry per path).
SlopeMultiset zigzag_slope_multiset(const std::vector<ZigzagPath>& paths);

}  // namespace dimerlab

#endif  // DIMERLAB_ZIGZAG_HPP
