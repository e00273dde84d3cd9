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

#ifndef DIMERLAB_POLYGON_MUTATION_HPP
#define DIMERLAB_POLYGON_MUTATION_HPP

#include <optional>
#include <vector>

#include "dimerlab/lattice.hpp"

namespace dimerlab {

// Data for a single combinatorial mutation step: the chosen edge E of P, its
// primitive inner normal w, and the factor direction u_E with <w,u_E> = 0.
struct MutationContext {
  LatticePolygon P;
  int edge_index = 0;
  IVec w;      // primitive inner normal of E; <w,.> attains h_min exactly on E
  IVec u_E;    // primitive, parallel to E
  i64 h_min = 0, h_max = 0;
};

// Dual polyhedron P* = Q + C. The cone part is empty when the origin is
// strictly interior to P.
struct DualPolyhedron {
  RationalPolygon bounded_part;   // Q (vertices of the polyhedron, CCW)
  std::vector<IVec> cone_rays;    // primitive generators of C (0, 1 or 2)
};

// sign=+1 takes u_E along the CCW traversal of E (the paper's choice);
// sign=-1 negates it.
MutationContext make_context(const LatticePolygon& P, int edge_index, int sign);

// |E cap N| - 1 >= -h_min.
bool admits_mutation(const MutationContext& ctx);

// mut_w(P, F) with F = conv{0, u_E}. Direct Minkowski construction; each G_h
// is the level-h lattice segment shortened by (-h) primitive steps from its
// u_E-most end.
LatticePolygon mutate(const MutationContext& ctx);

// All hulls obtainable from valid {G_h} placements (oracle for the
// choice-independence of the mutation).
std::vector<LatticePolygon> mutate_all_gh_choices(const MutationContext& ctx);

DualPolyhedron dual(const LatticePolygon& P);

// Dual of the dual, for the (P*)* = P identity.
LatticePolygon dual_of_dual(const DualPolyhedron& D);

// Piecewise-linear map of Eq. (6.1): v if <v,u_E> >= 0, else v - <v,u_E> w.
RVec phi(RVec v, const MutationContext& ctx);

// (phi(P*))*, computed exactly over the rationals. Must equal mutate(ctx).
LatticePolygon mutate_via_dual(const MutationContext& ctx);

}  // namespace dimerlab

#endif  // DIMERLAB_POLYGON_MUTATION_HPP
