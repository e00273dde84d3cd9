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

#ifndef DIMERLAB_VERIFY_HPP
#define DIMERLAB_VERIFY_HPP

#include "dimerlab/deformation.hpp"
#include "dimerlab/polygon_mutation.hpp"

namespace dimerlab {

// End-to-end check that deforming the dimer model matches mutating its PM
// polygon: mutate the polygon at the edge normal to [z] with the factor
// pinned by h(P'_z, P_z), deform, and compare polygons exactly under the
// shared-edge anchoring.
struct VerifyReport {
  LatticePolygon original;           // with the chosen reference matching
  LatticePolygon original_anchored;  // origin pinned so that -h_min = r
  IVec origin_shift;
  IVec w, u_E;
  i64 h_min = 0, h_max = 0, r = 0, h = 0, n = 0;
  int edge_index = -1;
  LatticePolygon mutated;
  bool dual_checked = false;
  bool dual_matches = false;
  int deformed_nodes = 0, deformed_edges = 0;
  int restoration_steps = 0;
  LatticePolygon deformed_polygon;   // with its own default reference
  LatticePolygon deformed_anchored;  // translated onto the mutation frame
  IVec anchor_shift;
  bool exact_equal = false;
  bool gl2z_equal = false;
  bool pass = false;
};

VerifyReport verify_theorem(const DimerModel& m, int z_index, DeformSide side,
                            i64 r, const std::vector<int>& family,
                            const AssignmentSpec& assignment,
                            const RemovalSchedule& schedule,
                            std::optional<PerfectMatching> P0 = std::nullopt);

}  // namespace dimerlab

#endif  // DIMERLAB_VERIFY_HPP
