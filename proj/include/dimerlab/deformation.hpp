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

#ifndef DIMERLAB_DEFORMATION_HPP
#define DIMERLAB_DEFORMATION_HPP

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "dimerlab/zigzag.hpp"

namespace dimerlab {

enum class DeformSide { Zig, Zag };

// Rotation-reversed copy; zigzag paths reverse and zigs become zags, which
// turns the deformation at zag into the deformation at zig of the mirror.
DimerModel mirrored(const DimerModel& m);

// The full deformation-data bundle. For the zag side, the surgery-frame
// fields refer to the mirrored model (zigzag indices, dart orders); anchor
// edges and all counts are frame independent.
struct DeformationData {
  DeformSide side = DeformSide::Zig;
  int z_index = -1;              // chosen path, surgery frame
  IVec v;                        // [z] in the original frame
  i64 n = 0, r = 0, h = 0;       // n = l(z)/2 = r + h
  std::vector<int> family;       // surgery-frame path indices, cyclic order
  std::vector<std::vector<int>> anchors;  // X_i (or Y_i) as edge ids
  std::vector<i64> weights;      // p_i = |X_i| - 1
  std::vector<int> cross_paths;        // x-paths (zig side) in original frame
  std::vector<i64> cross_counts;       // m_j per cross path
  std::vector<int> other_paths;        // y-paths (zig side) in original frame
  std::vector<i64> other_counts;
};

// One sub-zigzag of a crossing path with a family assignment choice.
struct AssignmentSpec {
  bool auto_round_robin = true;
  // Explicit X_i (or Y_i) as edge names per family member.
  std::vector<std::vector<std::string>> anchor_edges;
};

struct EdgeSelector {
  std::string white, black;
  std::optional<IVec> offset;  // disambiguates parallel edges
};

struct RemovalSchedule {
  bool automatic = true;
  std::vector<std::pair<EdgeSelector, EdgeSelector>> pairs;
};

int resolve_edge(const DimerModel& m, const EdgeSelector& sel);

// Def 4.1. `family_selection` picks r same-slope type-I paths by
// original-frame path index (empty: the first r, starting with z).
DeformationData build_deformation_data(const DimerModel& m, int z_index, i64 r,
                                       const std::vector<int>& family_selection,
                                       DeformSide side,
                                       const AssignmentSpec& assignment);

struct DeformResult {
  DimerModel pre_restoration;  // after steps 1-4 (the non-degenerate model)
  DimerModel result;           // consistent and reduced
  int restoration_steps = 0;
};

// The deformation at zig / zag. `shortcut` skips the bypass insertion and the
// consistency restoration (valid for r = 1 and for hexagonal/square models).
DeformResult deform(const DimerModel& m, const DeformationData& data,
                    const RemovalSchedule& schedule, bool shortcut = false);

// Operation: loop until consistent; (a) remove all lift self-intersection
// edges and all-trivial components, then (b) remove one consecutive
// same-direction intersection pair (automatic: lexicographically least
// edge-name pair; explicit: as scheduled).
DimerModel restore_consistency(const DimerModel& m, const RemovalSchedule& schedule,
                               int* steps = nullptr);

// Pairs of torus edges currently removable by the (b)-step: consecutive
// same-direction double intersections of some lift pair.
std::vector<std::pair<int, int>> removal_candidates(const DimerModel& m);

// Drop edges by id and any node left isolated.
DimerModel remove_edges_by_id(const DimerModel& m, const std::set<int>& kill);

struct SlopeTransformReport {
  bool ok = false;
  struct Line {
    std::string kind;  // "cross", "other", "new", "family-rest", "anti"
    IVec before, predicted;
    bool matched = false;
  };
  std::vector<Line> lines;
  SlopeMultiset predicted, observed;
  IVec u;  // h(P'_z, P_z)
};

SlopeTransformReport slope_transform_report(const DimerModel& m,
                                            const DeformationData& data,
                                            const DimerModel& deformed);

}  // namespace dimerlab

#endif  // DIMERLAB_DEFORMATION_HPP
