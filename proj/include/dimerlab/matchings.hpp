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

#ifndef DIMERLAB_MATCHINGS_HPP
#define DIMERLAB_MATCHINGS_HPP

#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "dimerlab/dimer.hpp"
#include "dimerlab/lattice.hpp"

namespace dimerlab {

// Edge subset covering every node exactly once; edges sorted ascending.
struct PerfectMatching {
  std::vector<int> edges;

  bool contains(int e) const {
    return std::binary_search(edges.begin(), edges.end(), e);
  }
  friend bool operator==(const PerfectMatching& a, const PerfectMatching& b) {
    return a.edges == b.edges;
  }
  friend bool operator<(const PerfectMatching& a, const PerfectMatching& b) {
    return a.edges < b.edges;
  }
};

// Complete duplicate-free enumeration. Output order is the one produced by
// backtracking over black nodes in ascending id with edges tried in rotation
// order.
std::vector<PerfectMatching> enumerate_pms(const DimerModel& m);

// Visitor form of the enumeration (same order).
void for_each_pm(const DimerModel& m,
                 const std::function<void(const PerfectMatching&)>& cb);

// Every edge lies in some perfect matching (checked edge by edge with
// augmenting paths, no enumeration).
bool is_nondegenerate(const DimerModel& m);

// h(P, P0) = rot(sum_P offsets - sum_P0 offsets), rot(a,b) = (b,-a).
IVec height_change(const DimerModel& m, const PerfectMatching& P,
                   const PerfectMatching& P0);

enum class PmClass { Corner, Boundary, Internal };

struct PmPolygonResult {
  LatticePolygon polygon;
  PerfectMatching reference;
  // One record per lattice point of the polygon that is hit.
  struct PointInfo {
    IVec point;
    i64 count = 0;
    PmClass cls = PmClass::Internal;
    PerfectMatching representative;
  };
  std::vector<PointInfo> points;
  std::vector<std::pair<PerfectMatching, IVec>> placement;  // all matchings

  const PointInfo* at(IVec p) const {
    for (const auto& pi : points)
      if (pi.point == p) return &pi;
    return nullptr;
  }
};

PmPolygonResult pm_polygon(const DimerModel& m,
                           std::optional<PerfectMatching> P0 = std::nullopt);

// Per boundary lattice point of each polygon edge: the number of matchings
// placed there (Prop-style binomial counts on consistent models).
std::map<std::pair<int, IVec>, i64> boundary_counts(const PmPolygonResult& r);

}  // namespace dimerlab

#endif  // DIMERLAB_MATCHINGS_HPP
