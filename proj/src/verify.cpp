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

#include "dimerlab/verify.hpp"

namespace dimerlab {

VerifyReport verify_theorem(const DimerModel& m, int z_index, DeformSide side,
                            i64 r, const std::vector<int>& family,
                            const AssignmentSpec& assignment,
                            const RemovalSchedule& schedule,
                            std::optional<PerfectMatching> P0) {
  VerifyReport rep;
  bool strict_origin = P0.has_value();
  auto paths = zigzag_paths(m);
  auto poly = pm_polygon(m, P0);
  rep.original = poly.polygon;

  DeformationData data =
      build_deformation_data(m, z_index, r, family, side, assignment);
  rep.r = r;
  rep.n = data.n;
  rep.h = data.h;
  IVec v = data.v;  // original-frame [z]
  rep.w = -v;

  auto bm = boundary_matchings_for(m, poly, paths[z_index]);
  rep.u_E = side == DeformSide::Zig ? bm.h : -bm.h;

  // Table-1 consistency: width n, and the origin at w-height -r.
  auto [lo, hi] = heights(rep.original, rep.w);
  if (hi - lo != data.n)
    throw std::domain_error("deformation/mutation data inconsistent");
  IVec shift{0, 0};
  if (-lo != r) {
    if (strict_origin)
      throw std::domain_error("deformation/mutation data inconsistent");
    // Translate so that h_min = -r: pick tau with <w, tau> = lo + r.
    i64 c = lo + r;
    i64 s, t;
    ext_gcd(rep.w.x, rep.w.y, s, t);
    shift = -c * IVec{s, t};
  }
  rep.origin_shift = shift;
  rep.original_anchored = translate(rep.original, shift);
  auto [lo2, hi2] = heights(rep.original_anchored, rep.w);
  rep.h_min = lo2;
  rep.h_max = hi2;

  // The edge with outer normal [z], i.e. inner normal w.
  const LatticePolygon& P = rep.original_anchored;
  for (size_t i = 0; i < P.vertices.size(); ++i) {
    IVec d = P.vertex(i + 1) - P.vertex(i);
    if (primitive(rot_neg90(d)) == v) rep.edge_index = static_cast<int>(i);
  }
  if (rep.edge_index < 0)
    throw std::logic_error("no polygon edge with outer normal [z]");
  IVec ccw_dir =
      primitive(P.vertex(rep.edge_index + 1) - P.vertex(rep.edge_index));
  int sign;
  if (ccw_dir == rep.u_E) sign = 1;
  else if (ccw_dir == -rep.u_E) sign = -1;
  else throw std::logic_error("factor direction is not parallel to the edge");
  MutationContext ctx = make_context(P, rep.edge_index, sign);
  rep.mutated = mutate(ctx);
  if (locate_point(P, {0, 0}) >= 0) {
    rep.dual_checked = true;
    rep.dual_matches = mutate_via_dual(ctx) == rep.mutated;
  }

  DeformResult dr = deform(m, data, schedule, /*shortcut=*/false);
  rep.restoration_steps = dr.restoration_steps;
  rep.deformed_nodes = static_cast<int>(dr.result.nodes.size());
  rep.deformed_edges = static_cast<int>(dr.result.edges.size());
  auto dpoly = pm_polygon(dr.result);
  rep.deformed_polygon = dpoly.polygon;
  // Setting-style anchoring: the polygons are translates exactly when the
  // theorem holds; the anchoring translation is pinned by the shared edges.
  rep.exact_equal =
      translate_equal(rep.deformed_polygon, rep.mutated, &rep.anchor_shift);
  rep.deformed_anchored = translate(rep.deformed_polygon, rep.anchor_shift);
  rep.gl2z_equal = gl2z_canonical_form(rep.deformed_polygon) ==
                   gl2z_canonical_form(rep.mutated);
  rep.pass = rep.exact_equal && (!rep.dual_checked || rep.dual_matches);
  return rep;
}

}  // namespace dimerlab
