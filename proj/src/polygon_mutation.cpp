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

#include "dimerlab/polygon_mutation.hpp"

#include <algorithm>
#include <map>

namespace dimerlab {

MutationContext make_context(const LatticePolygon& P, int edge_index, int sign) {
  if (P.degenerate()) throw std::domain_error("make_context: degenerate polygon");
  if (edge_index < 0 || edge_index >= static_cast<int>(P.vertices.size()))
    throw std::domain_error("make_context: edge index out of range");
  if (sign != 1 && sign != -1)
    throw std::domain_error("make_context: sign must be +-1");
  MutationContext ctx;
  ctx.P = P;
  ctx.edge_index = edge_index;
  IVec d = P.vertex(edge_index + 1) - P.vertex(edge_index);
  ctx.u_E = sign * primitive(d);
  ctx.w = primitive(rot90(d));  // inner normal of a CCW edge
  auto [lo, hi] = heights(P, ctx.w);
  ctx.h_min = lo;
  ctx.h_max = hi;
  return ctx;
}

bool admits_mutation(const MutationContext& ctx) {
  IVec a = ctx.P.vertex(ctx.edge_index), b = ctx.P.vertex(ctx.edge_index + 1);
  return lattice_length(a, b) >= -ctx.h_min;
}

namespace {

// Lattice points of P at height h, as an interval [t_lo, t_hi] of steps along
// u_E from a base point. Empty optional when the level has no lattice points.
struct LevelSegment {
  IVec base;      // lattice point at the u_E-least end
  i64 steps = 0;  // number of primitive u_E steps to the other end
};

std::optional<LevelSegment> level_segment(const LatticePolygon& P, IVec w,
                                          IVec u_E, i64 h) {
  std::vector<IVec> pts;
  for (IVec p : polygon_lattice_points(P))
    if (dot(w, p) == h) pts.push_back(p);
  if (pts.empty()) return std::nullopt;
  auto key = [&](IVec p) { return dot(u_E, p); };
  IVec lo = pts[0], hi = pts[0];
  for (IVec p : pts) {
    if (key(p) < key(lo)) lo = p;
    if (key(p) > key(hi)) hi = p;
  }
  LevelSegment seg;
  seg.base = lo;
  seg.steps = lattice_length(lo, hi);
  return seg;
}

bool has_vertex_at_height(const LatticePolygon& P, IVec w, i64 h) {
  for (IVec v : P.vertices)
    if (dot(w, v) == h) return true;
  return false;
}

}  // namespace

LatticePolygon mutate(const MutationContext& ctx) {
  if (!admits_mutation(ctx)) throw std::domain_error("mutation not admissible");
  std::vector<IVec> pts;
  for (i64 h = ctx.h_min; h < 0; ++h) {
    auto seg = level_segment(ctx.P, ctx.w, ctx.u_E, h);
    if (!seg) continue;
    if (seg->steps < -h) {
      // G_h must be empty, and condition (6.2) then forbids vertices here.
      // The edge-length criterion does not rule this out for polygons far
      // from the Fano range, so refuse honestly.
      if (has_vertex_at_height(ctx.P, ctx.w, h))
        throw std::domain_error(
            "mutation not admissible: no valid G_h at height " + std::to_string(h));
      continue;
    }
    // Shorten by (-h) primitive steps from the u_E-most end.
    pts.push_back(seg->base);
    pts.push_back(seg->base + (seg->steps + h) * ctx.u_E);
  }
  for (i64 h = 0; h <= ctx.h_max; ++h) {
    auto seg = level_segment(ctx.P, ctx.w, ctx.u_E, h);
    if (!seg) continue;
    IVec lo = seg->base, hi = seg->base + seg->steps * ctx.u_E;
    pts.push_back(lo);
    pts.push_back(hi);
    pts.push_back(lo + h * ctx.u_E);
    pts.push_back(hi + h * ctx.u_E);
  }
  return convex_hull(pts);
}

std::vector<LatticePolygon> mutate_all_gh_choices(const MutationContext& ctx) {
  if (!admits_mutation(ctx)) throw std::domain_error("mutation not admissible");
  // Enumerate, per negative height, every lattice segment G_h with
  // V(P)|_h subset of G_h + (-h)F subset of w_h(P); take hulls of all
  // combinations.
  std::vector<std::vector<std::pair<IVec, i64>>> options;  // (base, steps)
  std::vector<IVec> fixed;
  for (i64 h = ctx.h_min; h < 0; ++h) {
    auto seg = level_segment(ctx.P, ctx.w, ctx.u_E, h);
    std::vector<std::pair<IVec, i64>> opts;
    if (!seg) {
      if (has_vertex_at_height(ctx.P, ctx.w, h))
        throw std::domain_error("mutation not admissible: empty level with a vertex");
      continue;
    }
    i64 need = -h;
    // Vertex constraint: endpoints of w_h(P) that are vertices of P must be
    // covered by G_h + (-h)F.
    bool lo_vertex = false, hi_vertex = false;
    IVec lo = seg->base, hi = seg->base + seg->steps * ctx.u_E;
    for (IVec v : ctx.P.vertices) {
      if (v == lo) lo_vertex = true;
      if (v == hi) hi_vertex = true;
    }
    for (i64 a = 0; a + need <= seg->steps; ++a)
      for (i64 b = a + need; b <= seg->steps; ++b) {
        // G_h spans [a + need*min(0,dir)...]: G_h = [base+a*u, base+(b-need)*u]
        // so that G_h + (-h)F = [base+a*u, base+b*u].
        if (lo_vertex && a != 0) continue;
        if (hi_vertex && b != seg->steps) continue;
        opts.push_back({seg->base + a * ctx.u_E, b - need - a});
      }
    if (opts.empty() && (lo_vertex || hi_vertex))
      throw std::domain_error("mutation not admissible: no valid G_h placement");
    if (!lo_vertex && !hi_vertex)
      opts.push_back({seg->base, -1});  // G_h = empty set is also valid
    if (opts.empty()) continue;
    options.push_back(opts);
  }
  for (i64 h = 0; h <= ctx.h_max; ++h) {
    auto seg = level_segment(ctx.P, ctx.w, ctx.u_E, h);
    if (!seg) continue;
    IVec lo = seg->base, hi = seg->base + seg->steps * ctx.u_E;
    fixed.push_back(lo);
    fixed.push_back(hi);
    fixed.push_back(lo + h * ctx.u_E);
    fixed.push_back(hi + h * ctx.u_E);
  }
  std::vector<LatticePolygon> results;
  std::vector<size_t> idx(options.size(), 0);
  while (true) {
    std::vector<IVec> pts = fixed;
    for (size_t i = 0; i < options.size(); ++i) {
      auto [base, steps] = options[i][idx[i]];
      if (steps < 0) continue;  // the empty choice
      pts.push_back(base);
      pts.push_back(base + steps * ctx.u_E);
    }
    results.push_back(convex_hull(pts));
    size_t i = 0;
    for (; i < options.size(); ++i) {
      if (++idx[i] < options[i].size()) break;
      idx[i] = 0;
    }
    if (i == options.size()) break;
  }
  return results;
}

namespace {

// Supporting value c_i >= 0 of each CCW edge: <n_i, x> <= c_i on P.
struct EdgeLine {
  IVec n;   // primitive outer normal
  i64 c;    // support value
};

std::vector<EdgeLine> edge_lines(const LatticePolygon& P) {
  std::vector<EdgeLine> out;
  size_t n = P.vertices.size();
  for (size_t i = 0; i < n; ++i) {
    IVec d = P.vertex(i + 1) - P.vertex(i);
    IVec no = primitive(rot_neg90(d));
    out.push_back({no, dot(no, P.vertex(i))});
  }
  return out;
}

// Exact bounded intersection of half-planes <a_i, x> >= b_i (integer data).
RationalPolygon halfplane_intersection(const std::vector<std::pair<IVec, i64>>& hs) {
  std::vector<RVec> pts;
  size_t n = hs.size();
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j) {
      i64 det = cross(hs[i].first, hs[j].first);
      if (det == 0) continue;
      Rat x = Rat(hs[i].second * hs[j].first.y - hs[j].second * hs[i].first.y, det);
      Rat y = Rat(hs[i].first.x * hs[j].second - hs[j].first.x * hs[i].second, det);
      RVec p{x, y};
      bool ok = true;
      for (auto& [a, b] : hs)
        if (dot(a, p) < Rat(b)) { ok = false; break; }
      if (ok) pts.push_back(p);
    }
  return convex_hull_rational(pts);
}

}  // namespace

DualPolyhedron dual(const LatticePolygon& P) {
  if (P.degenerate()) throw std::domain_error("dual: degenerate polygon");
  if (locate_point(P, {0, 0}) < 0)
    throw std::domain_error("dual requires origin in P");
  auto lines = edge_lines(P);
  DualPolyhedron D;
  // Recession cone: directions r with <u, r> >= 0 for all u in P; nonzero
  // exactly when 0 is on the boundary.
  std::vector<IVec> rays;
  for (auto& [nrm, c] : lines)
    if (c == 0) rays.push_back(-nrm);
  D.cone_rays = rays;
  // Vertices of P* = intersection of half-planes <u, v> >= -1 over u in V(P);
  // enumerate candidate vertices as pairwise intersections, filter, hull.
  std::vector<std::pair<IVec, i64>> hs;
  for (IVec u : P.vertices) hs.push_back({u, -1});
  std::vector<RVec> pts;
  size_t n = hs.size();
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j) {
      i64 det = cross(hs[i].first, hs[j].first);
      if (det == 0) continue;
      Rat x = Rat(hs[i].second * hs[j].first.y - hs[j].second * hs[i].first.y, det);
      Rat y = Rat(hs[i].first.x * hs[j].second - hs[j].first.x * hs[i].second, det);
      RVec p{x, y};
      bool ok = true;
      for (auto& [a, b] : hs)
        if (dot(a, p) < Rat(b)) { ok = false; break; }
      if (ok) pts.push_back(p);
    }
  D.bounded_part = convex_hull_rational(pts);
  return D;
}

LatticePolygon dual_of_dual(const DualPolyhedron& D) {
  std::vector<std::pair<IVec, i64>> hs;
  for (RVec v : D.bounded_part.vertices) {
    // <v, x> >= -1 with v = (p/q, r/s): scale by lcm.
    i64 l = v.x.den / gcd_ll(v.x.den, v.y.den) * v.y.den;
    hs.push_back({IVec{v.x.num * (l / v.x.den), v.y.num * (l / v.y.den)}, -l});
  }
  for (IVec r : D.cone_rays) hs.push_back({r, 0});
  RationalPolygon Q = halfplane_intersection(hs);
  std::vector<IVec> pts;
  for (RVec v : Q.vertices) pts.push_back(v.round_to_lattice());
  return convex_hull(pts);
}

RVec phi(RVec v, const MutationContext& ctx) {
  Rat t = dot(ctx.u_E, v);
  if (!(t < Rat(0))) return v;
  return v - t * RVec(ctx.w);
}

LatticePolygon mutate_via_dual(const MutationContext& ctx) {
  if (!admits_mutation(ctx)) throw std::domain_error("mutation not admissible");
  DualPolyhedron D = dual(ctx.P);
  auto uE_val = [&](RVec v) { return dot(ctx.u_E, v); };
  // Generators of phi(P*): images of vertices, of boundary crossings with the
  // bend line <v,u_E> = 0, and of the cone rays (split at the line as well).
  std::vector<RVec> gen;
  const auto& V = D.bounded_part.vertices;
  for (RVec v : V) gen.push_back(phi(v, ctx));
  size_t n = V.size();
  auto add_crossing = [&](RVec a, RVec b) {
    Rat fa = uE_val(a), fb = uE_val(b);
    if (fa.sign() * fb.sign() < 0) {
      Rat t = fa / (fa - fb);
      gen.push_back(a + t * (b - a));  // on the bend line: phi = identity
    }
  };
  if (n >= 2)
    for (size_t i = 0; i < n; ++i) add_crossing(V[i], V[(i + 1) % n]);
  std::vector<IVec> new_rays;
  for (IVec r : D.cone_rays) {
    i64 t = dot(ctx.u_E, r);
    if (t >= 0) new_rays.push_back(r);
    else new_rays.push_back(primitive(r - t * ctx.w));
    // A ray attached on the negative side may cross the bend line at a point;
    // that point is phi(vertex + s*r) with <.,u_E> = 0.
    for (RVec v : V) {
      Rat fv = uE_val(v);
      if (t != 0 && fv.sign() * (t > 0 ? 1 : -1) < 0) {
        Rat s = -(fv / Rat(t));
        gen.push_back(v + s * RVec(r));
      }
    }
  }
  // Dualize back: <p, x> >= -1 for bounded generators, <r, x> >= 0 for rays.
  std::vector<std::pair<IVec, i64>> hs;
  RationalPolygon hullQ = convex_hull_rational(gen);
  for (RVec v : hullQ.vertices) {
    i64 l = v.x.den / gcd_ll(v.x.den, v.y.den) * v.y.den;
    hs.push_back({IVec{v.x.num * (l / v.x.den), v.y.num * (l / v.y.den)}, -l});
  }
  for (IVec r : new_rays) hs.push_back({r, 0});
  RationalPolygon R = halfplane_intersection(hs);
  std::vector<IVec> pts;
  for (RVec v : R.vertices) {
    if (!v.is_lattice())
      throw std::logic_error("mutate_via_dual produced a non-lattice vertex");
    pts.push_back(v.round_to_lattice());
  }
  return convex_hull(pts);
}

}  // namespace dimerlab
