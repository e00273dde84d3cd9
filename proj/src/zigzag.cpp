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

#include "dimerlab/zigzag.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace dimerlab {

namespace {

// Maximum right turn at white, maximum left turn at black: the outgoing edge
// is the rotation successor at a white node and the predecessor at a black
// node.
Dart zigzag_next(const DimerModel& m, Dart d) {
  int n = dart_head(m, d);
  int e;
  if (m.nodes[n].color == Color::White) e = m.rot_next(n, d.edge);
  else e = m.rot_prev(n, d.edge);
  return Dart{e, m.nodes[n].color == Color::White};
}

}  // namespace

std::vector<int> ZigzagPath::zig_edges() const {
  std::vector<int> out;
  for (size_t k = 0; k < darts.size(); k += 2) out.push_back(darts[k].edge);
  return out;
}

std::vector<int> ZigzagPath::zag_edges() const {
  std::vector<int> out;
  for (size_t k = 1; k < darts.size(); k += 2) out.push_back(darts[k].edge);
  return out;
}

bool ZigzagPath::contains_edge(int e) const {
  for (const Dart& d : darts)
    if (d.edge == e) return true;
  return false;
}

std::vector<ZigzagPath> zigzag_paths(const DimerModel& m) {
  std::vector<ZigzagPath> out;
  std::vector<char> seen(2 * m.edges.size(), 0);
  for (size_t e = 0; e < m.edges.size(); ++e)
    for (int dir = 0; dir < 2; ++dir) {
      Dart start{static_cast<int>(e), dir != 0};
      if (seen[start.id()]) continue;
      // Collect the orbit, then rotate so it starts at the minimal zig dart.
      std::vector<Dart> orbit;
      Dart d = start;
      do {
        orbit.push_back(d);
        d = zigzag_next(m, d);
      } while (!(d == start));
      int best = -1;
      for (size_t k = 0; k < orbit.size(); ++k) {
        if (orbit[k].to_black) continue;
        if (best < 0 || orbit[k].id() < orbit[best].id()) best = static_cast<int>(k);
      }
      ZigzagPath z;
      for (size_t k = 0; k < orbit.size(); ++k)
        z.darts.push_back(orbit[(best + k) % orbit.size()]);
      IVec pos{0, 0};
      for (const Dart& dd : z.darts) {
        ZigzagPath::Visit v;
        v.edge = dd.edge;
        v.is_zig = !dd.to_black;
        v.copy = dd.to_black ? pos + dart_offset(m, dd) : pos;
        z.visits.push_back(v);
        pos += dart_offset(m, dd);
        seen[dd.id()] = 1;
      }
      z.slope = pos;
      out.push_back(std::move(z));
    }
  std::sort(out.begin(), out.end(), [](const ZigzagPath& a, const ZigzagPath& b) {
    return a.darts[0].id() < b.darts[0].id();
  });
  return out;
}

std::vector<int> dart_to_path(const DimerModel& m,
                              const std::vector<ZigzagPath>& paths) {
  std::vector<int> owner(2 * m.edges.size(), -1);
  for (size_t p = 0; p < paths.size(); ++p)
    for (const Dart& d : paths[p].darts) owner[d.id()] = static_cast<int>(p);
  return owner;
}

// x in Z*a + Z*b, with witness coefficients when the lattice has full rank.
bool lattice_member(IVec x, IVec a, IVec b, i64* s_out, i64* t_out) {
  i64 det = cross(a, b);
  if (det != 0) {
    i64 sn = cross(x, b), tn = cross(a, x);
    if (sn % det || tn % det) return false;
    if (s_out) *s_out = sn / det;
    if (t_out) *t_out = tn / det;
    return true;
  }
  // Rank <= 1.
  if (a.is_zero() && b.is_zero()) return x.is_zero();
  IVec p = a.is_zero() ? primitive(b) : primitive(a);
  if (cross(x, p) != 0) return false;
  i64 alpha = a.is_zero() ? 0 : (p.x != 0 ? a.x / p.x : a.y / p.y);
  i64 beta = b.is_zero() ? 0 : (p.x != 0 ? b.x / p.x : b.y / p.y);
  i64 k = p.x != 0 ? x.x / p.x : x.y / p.y;
  if (!(k * p == x)) return false;
  i64 g = gcd_ll(alpha, beta);
  if (g == 0) return k == 0;
  return k % g == 0;
}

LiftIntersectionTable lift_table(const ZigzagPath& z, const ZigzagPath& w) {
  LiftIntersectionTable t;
  t.lambda_a = z.slope;
  t.lambda_b = w.slope;
  t.self_pair = &z == &w || (z.darts == w.darts);
  for (size_t i = 0; i < z.visits.size(); ++i)
    for (size_t j = 0; j < w.visits.size(); ++j) {
      if (z.visits[i].edge != w.visits[j].edge) continue;
      if (t.self_pair && j <= i) continue;  // unordered pairs once
      if (z.visits[i].is_zig == w.visits[j].is_zig) continue;  // same dart
      LiftIntersectionTable::SharedEdge se;
      se.edge = z.visits[i].edge;
      se.z_visit = static_cast<int>(i);
      se.w_visit = static_cast<int>(j);
      se.z_copy = z.visits[i].copy;
      se.w_copy = w.visits[j].copy;
      se.sign = z.visits[i].is_zig ? 1 : -1;
      t.shared.push_back(se);
    }
  return t;
}

bool has_lift_self_intersection(const ZigzagPath& z) {
  auto t = lift_table(z, z);
  for (const auto& se : t.shared)
    if (lattice_member(se.z_copy - se.w_copy, z.slope, {0, 0})) return true;
  return false;
}

namespace {

// Group shared edges into lift-pair classes: two events lie on the same lift
// pair iff their (z_copy - w_copy) values agree modulo Lambda.
std::vector<std::vector<int>> lift_pair_classes(const LiftIntersectionTable& t,
                                                bool exclude_self_lift) {
  std::vector<std::vector<int>> classes;
  std::vector<int> cls(t.shared.size(), -1);
  for (size_t i = 0; i < t.shared.size(); ++i) {
    IVec di = t.shared[i].z_copy - t.shared[i].w_copy;
    if (exclude_self_lift && lattice_member(di, t.lambda_a, {0, 0})) continue;
    for (size_t j = 0; j < i; ++j) {
      if (cls[j] < 0) continue;
      IVec dj = t.shared[j].z_copy - t.shared[j].w_copy;
      if (lattice_member(di - dj, t.lambda_a, t.lambda_b)) {
        cls[i] = cls[j];
        break;
      }
    }
    if (cls[i] < 0) {
      cls[i] = static_cast<int>(classes.size());
      classes.emplace_back();
    }
    classes[cls[i]].push_back(static_cast<int>(i));
  }
  return classes;
}

// Integer k with lo < k (strict, rational bounds as num/den) ... helper for
// the anti-parallel window test: does an integer k satisfy
// A1 + s1*k > 0 and A2 - s2*k > 0 (s1, s2 > 0)?
bool window_nonempty(i64 A1, i64 s1, i64 A2, i64 s2) {
  // k > -A1/s1 and k < A2/s2
  // smallest k: floor(-A1/s1) + 1
  i64 klo = -((A1 >= 0 ? A1 : A1 - s1 + 1) / s1);  // ceil(-A1/s1)
  // use exact: klo = smallest integer k with s1*k > -A1
  while (s1 * klo <= -A1) ++klo;
  while (s1 * (klo - 1) > -A1) --klo;
  return s2 * klo < A2;
}

}  // namespace

bool same_direction_double_intersection(const ZigzagPath& z, const ZigzagPath& w) {
  bool self = z.darts == w.darts;
  auto t = lift_table(z, w);
  if (t.shared.empty()) return false;
  IVec v = z.slope, mu = w.slope;
  if (v.is_zero() || mu.is_zero())
    return false;  // trivial paths handled by the trivial-slope condition
  i64 cr = cross(v, mu);
  auto classes = lift_pair_classes(t, self);
  if (cr == 0) {
    if (dot(v, mu) > 0) {
      // Parallel same-direction lifts sharing one edge share a translate of
      // it too, always in the same direction.
      for (auto& c : classes)
        if (!c.empty()) return true;
      return false;
    }
    // Anti-parallel: v = alpha*p, mu = -beta*p.
    IVec p = primitive(v);
    i64 alpha = p.x != 0 ? v.x / p.x : v.y / p.y;
    i64 beta = p.x != 0 ? -mu.x / p.x : -mu.y / p.y;
    i64 g = gcd_ll(alpha, beta);
    for (auto& c : classes) {
      for (size_t a = 0; a < c.size(); ++a)
        for (size_t b = 0; b < c.size(); ++b) {
          if (a == b) continue;
          const auto& E = t.shared[c[a]];
          const auto& F = t.shared[c[b]];
          // Solve s*v - t*mu = delta, i.e. (s*alpha + t*beta)p = d*p.
          IVec delta = (E.z_copy - E.w_copy) - (F.z_copy - F.w_copy);
          if (cross(delta, p) != 0) continue;
          i64 d = p.x != 0 ? delta.x / p.x : delta.y / p.y;
          if (d % g) continue;
          // One solution (s0, t0); family s = s0 + (beta/g)k, t = t0 - (alpha/g)k.
          i64 s0c, t0c;
          ext_gcd(alpha, beta, s0c, t0c);
          i64 s0 = s0c * (d / g), t0 = t0c * (d / g);
          i64 lz = z.length(), lw = w.length();
          i64 dz0 = (F.z_visit - E.z_visit) + lz * s0;
          i64 dw0 = (F.w_visit - E.w_visit) + lw * t0;
          i64 sz = lz * (beta / g);   // step of dz per k (positive)
          i64 sw = lw * (alpha / g);  // dz = dz0 + sz*k, dw = dw0 - sw*k
          // Same-direction: dz > 0 and dw > 0 for some integer k, or both < 0.
          if (window_nonempty(dz0, sz, dw0, sw)) return true;
          if (window_nonempty(-dw0, sw, -dz0, sz)) return true;
        }
    }
    return false;
  }
  // Independent slopes: each class pins (s, t) per event pair uniquely.
  for (auto& c : classes) {
    if (c.size() < 2) continue;
    for (size_t a = 0; a < c.size(); ++a)
      for (size_t b = 0; b < c.size(); ++b) {
        if (a == b) continue;
        const auto& E = t.shared[c[a]];
        const auto& F = t.shared[c[b]];
        IVec delta = (E.z_copy - E.w_copy) - (F.z_copy - F.w_copy);
        i64 s, tt;
        if (!lattice_member(delta, v, -mu, &s, &tt))
          throw std::logic_error("lift class inconsistency");
        i64 dz = (F.z_visit - E.z_visit) + z.length() * s;
        i64 dw = (F.w_visit - E.w_visit) + w.length() * tt;
        if (dz > 0 && dw > 0) return true;
        // (dz<0 && dw<0 is the same pair read from the other side.)
      }
  }
  return false;
}

std::optional<i64> max_shared_edges_per_lift_pair(const ZigzagPath& z,
                                                  const ZigzagPath& w) {
  bool self = z.darts == w.darts;
  auto t = lift_table(z, w);
  if (t.shared.empty()) return 0;
  auto classes = lift_pair_classes(t, self);
  if (cross(z.slope, w.slope) == 0) {
    for (auto& c : classes)
      if (!c.empty()) return std::nullopt;  // periodic: infinitely many
    return 0;
  }
  i64 best = 0;
  for (auto& c : classes) best = std::max<i64>(best, c.size());
  return best;
}

bool is_consistent(const DimerModel& m) {
  auto paths = zigzag_paths(m);
  for (const auto& z : paths) {
    if (z.slope.is_zero()) return false;
    if (has_lift_self_intersection(z)) return false;
  }
  for (size_t i = 0; i < paths.size(); ++i)
    for (size_t j = i; j < paths.size(); ++j)
      if (same_direction_double_intersection(paths[i], paths[j])) return false;
  return true;
}

bool is_properly_ordered(const DimerModel& m) {
  auto paths = zigzag_paths(m);
  for (const auto& z : paths) {
    if (z.slope.is_zero()) return false;
    if (has_lift_self_intersection(z)) return false;
  }
  auto owner = dart_to_path(m, paths);
  // (3) no two same-slope paths share a node.
  std::vector<std::set<int>> paths_at_node(m.nodes.size());
  for (size_t p = 0; p < paths.size(); ++p)
    for (const Dart& d : paths[p].darts)
      paths_at_node[dart_tail(m, d)].insert(static_cast<int>(p));
  for (size_t n = 0; n < m.nodes.size(); ++n) {
    std::vector<int> ps(paths_at_node[n].begin(), paths_at_node[n].end());
    for (size_t a = 0; a < ps.size(); ++a)
      for (size_t b = a + 1; b < ps.size(); ++b)
        if (paths[ps[a]].slope == paths[ps[b]].slope) return false;
  }
  // (4) rotation order of incident paths agrees with the slope cyclic order.
  for (size_t n = 0; n < m.nodes.size(); ++n) {
    std::vector<IVec> seq;  // slope of the path leaving via each edge
    bool leave_to_black = m.nodes[n].color == Color::White;
    for (int e : m.rotation[n]) {
      Dart d{e, leave_to_black};
      seq.push_back(paths[owner[d.id()]].slope);
    }
    size_t k = seq.size();
    std::vector<IVec> sorted = seq;
    std::sort(sorted.begin(), sorted.end(), angle_less);
    for (size_t i = 0; i + 1 < k; ++i)
      if (sorted[i] == sorted[i + 1]) return false;  // tie: forbidden by (3)
    bool match = false;
    for (size_t s = 0; s < k && !match; ++s) {
      bool ok = true;
      for (size_t i = 0; i < k; ++i)
        if (!(seq[(s + i) % k] == sorted[i])) { ok = false; break; }
      match = ok;
    }
    if (!match) return false;
  }
  return true;
}

bool is_isoradial(const DimerModel& m) {
  auto paths = zigzag_paths(m);
  // (1) every zigzag path is a simple closed curve on the torus: no repeated
  // node, hence in particular no repeated edge.
  for (const auto& z : paths) {
    std::set<int> ns;
    for (const Dart& d : z.darts)
      if (!ns.insert(dart_tail(m, d)).second) return false;
  }
  // (2) lift pairs share at most one edge.
  for (size_t i = 0; i < paths.size(); ++i)
    for (size_t j = i; j < paths.size(); ++j) {
      auto mx = max_shared_edges_per_lift_pair(paths[i], paths[j]);
      if (!mx || *mx > 1) return false;
    }
  return true;
}

ZigzagType classify_type(const DimerModel& m, const std::vector<ZigzagPath>& paths,
                         int path_index) {
  (void)m;
  const ZigzagPath& z = paths[path_index];
  for (const auto& w : paths) {
    auto mx = max_shared_edges_per_lift_pair(z, w);
    if (!mx || *mx > 1) return ZigzagType::TypeII;
  }
  return ZigzagType::TypeI;
}

BoundaryMatchings boundary_matchings_for(const DimerModel& m,
                                         const PmPolygonResult& poly,
                                         const ZigzagPath& z) {
  // Find the polygon edge whose outer normal is [z].
  const LatticePolygon& P = poly.polygon;
  if (P.degenerate())
    throw std::logic_error("boundary matchings need a non-degenerate polygon");
  int edge = -1;
  for (size_t i = 0; i < P.vertices.size(); ++i) {
    IVec d = P.vertex(i + 1) - P.vertex(i);
    if (primitive(rot_neg90(d)) == primitive(z.slope)) edge = static_cast<int>(i);
  }
  if (edge < 0)
    throw std::logic_error("zigzag slope is not an edge normal of the polygon");
  const auto* info = poly.at(P.vertex(edge));
  if (!info || info->cls != PmClass::Corner || info->count != 1)
    throw std::logic_error("corner matching not unique at the edge start");
  BoundaryMatchings bm;
  bm.P_z = info->representative;
  // P_z must contain every zig of z; P'_z swaps them for the zags.
  std::set<int> pz(bm.P_z.edges.begin(), bm.P_z.edges.end());
  for (int e : z.zig_edges())
    if (!pz.count(e))
      throw std::logic_error("corner matching does not contain Zig(z)");
  for (int e : z.zig_edges()) pz.erase(e);
  for (int e : z.zag_edges()) pz.insert(e);
  bm.P_prime_z.edges.assign(pz.begin(), pz.end());
  bm.h = height_change(m, bm.P_prime_z, bm.P_z);
  if (!is_primitive(bm.h) || dot(bm.h, z.slope) != 0)
    throw std::logic_error("h(P'_z, P_z) not primitive orthogonal to [z]");
  return bm;
}

SlopeMultiset zigzag_slope_multiset(const std::vector<ZigzagPath>& paths) {
  SlopeMultiset S;
  for (const auto& z : paths)
    if (!z.slope.is_zero()) S.add(z.slope);
  return S;
}

}  // namespace dimerlab
