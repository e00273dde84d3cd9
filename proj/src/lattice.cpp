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

#include "dimerlab/lattice.hpp"

#include <algorithm>
#include <set>

namespace dimerlab {

std::string LatticePolygon::str() const {
  std::string s = "[";
  for (size_t i = 0; i < vertices.size(); ++i) {
    if (i) s += ", ";
    s += vertices[i].str();
  }
  return s + "]";
}

LatticePolygon convex_hull(std::vector<IVec> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  LatticePolygon P;
  if (pts.empty()) return P;
  if (pts.size() == 1) { P.vertices = pts; return P; }
  auto build = [&](auto begin, auto end, std::vector<IVec>& out) {
    for (auto it = begin; it != end; ++it) {
      while (out.size() >= 2 &&
             cross(out.back() - out[out.size() - 2], *it - out.back()) <= 0)
        out.pop_back();
      out.push_back(*it);
    }
  };
  std::vector<IVec> lower, upper;
  build(pts.begin(), pts.end(), lower);
  build(pts.rbegin(), pts.rend(), upper);
  if (lower.size() == 2 && upper.size() == 2) {  // collinear: a segment
    P.vertices = {lower[0], lower[1]};
    return P;
  }
  lower.pop_back();
  upper.pop_back();
  P.vertices = lower;
  P.vertices.insert(P.vertices.end(), upper.begin(), upper.end());
  return P;
}

RationalPolygon convex_hull_rational(std::vector<RVec> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  RationalPolygon P;
  if (pts.empty()) return P;
  if (pts.size() == 1) { P.vertices = pts; return P; }
  auto build = [&](auto begin, auto end, std::vector<RVec>& out) {
    for (auto it = begin; it != end; ++it) {
      while (out.size() >= 2 &&
             cross(out.back() - out[out.size() - 2], *it - out.back()).sign() <= 0)
        out.pop_back();
      out.push_back(*it);
    }
  };
  std::vector<RVec> lower, upper;
  build(pts.begin(), pts.end(), lower);
  build(pts.rbegin(), pts.rend(), upper);
  if (lower.size() == 2 && upper.size() == 2) {
    P.vertices = {lower[0], lower[1]};
    return P;
  }
  lower.pop_back();
  upper.pop_back();
  P.vertices = lower;
  P.vertices.insert(P.vertices.end(), upper.begin(), upper.end());
  return P;
}

i64 lattice_length(IVec a, IVec b) {
  IVec d = b - a;
  if (d.is_zero()) return 0;
  return gcd_ll(d.x, d.y);
}

std::vector<IVec> segment_lattice_points(IVec a, IVec b) {
  std::vector<IVec> out;
  i64 n = lattice_length(a, b);
  if (n == 0) { out.push_back(a); return out; }
  IVec step = primitive(b - a);
  for (i64 k = 0; k <= n; ++k) out.push_back(a + k * step);
  return out;
}

std::vector<IVec> polygon_lattice_points(const LatticePolygon& P) {
  std::vector<IVec> out;
  if (P.vertices.empty()) return out;
  if (P.is_point()) return {P.vertices[0]};
  if (P.is_segment()) return segment_lattice_points(P.vertices[0], P.vertices[1]);
  i64 xmin = P.vertices[0].x, xmax = xmin, ymin = P.vertices[0].y, ymax = ymin;
  for (IVec v : P.vertices) {
    xmin = std::min(xmin, v.x); xmax = std::max(xmax, v.x);
    ymin = std::min(ymin, v.y); ymax = std::max(ymax, v.y);
  }
  for (i64 x = xmin; x <= xmax; ++x)
    for (i64 y = ymin; y <= ymax; ++y)
      if (locate_point(P, {x, y}) >= 0) out.push_back({x, y});
  return out;
}

int locate_point(const LatticePolygon& P, IVec p) {
  if (P.is_point()) return P.vertices[0] == p ? 2 : -1;
  if (P.is_segment()) {
    IVec a = P.vertices[0], b = P.vertices[1];
    if (p == a || p == b) return 2;
    if (cross(b - a, p - a) != 0) return -1;
    if (dot(p - a, b - a) < 0 || dot(p - b, a - b) < 0) return -1;
    return 1;
  }
  bool on_edge = false;
  size_t n = P.vertices.size();
  for (size_t i = 0; i < n; ++i) {
    IVec a = P.vertices[i], b = P.vertices[(i + 1) % n];
    i64 c = cross(b - a, p - a);
    if (c < 0) return -1;
    if (c == 0) {
      if (p == a || p == b) return 2;
      if (dot(p - a, b - a) > 0 && dot(p - b, a - b) > 0) on_edge = true;
      else return -1;
    }
  }
  return on_edge ? 1 : 0;
}

SlopeMultiset edge_normals(const LatticePolygon& P) {
  if (P.degenerate())
    throw std::domain_error("edge_normals: degenerate polygon");
  SlopeMultiset S;
  size_t n = P.vertices.size();
  for (size_t i = 0; i < n; ++i) {
    IVec d = P.vertices[(i + 1) % n] - P.vertices[i];
    S.add(primitive(rot_neg90(d)), gcd_ll(d.x, d.y));
  }
  return S;
}

LatticePolygon polygon_from_slopes(const SlopeMultiset& S, IVec anchor) {
  if (!S.weighted_sum().is_zero())
    throw std::domain_error("slope multiset not closed");
  std::vector<std::pair<IVec, i64>> es(S.entries.begin(), S.entries.end());
  std::sort(es.begin(), es.end(),
            [](auto& a, auto& b) { return angle_less(a.first, b.first); });
  std::vector<IVec> walk;
  IVec cur = anchor;
  for (auto& [nrm, mult] : es) {
    walk.push_back(cur);
    cur += mult * rot90(nrm);  // outer normal (a,b) -> edge vector (-b,a)
  }
  walk.push_back(anchor);
  // Canonical cyclic start (lexicographic minimum), degenerate inputs included.
  return convex_hull(walk);
}

LatticePolygon translate(const LatticePolygon& P, IVec t) {
  LatticePolygon Q = P;
  for (IVec& v : Q.vertices) v += t;
  return Q;
}

LatticePolygon apply(const IMat& U, const LatticePolygon& P) {
  std::vector<IVec> pts;
  pts.reserve(P.vertices.size());
  for (IVec v : P.vertices) pts.push_back(U.apply(v));
  return convex_hull(pts);
}

bool translate_equal(const LatticePolygon& A, const LatticePolygon& B, IVec* shift) {
  if (A.vertices.size() != B.vertices.size()) return false;
  if (A.vertices.empty()) return true;
  // Hull output starts at the lexicographic minimum, so index 0 must match.
  IVec t = B.vertices[0] - A.vertices[0];
  if (translate(A, t) == B) {
    if (shift) *shift = t;
    return true;
  }
  return false;
}

std::pair<i64, i64> heights(const LatticePolygon& P, IVec w) {
  if (P.vertices.empty()) throw std::domain_error("heights of empty polygon");
  i64 lo = dot(w, P.vertices[0]), hi = lo;
  for (IVec v : P.vertices) {
    lo = std::min(lo, dot(w, v));
    hi = std::max(hi, dot(w, v));
  }
  return {lo, hi};
}

namespace {

// Unique unimodular map with U*p = (1,0) and the image of q shear-reduced to
// 0 <= x < y. p primitive, cross(p,q) > 0.
IMat pinned_map(IVec p, IVec q) {
  i64 s, t;
  ext_gcd(p.x, p.y, s, t);
  IMat U0{s, t, -p.y, p.x};
  IVec qi = U0.apply(q);
  // qi.y == cross(p,q) > 0; shear x into [0, qi.y).
  i64 x = qi.x % qi.y;
  if (x < 0) x += qi.y;
  i64 k = (x - qi.x) / qi.y;
  IMat S{1, k, 0, 1};
  return S * U0;
}

std::vector<i64> flatten(const LatticePolygon& P) {
  std::vector<i64> out;
  out.reserve(2 * P.vertices.size());
  for (IVec v : P.vertices) { out.push_back(v.x); out.push_back(v.y); }
  return out;
}

}  // namespace

LatticePolygon gl2z_canonical_form(const LatticePolygon& P) {
  if (P.is_point()) return LatticePolygon{{IVec{0, 0}}};
  if (P.is_segment()) {
    i64 n = lattice_length(P.vertices[0], P.vertices[1]);
    return LatticePolygon{{IVec{0, 0}, IVec{n, 0}}};
  }
  // Brute force over the orbit: every (vertex, incident edge, reflection)
  // choice pins a unique unimodular map; take the lexicographically least
  // transformed vertex list. Polygons here are tiny.
  const IMat mirror{1, 0, 0, -1};
  bool have = false;
  LatticePolygon best;
  std::vector<i64> best_key;
  for (int refl = 0; refl < 2; ++refl) {
    LatticePolygon Q = P;
    if (refl) {
      std::vector<IVec> vs;
      for (auto it = P.vertices.rbegin(); it != P.vertices.rend(); ++it)
        vs.push_back(mirror.apply(*it));
      Q.vertices = vs;  // reflected and re-oriented CCW
    }
    size_t n = Q.vertices.size();
    for (size_t k = 0; k < n; ++k) {
      IVec p = primitive(Q.vertex(k + 1) - Q.vertex(k));
      IVec q = Q.vertex(k + 2) - Q.vertex(k + 1);
      IMat U = pinned_map(p, q);
      LatticePolygon cand;
      cand.vertices.reserve(n);
      for (size_t j = 0; j < n; ++j)
        cand.vertices.push_back(U.apply(Q.vertex(k + j) - Q.vertex(k)));
      std::vector<i64> key = flatten(cand);
      if (!have || key < best_key) {
        have = true;
        best = cand;
        best_key = key;
      }
    }
  }
  return best;
}

}  // namespace dimerlab
