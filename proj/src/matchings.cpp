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

#include "dimerlab/matchings.hpp"

#include <algorithm>

namespace dimerlab {

namespace {

struct Enumerator {
  const DimerModel& m;
  std::vector<int> blacks;            // black node ids ascending
  std::vector<char> white_used;
  std::vector<int> chosen;            // rotation index per black position
  std::vector<int> chosen_edge;
  const std::function<void(const PerfectMatching&)>& cb;

  Enumerator(const DimerModel& mm,
             const std::function<void(const PerfectMatching&)>& f)
      : m(mm), cb(f) {
    for (size_t n = 0; n < m.nodes.size(); ++n)
      if (m.nodes[n].color == Color::Black) blacks.push_back(static_cast<int>(n));
    white_used.assign(m.nodes.size(), 0);
    chosen.assign(blacks.size(), -1);
    chosen_edge.assign(blacks.size(), -1);
  }

  void run(size_t pos) {
    if (pos == blacks.size()) {
      // Every white must be covered too (black/white counts may differ).
      for (size_t n = 0; n < m.nodes.size(); ++n)
        if (m.nodes[n].color == Color::White && !white_used[n]) return;
      PerfectMatching P;
      P.edges.assign(chosen_edge.begin(), chosen_edge.end());
      std::sort(P.edges.begin(), P.edges.end());
      cb(P);
      return;
    }
    int b = blacks[pos];
    const auto& rot = m.rotation[b];
    for (size_t i = 0; i < rot.size(); ++i) {
      int e = rot[i];
      int w = m.edges[e].white;
      if (white_used[w]) continue;
      white_used[w] = 1;
      chosen[pos] = static_cast<int>(i);
      chosen_edge[pos] = e;
      run(pos + 1);
      white_used[w] = 0;
    }
  }
};

}  // namespace

void for_each_pm(const DimerModel& m,
                 const std::function<void(const PerfectMatching&)>& cb) {
  if (m.num_black() != m.nodes.size() - m.num_black()) return;  // unbalanced
  Enumerator en(m, cb);
  en.run(0);
}

std::vector<PerfectMatching> enumerate_pms(const DimerModel& m) {
  std::vector<PerfectMatching> out;
  for_each_pm(m, [&](const PerfectMatching& P) { out.push_back(P); });
  return out;
}

namespace {

// Augmenting-path perfect matching with some edges forced.
bool has_pm_with_edge(const DimerModel& m, int forced_edge) {
  size_t nb = m.num_black();
  if (nb * 2 != m.nodes.size()) return false;
  std::vector<int> match_w(m.nodes.size(), -1);  // white -> edge
  std::vector<int> match_b(m.nodes.size(), -1);  // black -> edge
  int fb = m.edges[forced_edge].black, fw = m.edges[forced_edge].white;
  match_b[fb] = forced_edge;
  match_w[fw] = forced_edge;
  std::vector<char> visited;
  std::function<bool(int)> augment = [&](int b) -> bool {
    for (int e : m.rotation[b]) {
      int w = m.edges[e].white;
      if (w == fw || visited[w]) continue;
      visited[w] = 1;
      if (match_w[w] == -1 || augment(m.edges[match_w[w]].black)) {
        match_w[w] = e;
        match_b[b] = e;
        return true;
      }
    }
    return false;
  };
  for (size_t n = 0; n < m.nodes.size(); ++n) {
    if (m.nodes[n].color != Color::Black || match_b[n] != -1) continue;
    visited.assign(m.nodes.size(), 0);
    if (!augment(static_cast<int>(n))) return false;
  }
  return true;
}

}  // namespace

bool is_nondegenerate(const DimerModel& m) {
  if (m.edges.empty()) return false;
  for (size_t e = 0; e < m.edges.size(); ++e)
    if (!has_pm_with_edge(m, static_cast<int>(e))) return false;
  return true;
}

IVec height_change(const DimerModel& m, const PerfectMatching& P,
                   const PerfectMatching& P0) {
  IVec s{0, 0};
  for (int e : P.edges) s += m.edges[e].offset;
  for (int e : P0.edges) s -= m.edges[e].offset;
  return rot_neg90(s);
}

PmPolygonResult pm_polygon(const DimerModel& m,
                           std::optional<PerfectMatching> P0) {
  PmPolygonResult res;
  std::map<IVec, std::pair<i64, PerfectMatching>> by_point;
  bool first = true;
  PerfectMatching ref;
  std::vector<std::pair<PerfectMatching, IVec>> placement;
  for_each_pm(m, [&](const PerfectMatching& P) {
    if (first && !P0) { ref = P; }
    if (first && P0) { ref = *P0; }
    first = false;
    IVec h = height_change(m, P, ref);
    auto it = by_point.find(h);
    if (it == by_point.end()) by_point.emplace(h, std::make_pair(1, P));
    else it->second.first++;
    placement.push_back({P, h});
  });
  if (first) throw std::domain_error("degenerate dimer model: no perfect matching");
  res.reference = ref;
  res.placement = std::move(placement);
  std::vector<IVec> pts;
  for (auto& [p, _] : by_point) pts.push_back(p);
  res.polygon = convex_hull(pts);
  for (auto& [p, info] : by_point) {
    PmPolygonResult::PointInfo pi;
    pi.point = p;
    pi.count = info.first;
    pi.representative = info.second;
    int loc = locate_point(res.polygon, p);
    pi.cls = loc == 2   ? PmClass::Corner
             : loc == 1 ? PmClass::Boundary
                        : PmClass::Internal;
    res.points.push_back(pi);
  }
  return res;
}

std::map<std::pair<int, IVec>, i64> boundary_counts(const PmPolygonResult& r) {
  std::map<std::pair<int, IVec>, i64> out;
  const auto& P = r.polygon;
  if (P.degenerate()) return out;
  for (size_t i = 0; i < P.vertices.size(); ++i) {
    for (IVec q : segment_lattice_points(P.vertex(i), P.vertex(i + 1))) {
      const auto* pi = r.at(q);
      out[{static_cast<int>(i), q}] = pi ? pi->count : 0;
    }
  }
  return out;
}

}  // namespace dimerlab
