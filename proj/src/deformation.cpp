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

#include "dimerlab/deformation.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace dimerlab {

DimerModel mirrored(const DimerModel& m) {
  DimerModel out = m;
  for (auto& r : out.rotation) std::reverse(r.begin(), r.end());
  return out;
}

int resolve_edge(const DimerModel& m, const EdgeSelector& sel) {
  int w = m.node_by_name(sel.white);
  int b = m.node_by_name(sel.black);
  if (w < 0 || b < 0)
    throw std::domain_error("edge selector names unknown node " + sel.white +
                            "/" + sel.black);
  int found = -1;
  for (size_t e = 0; e < m.edges.size(); ++e) {
    if (m.edges[e].white != w || m.edges[e].black != b) continue;
    if (sel.offset && !(m.edges[e].offset == *sel.offset)) continue;
    if (found >= 0)
      throw std::domain_error("ambiguous edge selector " + sel.white + "-" +
                              sel.black + " (give an offset)");
    found = static_cast<int>(e);
  }
  if (found < 0)
    throw std::domain_error("no edge " + sel.white + "-" + sel.black);
  return found;
}

namespace {

// Index of the path of `paths_b` that is the reversal of paths_a[i].
int reversed_path_index(const DimerModel& mb, const std::vector<ZigzagPath>& paths_b,
                        const ZigzagPath& pa) {
  auto owner = dart_to_path(mb, paths_b);
  return owner[pa.darts[0].reversed().id()];
}

Rat mod1(Rat x) {
  i64 f = x.num >= 0 ? x.num / x.den : -((-x.num + x.den - 1) / x.den);
  return x - Rat(f);
}

struct StripRefs {
  // Per strip m (0-based): chain ids along zig 2m+1-land, created new-model
  // edge ids.
  std::vector<std::vector<int>> chain;       // [m] -> c_0..c_{2p}
  std::vector<std::vector<int>> chain_w;     // [m] -> inserted white node ids
  std::vector<std::vector<int>> chain_b;     // [m] -> inserted black node ids
  std::vector<std::vector<int>> conn;        // [m] -> zig-3 edges j=1..p
  std::vector<std::vector<int>> bypass;      // [m] -> bypasses k=0..p ([] if X)
  std::vector<char> is_anchor;               // zag of strip m in X_i
};

struct ZigInfo {
  int zig_edge, zag_edge;
  int b_node, w_node, b_upper;  // b_i[2m-1], w_i[2m-1], b_i[2m+1]
  IVec tau_b, tau_w, tau_b_upper;
};

DimerModel surgery_zig(const DimerModel& m, const std::vector<ZigzagPath>& paths,
                       const DeformationData& data, bool with_bypasses) {
  // Gather the per-strip structure of every family member.
  std::vector<std::vector<ZigInfo>> info(data.family.size());
  std::set<int> removed_edges;
  std::vector<std::set<int>> anchor_sets;
  for (auto& a : data.anchors) anchor_sets.emplace_back(a.begin(), a.end());
  for (size_t fi = 0; fi < data.family.size(); ++fi) {
    const ZigzagPath& z = paths[data.family[fi]];
    i64 n = z.length() / 2;
    for (i64 mm = 0; mm < n; ++mm) {
      ZigInfo zi;
      Dart zig = z.darts[2 * mm], zag = z.darts[2 * mm + 1];
      zi.zig_edge = zig.edge;
      zi.zag_edge = zag.edge;
      zi.b_node = dart_tail(m, zig);
      zi.w_node = dart_head(m, zig);
      zi.b_upper = dart_head(m, zag);
      zi.tau_b = z.visits[2 * mm].copy;
      zi.tau_w = zi.tau_b + m.edges[zig.edge].offset;
      zi.tau_b_upper = z.visits[2 * mm + 1].copy;
      info[fi].push_back(zi);
      removed_edges.insert(zi.zag_edge);
      if (data.weights[fi] > 0) removed_edges.insert(zi.zig_edge);
    }
  }

  DimerModel out;
  for (const auto& nd : m.nodes) {
    int id = out.add_node(nd.name, nd.color);
    out.nodes[id].has_pos = nd.has_pos;
    out.nodes[id].px = nd.px;
    out.nodes[id].py = nd.py;
  }
  std::vector<int> emap(m.edges.size(), -1);
  for (size_t e = 0; e < m.edges.size(); ++e) {
    if (removed_edges.count(static_cast<int>(e))) continue;
    emap[e] = out.add_edge(m.edges[e].name, m.edges[e].black, m.edges[e].white,
                           m.edges[e].offset);
  }

  std::vector<StripRefs> refs(data.family.size());
  for (size_t fi = 0; fi < data.family.size(); ++fi) {
    i64 p = data.weights[fi];
    i64 n = static_cast<i64>(info[fi].size());
    auto& R = refs[fi];
    R.chain.resize(n);
    R.chain_w.resize(n);
    R.chain_b.resize(n);
    R.conn.resize(n);
    R.bypass.resize(n);
    R.is_anchor.resize(n);
    // (zig-1): subdivide each zig by p whites and p blacks.
    for (i64 mm = 0; mm < n; ++mm) {
      const ZigInfo& zi = info[fi][mm];
      R.is_anchor[mm] = anchor_sets[fi].count(zi.zag_edge) != 0;
      if (p == 0) continue;
      const std::string& base = m.edges[zi.zig_edge].name;
      bool pos_ok = m.nodes[zi.b_node].has_pos && m.nodes[zi.w_node].has_pos;
      RVec pb, dw;
      if (pos_ok) {
        pb = {m.nodes[zi.b_node].px, m.nodes[zi.b_node].py};
        RVec pw{m.nodes[zi.w_node].px + Rat(m.edges[zi.zig_edge].offset.x),
                m.nodes[zi.w_node].py + Rat(m.edges[zi.zig_edge].offset.y)};
        dw = pw - pb;
      }
      for (i64 j = 1; j <= p; ++j) {
        int wn = out.add_node(out.fresh_node_name(base + ".w" + std::to_string(j)),
                              Color::White);
        int bn = out.add_node(out.fresh_node_name(base + ".b" + std::to_string(j)),
                              Color::Black);
        if (pos_ok) {
          Rat tw = Rat(2 * j - 1, 2 * p + 1), tb = Rat(2 * j, 2 * p + 1);
          out.nodes[wn].has_pos = true;
          out.nodes[wn].px = mod1(pb.x + tw * dw.x);
          out.nodes[wn].py = mod1(pb.y + tw * dw.y);
          out.nodes[bn].has_pos = true;
          out.nodes[bn].px = mod1(pb.x + tb * dw.x);
          out.nodes[bn].py = mod1(pb.y + tb * dw.y);
        }
        R.chain_w[mm].push_back(wn);
        R.chain_b[mm].push_back(bn);
      }
      // Chain edges c_0..c_{2p}; inserted nodes are canonical in this strip.
      R.chain[mm].push_back(out.add_edge(base + ".c0", zi.b_node,
                                         R.chain_w[mm][0], -zi.tau_b));
      for (i64 j = 1; j <= p; ++j) {
        R.chain[mm].push_back(out.add_edge(base + ".c" + std::to_string(2 * j - 1),
                                           R.chain_b[mm][j - 1],
                                           R.chain_w[mm][j - 1], {0, 0}));
        if (j < p)
          R.chain[mm].push_back(out.add_edge(base + ".c" + std::to_string(2 * j),
                                             R.chain_b[mm][j - 1],
                                             R.chain_w[mm][j], {0, 0}));
      }
      R.chain[mm].push_back(out.add_edge(base + ".c" + std::to_string(2 * p),
                                         R.chain_b[mm][p - 1], zi.w_node,
                                         zi.tau_w));
    }
    // (zig-3) connections and (zig-4) bypasses, per strip.
    for (i64 mm = 0; mm < n; ++mm) {
      const ZigInfo& zi = info[fi][mm];
      i64 up = (mm + 1) % n;
      bool wrap = (mm + 1 == n);
      // Canonical copies of the upper strip's inserted nodes sit one traced
      // period below the wrap instance.
      IVec shift = wrap ? paths[data.family[fi]].slope : IVec{0, 0};
      const std::string& zbase = m.edges[zi.zag_edge].name;
      for (i64 j = 1; j <= p; ++j)
        R.conn[mm].push_back(out.add_edge(zbase + ".z" + std::to_string(j),
                                          refs[fi].chain_b[up][j - 1],
                                          refs[fi].chain_w[mm][j - 1], -shift));
      bool make_bypass = with_bypasses && !R.is_anchor[mm];
      if (make_bypass) {
        for (i64 k = 0; k <= p; ++k) {
          int wn = k < p ? R.chain_w[mm][k] : zi.w_node;
          int bn = k == 0 ? zi.b_upper : R.chain_b[up][k - 1];
          IVec off{0, 0};
          IVec wtau = k < p ? IVec{0, 0} : zi.tau_w;
          IVec btau = k == 0 ? zi.tau_b_upper : shift;
          off = wtau - btau;
          R.bypass[mm].push_back(
              out.add_edge(zbase + ".by" + std::to_string(k), bn, wn, off));
        }
      }
    }
  }

  // Rewrite rotations. Replacement per (edge, endpoint-side).
  struct Repl { int white_side = -2, black_side = -2; };  // -2 keep, -1 drop
  std::map<int, Repl> repl;
  for (size_t fi = 0; fi < data.family.size(); ++fi) {
    i64 p = data.weights[fi];
    i64 n = static_cast<i64>(info[fi].size());
    for (i64 mm = 0; mm < n; ++mm) {
      const ZigInfo& zi = info[fi][mm];
      const auto& R = refs[fi];
      Repl zr;
      if (p > 0) {
        zr.white_side = R.chain[mm].back();   // c_{2p} at w_i[2m-1]
        zr.black_side = R.chain[mm].front();  // c_0 at b_i[2m-1]
        repl[zi.zig_edge] = zr;
      }
      Repl gr;
      if (!R.bypass[mm].empty()) {
        gr.white_side = R.bypass[mm].back();   // (w_i[2m-1], b_{i,p}[2m+1])
        gr.black_side = R.bypass[mm].front();  // (w_{i,1}[2m-1], b_i[2m+1])
      } else {
        gr.white_side = gr.black_side = -1;    // removed without replacement
      }
      repl[zi.zag_edge] = gr;
    }
  }
  for (size_t nd = 0; nd < m.nodes.size(); ++nd) {
    std::vector<int> rot;
    for (int e : m.rotation[nd]) {
      auto it = repl.find(e);
      if (it == repl.end()) {
        rot.push_back(emap[e]);
        continue;
      }
      bool white_side = m.edges[e].white == static_cast<int>(nd);
      int r = white_side ? it->second.white_side : it->second.black_side;
      if (r >= 0) rot.push_back(r);
    }
    out.rotation[nd] = rot;
  }
  // Rotations at inserted nodes.
  for (size_t fi = 0; fi < data.family.size(); ++fi) {
    i64 p = data.weights[fi];
    if (p == 0) continue;
    i64 n = static_cast<i64>(info[fi].size());
    const auto& R = refs[fi];
    for (i64 mm = 0; mm < n; ++mm) {
      i64 down = (mm + n - 1) % n;
      for (i64 j = 1; j <= p; ++j) {
        // w_{i,j}[2m-1]: [chain->b_{i,j-1}, bypass up, conn up, chain->b_{i,j}]
        std::vector<int> rw;
        rw.push_back(R.chain[mm][2 * (j - 1)]);
        if (!R.bypass[mm].empty() && j - 1 < static_cast<i64>(R.bypass[mm].size()))
          rw.push_back(R.bypass[mm][j - 1]);
        rw.push_back(R.conn[mm][j - 1]);
        rw.push_back(R.chain[mm][2 * j - 1]);
        out.rotation[R.chain_w[mm][j - 1]] = rw;
        // b_{i,j}[2m+1]: [chain->w_{i,j}, chain->w_{i,j+1}, bypass down, conn down]
        std::vector<int> rb;
        rb.push_back(R.chain[mm][2 * j - 1]);
        rb.push_back(R.chain[mm][2 * j]);
        if (!R.bypass[down].empty())
          rb.push_back(R.bypass[down][j]);
        rb.push_back(R.conn[down][j - 1]);
        out.rotation[R.chain_b[mm][j - 1]] = rb;
      }
    }
  }
  return out;
}

}  // namespace

DimerModel remove_edges_by_id(const DimerModel& m, const std::set<int>& kill) {
  DimerModel out;
  std::vector<int> nmap(m.nodes.size(), -1);
  std::vector<int> deg(m.nodes.size(), 0);
  for (size_t e = 0; e < m.edges.size(); ++e) {
    if (kill.count(static_cast<int>(e))) continue;
    deg[m.edges[e].black]++;
    deg[m.edges[e].white]++;
  }
  for (size_t n = 0; n < m.nodes.size(); ++n) {
    if (deg[n] == 0) continue;  // drop isolated nodes
    nmap[n] = out.add_node(m.nodes[n].name, m.nodes[n].color);
    out.nodes[nmap[n]].has_pos = m.nodes[n].has_pos;
    out.nodes[nmap[n]].px = m.nodes[n].px;
    out.nodes[nmap[n]].py = m.nodes[n].py;
  }
  std::vector<int> emap(m.edges.size(), -1);
  for (size_t e = 0; e < m.edges.size(); ++e) {
    if (kill.count(static_cast<int>(e))) continue;
    emap[e] = out.add_edge(m.edges[e].name, nmap[m.edges[e].black],
                           nmap[m.edges[e].white], m.edges[e].offset);
  }
  for (size_t n = 0; n < m.nodes.size(); ++n) {
    if (nmap[n] < 0) continue;
    std::vector<int> rot;
    for (int e : m.rotation[n])
      if (emap[e] >= 0) rot.push_back(emap[e]);
    out.rotation[nmap[n]] = rot;
  }
  return out;
}

// Candidate (b)-step removals: pairs of torus edges forming a consecutive
// same-direction double intersection of some lift pair.
std::vector<std::pair<int, int>> removal_candidates(const DimerModel& m) {
  auto paths = zigzag_paths(m);
  std::vector<std::pair<int, int>> out;
  auto add = [&](int a, int b) {
    if (a > b) std::swap(a, b);
    out.push_back({a, b});
  };
  for (size_t zi = 0; zi < paths.size(); ++zi)
    for (size_t wi = zi; wi < paths.size(); ++wi) {
      const ZigzagPath& z = paths[zi];
      const ZigzagPath& w = paths[wi];
      if (z.slope.is_zero() || w.slope.is_zero()) continue;
      bool self = zi == wi;
      auto t = lift_table(z, w);
      if (t.shared.empty()) continue;
      i64 cr = cross(z.slope, w.slope);
      // Group events into lift-pair classes.
      std::vector<int> cls(t.shared.size(), -1);
      std::vector<std::vector<int>> classes;
      for (size_t i = 0; i < t.shared.size(); ++i) {
        IVec di = t.shared[i].z_copy - t.shared[i].w_copy;
        if (self && lattice_member(di, z.slope, {0, 0})) continue;
        for (size_t j = 0; j < i; ++j) {
          if (cls[j] < 0) continue;
          IVec dj = t.shared[j].z_copy - t.shared[j].w_copy;
          if (lattice_member(di - dj, z.slope, w.slope)) { cls[i] = cls[j]; break; }
        }
        if (cls[i] < 0) {
          cls[i] = static_cast<int>(classes.size());
          classes.emplace_back();
        }
        classes[cls[i]].push_back(static_cast<int>(i));
      }
      if (cr == 0) {
        if (dot(z.slope, w.slope) > 0) {
          // Copies recur with the common period; crossings of one lift pair
          // are the class events repeated cyclically, so consecutive pairs
          // are the ones cyclically adjacent on both sides. A singleton
          // class offers no removable pair: its two cover crossings are the
          // same torus edge, and dropping it alone is not the local
          // two-edge swap (it changes slopes).
          for (auto& c : classes) {
            if (c.size() < 2) continue;
            std::vector<std::pair<i64, int>> zo, wo;
            for (int ev : c) {
              zo.push_back({t.shared[ev].z_visit, ev});
              wo.push_back({t.shared[ev].w_visit, ev});
            }
            std::sort(zo.begin(), zo.end());
            std::sort(wo.begin(), wo.end());
            size_t sz = zo.size();
            auto w_adjacent = [&](int a, int b) {
              for (size_t k = 0; k < sz; ++k) {
                int x = wo[k].second, y = wo[(k + 1) % sz].second;
                if ((x == a && y == b) || (x == b && y == a)) return true;
              }
              return false;
            };
            for (size_t k = 0; k < sz; ++k) {
              int a = zo[k].second, b = zo[(k + 1) % sz].second;
              if (a != b && t.shared[a].edge != t.shared[b].edge && w_adjacent(a, b))
                add(t.shared[a].edge, t.shared[b].edge);
            }
          }
        } else {
          // Anti-parallel windows.
          IVec pp = primitive(z.slope);
          i64 alpha = pp.x != 0 ? z.slope.x / pp.x : z.slope.y / pp.y;
          i64 beta = pp.x != 0 ? -w.slope.x / pp.x : -w.slope.y / pp.y;
          i64 g = gcd_ll(alpha, beta);
          for (auto& c : classes)
            for (int a : c)
              for (int b : c) {
                if (a == b) continue;
                const auto& E = t.shared[a];
                const auto& F = t.shared[b];
                IVec delta = (E.z_copy - E.w_copy) - (F.z_copy - F.w_copy);
                if (cross(delta, pp) != 0) continue;
                i64 d = pp.x != 0 ? delta.x / pp.x : delta.y / pp.y;
                if (d % g) continue;
                i64 s0c, t0c;
                ext_gcd(alpha, beta, s0c, t0c);
                i64 s0 = s0c * (d / g), t0 = t0c * (d / g);
                i64 dz0 = (F.z_visit - E.z_visit) + z.length() * s0;
                i64 dw0 = (F.w_visit - E.w_visit) + w.length() * t0;
                i64 sz = z.length() * (beta / g), sw = w.length() * (alpha / g);
                i64 k = 0;
                while (sz * k <= -dz0) ++k;
                while (sz * (k - 1) > -dz0) --k;
                if (sw * k < dw0) add(E.edge, F.edge);
              }
        }
        continue;
      }
      for (auto& c : classes) {
        if (c.size() < 2) continue;
        // Sort events by position along z's lift; a removable pair must be
        // consecutive along both paths and same-direction.
        const auto& base = t.shared[c[0]];
        std::vector<std::pair<std::pair<i64, i64>, int>> pos;  // (posZ,posW)
        for (int ev : c) {
          const auto& E = t.shared[ev];
          IVec delta = (base.z_copy - base.w_copy) - (E.z_copy - E.w_copy);
          i64 s, tt;
          if (!lattice_member(delta, z.slope, -w.slope, &s, &tt)) continue;
          pos.push_back({{E.z_visit + z.length() * s, E.w_visit + w.length() * tt}, ev});
        }
        std::sort(pos.begin(), pos.end());
        for (size_t i = 0; i + 1 < pos.size(); ++i) {
          i64 wa = pos[i].first.second, wb = pos[i + 1].first.second;
          if (wa >= wb) continue;
          bool between = false;
          for (size_t k = 0; k < pos.size(); ++k)
            if (k != i && k != i + 1 && pos[k].first.second > wa &&
                pos[k].first.second < wb)
              between = true;
          if (!between)
            add(t.shared[pos[i].second].edge, t.shared[pos[i + 1].second].edge);
        }
      }
    }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

DimerModel restore_consistency(const DimerModel& m, const RemovalSchedule& schedule,
                               int* steps) {
  DimerModel cur = m;
  size_t sched_pos = 0;
  int nsteps = 0;
  int cap = 4 * static_cast<int>(m.edges.size()) + 8;
  for (int iter = 0;; ++iter) {
    if (iter > cap)
      throw std::logic_error("consistency restoration exceeded its iteration cap");
    auto paths = zigzag_paths(cur);
    // (a) remove all self-intersection edges.
    std::set<int> bad;
    for (const auto& z : paths) {
      auto t = lift_table(z, z);
      for (const auto& se : t.shared)
        if (lattice_member(se.z_copy - se.w_copy, z.slope, {0, 0}))
          bad.insert(se.edge);
    }
    if (!bad.empty()) {
      cur = remove_edges_by_id(cur, bad);
      ++nsteps;
      continue;
    }
    // (a) remove components all of whose zigzag paths are trivial.
    {
      std::vector<int> comp(cur.nodes.size(), -1);
      int ncomp = 0;
      for (size_t s = 0; s < cur.nodes.size(); ++s) {
        if (comp[s] >= 0) continue;
        std::vector<int> stack{static_cast<int>(s)};
        comp[s] = ncomp;
        while (!stack.empty()) {
          int n = stack.back();
          stack.pop_back();
          for (int e : cur.rotation[n])
            for (int v : {cur.edges[e].black, cur.edges[e].white})
              if (comp[v] < 0) { comp[v] = ncomp; stack.push_back(v); }
        }
        ++ncomp;
      }
      std::vector<char> nontrivial(ncomp, 0);
      for (const auto& z : paths)
        if (!z.slope.is_zero())
          nontrivial[comp[dart_tail(cur, z.darts[0])]] = 1;
      std::set<int> kill;
      for (size_t e = 0; e < cur.edges.size(); ++e)
        if (!nontrivial[comp[cur.edges[e].black]]) kill.insert(static_cast<int>(e));
      if (!kill.empty()) {
        cur = remove_edges_by_id(cur, kill);
        ++nsteps;
        continue;
      }
    }
    // (b) double intersections in the same direction.
    auto cands = removal_candidates(cur);
    if (cands.empty()) {
      if (!is_consistent(cur)) {
        // Last resort: a lift pair whose consecutive crossings all project
        // to one torus edge (a periodic parallel crossing). Removing that
        // edge is the literal operation; it cannot arise on deformation
        // outputs while two-edge pairs remain.
        int fallback = -1;
        auto paths = zigzag_paths(cur);
        for (size_t zi = 0; zi < paths.size() && fallback < 0; ++zi)
          for (size_t wi = zi; wi < paths.size() && fallback < 0; ++wi) {
            const auto& z = paths[zi];
            const auto& w = paths[wi];
            if (z.slope.is_zero() || w.slope.is_zero()) continue;
            if (cross(z.slope, w.slope) != 0 || dot(z.slope, w.slope) <= 0)
              continue;
            auto t = lift_table(z, w);
            for (const auto& se : t.shared) {
              if (zi == wi &&
                  lattice_member(se.z_copy - se.w_copy, z.slope, {0, 0}))
                continue;  // self-intersection, handled by step (a)
              if (fallback < 0 ||
                  cur.edges[se.edge].name < cur.edges[fallback].name)
                fallback = se.edge;
            }
          }
        if (fallback >= 0) {
          cur = remove_edges_by_id(cur, {fallback});
          ++nsteps;
          continue;
        }
        throw std::logic_error("restoration stalled on an inconsistent model");
      }
      break;
    }
    std::pair<int, int> chosen;
    if (schedule.automatic) {
      // Lexicographically least by edge names for stability across rebuilds.
      auto key = [&](const std::pair<int, int>& pr) {
        std::string a = cur.edges[pr.first].name, b = cur.edges[pr.second].name;
        if (b < a) std::swap(a, b);
        return std::make_pair(a, b);
      };
      chosen = *std::min_element(cands.begin(), cands.end(),
                                 [&](auto& x, auto& y) { return key(x) < key(y); });
    } else {
      if (sched_pos >= schedule.pairs.size())
        throw std::domain_error("removal schedule exhausted before consistency");
      int a = resolve_edge(cur, schedule.pairs[sched_pos].first);
      int b = resolve_edge(cur, schedule.pairs[sched_pos].second);
      ++sched_pos;
      std::pair<int, int> want{std::min(a, b), std::max(a, b)};
      if (std::find(cands.begin(), cands.end(), want) == cands.end())
        throw std::domain_error(
            "scheduled pair is not a removable same-direction intersection: " +
            cur.edges[a].name + ", " + cur.edges[b].name);
      chosen = want;
    }
    cur = remove_edges_by_id(cur, {chosen.first, chosen.second});
    ++nsteps;
  }
  if (!schedule.automatic && sched_pos != schedule.pairs.size())
    throw std::domain_error("removal schedule has unused entries");
  if (steps) *steps = nsteps;
  return cur;
}

namespace {

struct FrameData {
  DimerModel work;
  std::vector<ZigzagPath> paths;
};

FrameData surgery_frame(const DimerModel& m, DeformSide side) {
  FrameData f;
  f.work = side == DeformSide::Zag ? mirrored(m) : m;
  f.paths = zigzag_paths(f.work);
  return f;
}

}  // namespace

DeformationData build_deformation_data(const DimerModel& m, int z_index, i64 r,
                                       const std::vector<int>& family_selection,
                                       DeformSide side,
                                       const AssignmentSpec& assignment) {
  {
    auto rep = validate(m);
    if (!rep.ok) throw std::domain_error("deformation input fails validation");
    for (size_t n = 0; n < m.nodes.size(); ++n)
      if (m.degree(static_cast<int>(n)) == 2)
        throw std::domain_error("deformation input must be reduced");
    if (!is_consistent(m)) throw std::domain_error("deformation input must be consistent");
  }
  auto orig_paths = zigzag_paths(m);
  if (z_index < 0 || z_index >= static_cast<int>(orig_paths.size()))
    throw std::domain_error("zigzag index out of range");
  FrameData F = surgery_frame(m, side);
  auto to_frame = [&](int orig) {
    if (side == DeformSide::Zig) return orig;
    return reversed_path_index(F.work, F.paths, orig_paths[orig]);
  };
  auto to_orig = [&](int frame) {
    if (side == DeformSide::Zig) return frame;
    return reversed_path_index(m, orig_paths, F.paths[frame]);
  };

  DeformationData d;
  d.side = side;
  d.z_index = to_frame(z_index);
  const ZigzagPath& z = F.paths[d.z_index];
  if (classify_type(F.work, F.paths, d.z_index) != ZigzagType::TypeI)
    throw std::domain_error("chosen zigzag path is not type I");
  IVec v = z.slope;
  d.v = side == DeformSide::Zag ? -v : v;
  d.n = z.length() / 2;
  d.r = r;
  d.h = d.n - r;
  if (r < 1 || d.h < 1)
    throw std::domain_error("need positive r and h with n = r + h");

  std::vector<int> ZvI;
  for (size_t q = 0; q < F.paths.size(); ++q)
    if (F.paths[q].slope == v &&
        classify_type(F.work, F.paths, static_cast<int>(q)) == ZigzagType::TypeI)
      ZvI.push_back(static_cast<int>(q));
  if (r > static_cast<i64>(ZvI.size()))
    throw std::domain_error("r exceeds the number of type-I paths of this slope");

  std::vector<int> family;
  if (family_selection.empty()) {
    family.push_back(d.z_index);
    for (int q : ZvI)
      if (q != d.z_index && static_cast<i64>(family.size()) < r) family.push_back(q);
  } else {
    if (static_cast<i64>(family_selection.size()) != r)
      throw std::domain_error("family selection size must equal r");
    for (int q : family_selection) {
      int fq = to_frame(q);
      if (std::find(ZvI.begin(), ZvI.end(), fq) == ZvI.end())
        throw std::domain_error("family member is not a type-I path of slope [z]");
      family.push_back(fq);
    }
  }

  // Crossing paths and sides, in the surgery frame ("x": at zags of z).
  std::vector<int> xs, ys;
  std::vector<i64> mx, my;
  for (size_t q = 0; q < F.paths.size(); ++q) {
    if (F.paths[q].slope == v || F.paths[q].slope == -v) continue;
    i64 zig_hits = 0, zag_hits = 0;
    for (const auto& vis : F.paths[family[0]].visits)
      if (F.paths[q].contains_edge(vis.edge)) (vis.is_zig ? zig_hits : zag_hits)++;
    if (zig_hits && zag_hits)
      throw std::logic_error("crossing path hits both zigs and zags of a type-I path");
    if (zag_hits) { xs.push_back(static_cast<int>(q)); mx.push_back(zag_hits); }
    if (zig_hits) { ys.push_back(static_cast<int>(q)); my.push_back(zig_hits); }
  }
  // Uniform crossing counts across the family.
  for (size_t fi = 1; fi < family.size(); ++fi) {
    for (size_t k = 0; k < xs.size(); ++k) {
      i64 c = 0;
      for (const auto& vis : F.paths[family[fi]].visits)
        if (!vis.is_zig && F.paths[xs[k]].contains_edge(vis.edge)) ++c;
      if (c != mx[k]) throw std::logic_error("crossing counts differ across family");
    }
  }
  {
    i64 sx = 0, sy = 0;
    for (i64 c : mx) sx += c;
    for (i64 c : my) sy += c;
    if (sx != d.n || sy != d.n)
      throw std::logic_error("crossing totals do not equal n");
  }

  // Cyclic order of the family (Def 4.1(4)): along any x-path, after z_i
  // comes z_{i-1}. Read the order off the first x-path and rotate so that
  // family[0] stays first.
  if (r > 1) {
    auto owner = dart_to_path(F.work, F.paths);
    std::vector<int> seq;  // family positions in crossing order of xs[0]
    const ZigzagPath& x0 = F.paths[xs[0]];
    for (size_t k = 0; k < x0.darts.size(); ++k) {
      if (x0.darts[k].to_black) continue;  // zig of x0 = zag of some z_i
      Dart other{x0.darts[k].edge, true};
      int pw = owner[other.id()];
      auto it = std::find(family.begin(), family.end(), pw);
      if (it != family.end())
        seq.push_back(static_cast<int>(it - family.begin()));
    }
    if (seq.empty()) throw std::logic_error("x-path does not cross the family");
    std::vector<int> first_seen;
    for (int s : seq)
      if (std::find(first_seen.begin(), first_seen.end(), s) == first_seen.end())
        first_seen.push_back(s);
    if (first_seen.size() != family.size())
      throw std::logic_error("x-path misses part of the family");
    // Descending convention: reverse the first-seen order, then rotate so
    // that the user's first family member is z_1.
    std::vector<int> ordered;
    for (auto it = first_seen.rbegin(); it != first_seen.rend(); ++it)
      ordered.push_back(family[*it]);
    auto at = std::find(ordered.begin(), ordered.end(), family[0]);
    std::rotate(ordered.begin(), at, ordered.end());
    family = ordered;
  }
  d.family = family;

  // Sub-zigzag decomposition: cut each x-path at its crossings with z_r.
  const ZigzagPath& zr = F.paths[family[r - 1]];
  struct SubPath {
    int x_index;
    std::vector<int> crossing_by_member;  // edge id crossed per family member
  };
  std::vector<SubPath> subs;
  for (size_t k = 0; k < xs.size(); ++k) {
    const ZigzagPath& x = F.paths[xs[k]];
    std::vector<size_t> cuts;
    int anchor_best = -1;
    for (size_t t = 0; t < x.darts.size(); ++t) {
      if (x.darts[t].to_black) continue;
      if (zr.contains_edge(x.darts[t].edge)) {
        cuts.push_back(t);
        if (anchor_best < 0 || x.darts[t].edge < x.darts[cuts[anchor_best]].edge)
          anchor_best = static_cast<int>(cuts.size()) - 1;
      }
    }
    if (static_cast<i64>(cuts.size()) != mx[k])
      throw std::logic_error("unexpected number of z_r crossings");
    std::rotate(cuts.begin(), cuts.begin() + anchor_best, cuts.end());
    for (size_t a = 0; a < cuts.size(); ++a) {
      size_t from = cuts[a];
      size_t len = (cuts[(a + 1) % cuts.size()] + x.darts.size() - from) %
                   x.darts.size();
      if (len == 0) len = x.darts.size();
      SubPath sp;
      sp.x_index = static_cast<int>(k);
      sp.crossing_by_member.assign(r, -1);
      for (size_t off = 0; off < len; ++off) {
        const Dart& dd = x.darts[(from + off) % x.darts.size()];
        if (dd.to_black) continue;
        for (i64 i = 0; i < r; ++i)
          if (F.paths[family[i]].contains_edge(dd.edge)) {
            if (sp.crossing_by_member[i] != -1)
              throw std::logic_error("sub-zigzag crosses a family member twice");
            sp.crossing_by_member[i] = dd.edge;
          }
      }
      for (i64 i = 0; i < r; ++i)
        if (sp.crossing_by_member[i] < 0)
          throw std::logic_error("sub-zigzag misses a family member");
      subs.push_back(sp);
    }
  }

  d.anchors.assign(r, {});
  if (assignment.auto_round_robin) {
    i64 next = 0;
    for (const auto& sp : subs) {
      d.anchors[next].push_back(sp.crossing_by_member[next]);
      next = (next + 1) % r;
    }
  } else {
    if (static_cast<i64>(assignment.anchor_edges.size()) != r)
      throw std::domain_error("assignment must give one edge set per family member");
    std::set<int> all;
    for (i64 i = 0; i < r; ++i)
      for (const auto& name : assignment.anchor_edges[i]) {
        int e = m.edge_by_name(name);
        if (e < 0) throw std::domain_error("unknown anchor edge " + name);
        d.anchors[i].push_back(e);
        all.insert(e);
      }
    for (const auto& sp : subs) {
      int hits = 0;
      for (i64 i = 0; i < r; ++i) {
        if (all.count(sp.crossing_by_member[i])) {
          ++hits;
          bool in_own = std::find(d.anchors[i].begin(), d.anchors[i].end(),
                                  sp.crossing_by_member[i]) != d.anchors[i].end();
          if (!in_own)
            throw std::domain_error("anchor edge assigned to the wrong family member");
        }
      }
      if (hits != 1)
        throw std::domain_error("each sub-zigzag needs exactly one anchor crossing");
    }
  }
  d.weights.clear();
  i64 total_p = 0;
  for (i64 i = 0; i < r; ++i) {
    if (d.anchors[i].empty())
      throw std::domain_error("every family member needs |X_i| >= 1");
    d.weights.push_back(static_cast<i64>(d.anchors[i].size()) - 1);
    total_p += d.weights.back();
  }
  if (total_p != d.h) throw std::logic_error("weights do not sum to h");

  for (size_t k = 0; k < xs.size(); ++k) {
    d.cross_paths.push_back(to_orig(xs[k]));
    d.cross_counts.push_back(mx[k]);
  }
  for (size_t k = 0; k < ys.size(); ++k) {
    d.other_paths.push_back(to_orig(ys[k]));
    d.other_counts.push_back(my[k]);
  }
  return d;
}

DeformResult deform(const DimerModel& m, const DeformationData& data,
                    const RemovalSchedule& schedule, bool shortcut) {
  FrameData F = surgery_frame(m, data.side);
  DeformResult res;
  DimerModel pre = surgery_zig(F.work, F.paths, data, /*with_bypasses=*/!shortcut);
  {
    auto rep = validate(pre);
    if (!rep.ok) throw std::logic_error("surgery produced an invalid model");
  }
  DimerModel fixed = shortcut
                         ? pre
                         : restore_consistency(pre, schedule, &res.restoration_steps);
  DimerModel red = reduce(fixed);
  if (!is_consistent(red))
    throw std::logic_error("deformed model is not consistent");
  if (data.side == DeformSide::Zag) {
    res.pre_restoration = mirrored(pre);
    res.result = mirrored(red);
  } else {
    res.pre_restoration = pre;
    res.result = red;
  }
  return res;
}

SlopeTransformReport slope_transform_report(const DimerModel& m,
                                            const DeformationData& data,
                                            const DimerModel& deformed) {
  SlopeTransformReport rep;
  auto orig_paths = zigzag_paths(m);
  auto poly = pm_polygon(m);
  // u = h(P'_z, P_z) for the chosen path, in the original frame.
  int z_orig = data.z_index;
  if (data.side == DeformSide::Zag) {
    FrameData F = surgery_frame(m, data.side);
    z_orig = reversed_path_index(m, orig_paths, F.paths[data.z_index]);
  }
  auto bm = boundary_matchings_for(m, poly, orig_paths[z_orig]);
  rep.u = bm.h;
  IVec vz = orig_paths[z_orig].slope;
  std::multiset<std::pair<i64, i64>> predicted;
  auto addp = [&](IVec s) { predicted.insert({s.x, s.y}); };
  std::set<int> family_orig;
  {
    FrameData F = surgery_frame(m, data.side);
    for (int fi : data.family) {
      int oi = data.side == DeformSide::Zag
                   ? reversed_path_index(m, orig_paths, F.paths[fi])
                   : fi;
      family_orig.insert(oi);
    }
  }
  std::set<int> cross(data.cross_paths.begin(), data.cross_paths.end());
  for (size_t q = 0; q < orig_paths.size(); ++q) {
    if (family_orig.count(static_cast<int>(q))) continue;  // removed
    IVec s = orig_paths[q].slope;
    SlopeTransformReport::Line ln;
    ln.before = s;
    if (cross.count(static_cast<int>(q))) {
      // Zig side: [x'] = [x] + <[x],u>[z]. Zag side: [y'] = [y] - <[y],u>[z].
      i64 c = dot(s, rep.u);
      ln.kind = "cross";
      ln.predicted = data.side == DeformSide::Zig ? s + c * vz : s - c * vz;
    } else {
      ln.kind = s == vz ? "family-rest" : (s == -vz ? "anti" : "other");
      ln.predicted = s;
    }
    addp(ln.predicted);
    rep.lines.push_back(ln);
  }
  for (i64 k = 0; k < data.h; ++k) {
    SlopeTransformReport::Line ln;
    ln.kind = "new";
    ln.before = vz;
    ln.predicted = -vz;
    addp(ln.predicted);
    rep.lines.push_back(ln);
  }
  auto dpaths = zigzag_paths(deformed);
  std::multiset<std::pair<i64, i64>> observed;
  for (const auto& z : dpaths) observed.insert({z.slope.x, z.slope.y});
  rep.ok = predicted == observed;
  for (auto& ln : rep.lines)
    ln.matched = observed.count({ln.predicted.x, ln.predicted.y}) > 0;
  {
    SlopeMultiset P, O;
    for (auto& pr : predicted) P.add({pr.first, pr.second});
    for (auto& pr : observed) O.add({pr.first, pr.second});
    rep.predicted = P;
    rep.observed = O;
  }
  return rep;
}

}  // namespace dimerlab
