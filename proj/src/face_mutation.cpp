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

#include "dimerlab/face_mutation.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace dimerlab {

namespace {

// Track a face across a local edit by a surviving (edge name, direction)
// boundary dart.
int find_face_by_dart(const DimerModel& m, const std::vector<Face>& fs,
                      const std::string& edge_name, bool to_black) {
  int e = m.edge_by_name(edge_name);
  if (e < 0) return -1;
  for (size_t i = 0; i < fs.size(); ++i)
    for (const Dart& d : fs[i].boundary)
      if (d.edge == e && d.to_black == to_black) return static_cast<int>(i);
  return -1;
}

struct Quad {
  // Boundary cycle (a1, x1, a2, x2): a's carry the variant color.
  int a[2], x[2];
  int E[4];       // E[0]=a1-x1, E[1]=x1-a2, E[2]=a2-x2, E[3]=x2-a1
  int u_edge[2];  // third edge at a1, a2
  int u_node[2];
};

Quad quad_of(const DimerModel& m, const Face& f, Color variant) {
  if (f.size() != 4)
    throw std::domain_error("mutation defined only at quadrangle faces");
  Quad q;
  int start = -1;
  for (int k = 0; k < 4; ++k)
    if (m.nodes[dart_tail(m, f.boundary[k])].color == variant) { start = k; break; }
  if (start < 0) throw std::logic_error("quadrangle without variant color");
  for (int k = 0; k < 4; ++k) {
    Dart d = f.boundary[(start + k) % 4];
    q.E[k] = d.edge;
    if (k % 2 == 0) q.a[k / 2] = dart_tail(m, d);
    else q.x[k / 2] = dart_tail(m, d);
  }
  if (q.a[0] == q.a[1] || q.x[0] == q.x[1])
    throw std::domain_error("quadrangle boundary nodes must be distinct");
  for (int k = 0; k < 2; ++k) {
    if (m.degree(q.a[k]) != 3)
      throw std::domain_error("spider move needs 3-valent " +
                              std::string(variant == Color::Black ? "black" : "white") +
                              " nodes on the face");
    q.u_edge[k] = -1;
    for (int e : m.rotation[q.a[k]]) {
      if (e == q.E[(2 * k + 3) % 4] || e == q.E[2 * k]) continue;
      q.u_edge[k] = e;
    }
    if (q.u_edge[k] < 0) throw std::logic_error("missing external edge");
    const auto& ed = m.edges[q.u_edge[k]];
    q.u_node[k] = ed.black == q.a[k] ? ed.white : ed.black;
  }
  return q;
}

}  // namespace

DimerModel spider_move(const DimerModel& m, int face_index, Color variant) {
  auto fs = faces(m);
  if (face_index < 0 || face_index >= static_cast<int>(fs.size()))
    throw std::domain_error("face index out of range");
  Quad q = quad_of(m, fs[face_index], variant);

  // Local lifts anchored at a1; the face is contractible so they close up.
  auto edge_off = [&](int e, int from_node, IVec from_lift) {
    const auto& ed = m.edges[e];
    return ed.black == from_node ? from_lift + ed.offset : from_lift - ed.offset;
  };
  IVec lift_a1{0, 0};
  IVec lift_x1 = edge_off(q.E[0], q.a[0], lift_a1);
  IVec lift_a2 = edge_off(q.E[1], q.x[0], lift_x1);
  IVec lift_x2 = edge_off(q.E[2], q.a[1], lift_a2);
  IVec lift_u1 = edge_off(q.u_edge[0], q.a[0], lift_a1);
  IVec lift_u2 = edge_off(q.u_edge[1], q.a[1], lift_a2);
  IVec lift_x[2] = {lift_x1, lift_x2};
  IVec lift_u[2] = {lift_u1, lift_u2};

  DimerModel out;
  std::vector<int> nmap(m.nodes.size(), -1);
  for (size_t n = 0; n < m.nodes.size(); ++n) {
    if (static_cast<int>(n) == q.a[0] || static_cast<int>(n) == q.a[1]) continue;
    nmap[n] = out.add_node(m.nodes[n].name, m.nodes[n].color);
    out.nodes[nmap[n]].has_pos = m.nodes[n].has_pos;
    out.nodes[nmap[n]].px = m.nodes[n].px;
    out.nodes[nmap[n]].py = m.nodes[n].py;
  }
  // New variant-colored nodes, one paired to each x.
  int c[2];
  for (int k = 0; k < 2; ++k) {
    c[k] = out.add_node(out.fresh_node_name(m.nodes[q.a[k]].name + "m"), variant);
    // Render position: between the face's x-node and the face center.
    int xk = q.x[k];
    int other = q.x[1 - k];
    if (m.nodes[xk].has_pos && m.nodes[other].has_pos) {
      out.nodes[c[k]].has_pos = true;
      out.nodes[c[k]].px = m.nodes[xk].px;  // keep it simple: near x_k
      out.nodes[c[k]].py = m.nodes[xk].py;
    }
  }
  std::set<int> dead{q.E[0], q.E[1], q.E[2], q.E[3], q.u_edge[0], q.u_edge[1]};
  std::vector<int> emap(m.edges.size(), -1);
  for (size_t e = 0; e < m.edges.size(); ++e) {
    if (dead.count(static_cast<int>(e))) continue;
    emap[e] = out.add_edge(m.edges[e].name, nmap[m.edges[e].black],
                           nmap[m.edges[e].white], m.edges[e].offset);
  }
  // c_k joins x_k plus both externals. New nodes are canonical at lift 0.
  auto add_new = [&](int ck, int other_node, IVec other_lift, const std::string& nm) {
    int b, w;
    IVec off;
    if (variant == Color::Black) {
      b = ck;
      w = nmap[other_node];
      off = other_lift;
    } else {
      b = nmap[other_node];
      w = ck;
      off = -other_lift;
    }
    return out.add_edge(out.fresh_edge_name(nm), b, w, off);
  };
  int ex[2], eu[2][2];  // ex[k]: c_k-x_k; eu[k][j]: c_k-u_j
  for (int k = 0; k < 2; ++k) {
    ex[k] = add_new(c[k], q.x[k], lift_x[k], m.edges[q.E[2 * k]].name + "s");
    for (int j = 0; j < 2; ++j)
      eu[k][j] = add_new(c[k], q.u_node[j], lift_u[j],
                         m.edges[q.u_edge[j]].name + "s" + std::to_string(k));
  }
  // Rotations.
  for (size_t n = 0; n < m.nodes.size(); ++n) {
    if (nmap[n] < 0) continue;
    std::vector<int> rot;
    for (int e : m.rotation[n]) {
      if (emap[e] >= 0) { rot.push_back(emap[e]); continue; }
      // Replacements in place. The two face edges at x_k are rotation
      // adjacent, so replacing one and dropping the other keeps the order.
      bool handled = false;
      for (int k = 0; k < 2 && !handled; ++k) {
        if (static_cast<int>(n) != q.x[k]) continue;
        if (e == q.E[2 * k]) { rot.push_back(ex[k]); handled = true; }
        else if (e == q.E[2 * k + 1]) handled = true;  // dropped
      }
      for (int j = 0; j < 2 && !handled; ++j) {
        if (static_cast<int>(n) == q.u_node[j] && e == q.u_edge[j]) {
          // (c of the x following a_j, then the other) counterclockwise.
          rot.push_back(eu[j][j]);
          rot.push_back(eu[1 - j][j]);
          handled = true;
        }
      }
      // Anything else vanished with a removed node.
    }
    out.rotation[nmap[n]] = rot;
  }
  out.rotation[c[0]] = {ex[0], eu[0][1], eu[0][0]};
  out.rotation[c[1]] = {ex[1], eu[1][0], eu[1][1]};
  return out;
}

namespace {

// At x_k the two face edges are rotation-adjacent: rot_prev(x_k, E_in) is the
// other face edge; replacing the pair with the single new edge keeps order.
// (Handled inline above: E[2k] is replaced, E[2k+1] dropped; they are
// adjacent, so the result is the same cyclic order either way.)

}  // namespace

FaceMutationResult mutate_face(const DimerModel& m, int face_index, Color variant) {
  auto fs0 = faces(m);
  if (face_index < 0 || face_index >= static_cast<int>(fs0.size()))
    throw std::domain_error("face index out of range");
  if (fs0[face_index].size() != 4)
    throw std::domain_error("mutation defined only at quadrangle faces");

  // Remember every original face by a boundary dart list (edge names).
  struct Tag { std::vector<std::pair<std::string, bool>> darts; };
  std::vector<Tag> tags(fs0.size());
  for (size_t i = 0; i < fs0.size(); ++i)
    for (const Dart& d : fs0[i].boundary)
      tags[i].darts.push_back({m.edges[d.edge].name, d.to_black});

  // Step (I): make the variant-colored boundary nodes 3-valent.
  DimerModel cur = m;
  // Identify the face in `cur` by one of its darts as we edit.
  auto face_in = [&](const DimerModel& mm, const Tag& t) {
    auto fs = faces(mm);
    for (auto& [nm, dir] : t.darts) {
      int idx = find_face_by_dart(mm, fs, nm, dir);
      if (idx >= 0) return std::make_pair(idx, fs);
    }
    throw std::logic_error("lost track of the face");
  };
  for (;;) {
    auto [fidx, fs] = face_in(cur, tags[face_index]);
    const Face& f = fs[fidx];
    if (f.size() != 4)
      throw std::domain_error("mutation defined only at quadrangle faces");
    int big = -1, e_in = -1;
    for (const Dart& d : f.boundary) {
      int n = dart_head(cur, d);
      if (cur.nodes[n].color == variant && cur.degree(n) > 3) {
        big = n;
        e_in = d.edge;
        break;
      }
      n = dart_tail(cur, d);
      if (cur.nodes[n].color == variant && cur.degree(n) > 3) {
        big = n;
        e_in = cur.rot_next(n, d.edge);  // arriving face edge at the tail
        break;
      }
    }
    if (big < 0) break;
    // Split off everything except the two face edges (the arc right after
    // e_in, of length deg-2).
    int deg = cur.degree(big);
    int start = (cur.rot_index(big, e_in) + 1) % deg;
    cur = split_move(cur, big, start, deg - 2);
  }
  // Step (II): spider move.
  auto [fidx, fs1] = face_in(cur, tags[face_index]);
  {
    // Degenerate-valence guard: 2-valent variant nodes cannot be prepared.
    Quad probe = quad_of(cur, fs1[fidx], variant);
    (void)probe;
  }
  DimerModel spidered = spider_move(cur, fidx, variant);
  // The new central quadrangle: bounded by the four fresh c-u edges.
  std::vector<std::string> central_edges;
  {
    std::set<std::string> old_names;
    for (const auto& e : cur.edges) old_names.insert(e.name);
    for (const auto& e : spidered.edges)
      if (!old_names.count(e.name)) central_edges.push_back(e.name);
  }
  // Step (III): join away 2-valent nodes.
  DimerModel result = reduce(spidered);

  FaceMutationResult out;
  out.model = result;
  auto fs_new = faces(result);
  out.face_map.assign(fs0.size(), -1);
  for (size_t i = 0; i < fs0.size(); ++i) {
    if (static_cast<int>(i) == face_index) continue;
    for (auto& [nm, dir] : tags[i].darts) {
      int idx = find_face_by_dart(result, fs_new, nm, dir);
      if (idx >= 0) { out.face_map[i] = idx; break; }
    }
  }
  // The mutated face: the face whose boundary lies in the fresh c-edges
  // (the c-u ones; joins may have renamed none of them).
  for (size_t i = 0; i < fs_new.size(); ++i) {
    int hits = 0;
    for (const Dart& d : fs_new[i].boundary) {
      const std::string& nm = result.edges[d.edge].name;
      if (std::find(central_edges.begin(), central_edges.end(), nm) !=
          central_edges.end())
        ++hits;
    }
    if (hits == static_cast<int>(fs_new[i].size()) && hits > 0) {
      out.face_map[face_index] = static_cast<int>(i);
      break;
    }
  }
  return out;
}

}  // namespace dimerlab
