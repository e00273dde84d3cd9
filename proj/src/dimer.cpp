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

#include "dimerlab/dimer.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace dimerlab {

int DimerModel::add_node(std::string name, Color c) {
  Node n;
  n.name = std::move(name);
  n.color = c;
  nodes.push_back(n);
  rotation.emplace_back();
  return static_cast<int>(nodes.size()) - 1;
}

int DimerModel::add_edge(std::string name, int black, int white, IVec offset) {
  if (nodes[black].color != Color::Black || nodes[white].color != Color::White)
    throw std::domain_error("add_edge: endpoint colors wrong");
  Edge e;
  e.name = std::move(name);
  e.black = black;
  e.white = white;
  e.offset = offset;
  edges.push_back(e);
  int id = static_cast<int>(edges.size()) - 1;
  rotation[black].push_back(id);
  rotation[white].push_back(id);
  return id;
}

int DimerModel::node_by_name(const std::string& name) const {
  for (size_t i = 0; i < nodes.size(); ++i)
    if (nodes[i].name == name) return static_cast<int>(i);
  return -1;
}

int DimerModel::edge_by_name(const std::string& name) const {
  for (size_t i = 0; i < edges.size(); ++i)
    if (edges[i].name == name) return static_cast<int>(i);
  return -1;
}

int DimerModel::rot_index(int n, int e) const {
  const auto& r = rotation[n];
  for (size_t i = 0; i < r.size(); ++i)
    if (r[i] == e) return static_cast<int>(i);
  throw std::logic_error("edge not incident to node");
}

int DimerModel::rot_next(int n, int e) const {
  const auto& r = rotation[n];
  return r[(rot_index(n, e) + 1) % r.size()];
}

int DimerModel::rot_prev(int n, int e) const {
  const auto& r = rotation[n];
  return r[(rot_index(n, e) + r.size() - 1) % r.size()];
}

size_t DimerModel::num_black() const {
  size_t k = 0;
  for (const Node& n : nodes)
    if (n.color == Color::Black) ++k;
  return k;
}

std::string DimerModel::fresh_node_name(const std::string& base) const {
  if (node_by_name(base) < 0) return base;
  for (int k = 2;; ++k) {
    std::string c = base + "_" + std::to_string(k);
    if (node_by_name(c) < 0) return c;
  }
}

std::string DimerModel::fresh_edge_name(const std::string& base) const {
  if (edge_by_name(base) < 0) return base;
  for (int k = 2;; ++k) {
    std::string c = base + "_" + std::to_string(k);
    if (edge_by_name(c) < 0) return c;
  }
}

Dart face_next(const DimerModel& m, Dart d) {
  int n = dart_head(m, d);
  int e2 = m.rot_prev(n, d.edge);
  return Dart{e2, m.nodes[n].color == Color::White};
}

std::vector<Face> faces(const DimerModel& m) {
  std::vector<Face> out;
  std::vector<char> seen(m.edges.size() * 2, 0);
  for (size_t e = 0; e < m.edges.size(); ++e)
    for (int dir = 0; dir < 2; ++dir) {
      Dart start{static_cast<int>(e), dir != 0};
      if (seen[start.id()]) continue;
      Face f;
      Dart d = start;
      do {
        seen[d.id()] = 1;
        f.boundary.push_back(d);
        d = face_next(m, d);
      } while (!(d == start));
      out.push_back(std::move(f));
    }
  return out;
}

ValidationReport validate(const DimerModel& m) {
  ValidationReport r;
  r.bipartite_ok = true;
  for (const auto& e : m.edges) {
    if (e.black < 0 || e.white < 0 ||
        e.black >= static_cast<int>(m.nodes.size()) ||
        e.white >= static_cast<int>(m.nodes.size()) ||
        m.nodes[e.black].color != Color::Black ||
        m.nodes[e.white].color != Color::White) {
      r.bipartite_ok = false;
      r.errors.push_back("edge " + e.name + " does not join a black to a white node");
    }
  }
  {
    std::set<std::string> names;
    for (const auto& n : m.nodes)
      if (!names.insert(n.name).second)
        r.errors.push_back("duplicate node name " + n.name);
    std::set<std::string> enames;
    for (const auto& e : m.edges)
      if (!enames.insert(e.name).second)
        r.errors.push_back("duplicate edge name " + e.name);
  }
  if (!r.bipartite_ok) {
    r.ok = false;
    return r;
  }
  r.rotation_ok = m.rotation.size() == m.nodes.size();
  if (r.rotation_ok) {
    std::vector<std::multiset<int>> want(m.nodes.size());
    for (size_t e = 0; e < m.edges.size(); ++e) {
      want[m.edges[e].black].insert(static_cast<int>(e));
      want[m.edges[e].white].insert(static_cast<int>(e));
    }
    for (size_t n = 0; n < m.nodes.size(); ++n) {
      std::multiset<int> got(m.rotation[n].begin(), m.rotation[n].end());
      if (got != want[n]) {
        r.rotation_ok = false;
        r.errors.push_back("rotation at node " + m.nodes[n].name +
                           " does not list the incident edges exactly once");
      }
      if (want[n].size() == 0)
        r.errors.push_back("isolated node " + m.nodes[n].name);
      else if (want[n].size() == 1)
        r.warnings.push_back("degree-1 node " + m.nodes[n].name);
    }
  } else {
    r.errors.push_back("rotation table size mismatch");
  }
  if (!r.bipartite_ok || !r.rotation_ok || m.edges.empty()) {
    r.ok = false;
    return r;
  }
  auto fs = faces(m);
  r.num_faces = static_cast<int>(fs.size());
  r.euler_characteristic = static_cast<i64>(m.nodes.size()) -
                           static_cast<i64>(m.edges.size()) + fs.size();
  r.euler_ok = r.euler_characteristic == 0;
  if (!r.euler_ok)
    r.errors.push_back("Euler characteristic " +
                       std::to_string(r.euler_characteristic) + " != 0");
  r.faces_contractible = true;
  for (const Face& f : fs) {
    IVec s{0, 0};
    for (Dart d : f.boundary) s += dart_offset(m, d);
    if (!s.is_zero()) {
      r.faces_contractible = false;
      r.errors.push_back("face with nonzero boundary offset " + s.str());
      break;
    }
  }
  {
    std::vector<int> comp(m.nodes.size(), -1);
    std::vector<int> stack{0};
    comp[0] = 0;
    while (!stack.empty()) {
      int n = stack.back();
      stack.pop_back();
      for (int e : m.rotation[n]) {
        for (int v : {m.edges[e].black, m.edges[e].white})
          if (comp[v] < 0) { comp[v] = 0; stack.push_back(v); }
      }
    }
    r.connected = std::count(comp.begin(), comp.end(), -1) == 0;
    if (!r.connected) r.warnings.push_back("model is not connected");
  }
  r.ok = r.bipartite_ok && r.rotation_ok && r.euler_ok && r.faces_contractible &&
         r.errors.empty();
  return r;
}

DimerModel retranslate(const DimerModel& m, int node, IVec delta) {
  DimerModel out = m;
  for (auto& e : out.edges) {
    if (e.black == node) e.offset -= delta;
    if (e.white == node) e.offset += delta;
  }
  return out;
}

DimerModel split_move(const DimerModel& m, int node, int arc_start, int arc_len) {
  int deg = m.degree(node);
  if (arc_len < 1 || arc_len >= deg)
    throw std::domain_error("split arc must be a proper nonempty rotation arc");
  DimerModel out = m;
  Color nc = m.nodes[node].color;
  Color oc = nc == Color::Black ? Color::White : Color::Black;
  int mid = out.add_node(out.fresh_node_name(m.nodes[node].name + "s"), oc);
  int far = out.add_node(out.fresh_node_name(m.nodes[node].name + "t"), nc);
  // Move the arc edges to the far node; lifts are unchanged so offsets stay.
  std::vector<int> arc, rest;
  for (int i = 0; i < deg; ++i) {
    int e = m.rotation[node][(arc_start + i) % deg];
    (i < arc_len ? arc : rest).push_back(e);
  }
  for (int e : arc) {
    if (nc == Color::Black) out.edges[e].black = far;
    else out.edges[e].white = far;
  }
  std::string base = m.nodes[node].name + "c";
  int e1, e2;  // e1: node--mid, e2: mid--far
  if (nc == Color::Black) {
    e1 = out.add_edge(out.fresh_edge_name(base + "1"), node, mid, {0, 0});
    e2 = out.add_edge(out.fresh_edge_name(base + "2"), far, mid, {0, 0});
  } else {
    e1 = out.add_edge(out.fresh_edge_name(base + "1"), mid, node, {0, 0});
    e2 = out.add_edge(out.fresh_edge_name(base + "2"), mid, far, {0, 0});
  }
  // add_edge appended e1/e2 to rotations; rebuild them in the right order.
  // The connector sits exactly where the arc was removed.
  out.rotation[node] = rest;
  out.rotation[node].push_back(e1);
  out.rotation[far] = arc;
  out.rotation[far].push_back(e2);
  out.rotation[mid] = {e1, e2};
  return out;
}

DimerModel join_move(const DimerModel& m, int two_valent_node) {
  if (m.degree(two_valent_node) != 2)
    throw std::domain_error("join move needs a 2-valent node");
  int e1 = m.rotation[two_valent_node][0];
  int e2 = m.rotation[two_valent_node][1];
  Color mc = m.nodes[two_valent_node].color;
  Color oc = mc == Color::Black ? Color::White : Color::Black;
  int n1 = m.endpoint(e1, oc);
  int n2 = m.endpoint(e2, oc);
  if (n1 == n2)
    throw std::domain_error("join move needs two distinct neighbors");
  // Keep the lexicographically smaller neighbor so the result does not
  // depend on the cyclic representation of the stored rotation.
  if (m.nodes[n2].name < m.nodes[n1].name) {
    std::swap(e1, e2);
    std::swap(n1, n2);
  }
  // Keep n1; translate n2's lift so the two connector lifts agree.
  // Along n1 -e1- mid -e2- n2 the translation of n2 relative to n1 is tau.
  IVec tau;
  if (mc == Color::White) {
    // mid white: tau(n2) = offset(e1) - offset(e2)
    tau = m.edges[e1].offset - m.edges[e2].offset;
  } else {
    tau = m.edges[e2].offset - m.edges[e1].offset;
  }
  DimerModel out;
  out.nodes.reserve(m.nodes.size() - 2);
  std::vector<int> remap(m.nodes.size(), -1);
  for (size_t i = 0; i < m.nodes.size(); ++i) {
    if (static_cast<int>(i) == two_valent_node || static_cast<int>(i) == n2) continue;
    remap[i] = out.add_node(m.nodes[i].name, m.nodes[i].color);
    out.nodes.back().has_pos = m.nodes[i].has_pos;
    out.nodes.back().px = m.nodes[i].px;
    out.nodes.back().py = m.nodes[i].py;
  }
  remap[n2] = remap[n1];
  std::vector<int> eremap(m.edges.size(), -1);
  for (size_t e = 0; e < m.edges.size(); ++e) {
    if (static_cast<int>(e) == e1 || static_cast<int>(e) == e2) continue;
    // The n2 instance merged into n1 sits at lift tau, so offsets of its
    // edges gain +tau on the black side and -tau on the white side.
    IVec off = m.edges[e].offset;
    if (m.edges[e].black == n2) off += (oc == Color::Black ? tau : IVec{0, 0});
    if (m.edges[e].white == n2) off += (oc == Color::White ? -tau : IVec{0, 0});
    int nb = remap[m.edges[e].black];
    int nw = remap[m.edges[e].white];
    eremap[e] = out.add_edge(m.edges[e].name, nb, nw, off);
  }
  // Rotations: splice n2's rotation into n1's at the connector position.
  auto spliced = [&](int n, int conn, int other, int other_conn) {
    std::vector<int> res;
    int deg = m.degree(n);
    int start = m.rot_index(n, conn);
    for (int i = 1; i < deg; ++i)
      res.push_back(m.rotation[n][(start + i) % deg]);
    int odeg = m.degree(other);
    int ostart = m.rot_index(other, other_conn);
    for (int i = 1; i < odeg; ++i)
      res.push_back(m.rotation[other][(ostart + i) % odeg]);
    return res;
  };
  std::vector<int> merged = spliced(n1, e1, n2, e2);
  for (size_t i = 0; i < m.nodes.size(); ++i) {
    if (static_cast<int>(i) == two_valent_node || static_cast<int>(i) == n2) continue;
    std::vector<int> rot;
    const std::vector<int>& src =
        static_cast<int>(i) == n1 ? merged : m.rotation[i];
    for (int e : src) rot.push_back(eremap[e]);
    out.rotation[remap[i]] = rot;
  }
  return out;
}

DimerModel reduce(const DimerModel& m) {
  DimerModel cur = m;
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t n = 0; n < cur.nodes.size(); ++n) {
      if (cur.degree(static_cast<int>(n)) != 2) continue;
      int e1 = cur.rotation[n][0], e2 = cur.rotation[n][1];
      Color oc = cur.nodes[n].color == Color::Black ? Color::White : Color::Black;
      if (cur.endpoint(e1, oc) == cur.endpoint(e2, oc)) continue;  // stuck 2-gon
      if (cur.nodes.size() <= 2)
        throw std::domain_error("degenerate after reduction");
      cur = join_move(cur, static_cast<int>(n));
      changed = true;
      break;
    }
  }
  return cur;
}

namespace {

// Canonical rotation comparison helper: rotations equal up to cyclic shift.
bool cyclic_equal(const std::vector<int>& a, const std::vector<int>& b) {
  if (a.size() != b.size()) return false;
  if (a.empty()) return true;
  for (size_t s = 0; s < a.size(); ++s) {
    bool ok = true;
    for (size_t i = 0; i < a.size(); ++i)
      if (a[i] != b[(s + i) % b.size()]) { ok = false; break; }
    if (ok) return true;
  }
  return false;
}

// Propagate a dart anchor to a full map isomorphism (combinatorial part).
// orient=false matches rotations directly, orient=true matches them reversed.
bool propagate_map(const DimerModel& a, const DimerModel& b, Dart da, Dart db,
                   bool orient, std::vector<int>& node_map,
                   std::vector<int>& edge_map) {
  node_map.assign(a.nodes.size(), -1);
  edge_map.assign(a.edges.size(), -1);
  std::vector<Dart> stack;
  auto push_pair = [&](Dart x, Dart y) -> bool {
    int ex = x.edge, ey = y.edge;
    if (edge_map[ex] == -1) {
      edge_map[ex] = ey;
      stack.push_back(x);
    } else if (edge_map[ex] != ey) {
      return false;
    }
    int tx = dart_tail(a, x), hx = dart_head(a, x);
    int ty = dart_tail(b, y), hy = dart_head(b, y);
    if (a.nodes[tx].color != b.nodes[ty].color) return false;
    for (auto [na, nb] : {std::pair{tx, ty}, std::pair{hx, hy}}) {
      if (node_map[na] == -1) node_map[na] = nb;
      else if (node_map[na] != nb) return false;
    }
    return true;
  };
  if (a.nodes[dart_tail(a, da)].color != b.nodes[dart_tail(b, db)].color)
    return false;
  if (!push_pair(da, db)) return false;
  while (!stack.empty()) {
    Dart x = stack.back();
    stack.pop_back();
    Dart y{edge_map[x.edge], x.to_black};
    // All rotation neighbors at both endpoints must correspond.
    for (int side = 0; side < 2; ++side) {
      int nx = side ? dart_head(a, x) : dart_tail(a, x);
      int ny = side ? dart_head(b, y) : dart_tail(b, y);
      if (a.degree(nx) != b.degree(ny)) return false;
      int ex1 = a.rot_next(nx, x.edge);
      int ey1 = orient ? b.rot_prev(ny, y.edge) : b.rot_next(ny, y.edge);
      bool xb = a.nodes[nx].color == Color::White;  // darts leaving nx
      // Walk the whole rotation, pairing darts leaving nx/ny.
      int ecur_a = ex1, ecur_b = ey1;
      for (int k = 0; k < a.degree(nx); ++k) {
        if (!push_pair(Dart{ecur_a, xb}, Dart{ecur_b, xb})) return false;
        ecur_a = a.rot_next(nx, ecur_a);
        ecur_b = orient ? b.rot_prev(ny, ecur_b) : b.rot_next(ny, ecur_b);
      }
    }
  }
  for (int v : node_map)
    if (v == -1) return false;
  for (int v : edge_map)
    if (v == -1) return false;
  return true;
}

// Check that offsets correspond up to GL(2,Z) and a coboundary.
bool offsets_match(const DimerModel& a, const DimerModel& b,
                   const std::vector<int>& node_map,
                   const std::vector<int>& edge_map) {
  // Gauge-fix A by a spanning tree: assign node translations in B so that
  // mapped tree edges match exactly under a candidate matrix M; M is
  // determined by two independent fundamental-cycle classes.
  size_t n = a.nodes.size();
  std::vector<int> parent_edge(n, -2);
  std::vector<int> order;
  parent_edge[0] = -1;
  order.push_back(0);
  for (size_t i = 0; i < order.size(); ++i) {
    int u = order[i];
    for (int e : a.rotation[u]) {
      int v = a.edges[e].black == u ? a.edges[e].white : a.edges[e].black;
      if (parent_edge[v] == -2) {
        parent_edge[v] = e;
        order.push_back(v);
      }
    }
  }
  // Cycle class of each non-tree edge in A and of its image in B.
  std::vector<IVec> lift_a(n), lift_b(n);
  auto fill_lifts = [&](const DimerModel& g, const std::vector<int>& pe,
                        const std::vector<int>& ord, std::vector<IVec>& lift,
                        auto edge_of) {
    lift[ord[0]] = {0, 0};
    for (size_t i = 1; i < ord.size(); ++i) {
      int v = ord[i];
      int e = edge_of(pe[v]);
      const auto& ed = g.edges[e];
      int other = ed.black;
      IVec off = ed.offset;
      if (g.nodes[v].color == Color::White) {
        lift[v] = lift[other] + off;
      } else {
        other = ed.white;
        lift[v] = lift[other] - off;
      }
    }
  };
  fill_lifts(a, parent_edge, order, lift_a, [](int e) { return e; });
  {
    std::vector<int> pe_b(n, -1);
    // Same tree under the map.
    std::vector<int> ord_b;
    for (int u : order) ord_b.push_back(node_map[u]);
    std::vector<int> pe_mapped(n, -1);
    for (size_t v = 0; v < n; ++v)
      if (parent_edge[v] >= 0) pe_mapped[node_map[v]] = edge_map[parent_edge[v]];
    lift_b.assign(n, IVec{});
    lift_b[ord_b[0]] = {0, 0};
    for (size_t i = 1; i < ord_b.size(); ++i) {
      int v = ord_b[i];
      int e = pe_mapped[v];
      const auto& ed = b.edges[e];
      if (b.nodes[v].color == Color::White)
        lift_b[v] = lift_b[ed.black] + ed.offset;
      else
        lift_b[v] = lift_b[ed.white] - ed.offset;
    }
  }
  auto cycle_class = [&](const DimerModel& g, const std::vector<IVec>& lift, int e) {
    const auto& ed = g.edges[e];
    return ed.offset - (lift[ed.white] - lift[ed.black]);
  };
  // Find two independent classes in A.
  std::vector<std::pair<IVec, IVec>> pairs;  // (class in A, class in B)
  for (size_t e = 0; e < a.edges.size(); ++e) {
    bool is_tree = false;
    for (size_t v = 0; v < n; ++v)
      if (parent_edge[v] == static_cast<int>(e)) is_tree = true;
    if (is_tree) continue;
    pairs.push_back({cycle_class(a, lift_a, static_cast<int>(e)),
                     cycle_class(b, lift_b, edge_map[e])});
  }
  IVec a1{0, 0}, a2{0, 0}, b1{0, 0}, b2{0, 0};
  bool got1 = false;
  for (auto& [ca, cb] : pairs) {
    if (!got1) {
      if (!ca.is_zero()) { a1 = ca; b1 = cb; got1 = true; }
    } else if (cross(a1, ca) != 0) {
      a2 = ca; b2 = cb;
      break;
    }
  }
  if (!got1 || cross(a1, a2) == 0) {
    // Homology classes of A's cycles do not span; for a torus cell
    // decomposition this cannot happen (validated models have essential
    // cycles in two directions).
    return false;
  }
  // Solve M * a1 = b1, M * a2 = b2.
  i64 det = cross(a1, a2);
  i64 m11n = b1.x * a2.y - b2.x * a1.y;
  i64 m12n = b2.x * a1.x - b1.x * a2.x;
  i64 m21n = b1.y * a2.y - b2.y * a1.y;
  i64 m22n = b2.y * a1.x - b1.y * a2.x;
  if (m11n % det || m12n % det || m21n % det || m22n % det) return false;
  IMat M{m11n / det, m12n / det, m21n / det, m22n / det};
  if (!M.unimodular()) return false;
  for (auto& [ca, cb] : pairs)
    if (!(M.apply(ca) == cb)) return false;
  return true;
}

}  // namespace

bool isomorphic(const DimerModel& a, const DimerModel& b) {
  if (a.nodes.size() != b.nodes.size() || a.edges.size() != b.edges.size())
    return false;
  if (a.edges.empty()) return true;
  Dart da{0, false};
  std::vector<int> node_map, edge_map;
  for (bool orient : {false, true})
    for (size_t e = 0; e < b.edges.size(); ++e) {
      Dart db{static_cast<int>(e), false};
      if (!propagate_map(a, b, da, db, orient, node_map, edge_map)) continue;
      if (offsets_match(a, b, node_map, edge_map)) return true;
    }
  return false;
}

bool structural_equal(const DimerModel& a, const DimerModel& b) {
  if (a.nodes.size() != b.nodes.size() || a.edges.size() != b.edges.size())
    return false;
  std::vector<int> nmap(a.nodes.size()), emap(a.edges.size());
  for (size_t i = 0; i < a.nodes.size(); ++i) {
    int j = b.node_by_name(a.nodes[i].name);
    if (j < 0 || a.nodes[i].color != b.nodes[j].color) return false;
    nmap[i] = j;
  }
  for (size_t e = 0; e < a.edges.size(); ++e) {
    int f = b.edge_by_name(a.edges[e].name);
    if (f < 0) return false;
    if (nmap[a.edges[e].black] != b.edges[f].black) return false;
    if (nmap[a.edges[e].white] != b.edges[f].white) return false;
    if (a.edges[e].offset != b.edges[f].offset) return false;
    emap[e] = f;
  }
  for (size_t n = 0; n < a.nodes.size(); ++n) {
    std::vector<int> ra;
    for (int e : a.rotation[n]) ra.push_back(emap[e]);
    if (!cyclic_equal(ra, b.rotation[nmap[n]])) return false;
  }
  return true;
}

}  // namespace dimerlab
