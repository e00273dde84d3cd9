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

#include "dimerlab/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace dimerlab {

namespace {

std::vector<std::string> tokens(const std::string& line) {
  std::string s = line;
  auto h = s.find('#');
  if (h != std::string::npos) s = s.substr(0, h);
  std::istringstream in(s);
  std::vector<std::string> out;
  std::string t;
  while (in >> t) out.push_back(t);
  return out;
}

Rat parse_rat(const std::string& s, int line) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rat(std::stoll(s));
    return Rat(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
  } catch (const std::exception&) {
    throw ParseError(line, "bad rational '" + s + "'");
  }
}

i64 parse_int(const std::string& s, int line) {
  try {
    size_t pos = 0;
    i64 v = std::stoll(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw ParseError(line, "bad integer '" + s + "'");
  }
}

}  // namespace

DimerModel parse_dimer_text(const std::string& text) {
  DimerModel m;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  enum { None, Nodes, Edges, Rotation } section = None;
  std::vector<std::vector<int>> rot;
  std::vector<char> has_rot;
  while (std::getline(in, line)) {
    ++lineno;
    auto ts = tokens(line);
    if (ts.empty()) continue;
    if (ts[0] == "[nodes]") { section = Nodes; continue; }
    if (ts[0] == "[edges]") { section = Edges; continue; }
    if (ts[0] == "[rotation]") {
      section = Rotation;
      rot.assign(m.nodes.size(), {});
      has_rot.assign(m.nodes.size(), 0);
      continue;
    }
    switch (section) {
      case None:
        throw ParseError(lineno, "content before any section header");
      case Nodes: {
        if (ts.size() != 2 && ts.size() != 4)
          throw ParseError(lineno, "node line needs 'id color [x y]'");
        if (m.node_by_name(ts[0]) >= 0)
          throw ParseError(lineno, "duplicate node id " + ts[0]);
        Color c;
        if (ts[1] == "B" || ts[1] == "black") c = Color::Black;
        else if (ts[1] == "W" || ts[1] == "white") c = Color::White;
        else throw ParseError(lineno, "color must be B or W");
        int id = m.add_node(ts[0], c);
        if (ts.size() == 4) {
          m.nodes[id].has_pos = true;
          m.nodes[id].px = parse_rat(ts[2], lineno);
          m.nodes[id].py = parse_rat(ts[3], lineno);
        }
        break;
      }
      case Edges: {
        if (ts.size() != 5)
          throw ParseError(lineno, "edge line needs 'id black white dx dy'");
        if (m.edge_by_name(ts[0]) >= 0)
          throw ParseError(lineno, "duplicate edge id " + ts[0]);
        int b = m.node_by_name(ts[1]);
        int w = m.node_by_name(ts[2]);
        if (b < 0) throw ParseError(lineno, "unknown node " + ts[1]);
        if (w < 0) throw ParseError(lineno, "unknown node " + ts[2]);
        if (m.nodes[b].color != Color::Black)
          throw ParseError(lineno, ts[1] + " is not black");
        if (m.nodes[w].color != Color::White)
          throw ParseError(lineno, ts[2] + " is not white");
        m.add_edge(ts[0], b, w,
                   {parse_int(ts[3], lineno), parse_int(ts[4], lineno)});
        break;
      }
      case Rotation: {
        std::string id = ts[0];
        if (!id.empty() && id.back() == ':') id.pop_back();
        int n = m.node_by_name(id);
        if (n < 0) throw ParseError(lineno, "unknown node " + id);
        if (has_rot[n]) throw ParseError(lineno, "duplicate rotation for " + id);
        has_rot[n] = 1;
        size_t first = 1;
        if (ts.size() > 1 && ts[1] == ":") first = 2;
        std::vector<int> r;
        for (size_t i = first; i < ts.size(); ++i) {
          int e = m.edge_by_name(ts[i]);
          if (e < 0) throw ParseError(lineno, "unknown edge " + ts[i]);
          r.push_back(e);
        }
        rot[n] = r;
        break;
      }
    }
  }
  if (!rot.empty()) {
    for (size_t n = 0; n < m.nodes.size(); ++n)
      if (has_rot[n]) m.rotation[n] = rot[n];
  }
  ValidationReport rep = validate(m);
  if (!rep.ok) {
    std::string msg = "model fails validation:";
    for (auto& e : rep.errors) msg += " " + e + ";";
    throw ParseError(lineno, msg);
  }
  return m;
}

DimerModel parse_dimer(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_dimer_text(ss.str());
}

std::string write_dimer_text(const DimerModel& m) {
  std::ostringstream out;
  out << "[nodes]\n";
  for (const auto& n : m.nodes) {
    out << n.name << " " << (n.color == Color::Black ? "B" : "W");
    if (n.has_pos) out << " " << n.px.str() << " " << n.py.str();
    out << "\n";
  }
  out << "[edges]\n";
  for (const auto& e : m.edges)
    out << e.name << " " << m.nodes[e.black].name << " " << m.nodes[e.white].name
        << " " << e.offset.x << " " << e.offset.y << "\n";
  out << "[rotation]\n";
  for (size_t n = 0; n < m.nodes.size(); ++n) {
    out << m.nodes[n].name << ":";
    // Canonical start: smallest edge id first, so round-trips are
    // byte-identical.
    const auto& r = m.rotation[n];
    size_t best = 0;
    for (size_t i = 1; i < r.size(); ++i)
      if (m.edges[r[i]].name < m.edges[r[best]].name) best = i;
    for (size_t i = 0; i < r.size(); ++i)
      out << " " << m.edges[r[(best + i) % r.size()]].name;
    out << "\n";
  }
  return out.str();
}

void write_dimer(const DimerModel& m, const std::string& path) {
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot open " + path + " for writing");
  f << write_dimer_text(m);
}

}  // namespace dimerlab
