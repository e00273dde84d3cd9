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

#include "dimerlab/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace dimerlab {

namespace {

struct XY {
  double x, y;
};

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.4f", v);
  return buf;
}

// Fixed-iteration barycentric smoothing on the torus cover; deterministic and
// cosmetic only.
std::vector<XY> layout(const DimerModel& m) {
  std::vector<XY> pos(m.nodes.size());
  bool all = true;
  for (size_t n = 0; n < m.nodes.size(); ++n) {
    if (m.nodes[n].has_pos) {
      pos[n] = {static_cast<double>(m.nodes[n].px.num) / m.nodes[n].px.den,
                static_cast<double>(m.nodes[n].py.num) / m.nodes[n].py.den};
    } else {
      all = false;
      pos[n] = {0.13 + 0.61 * static_cast<double>((n * 37) % 97) / 97.0,
                0.17 + 0.59 * static_cast<double>((n * 61) % 89) / 89.0};
    }
  }
  if (all) return pos;
  for (int it = 0; it < 200; ++it) {
    std::vector<XY> nxt(pos.size(), {0, 0});
    std::vector<int> deg(pos.size(), 0);
    for (const auto& e : m.edges) {
      // Neighbor position as seen from each endpoint's lift.
      XY w{pos[e.white].x + e.offset.x, pos[e.white].y + e.offset.y};
      nxt[e.black].x += w.x;
      nxt[e.black].y += w.y;
      deg[e.black]++;
      XY b{pos[e.black].x - e.offset.x, pos[e.black].y - e.offset.y};
      nxt[e.white].x += b.x;
      nxt[e.white].y += b.y;
      deg[e.white]++;
    }
    for (size_t n = 0; n < pos.size(); ++n) {
      if (!deg[n]) continue;
      double fx = nxt[n].x / deg[n], fy = nxt[n].y / deg[n];
      pos[n].x = 0.5 * pos[n].x + 0.5 * (fx - std::floor(fx));
      pos[n].y = 0.5 * pos[n].y + 0.5 * (fy - std::floor(fy));
    }
  }
  return pos;
}

}  // namespace

std::string render_model(const DimerModel& m, const RenderOptions& opt) {
  auto pos = layout(m);
  const double S = 240.0, pad = 20.0;
  auto px = [&](double x) { return pad + S * x; };
  auto py = [&](double y) { return pad + S * (1.0 - y); };
  std::ostringstream out;
  std::vector<char> hl(m.edges.size(), 0);
  for (int e : opt.highlight_edges)
    if (e >= 0 && e < static_cast<int>(m.edges.size())) hl[e] = 1;
  if (opt.tikz) {
    out << "% dimer model, fundamental domain [0,1)^2\n";
    out << "\\begin{tikzpicture}[scale=4]\n";
    out << "\\draw[thick] (0,0) rectangle (1,1);\n";
    for (size_t e = 0; e < m.edges.size(); ++e) {
      const auto& ed = m.edges[e];
      XY b = pos[ed.black];
      XY w{pos[ed.white].x + ed.offset.x, pos[ed.white].y + ed.offset.y};
      std::string style = hl[e] ? "line width=1.6pt, red" : "line width=0.8pt";
      out << "\\draw[" << style << "] (" << num(b.x) << "," << num(b.y)
          << ") -- (" << num(w.x) << "," << num(w.y) << ");\n";
      if (!ed.offset.is_zero()) {
        XY b2{b.x - ed.offset.x, b.y - ed.offset.y};
        out << "\\draw[" << style << "] (" << num(b2.x) << "," << num(b2.y)
            << ") -- (" << num(pos[ed.white].x) << "," << num(pos[ed.white].y)
            << ");\n";
      }
    }
    for (size_t n = 0; n < m.nodes.size(); ++n)
      out << "\\filldraw[fill=" << (m.nodes[n].color == Color::Black ? "black" : "white")
          << ", draw=black] (" << num(pos[n].x) << "," << num(pos[n].y)
          << ") circle (0.025);\n";
    out << "\\end{tikzpicture}\n";
    return out.str();
  }
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(S + 2 * pad)
      << "\" height=\"" << num(S + 2 * pad) << "\">\n";
  out << "<rect x=\"" << num(pad) << "\" y=\"" << num(pad) << "\" width=\""
      << num(S) << "\" height=\"" << num(S)
      << "\" fill=\"none\" stroke=\"#888\"/>\n";
  for (size_t e = 0; e < m.edges.size(); ++e) {
    const auto& ed = m.edges[e];
    XY b = pos[ed.black];
    XY w{pos[ed.white].x + ed.offset.x, pos[ed.white].y + ed.offset.y};
    std::string cls = hl[e] ? "highlight" : "edge";
    std::string style = hl[e] ? "stroke=\"#d22\" stroke-width=\"3.5\""
                              : "stroke=\"#222\" stroke-width=\"1.5\"";
    out << "<line class=\"" << cls << "\" x1=\"" << num(px(b.x)) << "\" y1=\""
        << num(py(b.y)) << "\" x2=\"" << num(px(w.x)) << "\" y2=\""
        << num(py(w.y)) << "\" " << style << "/>\n";
    if (!ed.offset.is_zero()) {
      XY b2{b.x - ed.offset.x, b.y - ed.offset.y};
      out << "<line class=\"" << cls << "-wrap\" x1=\"" << num(px(b2.x))
          << "\" y1=\"" << num(py(b2.y)) << "\" x2=\"" << num(px(pos[ed.white].x))
          << "\" y2=\"" << num(py(pos[ed.white].y)) << "\" " << style << "/>\n";
    }
  }
  for (size_t n = 0; n < m.nodes.size(); ++n) {
    bool black = m.nodes[n].color == Color::Black;
    out << "<circle class=\"node\" cx=\"" << num(px(pos[n].x)) << "\" cy=\""
        << num(py(pos[n].y)) << "\" r=\"5\" fill=\"" << (black ? "#000" : "#fff")
        << "\" stroke=\"#000\"/>\n";
  }
  out << "</svg>\n";
  return out.str();
}

std::string render_polygon(const LatticePolygon& P, bool tikz) {
  i64 xmin = 0, xmax = 0, ymin = 0, ymax = 0;
  for (IVec v : P.vertices) {
    xmin = std::min(xmin, v.x);
    xmax = std::max(xmax, v.x);
    ymin = std::min(ymin, v.y);
    ymax = std::max(ymax, v.y);
  }
  xmin -= 1; ymin -= 1; xmax += 1; ymax += 1;
  auto pts = polygon_lattice_points(P);
  std::ostringstream out;
  if (tikz) {
    out << "\\begin{tikzpicture}\n";
    out << "\\draw[step=1, gray!50] (" << xmin << "," << ymin << ") grid (" << xmax
        << "," << ymax << ");\n";
    out << "\\draw[line width=1.2pt] ";
    for (size_t i = 0; i < P.vertices.size(); ++i)
      out << "(" << P.vertices[i].x << "," << P.vertices[i].y << ") -- ";
    out << "cycle;\n";
    for (IVec q : pts)
      out << "\\filldraw (" << q.x << "," << q.y << ") circle (0.07);\n";
    out << "\\end{tikzpicture}\n";
    return out.str();
  }
  const double S = 40.0, pad = 20.0;
  auto px = [&](double x) { return pad + S * (x - xmin); };
  auto py = [&](double y) { return pad + S * (ymax - y); };
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\""
      << num(px(xmax) + pad) << "\" height=\"" << num(py(ymin) + pad) << "\">\n";
  for (i64 x = xmin; x <= xmax; ++x)
    out << "<line class=\"grid\" x1=\"" << num(px(x)) << "\" y1=\"" << num(py(ymin))
        << "\" x2=\"" << num(px(x)) << "\" y2=\"" << num(py(ymax))
        << "\" stroke=\"#ddd\"/>\n";
  for (i64 y = ymin; y <= ymax; ++y)
    out << "<line class=\"grid\" x1=\"" << num(px(xmin)) << "\" y1=\"" << num(py(y))
        << "\" x2=\"" << num(px(xmax)) << "\" y2=\"" << num(py(y))
        << "\" stroke=\"#ddd\"/>\n";
  out << "<polygon class=\"poly\" points=\"";
  for (size_t i = 0; i < P.vertices.size(); ++i) {
    if (i) out << " ";
    out << num(px(P.vertices[i].x)) << "," << num(py(P.vertices[i].y));
  }
  out << "\" fill=\"none\" stroke=\"#000\" stroke-width=\"2.5\"/>\n";
  for (IVec q : pts)
    out << "<circle class=\"lattice-pt\" cx=\"" << num(px(q.x)) << "\" cy=\""
        << num(py(q.y)) << "\" r=\"3.5\" fill=\"#000\"/>\n";
  out << "<!-- vertices: " << P.vertices.size() << " -->\n";
  out << "</svg>\n";
  return out.str();
}

}  // namespace dimerlab
