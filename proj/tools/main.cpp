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

#include <cstdlib>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "json.hpp"

#include "dimerlab/deformation.hpp"
#include "dimerlab/face_mutation.hpp"
#include "dimerlab/io.hpp"
#include "dimerlab/render.hpp"
#include "dimerlab/verify.hpp"

using json = nlohmann::ordered_json;
using namespace dimerlab;

namespace {

json polygon_json(const LatticePolygon& P) {
  json j;
  j["vertices"] = json::array();
  for (IVec v : P.vertices) j["vertices"].push_back({v.x, v.y});
  return j;
}

LatticePolygon polygon_from_json(const json& j) {
  LatticePolygon P;
  for (const auto& v : j.at("vertices"))
    P.vertices.push_back({v.at(0).get<i64>(), v.at(1).get<i64>()});
  return P;
}

json slopes_json(const SlopeMultiset& S) {
  json j;
  j["slopes"] = json::array();
  for (auto& [v, mult] : S.entries) j["slopes"].push_back({v.x, v.y, mult});
  return j;
}

json read_json_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open " + path);
  json j;
  f >> j;
  return j;
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot open " + path + " for writing");
  f << text;
}

AssignmentSpec load_assignment(const std::string& spec) {
  AssignmentSpec a;
  if (spec.empty() || spec == "auto") return a;
  a.auto_round_robin = false;
  json j = read_json_file(spec);
  for (const auto& lst : j.at("anchors")) {
    std::vector<std::string> names;
    for (const auto& e : lst) names.push_back(e.get<std::string>());
    a.anchor_edges.push_back(names);
  }
  return a;
}

RemovalSchedule load_schedule(const std::string& spec) {
  RemovalSchedule s;
  if (spec.empty() || spec == "auto") return s;
  s.automatic = false;
  json j = read_json_file(spec);
  for (const auto& pr : j.at("pairs")) {
    auto sel = [](const json& e) {
      EdgeSelector es;
      es.white = e.at("white").get<std::string>();
      es.black = e.at("black").get<std::string>();
      if (e.contains("dx"))
        es.offset = IVec{e.at("dx").get<i64>(), e.at("dy").get<i64>()};
      return es;
    };
    s.pairs.push_back({sel(pr.at(0)), sel(pr.at(1))});
  }
  return s;
}

std::optional<PerfectMatching> load_p0(const DimerModel& m, const std::string& spec) {
  if (spec.empty()) return std::nullopt;
  PerfectMatching P;
  std::string cur;
  for (char c : spec + ",") {
    if (c == ',') {
      if (!cur.empty()) {
        int e = m.edge_by_name(cur);
        if (e < 0) throw std::domain_error("unknown edge " + cur + " in --p0");
        P.edges.push_back(e);
        cur.clear();
      }
    } else {
      cur += c;
    }
  }
  std::sort(P.edges.begin(), P.edges.end());
  return P;
}

json model_summary(const DimerModel& m) {
  json j;
  j["nodes"] = m.nodes.size();
  j["edges"] = m.edges.size();
  j["faces"] = faces(m).size();
  return j;
}

int run(int argc, char** argv) {
  CLI::App app{"dimer models on the torus: matchings, zigzag paths, "
               "deformations and polygon mutations"};
  app.require_subcommand(1);
  if (const char* seed = std::getenv("DIMERLAB_SEED")) (void)seed;  // reserved

  std::string model_path, out_path, pre_path, polygon_path, p0_spec;
  std::string assignment_spec = "auto", schedule_spec = "auto", format = "svg";
  std::string side_str = "zig", variant_str = "black", family_spec;
  int edge_index = 0, sign = 1, zigzag_id = 0, face_id = 0, highlight_pm = -1;
  int highlight_zz = -1;
  i64 rr = 1;
  bool shortcut = false, via_dual = false;

  auto add_model = [&](CLI::App* c) {
    c->add_option("--model", model_path, "input .dimer file")->required();
  };
  auto parse_family = [&]() {
    std::vector<int> fam;
    std::string cur;
    for (char c : family_spec + ",") {
      if (c == ',') {
        if (!cur.empty()) fam.push_back(std::stoi(cur));
        cur.clear();
      } else cur += c;
    }
    return fam;
  };

  auto* c_check = app.add_subcommand("check", "validate and classify a model");
  add_model(c_check);

  auto* c_pms = app.add_subcommand("pms", "enumerate perfect matchings");
  add_model(c_pms);
  c_pms->add_option("--p0", p0_spec, "reference matching as comma-separated edge ids");

  auto* c_poly = app.add_subcommand("pm-polygon", "perfect matching polygon");
  add_model(c_poly);
  c_poly->add_option("--p0", p0_spec, "reference matching as comma-separated edge ids");
  c_poly->add_option("--svg", out_path, "also write an SVG rendering");

  auto* c_zz = app.add_subcommand("zigzags", "list zigzag paths");
  add_model(c_zz);

  auto* c_def = app.add_subcommand("deform", "deformation at zig or zag");
  add_model(c_def);
  c_def->add_option("--side", side_str, "zig|zag")->check(CLI::IsMember({"zig", "zag"}));
  c_def->add_option("--zigzag", zigzag_id, "index of the chosen type-I path")->required();
  c_def->add_option("--r", rr, "number of family members")->required();
  c_def->add_option("--family", family_spec, "comma-separated path indices");
  c_def->add_option("--assignment", assignment_spec, "auto or a JSON file");
  c_def->add_option("--schedule", schedule_spec, "auto or a JSON file");
  c_def->add_flag("--shortcut", shortcut, "skip bypasses and restoration");
  c_def->add_option("--out", out_path, "write the deformed model here");
  c_def->add_option("--pre", pre_path, "write the pre-restoration model here");

  auto* c_mp = app.add_subcommand("mutate-polygon", "combinatorial mutation");
  c_mp->add_option("--polygon", polygon_path, "polygon JSON file")->required();
  c_mp->add_option("--edge", edge_index, "edge index")->required();
  c_mp->add_option("--sign", sign, "+1 or -1");
  c_mp->add_flag("--via-dual", via_dual, "use the dual-route construction");

  auto* c_md = app.add_subcommand("mutate-dimer", "mutation at a quadrangle face");
  add_model(c_md);
  c_md->add_option("--face", face_id, "face index")->required();
  c_md->add_option("--variant", variant_str, "black|white")
      ->check(CLI::IsMember({"black", "white"}));
  c_md->add_option("--out", out_path, "write the mutated model here");

  auto* c_ver = app.add_subcommand("verify", "deformation vs mutation of the PM polygon");
  add_model(c_ver);
  c_ver->add_option("--side", side_str, "zig|zag")->check(CLI::IsMember({"zig", "zag"}));
  c_ver->add_option("--zigzag", zigzag_id, "index of the chosen type-I path")->required();
  c_ver->add_option("--r", rr, "number of family members")->required();
  c_ver->add_option("--family", family_spec, "comma-separated path indices");
  c_ver->add_option("--assignment", assignment_spec, "auto or a JSON file");
  c_ver->add_option("--schedule", schedule_spec, "auto or a JSON file");
  c_ver->add_option("--p0", p0_spec, "reference matching (strict origin)");

  auto* c_r = app.add_subcommand("render", "render a model or polygon");
  c_r->add_option("--model", model_path, "input .dimer file");
  c_r->add_option("--polygon", polygon_path, "polygon JSON file");
  c_r->add_option("--highlight-pm", highlight_pm, "highlight the k-th matching");
  c_r->add_option("--highlight-zigzag", highlight_zz, "highlight the k-th zigzag path");
  c_r->add_option("--format", format, "svg|tikz")->check(CLI::IsMember({"svg", "tikz"}));
  c_r->add_option("--out", out_path, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;  // usage errors exit with 2
  }

  if (c_check->parsed()) {
    DimerModel m = parse_dimer(model_path);
    auto rep = validate(m);
    json j;
    j["ok"] = rep.ok;
    j["faces"] = rep.num_faces;
    j["euler_characteristic"] = rep.euler_characteristic;
    j["connected"] = rep.connected;
    j["warnings"] = rep.warnings;
    j["consistent"] = is_consistent(m);
    j["properly_ordered"] = is_properly_ordered(m);
    j["isoradial"] = is_isoradial(m);
    std::cout << j.dump(2) << "\n";
    return rep.ok ? 0 : 1;
  }
  if (c_pms->parsed()) {
    DimerModel m = parse_dimer(model_path);
    auto P0 = load_p0(m, p0_spec);
    auto pms = enumerate_pms(m);
    PerfectMatching ref = P0 ? *P0 : (pms.empty() ? PerfectMatching{} : pms[0]);
    json j;
    j["count"] = pms.size();
    j["matchings"] = json::array();
    for (const auto& P : pms) {
      json e;
      e["edges"] = json::array();
      for (int id : P.edges) e["edges"].push_back(m.edges[id].name);
      IVec h = height_change(m, P, ref);
      e["height_change"] = {h.x, h.y};
      j["matchings"].push_back(e);
    }
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  if (c_poly->parsed()) {
    DimerModel m = parse_dimer(model_path);
    auto res = pm_polygon(m, load_p0(m, p0_spec));
    json j = polygon_json(res.polygon);
    j["points"] = json::array();
    for (const auto& pi : res.points) {
      json p;
      p["point"] = {pi.point.x, pi.point.y};
      p["count"] = pi.count;
      p["class"] = pi.cls == PmClass::Corner     ? "corner"
                   : pi.cls == PmClass::Boundary ? "boundary"
                                                 : "internal";
      j["points"].push_back(p);
    }
    j["edge_normals"] = slopes_json(edge_normals(res.polygon))["slopes"];
    std::cout << j.dump(2) << "\n";
    if (!out_path.empty()) write_text(out_path, render_polygon(res.polygon, false));
    return 0;
  }
  if (c_zz->parsed()) {
    DimerModel m = parse_dimer(model_path);
    auto paths = zigzag_paths(m);
    json j;
    j["paths"] = json::array();
    bool reduced = true;
    for (size_t n = 0; n < m.nodes.size(); ++n)
      if (m.degree(static_cast<int>(n)) == 2) reduced = false;
    bool consistent = is_consistent(m);
    for (size_t k = 0; k < paths.size(); ++k) {
      json p;
      p["slope"] = {paths[k].slope.x, paths[k].slope.y};
      p["length"] = paths[k].length();
      if (reduced && consistent)
        p["type"] = classify_type(m, paths, static_cast<int>(k)) == ZigzagType::TypeI
                        ? "I" : "II";
      j["paths"].push_back(p);
    }
    j["consistent"] = consistent;
    j["properly_ordered"] = is_properly_ordered(m);
    j["isoradial"] = is_isoradial(m);
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  if (c_def->parsed()) {
    DimerModel m = parse_dimer(model_path);
    DeformSide side = side_str == "zig" ? DeformSide::Zig : DeformSide::Zag;
    auto data = build_deformation_data(m, zigzag_id, rr, parse_family(), side,
                                       load_assignment(assignment_spec));
    auto res = deform(m, data, load_schedule(schedule_spec), shortcut);
    json j;
    j["side"] = side_str;
    j["n"] = data.n;
    j["r"] = data.r;
    j["h"] = data.h;
    j["weights"] = data.weights;
    j["restoration_steps"] = res.restoration_steps;
    j["pre_restoration"] = model_summary(res.pre_restoration);
    j["result"] = model_summary(res.result);
    auto rep = slope_transform_report(m, data, res.result);
    j["slope_transform_ok"] = rep.ok;
    j["pm_polygon"] = polygon_json(pm_polygon(res.result).polygon);
    std::cout << j.dump(2) << "\n";
    if (!out_path.empty()) write_dimer(res.result, out_path);
    if (!pre_path.empty()) write_dimer(res.pre_restoration, pre_path);
    return 0;
  }
  if (c_mp->parsed()) {
    LatticePolygon P = polygon_from_json(read_json_file(polygon_path));
    P = convex_hull(P.vertices);
    auto ctx = make_context(P, edge_index, sign);
    if (!admits_mutation(ctx)) throw std::domain_error("mutation not admissible");
    LatticePolygon Q = via_dual ? mutate_via_dual(ctx) : mutate(ctx);
    json j = polygon_json(Q);
    j["w"] = {ctx.w.x, ctx.w.y};
    j["u_E"] = {ctx.u_E.x, ctx.u_E.y};
    j["h_min"] = ctx.h_min;
    j["h_max"] = ctx.h_max;
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  if (c_md->parsed()) {
    DimerModel m = parse_dimer(model_path);
    Color variant = variant_str == "black" ? Color::Black : Color::White;
    auto res = mutate_face(m, face_id, variant);
    json j;
    j["result"] = model_summary(res.model);
    j["face_map"] = res.face_map;
    std::cout << j.dump(2) << "\n";
    if (!out_path.empty()) write_dimer(res.model, out_path);
    return 0;
  }
  if (c_ver->parsed()) {
    DimerModel m = parse_dimer(model_path);
    DeformSide side = side_str == "zig" ? DeformSide::Zig : DeformSide::Zag;
    auto rep = verify_theorem(m, zigzag_id, side, rr, parse_family(),
                              load_assignment(assignment_spec),
                              load_schedule(schedule_spec), load_p0(m, p0_spec));
    json j;
    j["original_polygon"] = polygon_json(rep.original_anchored);
    j["w"] = {rep.w.x, rep.w.y};
    j["u_E"] = {rep.u_E.x, rep.u_E.y};
    j["edge_index"] = rep.edge_index;
    j["h_min"] = rep.h_min;
    j["h_max"] = rep.h_max;
    j["mutated_polygon"] = polygon_json(rep.mutated);
    j["dual_route_checked"] = rep.dual_checked;
    j["dual_route_matches"] = rep.dual_matches;
    j["deformed"] = {{"nodes", rep.deformed_nodes}, {"edges", rep.deformed_edges}};
    j["restoration_steps"] = rep.restoration_steps;
    j["deformed_polygon"] = polygon_json(rep.deformed_anchored);
    j["exact_equal"] = rep.exact_equal;
    j["gl2z_equal"] = rep.gl2z_equal;
    j["verdict"] = rep.pass ? "pass" : "fail";
    std::cout << j.dump(2) << "\n";
    return rep.pass ? 0 : 1;
  }
  if (c_r->parsed()) {
    if (!polygon_path.empty()) {
      LatticePolygon P = polygon_from_json(read_json_file(polygon_path));
      P = convex_hull(P.vertices);
      write_text(out_path, render_polygon(P, format == "tikz"));
      return 0;
    }
    if (model_path.empty()) throw std::domain_error("render needs --model or --polygon");
    DimerModel m = parse_dimer(model_path);
    RenderOptions opt;
    opt.tikz = format == "tikz";
    if (highlight_pm >= 0) {
      auto pms = enumerate_pms(m);
      if (highlight_pm >= static_cast<int>(pms.size()))
        throw std::domain_error("matching index out of range");
      opt.highlight_edges = pms[highlight_pm].edges;
    }
    if (highlight_zz >= 0) {
      auto paths = zigzag_paths(m);
      if (highlight_zz >= static_cast<int>(paths.size()))
        throw std::domain_error("zigzag index out of range");
      for (const Dart& d : paths[highlight_zz].darts)
        opt.highlight_edges.push_back(d.edge);
    }
    write_text(out_path, render_model(m, opt));
    return 0;
  }
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const CLI::ParseError&) {
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
