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

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "dimerlab/deformation.hpp"
#include "dimerlab/face_mutation.hpp"
#include "dimerlab/io.hpp"
#include "dimerlab/render.hpp"
#include "dimerlab/verify.hpp"

namespace py = pybind11;
using namespace dimerlab;

namespace {

std::vector<std::pair<i64, i64>> poly_out(const LatticePolygon& P) {
  std::vector<std::pair<i64, i64>> out;
  for (IVec v : P.vertices) out.push_back({v.x, v.y});
  return out;
}

LatticePolygon poly_in(const std::vector<std::pair<i64, i64>>& vs) {
  std::vector<IVec> pts;
  for (auto& [x, y] : vs) pts.push_back({x, y});
  return convex_hull(pts);
}

}  // namespace

PYBIND11_MODULE(_dimerlab, mod) {
  mod.doc() = "dimer models on the torus: matchings, zigzag paths, "
              "deformations and polygon mutations";

  py::enum_<DeformSide>(mod, "Side")
      .value("zig", DeformSide::Zig)
      .value("zag", DeformSide::Zag);

  py::class_<DimerModel>(mod, "DimerModel")
      .def_static("parse", [](const std::string& text) {
        return parse_dimer_text(text);
      })
      .def_static("load", [](const std::string& path) { return parse_dimer(path); })
      .def("write", [](const DimerModel& m) { return write_dimer_text(m); })
      .def("save", [](const DimerModel& m, const std::string& p) { write_dimer(m, p); })
      .def_property_readonly("num_nodes",
                             [](const DimerModel& m) { return m.nodes.size(); })
      .def_property_readonly("num_edges",
                             [](const DimerModel& m) { return m.edges.size(); })
      .def("num_faces", [](const DimerModel& m) { return faces(m).size(); })
      .def("validate_ok", [](const DimerModel& m) { return validate(m).ok; })
      .def("is_consistent", [](const DimerModel& m) { return is_consistent(m); })
      .def("is_properly_ordered",
           [](const DimerModel& m) { return is_properly_ordered(m); })
      .def("is_isoradial", [](const DimerModel& m) { return is_isoradial(m); })
      .def("reduce", [](const DimerModel& m) { return reduce(m); })
      .def("isomorphic_to",
           [](const DimerModel& a, const DimerModel& b) { return isomorphic(a, b); })
      .def("num_matchings",
           [](const DimerModel& m) { return enumerate_pms(m).size(); })
      .def("pm_polygon",
           [](const DimerModel& m) { return poly_out(pm_polygon(m).polygon); })
      .def("zigzags",
           [](const DimerModel& m) {
             auto paths = zigzag_paths(m);
             std::vector<std::tuple<i64, i64, i64>> out;
             for (auto& z : paths)
               out.push_back({z.slope.x, z.slope.y, z.length()});
             return out;
           })
      .def("render_svg", [](const DimerModel& m) { return render_model(m); })
      .def("deform",
           [](const DimerModel& m, DeformSide side, int zigzag, i64 r,
              std::vector<int> family, bool shortcut) {
             auto data = build_deformation_data(m, zigzag, r, family, side,
                                                AssignmentSpec{});
             return deform(m, data, RemovalSchedule{}, shortcut).result;
           },
           py::arg("side"), py::arg("zigzag"), py::arg("r"),
           py::arg("family") = std::vector<int>{}, py::arg("shortcut") = false)
      .def("mutate_face",
           [](const DimerModel& m, int face) {
             return mutate_face(m, face, Color::Black).model;
           });

  mod.def("mutate_polygon",
          [](const std::vector<std::pair<i64, i64>>& P, int edge, int sign,
             bool via_dual) {
            auto ctx = make_context(poly_in(P), edge, sign);
            return poly_out(via_dual ? mutate_via_dual(ctx) : mutate(ctx));
          },
          py::arg("polygon"), py::arg("edge"), py::arg("sign") = 1,
          py::arg("via_dual") = false);
  mod.def("canonical_form", [](const std::vector<std::pair<i64, i64>>& P) {
    return poly_out(gl2z_canonical_form(poly_in(P)));
  });
  mod.def("verify_theorem",
          [](const DimerModel& m, int zigzag, DeformSide side, i64 r,
             std::vector<int> family) {
            auto rep = verify_theorem(m, zigzag, side, r, family,
                                      AssignmentSpec{}, RemovalSchedule{});
            py::dict d;
            d["pass"] = rep.pass;
            d["exact_equal"] = rep.exact_equal;
            d["gl2z_equal"] = rep.gl2z_equal;
            d["mutated_polygon"] = poly_out(rep.mutated);
            d["deformed_polygon"] = poly_out(rep.deformed_anchored);
            return d;
          },
          py::arg("model"), py::arg("zigzag"), py::arg("side"), py::arg("r"),
          py::arg("family") = std::vector<int>{});
}
