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

#ifndef DIMERLAB_RENDER_HPP
#define DIMERLAB_RENDER_HPP

#include <string>
#include <vector>

#include "dimerlab/dimer.hpp"
#include "dimerlab/lattice.hpp"

namespace dimerlab {

struct RenderOptions {
  std::vector<int> highlight_edges;  // drawn thick red (e.g. a matching)
  bool tikz = false;
};

// Deterministic SVG (or TikZ) of the model in its fundamental domain.
// Position-less models get a best-effort barycentric layout that never
// affects combinatorial results.
std::string render_model(const DimerModel& m, const RenderOptions& opt = {});

std::string render_polygon(const LatticePolygon& P, bool tikz = false);

}  // namespace dimerlab

#endif  // DIMERLAB_RENDER_HPP
