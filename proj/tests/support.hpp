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

#ifndef DIMERLAB_TESTS_SUPPORT_HPP
#define DIMERLAB_TESTS_SUPPORT_HPP

#include <string>
#include <vector>

#include "dimerlab/deformation.hpp"
#include "dimerlab/io.hpp"
#include "dimerlab/matchings.hpp"
#include "dimerlab/zigzag.hpp"

namespace dimerlab::test {

std::string fixture_path(const std::string& name);
DimerModel load_fixture(const std::string& name);

// The Figure-2-style 6-node model, its matchings and polygon are the shared
// calibration baseline of the whole suite.
DimerModel gamma_4b();

// Minimal hexagonal model: one black, one white, three edges.
DimerModel honeycomb(int nx = 1, int ny = 1);

// The 40-node square-grid-like model of the large worked example.
DimerModel appendix_b_model();

// The two deformed models of the large example, transcribed from their
// drawings (A from the first removal schedule, B from the second).
DimerModel appendix_b_gamma_a();
DimerModel appendix_b_gamma_b();

// Face of `m` whose cover polygon contains the drawn point (x, y) in
// fundamental-domain coordinates; -1 if none.
int face_at_point(const DimerModel& m, Rat x, Rat y);

// The isoradial 8-node model whose zig deformation is consistent but not
// isoradial.
DimerModel example_4_8_model();

// The two 5x5-domain models related by a mutation at face 0.
DimerModel example_a4_left();
DimerModel example_a4_mu0();

LatticePolygon poly(std::initializer_list<std::pair<i64, i64>> vs);

PerfectMatching pm_by_names(const DimerModel& m, const std::vector<std::string>& names);

// Deterministic xorshift RNG for the property suites.
struct Rng {
  unsigned long long s;
  explicit Rng(unsigned long long seed) : s(seed ? seed : 0x9e3779b97f4a7c15ULL) {}
  unsigned long long next() {
    s ^= s << 13;
    s ^= s >> 7;
    s ^= s << 17;
    return s;
  }
  i64 uniform(i64 lo, i64 hi) {  // inclusive
    return lo + static_cast<i64>(next() % static_cast<unsigned long long>(hi - lo + 1));
  }
};

IMat random_unimodular(Rng& rng, int steps = 8);

// Random split/join/gauge perturbation that preserves all observables.
DimerModel random_gauge_perturbation(const DimerModel& m, Rng& rng, int moves = 4);

int path_index_by_slope(const std::vector<ZigzagPath>& paths, IVec slope,
                        int which = 0);

}  // namespace dimerlab::test

#endif  // DIMERLAB_TESTS_SUPPORT_HPP
