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

#ifndef DIMERLAB_FACE_MUTATION_HPP
#define DIMERLAB_FACE_MUTATION_HPP

#include "dimerlab/dimer.hpp"

namespace dimerlab {

// Local rewiring of a quadrangle face whose variant-colored boundary nodes
// are 3-valent. Inverse of itself up to join/split normalization.
DimerModel spider_move(const DimerModel& m, int face_index, Color variant);

struct FaceMutationResult {
  DimerModel model;
  // Old face index -> new face index (or -1 when a face disappears). The
  // mutated face maps to the rewired central quadrangle.
  std::vector<int> face_map;
};

// Mutation of the dimer model at a quadrangle face: split the variant-color
// boundary nodes 3-valent, apply the spider move, join the 2-valent leftovers.
FaceMutationResult mutate_face(const DimerModel& m, int face_index,
                               Color variant = Color::Black);

}  // namespace dimerlab

#endif  // DIMERLAB_FACE_MUTATION_HPP
