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

#ifndef DIMERLAB_IO_HPP
#define DIMERLAB_IO_HPP

#include <string>

#include "dimerlab/dimer.hpp"

namespace dimerlab {

// Parse / serialization errors carry a 1-based line number.
struct ParseError : std::runtime_error {
  int line;
  ParseError(int l, const std::string& msg)
      : std::runtime_error("line " + std::to_string(l) + ": " + msg), line(l) {}
};

// Text format:
//   [nodes]     id color [x y]        (color: B|W, position rationals)
//   [edges]     id black_id white_id dx dy
//   [rotation]  node_id: e1 e2 ...    (counterclockwise)
// '#' starts a comment. The parsed model must pass validate().
DimerModel parse_dimer_text(const std::string& text);
DimerModel parse_dimer(const std::string& path);

std::string write_dimer_text(const DimerModel& m);
void write_dimer(const DimerModel& m, const std::string& path);

}  // namespace dimerlab

#endif  // DIMERLAB_IO_HPP
