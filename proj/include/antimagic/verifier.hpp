// Copyright 2026 The Antimagic Orientation Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "antimagic/graph.hpp"
#include "antimagic/labeling.hpp"
#include "antimagic/orientation.hpp"

namespace antimagic {

// Ground truth: vertex sums of g under ol, read only from g's arcs. Throws
// kNotBijective when the labels are not a bijection onto [m].
SumReport check_antimagic(const Graph& g, const OrientationAndLabeling& ol);

struct CheckItem {
  std::string name;
  bool pass = true;
  // Hard items must pass on every construction run inside the proven regime;
  // the rest are reported as advisory.
  bool hard = true;
  std::int64_t checked = 0;     // number of individual comparisons made
  std::string counterexample;   // first failure, empty on pass
};

struct ConstructionDiagnostics {
  std::int32_t odd_components = 0;  // s
  std::vector<CheckItem> items;

  bool hard_pass() const;
  bool all_pass() const;
  const CheckItem* find(std::string_view name) const;
};

// Sums of every position of the oriented, labeled expanded cycles
// (in-labels minus out-labels), indexed [component][position].
std::vector<std::vector<Sum>> cycle_position_sums(std::span<const OrientedCycle> cycles,
                                                  const LabelingResult& labeling);

// Checks the intermediate properties of a construction run:
//   first_vertex_sums   S(v^i_1) = -i-s+1 for the odd components
//   y_lower_bound       |S(u)| >= 3s+1 for the other real vertices of odd components
//   class_ordering      |S| strictly increases from the odd class through each
//                       even component in order
//   cross_component_ordering     x^i_{n_i-l+2} < x^j_{n_j-l+2} < x^i_l < x^j_l
//                       for odd i < j and 2 <= l <= ceil(n_i/2)
//   imaginary_copies    every imaginary position has sum exactly -1
//   real_copy_relation  S_G(u) = S_D(real copy of u) - (d-1)
//   outdegree_pattern   v^i_1 of an odd component has outdegree 1, every other
//                       real position 0 or 2, every imaginary one 1
//   frontier_uniqueness no propagation step saw two unlabeled paths (advisory)
// The first four are hard only when s >= 3.
ConstructionDiagnostics check_construction(const Graph& g, std::span<const OrientedCycle> cycles,
                                           const ComponentDecomposition& decomposition,
                                           const LabelingResult& labeling);

}  // namespace antimagic
