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
#include <vector>

#include "antimagic/graph.hpp"
#include "antimagic/orientation.hpp"

namespace antimagic {

// One greedy step: the frontier arc with the smallest label that touches an
// unlabeled good path, and the batch of labels that path received.
struct PropagationStep {
  std::int32_t component = 0;
  Label frontier_label = 0;
  std::int32_t path = 0;  // l of P_l
  Label first_label = 0;
  std::int32_t arc_count = 0;
};

// A frontier arc that bordered two unlabeled good paths at once.
struct FrontierTie {
  std::int32_t component = 0;
  Label frontier_label = 0;
  std::int32_t chosen_path = 0;
  std::int32_t other_path = 0;
};

struct LabelingResult {
  OrientationAndLabeling graph_labeling;
  std::vector<std::vector<Label>> arc_labels;  // [component][arc]
  std::vector<PropagationStep> steps;
  std::vector<FrontierTie> ties;
};

// Smallest-unused allocation from a contiguous label range [first, last].
class LabelPool {
 public:
  LabelPool(Label first, Label last);

  void take(Label label);
  // The k smallest unused labels, ascending; they are marked used.
  std::vector<Label> take_smallest(std::int32_t k);
  bool used(Label label) const;
  // True iff the used labels form a prefix first..first+u-1.
  bool used_is_prefix() const;

 private:
  Label first_;
  Label last_;
  std::vector<bool> used_;
  std::size_t cursor_ = 0;
  std::size_t used_count_ = 0;
};

// Labels the oriented expanded cycles, which must follow the decomposition's
// order (odd components first). Odd components share the pool [N_s]: closing
// arc of component i gets i, P_1 gets s+2i-1 and s+2i, and the rest is filled
// by greedy frontier propagation. Even components are then labeled one at a
// time from {N_s+1, ..., N_t} the same way, starting from N_{i-1}+1..N_{i-1}+3.
LabelingResult label_all(const Graph& g, std::span<const OrientedCycle> cycles,
                         const ComponentDecomposition& decomposition);

// The two labels on the arcs at each real position, component by component
// and v_1..v_n within a component.
std::vector<SeenPair> seen_pairs(std::span<const OrientedCycle> cycles,
                                 const LabelingResult& labeling);

}  // namespace antimagic
