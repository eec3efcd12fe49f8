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

#include <span>
#include <vector>

#include "antimagic/graph.hpp"

namespace antimagic {

// Closed walk w_0, ..., w_m with w_0 == w_m. Step k traverses edge
// edge_of_step[k] = {w_k, w_{k+1}}.
struct ClosedWalk {
  std::vector<Vertex> visits;
  std::vector<EdgeIndex> edge_of_step;

  std::int32_t length() const noexcept { return static_cast<std::int32_t>(edge_of_step.size()); }
};

// Euler tour of the connected component spanned by `component` (Hierholzer).
// Starts at the smallest vertex, always leaves along the smallest-indexed
// unused edge, and splices sub-tours at the earliest vertex that still has
// unused edges. Throws kOddDegree or kDisconnected when no tour exists.
ClosedWalk euler_tour(const Graph& g, std::span<const Vertex> component);

}  // namespace antimagic
