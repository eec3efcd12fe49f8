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
#include <vector>

#include "antimagic/expansion.hpp"

namespace antimagic {

enum class Parity { kOdd, kEven };

// Per-arc direction of an expanded cycle: 1 when arc k runs from position k to
// position k+1, 0 when it runs backwards.
using ArcDirections = std::vector<std::uint8_t>;

// The closing arc runs v_n -> v_1. On an odd component P_l runs v_l -> v_{l+1}
// for odd l and v_{l+1} -> v_l for even l; on an even component the other way
// round. Afterwards every real vertex other than v_1 of an odd component has
// outdegree 0 or 2, and v_1 has outdegree 1.
ArcDirections orient(const ExpandedCycle& ec, Parity parity);

struct OrientedCycle {
  ExpandedCycle cycle;
  ArcDirections along;
  Parity parity = Parity::kOdd;

  std::int32_t tail(std::int32_t arc) const {
    return along[static_cast<std::size_t>(arc)] ? arc : cycle.next_position(arc);
  }
  std::int32_t head(std::int32_t arc) const {
    return along[static_cast<std::size_t>(arc)] ? cycle.next_position(arc) : arc;
  }
  // Outdegree of a cycle position (0, 1 or 2).
  std::int32_t out_degree(std::int32_t position) const;
};

}  // namespace antimagic
