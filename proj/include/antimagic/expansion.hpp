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

#include "antimagic/euler_tour.hpp"
#include "antimagic/graph.hpp"

namespace antimagic {

// Four consecutive cyclic positions a, b, c, d of an Euler tour: a, b and d
// carry real copies, c an imaginary one.
struct Anchor {
  std::int32_t a = 0;
  std::int32_t b = 0;
  std::int32_t c = 0;
  std::int32_t d = 0;

  friend bool operator==(const Anchor&, const Anchor&) = default;
};

// Arcs first_arc, first_arc+1, ... (cyclic), count of them, running from the
// real position of v_l to the real position of v_{l+1} in position order.
struct GoodPath {
  std::int32_t first_arc = 0;
  std::int32_t arc_count = 0;
};

// An Euler tour viewed as a simple cycle of positions. Arc k joins position k
// to position k+1 (mod length) and stands for graph edge arc_edge[k]. Every
// original vertex has exactly one real position; the rest are imaginary.
struct ExpandedCycle {
  std::vector<Vertex> positions;
  std::vector<EdgeIndex> arc_edge;
  std::vector<std::uint8_t> real;
  Anchor anchor;
  std::int32_t half_degree = 0;  // d: each vertex occupies d positions

  // real_positions[l-1] is the position of v_l; v_1 = anchor.b, v_2 = anchor.d
  // and v_n = anchor.a.
  std::vector<std::int32_t> real_positions;
  // good_paths[l-1] is P_l, between v_l and v_{l+1}, for l = 1..n-1.
  std::vector<GoodPath> good_paths;
  // The single arc from v_n to v_1.
  std::int32_t closing_arc = 0;

  std::int32_t length() const noexcept { return static_cast<std::int32_t>(positions.size()); }
  std::int32_t real_count() const noexcept {
    return static_cast<std::int32_t>(real_positions.size());
  }
  std::int32_t next_position(std::int32_t p) const { return p + 1 == length() ? 0 : p + 1; }
  std::int32_t prev_position(std::int32_t p) const { return p == 0 ? length() - 1 : p - 1; }
};

// Chooses the anchor from the first five tour positions x_1..x_5: positions
// 1..4 when x_1 != x_4, otherwise positions 2..5 (x_1 x_2 x_3 is a triangle).
// Throws kUnsupportedDegree unless the tour visits every vertex d >= 2 times.
Anchor select_anchor(const ClosedWalk& walk);

// Marks the anchor's a, b, d real and, scanning forward from b, gives every
// other vertex its first occurrence outside the anchor as its real copy.
// Derives the v_l naming and the good-path decomposition.
ExpandedCycle expand(const ClosedWalk& walk, const Anchor& anchor);

}  // namespace antimagic
