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

#include "antimagic/expansion.hpp"

#include <map>
#include <string>

#include "antimagic/error.hpp"

namespace antimagic {
namespace {

// Visit multiplicity shared by all vertices of the tour, or 0 if it varies.
std::int32_t uniform_multiplicity(const ClosedWalk& walk) {
  std::map<Vertex, std::int32_t> count;
  for (std::int32_t k = 0; k < walk.length(); ++k) ++count[walk.visits[static_cast<std::size_t>(k)]];
  if (count.empty()) return 0;
  const std::int32_t first = count.begin()->second;
  for (const auto& [v, c] : count) {
    if (c != first) return 0;
  }
  return first;
}

[[noreturn]] void fail(const std::string& what) {
  throw Error(ErrorCode::kInternal, "expanded cycle invariant violated: " + what);
}

}  // namespace

Anchor select_anchor(const ClosedWalk& walk) {
  const std::int32_t d = uniform_multiplicity(walk);
  if (d < 2) {
    throw Error(ErrorCode::kUnsupportedDegree,
                "anchor selection needs a 2d-regular component with d >= 2");
  }
  if (walk.length() < 5) fail("tour shorter than five positions");
  const auto x = [&](std::int32_t k) { return walk.visits[static_cast<std::size_t>(k - 1)]; };
  if (x(1) != x(4)) return Anchor{0, 1, 2, 3};
  return Anchor{1, 2, 3, 4};
}

ExpandedCycle expand(const ClosedWalk& walk, const Anchor& anchor) {
  const std::int32_t d = uniform_multiplicity(walk);
  if (d < 2) {
    throw Error(ErrorCode::kUnsupportedDegree, "expansion needs a 2d-regular component with d >= 2");
  }
  ExpandedCycle ec;
  ec.half_degree = d;
  ec.positions.assign(walk.visits.begin(), walk.visits.end() - 1);
  ec.arc_edge = walk.edge_of_step;
  const std::int32_t m = ec.length();
  ec.real.assign(static_cast<std::size_t>(m), 0);
  ec.anchor = anchor;

  const auto at = [&](std::int32_t p) { return ec.positions[static_cast<std::size_t>(p)]; };
  if (ec.next_position(anchor.a) != anchor.b || ec.next_position(anchor.b) != anchor.c ||
      ec.next_position(anchor.c) != anchor.d) {
    fail("anchor positions are not consecutive");
  }
  const Vertex va = at(anchor.a);
  const Vertex vb = at(anchor.b);
  const Vertex vc = at(anchor.c);
  const Vertex vd = at(anchor.d);
  if (va == vb || va == vd || vb == vd || vc == va || vc == vb || vc == vd) {
    fail("anchor vertices are not distinct");
  }

  std::map<Vertex, std::int32_t> real_at;
  for (std::int32_t p : {anchor.a, anchor.b, anchor.d}) {
    ec.real[static_cast<std::size_t>(p)] = 1;
    real_at[at(p)] = p;
  }
  for (std::int32_t k = 0, p = anchor.b; k < m; ++k, p = ec.next_position(p)) {
    if (p == anchor.c) continue;
    if (real_at.emplace(at(p), p).second) ec.real[static_cast<std::size_t>(p)] = 1;
  }

  for (std::int32_t k = 0, p = anchor.b; k < m; ++k, p = ec.next_position(p)) {
    if (ec.real[static_cast<std::size_t>(p)]) ec.real_positions.push_back(p);
  }
  const std::int32_t n = ec.real_count();
  if (static_cast<std::size_t>(n) != real_at.size()) fail("real copy count mismatch");
  if (n * d != m) fail("imaginary count is not (d-1)n");
  if (ec.real_positions[0] != anchor.b || ec.real_positions[1] != anchor.d ||
      ec.real_positions[static_cast<std::size_t>(n - 1)] != anchor.a) {
    fail("anchor does not map to v_1, v_2, v_n");
  }

  ec.closing_arc = anchor.a;
  for (std::int32_t l = 1; l < n; ++l) {
    const std::int32_t from = ec.real_positions[static_cast<std::size_t>(l - 1)];
    const std::int32_t to = ec.real_positions[static_cast<std::size_t>(l)];
    ec.good_paths.push_back({from, (to - from + m) % m});
  }
  if (ec.good_paths[0].arc_count != 2) fail("P_1 does not have exactly two arcs");
  return ec;
}

}  // namespace antimagic
