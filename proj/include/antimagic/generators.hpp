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

namespace antimagic {

// Vertex i adjacent to i +- o (mod n) for every offset o. Requires n >= 3 and
// distinct offsets in [1, n/2].
Graph circulant(std::int32_t n, std::span<const std::int32_t> offsets);

Graph complete(std::int32_t n);

inline constexpr int kDefaultRegularAttempts = 10000;

// Simple r-regular graph on n vertices drawn by random stub pairing.
// Deterministic for a fixed seed. Throws kInfeasible if n*r is odd or r >= n,
// and kRejectionLimit if `max_attempts` pairings all fail.
Graph random_regular(std::int32_t n, std::int32_t r, std::uint64_t seed,
                     int max_attempts = kDefaultRegularAttempts);

// Vertex ids of part k are shifted by the total size of parts 0..k-1.
Graph disjoint_union(std::span<const Graph> parts);

struct PaperFamilyOptions {
  std::int32_t odd_components = 3;   // s
  std::int32_t even_components = 0;
  std::int32_t half_degree = 2;      // d; components are 2d-regular
  std::int32_t min_size = 0;         // 0 means 2d+1
  std::int32_t max_size = 0;         // 0 means 2d+9
  std::uint64_t seed = 1;
};

// Disjoint union of random 2d-regular components, `odd_components` of them
// with an odd vertex count and `even_components` with an even one. Component
// sizes are drawn uniformly from the matching-parity values in
// [max(min_size, 2d+1), max_size].
Graph paper_family(const PaperFamilyOptions& options);

}  // namespace antimagic
