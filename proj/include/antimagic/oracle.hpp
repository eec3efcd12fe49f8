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

enum class SearchStatus { kFound, kNotFound, kExhausted };

inline constexpr std::int32_t kDefaultLabelingMaxEdges = 10;
inline constexpr std::int32_t kDefaultFullSearchMaxEdges = 8;
inline constexpr std::int64_t kDefaultNodeLimit = 200'000'000;

struct OracleOptions {
  std::int32_t max_edges = kDefaultLabelingMaxEdges;
  bool force = false;  // allow m > max_edges
  std::int64_t node_limit = kDefaultNodeLimit;
};

struct LabelingSearch {
  SearchStatus status = SearchStatus::kNotFound;
  std::vector<Label> labels;  // per edge, when found
  std::int64_t nodes = 0;     // label placements tried
};

struct OrientationSearch {
  SearchStatus status = SearchStatus::kNotFound;
  OrientationAndLabeling witness;
  std::int64_t nodes = 0;
};

// Lexicographically first antimagic labeling (edge 0's label most significant)
// under the fixed orientation. Branches die as soon as two fully labeled
// vertices share a sum. Throws kSizeCap when m > max_edges without force.
LabelingSearch search_labeling(const Graph& g, std::span<const std::uint8_t> forward,
                               const OracleOptions& options = {});

// First witness over all orientations, enumerated with edge 0 as the most
// significant direction bit and all-forward first.
OrientationSearch search_orientation_and_labeling(
    const Graph& g, const OracleOptions& options = {kDefaultFullSearchMaxEdges, false, kDefaultNodeLimit});

}  // namespace antimagic
