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
#include <utility>
#include <vector>

namespace antimagic {

using Vertex = std::int32_t;
using EdgeIndex = std::int32_t;
using Label = std::int64_t;
using Sum = std::int64_t;

struct Edge {
  Vertex u;
  Vertex v;

  friend bool operator==(const Edge&, const Edge&) = default;
};

// Undirected simple graph on vertices 0..n-1. Edges are stored with u < v in
// input order; per-vertex incidence lists hold edge indices in ascending order.
class Graph {
 public:
  Graph() = default;

  // Validates and builds. Throws Error on self-loops, duplicate edges, or
  // endpoints outside [0, n).
  static Graph from_edge_list(std::span<const std::pair<std::int64_t, std::int64_t>> pairs,
                              std::int64_t n);

  std::int32_t vertex_count() const noexcept { return n_; }
  std::int32_t edge_count() const noexcept { return static_cast<std::int32_t>(edges_.size()); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const Edge& edge(EdgeIndex e) const { return edges_[static_cast<std::size_t>(e)]; }
  std::span<const EdgeIndex> incident(Vertex v) const {
    return adjacency_[static_cast<std::size_t>(v)];
  }
  std::int32_t degree(Vertex v) const {
    return static_cast<std::int32_t>(adjacency_[static_cast<std::size_t>(v)].size());
  }
  Vertex other_endpoint(EdgeIndex e, Vertex v) const {
    const Edge& ed = edge(e);
    return ed.u == v ? ed.v : ed.u;
  }

 private:
  std::int32_t n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<EdgeIndex>> adjacency_;
};

struct Component {
  std::vector<Vertex> vertices;  // ascending
  std::vector<EdgeIndex> edges;  // ascending
  bool odd = false;              // odd number of vertices

  std::int32_t vertex_count() const noexcept { return static_cast<std::int32_t>(vertices.size()); }
  std::int32_t edge_count() const noexcept { return static_cast<std::int32_t>(edges.size()); }
};

// Components in construction order: odd components first by ascending vertex
// count, then even components by ascending vertex count. Ties in either class
// go to the component holding the smaller vertex id.
struct ComponentDecomposition {
  std::vector<Component> components;
  std::int32_t odd_count = 0;              // s
  std::vector<Label> prefix_sums;          // N_1..N_t, N_t = m
  std::vector<std::int32_t> component_of;  // vertex -> position in `components`

  std::int32_t size() const noexcept { return static_cast<std::int32_t>(components.size()); }
  // N_{i-1} for 0-based position i (0 for the first component).
  Label labels_before(std::int32_t i) const {
    return i == 0 ? 0 : prefix_sums[static_cast<std::size_t>(i - 1)];
  }
};

ComponentDecomposition decompose(const Graph& g);

// Orientation plus edge labels, both indexed by edge position in Graph::edges().
struct OrientationAndLabeling {
  std::vector<std::uint8_t> forward;  // 1: arc runs u -> v as stored
  std::vector<Label> label;

  friend bool operator==(const OrientationAndLabeling&, const OrientationAndLabeling&) = default;
};

// Labels seen by a real vertex of the expanded cycles, x < y.
struct SeenPair {
  std::int32_t component = 0;  // position in the decomposition
  std::int32_t name = 0;       // 1-based index l of v_l within its component
  Vertex vertex = 0;
  Label x = 0;
  Label y = 0;
};

struct SumReport {
  std::vector<Sum> sums;
  bool distinct = false;
  std::vector<SeenPair> seen_pairs;  // only filled for construction results
};

// True iff `labels` is a permutation of 1..labels.size().
bool is_bijective_labeling(std::span<const Label> labels);

// Entering labels minus leaving labels, for every vertex of g. Throws if the
// labels are not a bijection onto [m] or if the arrays do not match g.
SumReport vertex_sums(const Graph& g, const OrientationAndLabeling& ol);

}  // namespace antimagic
