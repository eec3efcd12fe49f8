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

#include "antimagic/graph.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>
#include <tuple>

#include "antimagic/error.hpp"

namespace antimagic {

Graph Graph::from_edge_list(std::span<const std::pair<std::int64_t, std::int64_t>> pairs,
                            std::int64_t n) {
  if (n < 0 || n > INT32_MAX) {
    throw Error(ErrorCode::kInvalidArgument, "vertex count out of range: " + std::to_string(n));
  }
  Graph g;
  g.n_ = static_cast<std::int32_t>(n);
  g.adjacency_.assign(static_cast<std::size_t>(n), {});
  g.edges_.reserve(pairs.size());

  std::set<std::pair<Vertex, Vertex>> seen;
  for (const auto& [a, b] : pairs) {
    if (a < 0 || b < 0 || a >= n || b >= n) {
      throw Error(ErrorCode::kEndpointOutOfRange, "edge (" + std::to_string(a) + "," +
                                                      std::to_string(b) + ") has an endpoint outside [0," +
                                                      std::to_string(n) + ")");
    }
    if (a == b) {
      throw Error(ErrorCode::kSelfLoop, "self-loop at vertex " + std::to_string(a));
    }
    const auto u = static_cast<Vertex>(std::min(a, b));
    const auto v = static_cast<Vertex>(std::max(a, b));
    if (!seen.emplace(u, v).second) {
      throw Error(ErrorCode::kDuplicateEdge,
                  "duplicate edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
    }
    const auto idx = static_cast<EdgeIndex>(g.edges_.size());
    g.edges_.push_back({u, v});
    g.adjacency_[static_cast<std::size_t>(u)].push_back(idx);
    g.adjacency_[static_cast<std::size_t>(v)].push_back(idx);
  }
  return g;
}

ComponentDecomposition decompose(const Graph& g) {
  const auto n = static_cast<std::size_t>(g.vertex_count());
  std::vector<std::int32_t> found(n, -1);
  std::vector<Component> discovered;

  // Scanning start vertices in ascending order means discovery order is also
  // ascending by smallest contained vertex id.
  for (std::size_t start = 0; start < n; ++start) {
    if (found[start] != -1) continue;
    const auto id = static_cast<std::int32_t>(discovered.size());
    Component& comp = discovered.emplace_back();
    std::vector<Vertex> stack{static_cast<Vertex>(start)};
    found[start] = id;
    while (!stack.empty()) {
      const Vertex x = stack.back();
      stack.pop_back();
      comp.vertices.push_back(x);
      for (EdgeIndex e : g.incident(x)) {
        const Vertex y = g.other_endpoint(e, x);
        if (x < y) comp.edges.push_back(e);
        if (found[static_cast<std::size_t>(y)] == -1) {
          found[static_cast<std::size_t>(y)] = id;
          stack.push_back(y);
        }
      }
    }
    std::sort(comp.vertices.begin(), comp.vertices.end());
    std::sort(comp.edges.begin(), comp.edges.end());
    comp.odd = comp.vertices.size() % 2 == 1;
  }

  std::vector<std::size_t> order(discovered.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const Component& ca = discovered[a];
    const Component& cb = discovered[b];
    return std::make_tuple(!ca.odd, ca.vertices.size(), ca.vertices.front()) <
           std::make_tuple(!cb.odd, cb.vertices.size(), cb.vertices.front());
  });

  ComponentDecomposition out;
  out.component_of.assign(n, -1);
  Label running = 0;
  for (std::size_t pos = 0; pos < order.size(); ++pos) {
    Component& comp = discovered[order[pos]];
    if (comp.odd) ++out.odd_count;
    running += comp.edge_count();
    out.prefix_sums.push_back(running);
    for (Vertex v : comp.vertices) {
      out.component_of[static_cast<std::size_t>(v)] = static_cast<std::int32_t>(pos);
    }
    out.components.push_back(std::move(comp));
  }
  return out;
}

bool is_bijective_labeling(std::span<const Label> labels) {
  std::vector<bool> used(labels.size() + 1, false);
  for (Label l : labels) {
    if (l < 1 || l > static_cast<Label>(labels.size())) return false;
    if (used[static_cast<std::size_t>(l)]) return false;
    used[static_cast<std::size_t>(l)] = true;
  }
  return true;
}

SumReport vertex_sums(const Graph& g, const OrientationAndLabeling& ol) {
  const auto m = static_cast<std::size_t>(g.edge_count());
  if (ol.label.size() != m || ol.forward.size() != m) {
    throw Error(ErrorCode::kNotBijective, "orientation/labeling size does not match edge count");
  }
  if (!is_bijective_labeling(ol.label)) {
    throw Error(ErrorCode::kNotBijective, "labels are not a bijection onto [m]");
  }
  SumReport report;
  report.sums.assign(static_cast<std::size_t>(g.vertex_count()), 0);
  for (std::size_t e = 0; e < m; ++e) {
    const Edge& ed = g.edges()[e];
    const Vertex head = ol.forward[e] ? ed.v : ed.u;
    const Vertex tail = ol.forward[e] ? ed.u : ed.v;
    report.sums[static_cast<std::size_t>(head)] += ol.label[e];
    report.sums[static_cast<std::size_t>(tail)] -= ol.label[e];
  }
  std::vector<Sum> sorted = report.sums;
  std::sort(sorted.begin(), sorted.end());
  report.distinct = std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
  return report;
}

}  // namespace antimagic
