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

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <utility>
#include <vector>

#include "antimagic/euler_tour.hpp"
#include "antimagic/graph.hpp"

namespace antimagic::testing {

inline Graph make_graph(std::vector<std::pair<std::int64_t, std::int64_t>> pairs, std::int64_t n) {
  return Graph::from_edge_list(pairs, n);
}

// Closed walk over g following the given visit sequence (last == first).
inline ClosedWalk walk_from_visits(const Graph& g, std::vector<Vertex> visits) {
  std::map<std::pair<Vertex, Vertex>, EdgeIndex> index;
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) index[{g.edge(e).u, g.edge(e).v}] = e;
  ClosedWalk w;
  for (std::size_t k = 0; k + 1 < visits.size(); ++k) {
    const Vertex a = std::min(visits[k], visits[k + 1]);
    const Vertex b = std::max(visits[k], visits[k + 1]);
    w.edge_of_step.push_back(index.at({a, b}));
  }
  w.visits = std::move(visits);
  return w;
}

// g with vertex v renamed perm[v]; edge order preserved.
inline Graph relabel(const Graph& g, const std::vector<Vertex>& perm) {
  std::vector<std::pair<std::int64_t, std::int64_t>> pairs;
  for (const Edge& e : g.edges()) pairs.emplace_back(perm[static_cast<std::size_t>(e.u)], perm[static_cast<std::size_t>(e.v)]);
  return Graph::from_edge_list(pairs, g.vertex_count());
}

inline std::vector<Vertex> random_permutation(std::int32_t n, std::mt19937& rng) {
  std::vector<Vertex> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  return perm;
}

// Random simple graph: each pair present with probability p.
inline Graph random_graph(std::int32_t n, double p, std::mt19937& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<std::pair<std::int64_t, std::int64_t>> pairs;
  for (std::int32_t u = 0; u < n; ++u) {
    for (std::int32_t v = u + 1; v < n; ++v) {
      if (coin(rng)) pairs.emplace_back(u, v);
    }
  }
  return Graph::from_edge_list(pairs, n);
}

inline OrientationAndLabeling random_orientation_labeling(const Graph& g, std::mt19937& rng) {
  OrientationAndLabeling ol;
  const auto m = static_cast<std::size_t>(g.edge_count());
  std::bernoulli_distribution coin(0.5);
  for (std::size_t e = 0; e < m; ++e) ol.forward.push_back(coin(rng) ? 1 : 0);
  ol.label.resize(m);
  std::iota(ol.label.begin(), ol.label.end(), 1);
  std::shuffle(ol.label.begin(), ol.label.end(), rng);
  return ol;
}

// Sums computed arc by arc from scratch, for use as an independent oracle.
inline std::vector<Sum> brute_sums(const Graph& g, const std::vector<std::uint8_t>& forward,
                                   const std::vector<Label>& labels) {
  std::vector<Sum> s(static_cast<std::size_t>(g.vertex_count()), 0);
  for (std::size_t e = 0; e < labels.size(); ++e) {
    const Edge& ed = g.edges()[e];
    const Vertex head = forward[e] ? ed.v : ed.u;
    const Vertex tail = forward[e] ? ed.u : ed.v;
    s[static_cast<std::size_t>(head)] += labels[e];
    s[static_cast<std::size_t>(tail)] -= labels[e];
  }
  return s;
}

inline bool all_distinct(std::vector<Sum> s) {
  std::sort(s.begin(), s.end());
  return std::adjacent_find(s.begin(), s.end()) == s.end();
}

}  // namespace antimagic::testing
