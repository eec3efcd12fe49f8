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

#include "antimagic/euler_tour.hpp"

#include <algorithm>
#include <list>
#include <string>

#include "antimagic/error.hpp"

namespace antimagic {
namespace {

struct Step {
  Vertex from;
  EdgeIndex edge;
};

class TourBuilder {
 public:
  explicit TourBuilder(const Graph& g)
      : g_(g),
        used_(static_cast<std::size_t>(g.edge_count()), false),
        cursor_(static_cast<std::size_t>(g.vertex_count()), 0) {}

  // Smallest-indexed unused edge at v, or -1.
  EdgeIndex next_unused(Vertex v) {
    auto incident = g_.incident(v);
    std::size_t& c = cursor_[static_cast<std::size_t>(v)];
    while (c < incident.size() && used_[static_cast<std::size_t>(incident[c])]) ++c;
    return c < incident.size() ? incident[c] : -1;
  }

  // Greedy walk from `start` until stuck. With all degrees even it can only
  // get stuck back at `start`.
  std::list<Step> walk_from(Vertex start) {
    std::list<Step> steps;
    Vertex at = start;
    for (EdgeIndex e = next_unused(at); e != -1; e = next_unused(at)) {
      used_[static_cast<std::size_t>(e)] = true;
      steps.push_back({at, e});
      at = g_.other_endpoint(e, at);
    }
    if (at != start) throw Error(ErrorCode::kInternal, "greedy walk did not close");
    return steps;
  }

 private:
  const Graph& g_;
  std::vector<bool> used_;
  std::vector<std::size_t> cursor_;
};

}  // namespace

ClosedWalk euler_tour(const Graph& g, std::span<const Vertex> component) {
  if (component.empty()) throw Error(ErrorCode::kInvalidArgument, "empty component");

  std::vector<bool> member(static_cast<std::size_t>(g.vertex_count()), false);
  for (Vertex v : component) {
    if (v < 0 || v >= g.vertex_count()) {
      throw Error(ErrorCode::kEndpointOutOfRange, "component vertex out of range");
    }
    member[static_cast<std::size_t>(v)] = true;
  }
  for (Vertex v : component) {
    if (g.degree(v) % 2 != 0) {
      throw Error(ErrorCode::kOddDegree, "vertex " + std::to_string(v) + " has odd degree " +
                                             std::to_string(g.degree(v)) + "; no Euler tour exists");
    }
  }

  const Vertex start = *std::min_element(component.begin(), component.end());

  // The vertex set must be exactly one connected component.
  std::vector<bool> reached(member.size(), false);
  std::vector<Vertex> stack{start};
  reached[static_cast<std::size_t>(start)] = true;
  std::size_t reached_count = 0;
  std::size_t edge_count = 0;
  while (!stack.empty()) {
    const Vertex x = stack.back();
    stack.pop_back();
    ++reached_count;
    for (EdgeIndex e : g.incident(x)) {
      const Vertex y = g.other_endpoint(e, x);
      if (!member[static_cast<std::size_t>(y)]) {
        throw Error(ErrorCode::kDisconnected,
                    "vertex set is not closed: edge leaves it at " + std::to_string(x));
      }
      if (x < y) ++edge_count;
      if (!reached[static_cast<std::size_t>(y)]) {
        reached[static_cast<std::size_t>(y)] = true;
        stack.push_back(y);
      }
    }
  }
  std::size_t distinct = 0;
  for (bool b : member) distinct += b ? 1 : 0;
  if (reached_count != distinct) {
    throw Error(ErrorCode::kDisconnected, "component vertex set is not connected");
  }

  TourBuilder builder(g);
  std::list<Step> tour = builder.walk_from(start);
  for (auto it = tour.begin(); it != tour.end();) {
    if (builder.next_unused(it->from) == -1) {
      ++it;
      continue;
    }
    std::list<Step> sub = builder.walk_from(it->from);
    // Insert before `it`; resume scanning at the first spliced step.
    it = tour.insert(it, sub.begin(), sub.end());
  }

  ClosedWalk walk;
  walk.visits.reserve(tour.size() + 1);
  walk.edge_of_step.reserve(tour.size());
  for (const Step& s : tour) {
    walk.visits.push_back(s.from);
    walk.edge_of_step.push_back(s.edge);
  }
  walk.visits.push_back(start);
  if (walk.edge_of_step.size() != edge_count) {
    throw Error(ErrorCode::kInternal, "Euler tour missed edges");
  }
  return walk;
}

}  // namespace antimagic
