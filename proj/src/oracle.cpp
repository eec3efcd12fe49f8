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

#include "antimagic/oracle.hpp"

#include <algorithm>
#include <string>

#include "antimagic/error.hpp"

namespace antimagic {
namespace {

class LabelSearch {
 public:
  LabelSearch(const Graph& g, std::span<const std::uint8_t> forward, std::int64_t node_limit,
              std::int64_t nodes_used)
      : g_(g),
        forward_(forward),
        m_(static_cast<std::size_t>(g.edge_count())),
        node_limit_(node_limit),
        nodes_(nodes_used),
        labels_(m_, 0),
        used_(m_ + 1, false),
        sums_(static_cast<std::size_t>(g.vertex_count()), 0),
        completes_at_(m_) {
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
      auto inc = g.incident(v);
      if (inc.empty()) {
        isolated_.push_back(v);
      } else {
        completes_at_[static_cast<std::size_t>(*std::max_element(inc.begin(), inc.end()))].push_back(v);
      }
    }
  }

  SearchStatus run() {
    // Isolated vertices all sit at sum 0.
    if (isolated_.size() > 1) return SearchStatus::kNotFound;
    for (Vertex v : isolated_) finished_.push_back(sums_[static_cast<std::size_t>(v)]);
    return place(0);
  }

  const std::vector<Label>& labels() const { return labels_; }
  std::int64_t nodes() const { return nodes_; }

 private:
  SearchStatus place(std::size_t k) {
    if (k == m_) return SearchStatus::kFound;
    const Edge& e = g_.edges()[k];
    const auto head = static_cast<std::size_t>(forward_[k] ? e.v : e.u);
    const auto tail = static_cast<std::size_t>(forward_[k] ? e.u : e.v);
    for (std::size_t label = 1; label <= m_; ++label) {
      if (used_[label]) continue;
      if (++nodes_ > node_limit_) return SearchStatus::kExhausted;
      const auto value = static_cast<Label>(label);
      used_[label] = true;
      labels_[k] = value;
      sums_[head] += value;
      sums_[tail] -= value;

      const std::size_t mark = finished_.size();
      bool clash = false;
      for (Vertex v : completes_at_[k]) {
        const Sum sv = sums_[static_cast<std::size_t>(v)];
        if (std::find(finished_.begin(), finished_.end(), sv) != finished_.end()) {
          clash = true;
          break;
        }
        finished_.push_back(sv);
      }
      if (!clash) {
        const SearchStatus st = place(k + 1);
        if (st != SearchStatus::kNotFound) return st;
      }
      finished_.resize(mark);
      sums_[head] -= value;
      sums_[tail] += value;
      used_[label] = false;
    }
    labels_[k] = 0;
    return SearchStatus::kNotFound;
  }

  const Graph& g_;
  std::span<const std::uint8_t> forward_;
  std::size_t m_;
  std::int64_t node_limit_;
  std::int64_t nodes_;
  std::vector<Label> labels_;
  std::vector<bool> used_;
  std::vector<Sum> sums_;
  std::vector<std::vector<Vertex>> completes_at_;  // vertices whose last edge is k
  std::vector<Vertex> isolated_;
  std::vector<Sum> finished_;
};

void check_cap(const Graph& g, const OracleOptions& options) {
  if (g.edge_count() > options.max_edges && !options.force) {
    throw Error(ErrorCode::kSizeCap, "exhaustive search over " + std::to_string(g.edge_count()) +
                                         " edges exceeds the cap of " + std::to_string(options.max_edges) +
                                         "; pass force to run anyway");
  }
}

}  // namespace

LabelingSearch search_labeling(const Graph& g, std::span<const std::uint8_t> forward,
                               const OracleOptions& options) {
  check_cap(g, options);
  if (forward.size() != static_cast<std::size_t>(g.edge_count())) {
    throw Error(ErrorCode::kInvalidArgument, "orientation size does not match edge count");
  }
  LabelSearch search(g, forward, options.node_limit, 0);
  LabelingSearch out;
  out.status = search.run();
  out.nodes = search.nodes();
  if (out.status == SearchStatus::kFound) out.labels = search.labels();
  return out;
}

OrientationSearch search_orientation_and_labeling(const Graph& g, const OracleOptions& options) {
  check_cap(g, options);
  const auto m = static_cast<std::size_t>(g.edge_count());
  if (m >= 63) throw Error(ErrorCode::kSizeCap, "orientation space too large to enumerate");
  OrientationSearch out;
  std::vector<std::uint8_t> forward(m, 1);
  const std::uint64_t total = std::uint64_t{1} << m;
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    for (std::size_t k = 0; k < m; ++k) forward[k] = (mask >> (m - 1 - k)) & 1 ? 0 : 1;
    LabelSearch search(g, forward, options.node_limit, out.nodes);
    const SearchStatus st = search.run();
    out.nodes = search.nodes();
    if (st == SearchStatus::kFound) {
      out.status = st;
      out.witness.forward = forward;
      out.witness.label = search.labels();
      return out;
    }
    if (st == SearchStatus::kExhausted) {
      out.status = st;
      return out;
    }
  }
  out.status = SearchStatus::kNotFound;
  return out;
}

}  // namespace antimagic
