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

#include "antimagic/generators.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>

#include "antimagic/error.hpp"

namespace antimagic {
namespace {

// mt19937_64 has a standardized output sequence; the distributions in <random>
// do not, so bounded draws and shuffles are done by hand to keep generated
// graphs identical across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Uniform in [0, bound).
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t x;
    do {
      x = engine_();
    } while (x >= limit);
    return x % bound;
  }

  template <class T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::swap(v[i - 1], v[below(i)]);
    }
  }

  std::uint64_t next() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

using EdgeSet = std::set<std::pair<Vertex, Vertex>>;

Graph from_edge_set(const EdgeSet& edges, std::int32_t n) {
  std::vector<std::pair<std::int64_t, std::int64_t>> pairs(edges.begin(), edges.end());
  return Graph::from_edge_list(pairs, n);
}

bool has_available_pair(const EdgeSet& edges, const std::map<Vertex, int>& potential) {
  if (potential.empty()) return true;
  for (auto a = potential.begin(); a != potential.end(); ++a) {
    for (auto b = std::next(a); b != potential.end(); ++b) {
      if (!edges.contains({a->first, b->first})) return true;
    }
  }
  return false;
}

// One pairing attempt: pair shuffled stubs, keep the pairs that form new
// simple edges and re-pair the leftovers until none remain or no simple
// completion is possible.
std::optional<EdgeSet> try_pairing(std::int32_t n, std::int32_t r, Rng& rng) {
  EdgeSet edges;
  std::vector<Vertex> stubs;
  stubs.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(r));
  for (Vertex v = 0; v < n; ++v) stubs.insert(stubs.end(), static_cast<std::size_t>(r), v);

  constexpr int kMaxRounds = 1000;
  for (int round = 0; !stubs.empty(); ++round) {
    if (round == kMaxRounds) return std::nullopt;
    std::map<Vertex, int> potential;
    rng.shuffle(stubs);
    for (std::size_t k = 0; k + 1 < stubs.size(); k += 2) {
      Vertex a = stubs[k];
      Vertex b = stubs[k + 1];
      if (a > b) std::swap(a, b);
      if (a != b && !edges.contains({a, b})) {
        edges.emplace(a, b);
      } else {
        ++potential[a];
        ++potential[b];
      }
    }
    if (!has_available_pair(edges, potential)) return std::nullopt;
    stubs.clear();
    for (const auto& [v, count] : potential) stubs.insert(stubs.end(), static_cast<std::size_t>(count), v);
  }
  return edges;
}

}  // namespace

Graph circulant(std::int32_t n, std::span<const std::int32_t> offsets) {
  if (n < 3) throw Error(ErrorCode::kInvalidArgument, "circulant needs n >= 3");
  std::set<std::int32_t> distinct;
  for (std::int32_t o : offsets) {
    if (o < 1 || 2 * o > n) {
      throw Error(ErrorCode::kInvalidArgument,
                  "circulant offset " + std::to_string(o) + " outside [1, n/2]");
    }
    if (!distinct.insert(o).second) {
      throw Error(ErrorCode::kInvalidArgument, "repeated circulant offset " + std::to_string(o));
    }
  }
  EdgeSet edges;
  for (std::int32_t i = 0; i < n; ++i) {
    for (std::int32_t o : distinct) {
      const std::int32_t j = (i + o) % n;
      edges.emplace(std::min(i, j), std::max(i, j));
    }
  }
  return from_edge_set(edges, n);
}

Graph complete(std::int32_t n) {
  if (n < 0) throw Error(ErrorCode::kInvalidArgument, "negative vertex count");
  std::vector<std::pair<std::int64_t, std::int64_t>> pairs;
  for (std::int32_t u = 0; u < n; ++u) {
    for (std::int32_t v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  }
  return Graph::from_edge_list(pairs, n);
}

Graph random_regular(std::int32_t n, std::int32_t r, std::uint64_t seed, int max_attempts) {
  if (n < 0 || r < 0) throw Error(ErrorCode::kInvalidArgument, "negative size or degree");
  if ((static_cast<std::int64_t>(n) * r) % 2 != 0) {
    throw Error(ErrorCode::kInfeasible, "n*r must be even for an r-regular graph");
  }
  if (r >= n && !(n == 0 && r == 0)) {
    throw Error(ErrorCode::kInfeasible, "a simple r-regular graph needs r < n");
  }

  // Dense targets are drawn as the complement of a sparse one; pairing gets
  // stuck far more often as r approaches n-1.
  const bool use_complement = 2 * r > n - 1;
  const std::int32_t target = use_complement ? n - 1 - r : r;

  Rng rng(seed);
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    auto edges = try_pairing(n, target, rng);
    if (!edges) continue;
    if (!use_complement) return from_edge_set(*edges, n);
    EdgeSet complement;
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = u + 1; v < n; ++v) {
        if (!edges->contains({u, v})) complement.emplace(u, v);
      }
    }
    return from_edge_set(complement, n);
  }
  throw Error(ErrorCode::kRejectionLimit, "no simple " + std::to_string(r) + "-regular graph on " +
                                              std::to_string(n) + " vertices after " +
                                              std::to_string(max_attempts) + " attempts");
}

Graph disjoint_union(std::span<const Graph> parts) {
  std::vector<std::pair<std::int64_t, std::int64_t>> pairs;
  std::int64_t shift = 0;
  for (const Graph& part : parts) {
    for (const Edge& e : part.edges()) pairs.emplace_back(e.u + shift, e.v + shift);
    shift += part.vertex_count();
  }
  return Graph::from_edge_list(pairs, shift);
}

Graph paper_family(const PaperFamilyOptions& options) {
  const std::int32_t d = options.half_degree;
  if (d < 1) throw Error(ErrorCode::kInvalidArgument, "half degree must be >= 1");
  if (options.odd_components < 0 || options.even_components < 0) {
    throw Error(ErrorCode::kInvalidArgument, "negative component count");
  }
  const std::int32_t lo = std::max(options.min_size > 0 ? options.min_size : 2 * d + 1, 2 * d + 1);
  const std::int32_t hi = options.max_size > 0 ? options.max_size : 2 * d + 9;

  auto sizes_with_parity = [&](int parity) {
    std::vector<std::int32_t> sizes;
    for (std::int32_t k = lo; k <= hi; ++k) {
      if (k % 2 == parity) sizes.push_back(k);
    }
    return sizes;
  };
  const auto odd_sizes = sizes_with_parity(1);
  const auto even_sizes = sizes_with_parity(0);
  if ((options.odd_components > 0 && odd_sizes.empty()) ||
      (options.even_components > 0 && even_sizes.empty())) {
    throw Error(ErrorCode::kInvalidArgument, "size range [" + std::to_string(lo) + "," +
                                                 std::to_string(hi) +
                                                 "] has no admissible component size");
  }

  Rng rng(options.seed);
  std::vector<Graph> parts;
  auto add_parts = [&](std::int32_t count, const std::vector<std::int32_t>& sizes) {
    for (std::int32_t k = 0; k < count; ++k) {
      const std::int32_t n = sizes[rng.below(sizes.size())];
      // A disconnected draw would change the component structure, so redraw.
      constexpr int kMaxRedraws = 1000;
      for (int redraw = 0;; ++redraw) {
        if (redraw == kMaxRedraws) {
          throw Error(ErrorCode::kRejectionLimit,
                      "no connected " + std::to_string(2 * d) + "-regular draw on " +
                          std::to_string(n) + " vertices");
        }
        Graph part = random_regular(n, 2 * d, rng.next());
        if (decompose(part).size() == 1) {
          parts.push_back(std::move(part));
          break;
        }
      }
    }
  };
  add_parts(options.odd_components, odd_sizes);
  add_parts(options.even_components, even_sizes);
  return disjoint_union(parts);
}

}  // namespace antimagic
