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

#include "antimagic/pipeline.hpp"

#include <string>

#include "antimagic/error.hpp"
#include "antimagic/expansion.hpp"

namespace antimagic {

std::int32_t regular_half_degree(const Graph& g) {
  if (g.vertex_count() == 0) throw Error(ErrorCode::kInvalidArgument, "empty graph");
  const std::int32_t r = g.degree(0);
  for (Vertex v = 1; v < g.vertex_count(); ++v) {
    if (g.degree(v) != r) {
      throw Error(ErrorCode::kNotRegular, "graph is not regular: vertex 0 has degree " + std::to_string(r) +
                                              ", vertex " + std::to_string(v) + " has degree " +
                                              std::to_string(g.degree(v)));
    }
  }
  if (r % 2 != 0) {
    throw Error(ErrorCode::kOddDegree,
                "odd regular degree " + std::to_string(r) + " is unsupported; only 2d-regular graphs with d >= 2");
  }
  if (r == 0) throw Error(ErrorCode::kUnsupportedDegree, "0-regular graphs are unsupported");
  if (r == 2) {
    throw Error(ErrorCode::kUnsupportedDegree,
                "2-regular graphs (d = 1) are unsupported; the construction needs d >= 2");
  }
  return r / 2;
}

PipelineResult run_pipeline(const Graph& g) {
  PipelineResult out;
  out.half_degree = regular_half_degree(g);
  out.graph = g;
  out.decomposition = decompose(g);

  for (const Component& comp : out.decomposition.components) {
    ClosedWalk walk = euler_tour(g, comp.vertices);
    const Anchor anchor = select_anchor(walk);
    OrientedCycle oc;
    oc.cycle = expand(walk, anchor);
    oc.parity = comp.odd ? Parity::kOdd : Parity::kEven;
    oc.along = orient(oc.cycle, oc.parity);
    out.tours.push_back(std::move(walk));
    out.cycles.push_back(std::move(oc));
  }

  out.labeling = label_all(g, out.cycles, out.decomposition);
  out.report = check_antimagic(g, out.labeling.graph_labeling);
  out.report.seen_pairs = seen_pairs(out.cycles, out.labeling);
  out.diagnostics = check_construction(g, out.cycles, out.decomposition, out.labeling);
  out.valid = out.report.distinct;
  out.proven_regime = out.decomposition.odd_count >= 3;
  return out;
}

}  // namespace antimagic
