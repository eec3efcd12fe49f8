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
#include <vector>

#include "antimagic/euler_tour.hpp"
#include "antimagic/graph.hpp"
#include "antimagic/labeling.hpp"
#include "antimagic/orientation.hpp"
#include "antimagic/verifier.hpp"

namespace antimagic {

// Everything produced by one construction run, stage by stage.
struct PipelineResult {
  Graph graph;
  std::int32_t half_degree = 0;  // d
  ComponentDecomposition decomposition;
  std::vector<ClosedWalk> tours;
  std::vector<OrientedCycle> cycles;
  LabelingResult labeling;
  SumReport report;  // sums on the graph itself, with seen pairs
  ConstructionDiagnostics diagnostics;
  bool valid = false;          // distinct vertex sums on the graph
  bool proven_regime = false;  // at least three odd components
};

// d for a 2d-regular graph with d >= 2. Throws kNotRegular, kOddDegree or
// kUnsupportedDegree (degree 0 or 2) otherwise, and kInvalidArgument on an
// empty graph.
std::int32_t regular_half_degree(const Graph& g);

// decompose -> Euler tour -> expand -> orient -> label -> verify.
PipelineResult run_pipeline(const Graph& g);

}  // namespace antimagic
