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
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "antimagic/graph.hpp"
#include "antimagic/pipeline.hpp"
#include "json.hpp"

namespace antimagic {

using Json = nlohmann::ordered_json;

// A graph read from a file, with the original id of every dense vertex.
struct LoadedGraph {
  Graph graph;
  std::vector<std::int64_t> original_ids;  // dense id -> id in the file
};

// Edge-list text: one "u v" pair per line, '#' starts a comment line, and an
// optional "n <count>" line declares ids 0..count-1. Ids that never occur and
// are not declared are dropped; the rest are compacted to 0..n-1 in
// ascending order. Throws kParse on malformed lines.
LoadedGraph parse_edge_list(std::istream& in);
LoadedGraph read_edge_list_file(const std::string& path);

// "n <count>" header followed by one "u v" line per edge.
std::string format_edge_list(const Graph& g);

// Identity id map for graphs built in memory.
std::vector<std::int64_t> identity_ids(const Graph& g);

// The result document: n, edges, direction, labels, vertex_sums, valid,
// proven_regime, diagnostics, vertex_id_map, in that key order.
Json result_document(const PipelineResult& result, std::span<const std::int64_t> original_ids,
                     std::optional<std::uint64_t> seed = std::nullopt);

// Two-space indented dump with a trailing newline.
std::string dump_document(const Json& doc);

struct VerifyOutcome {
  bool valid = false;
  std::string message;
  SumReport report;
};

// Re-checks a result document from its own edges, directions and labels. When
// `graph` is given, the document's edges must match it exactly.
VerifyOutcome verify_document(const Json& doc, const Graph* graph = nullptr);

// Graph and orientation/labeling carried by a result document.
Graph graph_from_document(const Json& doc);
OrientationAndLabeling labeling_from_document(const Json& doc);

// Directed graph in DOT syntax: one node line per vertex carrying its sum,
// one edge line per arc carrying its label.
std::string export_dot(const Graph& g, const OrientationAndLabeling& ol, std::span<const Sum> sums);

}  // namespace antimagic
