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

#include "antimagic/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <sstream>

#include "antimagic/error.hpp"

namespace antimagic {
namespace {

std::vector<std::string> tokens(const std::string& line) {
  std::istringstream is(line);
  std::vector<std::string> out;
  for (std::string tok; is >> tok;) out.push_back(tok);
  return out;
}

std::int64_t parse_id(const std::string& tok, std::size_t line_no) {
  std::int64_t value = 0;
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size() || value < 0) {
    throw Error(ErrorCode::kParse,
                "line " + std::to_string(line_no) + ": expected a non-negative integer, got '" + tok + "'");
  }
  return value;
}

}  // namespace

LoadedGraph parse_edge_list(std::istream& in) {
  std::vector<std::pair<std::int64_t, std::int64_t>> raw;
  std::optional<std::int64_t> declared;
  std::string line;
  for (std::size_t line_no = 1; std::getline(in, line); ++line_no) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    const auto tok = tokens(line);
    if (tok.size() == 2 && tok[0] == "n") {
      if (declared) throw Error(ErrorCode::kParse, "line " + std::to_string(line_no) + ": repeated n header");
      declared = parse_id(tok[1], line_no);
      continue;
    }
    if (tok.size() != 2) {
      throw Error(ErrorCode::kParse, "line " + std::to_string(line_no) + ": expected \"u v\"");
    }
    raw.emplace_back(parse_id(tok[0], line_no), parse_id(tok[1], line_no));
  }

  std::map<std::int64_t, std::int64_t> dense;
  for (const auto& [u, v] : raw) {
    if (declared && (u >= *declared || v >= *declared)) {
      throw Error(ErrorCode::kEndpointOutOfRange, "edge (" + std::to_string(u) + "," + std::to_string(v) +
                                                      ") exceeds declared vertex count " +
                                                      std::to_string(*declared));
    }
    dense.emplace(u, 0);
    dense.emplace(v, 0);
  }
  if (declared) {
    for (std::int64_t id = 0; id < *declared; ++id) dense.emplace(id, 0);
  }
  LoadedGraph out;
  for (auto& [id, idx] : dense) {
    idx = static_cast<std::int64_t>(out.original_ids.size());
    out.original_ids.push_back(id);
  }
  for (auto& [u, v] : raw) {
    u = dense.at(u);
    v = dense.at(v);
  }
  out.graph = Graph::from_edge_list(raw, static_cast<std::int64_t>(out.original_ids.size()));
  return out;
}

LoadedGraph read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kParse, "cannot open " + path);
  return parse_edge_list(in);
}

std::string format_edge_list(const Graph& g) {
  std::ostringstream os;
  os << "n " << g.vertex_count() << '\n';
  for (const Edge& e : g.edges()) os << e.u << ' ' << e.v << '\n';
  return os.str();
}

std::vector<std::int64_t> identity_ids(const Graph& g) {
  std::vector<std::int64_t> ids(static_cast<std::size_t>(g.vertex_count()));
  for (std::size_t k = 0; k < ids.size(); ++k) ids[k] = static_cast<std::int64_t>(k);
  return ids;
}

Json result_document(const PipelineResult& result, std::span<const std::int64_t> original_ids,
                     std::optional<std::uint64_t> seed) {
  const Graph& g = result.graph;
  const OrientationAndLabeling& ol = result.labeling.graph_labeling;
  if (original_ids.size() != static_cast<std::size_t>(g.vertex_count())) {
    throw Error(ErrorCode::kInvalidArgument, "vertex id map does not match the graph");
  }

  Json doc;
  doc["n"] = g.vertex_count();
  Json edges = Json::array();
  for (const Edge& e : g.edges()) edges.push_back(Json::array({e.u, e.v}));
  doc["edges"] = std::move(edges);
  doc["direction"] = ol.forward;
  doc["labels"] = ol.label;
  doc["vertex_sums"] = result.report.sums;
  doc["valid"] = result.valid;
  doc["proven_regime"] = result.proven_regime;

  const ComponentDecomposition& dec = result.decomposition;
  Json diag;
  diag["d"] = result.half_degree;
  diag["s"] = dec.odd_count;
  diag["t"] = dec.size();
  Json comps = Json::array();
  for (std::int32_t i = 0; i < dec.size(); ++i) {
    const Component& c = dec.components[static_cast<std::size_t>(i)];
    Json jc;
    jc["n"] = c.vertex_count();
    jc["m"] = c.edge_count();
    jc["odd"] = c.odd;
    jc["label_range"] = Json::array({dec.labels_before(i) + 1, dec.prefix_sums[static_cast<std::size_t>(i)]});
    comps.push_back(std::move(jc));
  }
  diag["components"] = std::move(comps);
  Json checks;
  for (const CheckItem& item : result.diagnostics.items) {
    Json jc;
    jc["pass"] = item.pass;
    jc["hard"] = item.hard;
    jc["checked"] = item.checked;
    if (!item.counterexample.empty()) jc["counterexample"] = item.counterexample;
    checks[item.name] = std::move(jc);
  }
  diag["checks"] = std::move(checks);
  diag["hard_checks_pass"] = result.diagnostics.hard_pass();
  diag["frontier_ties"] = result.labeling.ties.size();
  if (seed) diag["seed"] = *seed;
  doc["diagnostics"] = std::move(diag);

  Json id_map = Json::object();
  for (std::size_t k = 0; k < original_ids.size(); ++k) {
    id_map[std::to_string(original_ids[k])] = static_cast<std::int64_t>(k);
  }
  doc["vertex_id_map"] = std::move(id_map);
  return doc;
}

std::string dump_document(const Json& doc) { return doc.dump(2) + "\n"; }

Graph graph_from_document(const Json& doc) {
  try {
    std::vector<std::pair<std::int64_t, std::int64_t>> pairs;
    for (const auto& e : doc.at("edges")) pairs.emplace_back(e.at(0).get<std::int64_t>(), e.at(1).get<std::int64_t>());
    return Graph::from_edge_list(pairs, doc.at("n").get<std::int64_t>());
  } catch (const Json::exception& ex) {
    throw Error(ErrorCode::kParse, std::string("malformed result document: ") + ex.what());
  }
}

OrientationAndLabeling labeling_from_document(const Json& doc) {
  try {
    OrientationAndLabeling ol;
    for (const auto& d : doc.at("direction")) {
      const int v = d.get<int>();
      if (v != 0 && v != 1) throw Error(ErrorCode::kParse, "direction entries must be 0 or 1");
      ol.forward.push_back(static_cast<std::uint8_t>(v));
    }
    for (const auto& l : doc.at("labels")) ol.label.push_back(l.get<Label>());
    return ol;
  } catch (const Json::exception& ex) {
    throw Error(ErrorCode::kParse, std::string("malformed result document: ") + ex.what());
  }
}

VerifyOutcome verify_document(const Json& doc, const Graph* graph) {
  VerifyOutcome out;
  const Graph own = graph_from_document(doc);
  if (graph && (graph->vertex_count() != own.vertex_count() || graph->edges() != own.edges())) {
    out.message = "result edges do not match the input graph";
    return out;
  }
  const OrientationAndLabeling ol = labeling_from_document(doc);
  const auto m = static_cast<std::size_t>(own.edge_count());
  if (ol.forward.size() != m || ol.label.size() != m) {
    out.message = "direction/labels length does not match edge count";
    return out;
  }
  if (!is_bijective_labeling(ol.label)) {
    out.message = "labels are not a bijection onto [m]";
    return out;
  }
  out.report = check_antimagic(own, ol);
  if (doc.contains("vertex_sums")) {
    std::vector<Sum> reported;
    try {
      reported = doc.at("vertex_sums").get<std::vector<Sum>>();
    } catch (const Json::exception& ex) {
      throw Error(ErrorCode::kParse, std::string("malformed vertex_sums: ") + ex.what());
    }
    if (reported != out.report.sums) {
      out.message = "reported vertex sums disagree with recomputed sums";
      return out;
    }
  }
  if (!out.report.distinct) {
    out.message = "two vertices share a vertex sum";
    return out;
  }
  out.valid = true;
  out.message = "antimagic: all vertex sums distinct";
  return out;
}

std::string export_dot(const Graph& g, const OrientationAndLabeling& ol, std::span<const Sum> sums) {
  std::ostringstream os;
  os << "digraph antimagic {\n";
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    const Sum sv = static_cast<std::size_t>(v) < sums.size() ? sums[static_cast<std::size_t>(v)] : 0;
    os << "  " << v << " [label=\"" << v << "\\nS=" << sv << "\", sum=\"" << sv << "\"];\n";
  }
  for (std::size_t e = 0; e < g.edges().size(); ++e) {
    const Edge& ed = g.edges()[e];
    const bool fwd = e < ol.forward.size() ? ol.forward[e] != 0 : true;
    const Label l = e < ol.label.size() ? ol.label[e] : 0;
    os << "  " << (fwd ? ed.u : ed.v) << " -> " << (fwd ? ed.v : ed.u) << " [label=\"" << l << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace antimagic
