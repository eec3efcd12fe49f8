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

#include <sstream>

#include "antimagic/error.hpp"
#include "antimagic/generators.hpp"
#include "gtest/gtest.h"
#include "test_util.hpp"

namespace antimagic {
namespace {

LoadedGraph parse(const std::string& text) {
  std::istringstream in(text);
  return parse_edge_list(in);
}

ErrorCode parse_error(const std::string& text) {
  try {
    parse(text);
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected a parse failure";
  return ErrorCode::kInternal;
}

TEST(EdgeListTest, CommentsAndWhitespace) {
  const LoadedGraph lg = parse("# triangle\n0 1\n  1\t2 \n\n# done\n2 0\n");
  EXPECT_EQ(lg.graph.vertex_count(), 3);
  EXPECT_EQ(lg.graph.edge_count(), 3);
  EXPECT_EQ(lg.original_ids, (std::vector<std::int64_t>{0, 1, 2}));
}

TEST(EdgeListTest, SparseIdsAreCompacted) {
  const LoadedGraph lg = parse("10 30\n30 20\n20 10\n");
  EXPECT_EQ(lg.graph.vertex_count(), 3);
  EXPECT_EQ(lg.original_ids, (std::vector<std::int64_t>{10, 20, 30}));
  EXPECT_EQ(lg.graph.edge(0), (Edge{0, 2}));
  EXPECT_EQ(lg.graph.edge(1), (Edge{1, 2}));
}

TEST(EdgeListTest, HeaderDeclaresIsolatedVertices) {
  const LoadedGraph lg = parse("n 5\n0 1\n");
  EXPECT_EQ(lg.graph.vertex_count(), 5);
  EXPECT_EQ(lg.graph.degree(4), 0);
}

TEST(EdgeListTest, Errors) {
  EXPECT_EQ(parse_error("0 1 2\n"), ErrorCode::kParse);
  EXPECT_EQ(parse_error("0 x\n"), ErrorCode::kParse);
  EXPECT_EQ(parse_error("0 -1\n"), ErrorCode::kParse);
  EXPECT_EQ(parse_error("n 2\n0 5\n"), ErrorCode::kEndpointOutOfRange);
  EXPECT_EQ(parse_error("3 3\n"), ErrorCode::kSelfLoop);
  EXPECT_EQ(parse_error("0 1\n1 0\n"), ErrorCode::kDuplicateEdge);
  EXPECT_EQ(parse_error("n 3\nn 4\n"), ErrorCode::kParse);
}

TEST(EdgeListTest, FormatThenParseRoundTrip) {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const Graph g = random_regular(12, 4, seed);
    const LoadedGraph lg = parse(format_edge_list(g));
    EXPECT_EQ(lg.graph.edges(), g.edges());
    EXPECT_EQ(lg.original_ids, identity_ids(g));
  }
}

Graph three_k5() {
  const Graph parts[] = {complete(5), complete(5), complete(5)};
  return disjoint_union(parts);
}

TEST(ResultDocumentTest, SchemaAndKeyOrder) {
  const PipelineResult r = run_pipeline(three_k5());
  const Json doc = result_document(r, identity_ids(r.graph));
  std::vector<std::string> keys;
  for (const auto& [k, v] : doc.items()) keys.push_back(k);
  EXPECT_EQ(keys, (std::vector<std::string>{"n", "edges", "direction", "labels", "vertex_sums", "valid",
                                            "proven_regime", "diagnostics", "vertex_id_map"}));
  EXPECT_EQ(doc["n"], 15);
  EXPECT_EQ(doc["edges"].size(), 30u);
  EXPECT_EQ(doc["edges"][0], Json::array({0, 1}));
  EXPECT_EQ(doc["labels"].size(), 30u);
  EXPECT_TRUE(doc["valid"].get<bool>());
  EXPECT_TRUE(doc["proven_regime"].get<bool>());
  EXPECT_EQ(doc["vertex_id_map"]["14"], 14);
  EXPECT_TRUE(doc["diagnostics"]["hard_checks_pass"].get<bool>());
  EXPECT_EQ(doc["diagnostics"]["s"], 3);
}

TEST(ResultDocumentTest, DumpIsDeterministic) {
  const Graph g = three_k5();
  EXPECT_EQ(dump_document(result_document(run_pipeline(g), identity_ids(g), 5)),
            dump_document(result_document(run_pipeline(g), identity_ids(g), 5)));
}

TEST(VerifyDocumentTest, RoundTripAndTampering) {
  const Graph g = three_k5();
  const PipelineResult r = run_pipeline(g);
  Json doc = Json::parse(dump_document(result_document(r, identity_ids(g))));
  EXPECT_TRUE(verify_document(doc, &g).valid);
  EXPECT_TRUE(verify_document(doc).valid);

  Json wrong_sums = doc;
  wrong_sums["vertex_sums"][0] = wrong_sums["vertex_sums"][0].get<Sum>() + 1;
  EXPECT_FALSE(verify_document(wrong_sums).valid);

  Json duplicate_label = doc;
  duplicate_label["labels"][0] = duplicate_label["labels"][1];
  EXPECT_FALSE(verify_document(duplicate_label).valid);

  const Graph other = random_regular(15, 4, 3);
  EXPECT_FALSE(verify_document(doc, &other).valid);
}

TEST(VerifyDocumentTest, DetectsCollidingSums) {
  const Graph g = testing::make_graph({{0, 1}, {1, 2}, {0, 2}}, 3);
  Json doc;
  doc["n"] = 3;
  doc["edges"] = Json::array({Json::array({0, 1}), Json::array({1, 2}), Json::array({0, 2})});
  doc["direction"] = Json::array({1, 1, 0});
  doc["labels"] = Json::array({1, 2, 3});
  const VerifyOutcome out = verify_document(doc, &g);
  EXPECT_FALSE(out.valid);
  EXPECT_EQ(out.report.sums, (std::vector<Sum>{2, -1, -1}));
}

TEST(VerifyDocumentTest, MalformedDocument) {
  Json doc;
  doc["n"] = 2;
  EXPECT_THROW(verify_document(doc), Error);
}

std::size_t count_lines_with(const std::string& text, const std::string& needle) {
  std::istringstream in(text);
  std::size_t count = 0;
  for (std::string line; std::getline(in, line);) {
    if (line.find(needle) != std::string::npos) ++count;
  }
  return count;
}

TEST(ExportDotTest, SingleArc) {
  const Graph g = testing::make_graph({{0, 1}}, 2);
  const Sum sums[] = {-1, 1};
  const std::string dot = export_dot(g, {{1}, {1}}, sums);
  EXPECT_EQ(count_lines_with(dot, "->"), 1u);
  EXPECT_NE(dot.find("0 -> 1 [label=\"1\"];"), std::string::npos);
}

TEST(ExportDotTest, Triangle) {
  const Graph g = testing::make_graph({{0, 1}, {1, 2}, {0, 2}}, 3);
  const Sum sums[] = {2, 3, -5};
  const std::string dot = export_dot(g, {{1, 0, 0}, {1, 2, 3}}, sums);
  EXPECT_EQ(count_lines_with(dot, "->"), 3u);
  EXPECT_EQ(count_lines_with(dot, "sum="), 3u);
  EXPECT_NE(dot.find("2 -> 1 [label=\"2\"];"), std::string::npos);
  EXPECT_NE(dot.find("sum=\"-5\""), std::string::npos);
}

TEST(ExportDotTest, EmptyGraph) {
  const Graph g = testing::make_graph({}, 0);
  EXPECT_EQ(export_dot(g, {}, {}), "digraph antimagic {\n}\n");
}

}  // namespace
}  // namespace antimagic
