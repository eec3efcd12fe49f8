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
#include <numeric>
#include <optional>
#include <random>

#include "antimagic/error.hpp"
#include "antimagic/generators.hpp"
#include "antimagic/verifier.hpp"
#include "gtest/gtest.h"
#include "test_util.hpp"

namespace antimagic {
namespace {

using testing::make_graph;

// Independent reference: walk permutations with std::next_permutation and
// test every complete labeling.
std::optional<std::vector<Label>> brute_first_labeling(const Graph& g, const std::vector<std::uint8_t>& forward) {
  std::vector<Label> labels(static_cast<std::size_t>(g.edge_count()));
  std::iota(labels.begin(), labels.end(), 1);
  do {
    if (testing::all_distinct(testing::brute_sums(g, forward, labels))) return labels;
  } while (std::next_permutation(labels.begin(), labels.end()));
  return std::nullopt;
}

std::optional<OrientationAndLabeling> brute_first_witness(const Graph& g) {
  const auto m = static_cast<std::size_t>(g.edge_count());
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    std::vector<std::uint8_t> forward(m);
    for (std::size_t k = 0; k < m; ++k) forward[k] = (mask >> (m - 1 - k)) & 1 ? 0 : 1;
    if (auto labels = brute_first_labeling(g, forward)) return OrientationAndLabeling{forward, *labels};
  }
  return std::nullopt;
}

Graph triangle() { return make_graph({{0, 1}, {1, 2}, {0, 2}}, 3); }

TEST(SearchLabelingTest, TriangleMixedOrientation) {
  const Graph g = triangle();
  const std::vector<std::uint8_t> forward = {1, 0, 0};  // 0->1, 2->1, 2->0
  const auto expected = brute_first_labeling(g, forward);
  ASSERT_TRUE(expected.has_value());
  EXPECT_EQ(*expected, (std::vector<Label>{1, 2, 3}));
  const LabelingSearch r = search_labeling(g, forward);
  ASSERT_EQ(r.status, SearchStatus::kFound);
  EXPECT_EQ(r.labels, *expected);
  EXPECT_EQ(check_antimagic(g, {forward, r.labels}).sums, (std::vector<Sum>{2, 3, -5}));
}

TEST(SearchLabelingTest, DirectedTriangleHasNone) {
  const Graph g = triangle();
  const std::vector<std::uint8_t> forward = {1, 1, 0};  // 0->1->2->0
  EXPECT_FALSE(brute_first_labeling(g, forward).has_value());
  EXPECT_EQ(search_labeling(g, forward).status, SearchStatus::kNotFound);
}

TEST(SearchLabelingTest, EmptyGraphIsTrivial) {
  const Graph g = make_graph({}, 0);
  const LabelingSearch r = search_labeling(g, {});
  EXPECT_EQ(r.status, SearchStatus::kFound);
  EXPECT_TRUE(r.labels.empty());
  EXPECT_EQ(search_labeling(make_graph({}, 1), {}).status, SearchStatus::kFound);
  EXPECT_EQ(search_labeling(make_graph({}, 2), {}).status, SearchStatus::kNotFound);
}

TEST(SearchLabelingTest, CapAndForce) {
  const Graph g = complete(6);  // 15 edges
  const std::vector<std::uint8_t> forward(15, 1);
  try {
    search_labeling(g, forward);
    FAIL() << "expected a size cap error";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kSizeCap);
  }
  const LabelingSearch r = search_labeling(g, forward, {10, true, kDefaultNodeLimit});
  ASSERT_EQ(r.status, SearchStatus::kFound);
  EXPECT_TRUE(check_antimagic(g, {forward, r.labels}).distinct);
}

TEST(SearchLabelingTest, NodeLimitReportsExhausted) {
  const Graph g = triangle();
  const LabelingSearch r = search_labeling(g, std::vector<std::uint8_t>{1, 1, 0}, {10, false, 4});
  EXPECT_EQ(r.status, SearchStatus::kExhausted);
}

TEST(SearchLabelingTest, MatchesBruteForceOnRandomGraphs) {
  std::mt19937 rng(21);
  for (int trial = 0; trial < 150; ++trial) {
    const Graph g = testing::random_graph(3 + trial % 5, 0.6, rng);
    if (g.edge_count() > 7) continue;
    const auto ol = testing::random_orientation_labeling(g, rng);
    const auto expected = brute_first_labeling(g, ol.forward);
    const LabelingSearch r = search_labeling(g, ol.forward);
    if (expected) {
      ASSERT_EQ(r.status, SearchStatus::kFound);
      EXPECT_EQ(r.labels, *expected);
    } else {
      EXPECT_EQ(r.status, SearchStatus::kNotFound);
    }
  }
}

TEST(SearchOrientationTest, SmallCycles) {
  const int offs[] = {1};
  for (std::int32_t n : {3, 4, 5}) {
    const Graph g = circulant(n, offs);
    const OrientationSearch r = search_orientation_and_labeling(g);
    ASSERT_EQ(r.status, SearchStatus::kFound) << "C_" << n;
    EXPECT_TRUE(check_antimagic(g, r.witness).distinct);
  }
}

TEST(SearchOrientationTest, SingleEdge) {
  const Graph g = make_graph({{0, 1}}, 2);
  const OrientationSearch r = search_orientation_and_labeling(g);
  ASSERT_EQ(r.status, SearchStatus::kFound);
  EXPECT_EQ(r.witness.forward, (std::vector<std::uint8_t>{1}));
  EXPECT_EQ(r.witness.label, (std::vector<Label>{1}));
  EXPECT_EQ(check_antimagic(g, r.witness).sums, (std::vector<Sum>{-1, 1}));
}

TEST(SearchOrientationTest, FourCycleAgreesWithFullEnumeration) {
  const int offs[] = {1};
  const Graph g = circulant(4, offs);
  const auto expected = brute_first_witness(g);
  ASSERT_TRUE(expected.has_value());
  const OrientationSearch r = search_orientation_and_labeling(g);
  ASSERT_EQ(r.status, SearchStatus::kFound);
  EXPECT_EQ(r.witness, *expected);
}

TEST(SearchOrientationTest, MatchesBruteForceOnRandomGraphs) {
  std::mt19937 rng(4);
  for (int trial = 0; trial < 60; ++trial) {
    const Graph g = testing::random_graph(3 + trial % 4, 0.5, rng);
    if (g.edge_count() > 6) continue;
    const auto expected = brute_first_witness(g);
    const OrientationSearch r = search_orientation_and_labeling(g);
    if (expected) {
      ASSERT_EQ(r.status, SearchStatus::kFound);
      EXPECT_EQ(r.witness, *expected);
    } else {
      EXPECT_EQ(r.status, SearchStatus::kNotFound);
    }
  }
}

TEST(SearchOrientationTest, CapApplies) {
  try {
    search_orientation_and_labeling(complete(5));
    FAIL() << "expected a size cap error";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kSizeCap);
  }
}

}  // namespace
}  // namespace antimagic
