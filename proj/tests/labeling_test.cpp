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

#include "antimagic/labeling.hpp"

#include <algorithm>
#include <map>

#include "antimagic/error.hpp"
#include "antimagic/generators.hpp"
#include "gtest/gtest.h"

namespace antimagic {
namespace {

struct Built {
  Graph g;
  ComponentDecomposition dec;
  std::vector<OrientedCycle> cycles;
};

Built build(const Graph& g) {
  Built b{g, decompose(g), {}};
  for (const Component& comp : b.dec.components) {
    const ClosedWalk w = euler_tour(g, comp.vertices);
    OrientedCycle oc;
    oc.cycle = expand(w, select_anchor(w));
    oc.parity = comp.odd ? Parity::kOdd : Parity::kEven;
    oc.along = orient(oc.cycle, oc.parity);
    b.cycles.push_back(std::move(oc));
  }
  return b;
}

Graph three_k5() {
  const Graph parts[] = {complete(5), complete(5), complete(5)};
  return disjoint_union(parts);
}

Graph family(std::int32_t d, std::int32_t odd, std::int32_t even, std::uint64_t seed) {
  PaperFamilyOptions opt;
  opt.half_degree = d;
  opt.odd_components = odd;
  opt.even_components = even;
  opt.seed = seed;
  return paper_family(opt);
}

// Labels of a unit's arcs in orientation order.
std::vector<Label> along_labels(const OrientedCycle& oc, const std::vector<Label>& labels, const GoodPath& p) {
  std::vector<Label> out;
  for (std::int32_t k = 0, arc = p.first_arc; k < p.arc_count; ++k, arc = oc.cycle.next_position(arc)) {
    out.push_back(labels[static_cast<std::size_t>(arc)]);
  }
  if (!oc.along[static_cast<std::size_t>(p.first_arc)]) std::reverse(out.begin(), out.end());
  return out;
}

TEST(LabelPoolTest, SmallestUnused) {
  LabelPool pool(5, 12);
  pool.take(5);
  pool.take(7);
  EXPECT_FALSE(pool.used_is_prefix());
  EXPECT_EQ(pool.take_smallest(3), (std::vector<Label>{6, 8, 9}));
  EXPECT_TRUE(pool.used(9));
  EXPECT_FALSE(pool.used(10));
  EXPECT_TRUE(pool.used_is_prefix());
  EXPECT_THROW(pool.take(6), Error);
  EXPECT_THROW(pool.take(13), Error);
  EXPECT_THROW(pool.take_smallest(4), Error);
}

TEST(LabelAllTest, AnchorLabelsWithThreeOddComponents) {
  const Built b = build(three_k5());
  const LabelingResult r = label_all(b.g, b.cycles, b.dec);
  const std::int32_t s = 3;
  for (std::int32_t i = 1; i <= s; ++i) {
    const OrientedCycle& oc = b.cycles[static_cast<std::size_t>(i - 1)];
    const auto& labels = r.arc_labels[static_cast<std::size_t>(i - 1)];
    EXPECT_EQ(labels[static_cast<std::size_t>(oc.cycle.closing_arc)], i);
    EXPECT_EQ(along_labels(oc, labels, oc.cycle.good_paths[0]), (std::vector<Label>{s + 2 * i - 1, s + 2 * i}));
  }
}

TEST(LabelAllTest, FirstPropagationStep) {
  // Used labels after initialization are [3s]; the closing arc labeled 1
  // borders P^1_{n_1-1}, which takes the next labels from 3s+1.
  const Built b = build(three_k5());
  const LabelingResult r = label_all(b.g, b.cycles, b.dec);
  ASSERT_FALSE(r.steps.empty());
  const PropagationStep& first = r.steps.front();
  EXPECT_EQ(first.component, 0);
  EXPECT_EQ(first.frontier_label, 1);
  EXPECT_EQ(first.path, 5 - 1);
  EXPECT_EQ(first.first_label, 3 * 3 + 1);
  EXPECT_TRUE(r.ties.empty());
}

TEST(LabelAllTest, EvenComponentsUseTheirOwnRange) {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const Built b = build(family(2 + static_cast<std::int32_t>(seed % 3), 3, 2, seed));
    const LabelingResult r = label_all(b.g, b.cycles, b.dec);
    for (std::int32_t i = b.dec.odd_count; i < b.dec.size(); ++i) {
      std::vector<Label> labels = r.arc_labels[static_cast<std::size_t>(i)];
      std::sort(labels.begin(), labels.end());
      std::vector<Label> want;
      for (Label l = b.dec.labels_before(i) + 1; l <= b.dec.prefix_sums[static_cast<std::size_t>(i)]; ++l) {
        want.push_back(l);
      }
      EXPECT_EQ(labels, want) << "component " << i;
      const OrientedCycle& oc = b.cycles[static_cast<std::size_t>(i)];
      const Label base = b.dec.labels_before(i);
      EXPECT_EQ(r.arc_labels[static_cast<std::size_t>(i)][static_cast<std::size_t>(oc.cycle.closing_arc)], base + 1);
      EXPECT_EQ(along_labels(oc, r.arc_labels[static_cast<std::size_t>(i)], oc.cycle.good_paths[0]),
                (std::vector<Label>{base + 2, base + 3}));
    }
  }
}

TEST(LabelAllTest, PoolDisciplineAndBijection) {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    const Built b = build(family(2 + static_cast<std::int32_t>(seed % 3), 3 + static_cast<std::int32_t>(seed % 3),
                                 static_cast<std::int32_t>(seed % 3), seed));
    const LabelingResult r = label_all(b.g, b.cycles, b.dec);
    EXPECT_TRUE(is_bijective_labeling(r.graph_labeling.label));
    EXPECT_TRUE(r.ties.empty());

    // Each batch continues right where the previous one in its pool ended.
    const std::int32_t s = b.dec.odd_count;
    Label odd_next = 3 * s + 1;
    std::map<std::int32_t, Label> even_next;
    for (std::int32_t i = s; i < b.dec.size(); ++i) even_next[i] = b.dec.labels_before(i) + 4;
    for (const PropagationStep& step : r.steps) {
      Label& next = step.component < s ? odd_next : even_next[step.component];
      EXPECT_EQ(step.first_label, next);
      next += step.arc_count;
    }
    EXPECT_EQ(odd_next, b.dec.labels_before(s) + 1);

    // Every good path carries consecutive labels increasing along its arcs.
    for (std::size_t i = 0; i < b.cycles.size(); ++i) {
      for (const GoodPath& p : b.cycles[i].cycle.good_paths) {
        const auto labels = along_labels(b.cycles[i], r.arc_labels[i], p);
        for (std::size_t k = 1; k < labels.size(); ++k) EXPECT_EQ(labels[k], labels[k - 1] + 1);
      }
    }
  }
}

TEST(SeenPairsTest, FirstRealVertexOfOddComponents) {
  const Built b = build(family(3, 4, 1, 3));
  const LabelingResult r = label_all(b.g, b.cycles, b.dec);
  const auto pairs = seen_pairs(b.cycles, r);
  const std::int32_t s = b.dec.odd_count;
  for (const SeenPair& sp : pairs) {
    EXPECT_LT(sp.x, sp.y);
    if (sp.name == 1 && sp.component < s) {
      const std::int32_t i = sp.component + 1;
      EXPECT_EQ(sp.x, i);
      EXPECT_EQ(sp.y, s + 2 * i - 1);
    }
  }
  EXPECT_EQ(static_cast<std::int32_t>(pairs.size()), b.g.vertex_count());
}

TEST(SeenPairsTest, ImaginaryPositionsSeeConsecutiveLabelsAndLabelsAppearTwice) {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const Built b = build(family(2 + static_cast<std::int32_t>(seed % 3), 3, 1, seed));
    const LabelingResult r = label_all(b.g, b.cycles, b.dec);
    std::map<Label, int> appearances;
    for (std::size_t i = 0; i < b.cycles.size(); ++i) {
      const ExpandedCycle& ec = b.cycles[i].cycle;
      for (std::int32_t p = 0; p < ec.length(); ++p) {
        const Label a = r.arc_labels[i][static_cast<std::size_t>(p)];
        const Label c = r.arc_labels[i][static_cast<std::size_t>(ec.prev_position(p))];
        ++appearances[a];
        ++appearances[c];
        if (!ec.real[static_cast<std::size_t>(p)]) EXPECT_EQ(std::max(a, c), std::min(a, c) + 1);
      }
    }
    EXPECT_EQ(static_cast<std::int32_t>(appearances.size()), b.g.edge_count());
    for (const auto& [label, count] : appearances) EXPECT_EQ(count, 2) << label;
  }
}

TEST(LabelAllTest, RejectsBrokenPreconditions) {
  Built b = build(family(2, 3, 1, 4));
  std::vector<OrientedCycle> swapped = b.cycles;
  std::swap(swapped.front(), swapped.back());
  EXPECT_THROW(label_all(b.g, swapped, b.dec), Error);

  std::vector<OrientedCycle> unoriented = b.cycles;
  unoriented[1].along.clear();
  EXPECT_THROW(label_all(b.g, unoriented, b.dec), Error);

  std::vector<OrientedCycle> missing(b.cycles.begin(), b.cycles.end() - 1);
  EXPECT_THROW(label_all(b.g, missing, b.dec), Error);

  std::vector<OrientedCycle> wrong_parity = b.cycles;
  wrong_parity[0].parity = Parity::kEven;
  EXPECT_THROW(label_all(b.g, wrong_parity, b.dec), Error);
}

TEST(LabelAllTest, Deterministic) {
  const Built b = build(family(4, 5, 2, 99));
  EXPECT_EQ(label_all(b.g, b.cycles, b.dec).graph_labeling, label_all(b.g, b.cycles, b.dec).graph_labeling);
}

}  // namespace
}  // namespace antimagic
