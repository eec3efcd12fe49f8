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

#include "antimagic/verifier.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <sstream>

#include "antimagic/error.hpp"

namespace antimagic {

SumReport check_antimagic(const Graph& g, const OrientationAndLabeling& ol) {
  return vertex_sums(g, ol);
}

bool ConstructionDiagnostics::hard_pass() const {
  return std::all_of(items.begin(), items.end(), [](const CheckItem& c) { return c.pass || !c.hard; });
}

bool ConstructionDiagnostics::all_pass() const {
  return std::all_of(items.begin(), items.end(), [](const CheckItem& c) { return c.pass; });
}

const CheckItem* ConstructionDiagnostics::find(std::string_view name) const {
  for (const CheckItem& c : items) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

std::vector<std::vector<Sum>> cycle_position_sums(std::span<const OrientedCycle> cycles,
                                                  const LabelingResult& labeling) {
  std::vector<std::vector<Sum>> sums(cycles.size());
  for (std::size_t i = 0; i < cycles.size(); ++i) {
    const OrientedCycle& oc = cycles[i];
    sums[i].assign(static_cast<std::size_t>(oc.cycle.length()), 0);
    for (std::int32_t arc = 0; arc < oc.cycle.length(); ++arc) {
      const Label l = labeling.arc_labels[i][static_cast<std::size_t>(arc)];
      sums[i][static_cast<std::size_t>(oc.head(arc))] += l;
      sums[i][static_cast<std::size_t>(oc.tail(arc))] -= l;
    }
  }
  return sums;
}

namespace {

class ItemBuilder {
 public:
  ItemBuilder(std::string name, bool hard) { item_.name = std::move(name); item_.hard = hard; }

  // Records one comparison; keeps the first failure's description.
  template <class Describe>
  void expect(bool ok, Describe&& describe) {
    ++item_.checked;
    if (!ok && item_.pass) {
      item_.pass = false;
      item_.counterexample = describe();
    }
  }

  CheckItem done() { return std::move(item_); }

 private:
  CheckItem item_;
};

std::string join(std::initializer_list<std::pair<const char*, std::int64_t>> kv) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, v] : kv) {
    os << (first ? "" : " ") << k << "=" << v;
    first = false;
  }
  return os.str();
}

}  // namespace

ConstructionDiagnostics check_construction(const Graph& g, std::span<const OrientedCycle> cycles,
                                           const ComponentDecomposition& decomposition,
                                           const LabelingResult& labeling) {
  const std::int32_t t = decomposition.size();
  const std::int32_t s = decomposition.odd_count;
  if (static_cast<std::int32_t>(cycles.size()) != t ||
      static_cast<std::int32_t>(labeling.arc_labels.size()) != t) {
    throw Error(ErrorCode::kPrecondition, "construction metadata missing for some component");
  }
  const bool regime = s >= 3;
  const auto sums_d = cycle_position_sums(cycles, labeling);
  const auto real_sum = [&](std::int32_t i, std::int32_t l) {
    const ExpandedCycle& ec = cycles[static_cast<std::size_t>(i)].cycle;
    return sums_d[static_cast<std::size_t>(i)]
                 [static_cast<std::size_t>(ec.real_positions[static_cast<std::size_t>(l - 1)])];
  };

  ConstructionDiagnostics diag;
  diag.odd_components = s;

  {
    ItemBuilder item("first_vertex_sums", regime);
    for (std::int32_t i = 1; i <= s; ++i) {
      const Sum got = real_sum(i - 1, 1);
      const Sum want = -i - s + 1;
      item.expect(got == want, [&] { return join({{"component", i}, {"sum", got}, {"expected", want}}); });
    }
    diag.items.push_back(item.done());
  }

  {
    ItemBuilder item("y_lower_bound", regime);
    for (std::int32_t i = 0; i < s; ++i) {
      const std::int32_t n = cycles[static_cast<std::size_t>(i)].cycle.real_count();
      for (std::int32_t l = 2; l <= n; ++l) {
        const Sum got = real_sum(i, l);
        item.expect(std::llabs(got) >= 3 * s + 1,
                    [&] { return join({{"component", i + 1}, {"l", l}, {"sum", got}, {"bound", 3 * s + 1}}); });
      }
    }
    diag.items.push_back(item.done());
  }

  {
    // Classes: all odd components together, then each even component alone.
    // Strict increase of |S| across consecutive classes.
    ItemBuilder item("class_ordering", regime);
    std::vector<std::pair<Sum, Sum>> ranges;  // (min |S|, max |S|) per class
    auto class_range = [&](std::int32_t from, std::int32_t to) {
      Sum lo = std::numeric_limits<Sum>::max();
      Sum hi = 0;
      for (std::int32_t i = from; i < to; ++i) {
        const std::int32_t n = cycles[static_cast<std::size_t>(i)].cycle.real_count();
        for (std::int32_t l = 1; l <= n; ++l) {
          const Sum a = std::llabs(real_sum(i, l));
          lo = std::min(lo, a);
          hi = std::max(hi, a);
        }
      }
      return std::make_pair(lo, hi);
    };
    if (s > 0) ranges.push_back(class_range(0, s));
    for (std::int32_t j = s; j < t; ++j) ranges.push_back(class_range(j, j + 1));
    for (std::size_t c = 1; c < ranges.size(); ++c) {
      item.expect(ranges[c - 1].second < ranges[c].first, [&] {
        return join({{"class", static_cast<std::int64_t>(c)},
                     {"previous_max", ranges[c - 1].second},
                     {"min", ranges[c].first}});
      });
    }
    diag.items.push_back(item.done());
  }

  {
    ItemBuilder item("cross_component_ordering", regime);
    const auto pairs = seen_pairs(cycles, labeling);
    // x of v^i_l, with i 0-based and l 1-based.
    std::vector<std::size_t> offset(static_cast<std::size_t>(t) + 1, 0);
    for (std::int32_t i = 0; i < t; ++i) {
      offset[static_cast<std::size_t>(i + 1)] =
          offset[static_cast<std::size_t>(i)] +
          static_cast<std::size_t>(cycles[static_cast<std::size_t>(i)].cycle.real_count());
    }
    const auto x = [&](std::int32_t i, std::int32_t l) {
      return pairs[offset[static_cast<std::size_t>(i)] + static_cast<std::size_t>(l - 1)].x;
    };
    for (std::int32_t i = 0; i < s; ++i) {
      const std::int32_t ni = cycles[static_cast<std::size_t>(i)].cycle.real_count();
      for (std::int32_t j = i + 1; j < s; ++j) {
        const std::int32_t nj = cycles[static_cast<std::size_t>(j)].cycle.real_count();
        for (std::int32_t l = 2; l <= (ni + 1) / 2; ++l) {
          const Label a = x(i, ni - l + 2);
          const Label b = x(j, nj - l + 2);
          const Label c = x(i, l);
          const Label d = x(j, l);
          item.expect(a < b && b < c && c < d, [&] {
            return join({{"i", i + 1}, {"j", j + 1}, {"l", l}, {"x_i_left", a}, {"x_j_left", b},
                         {"x_i_right", c}, {"x_j_right", d}});
          });
        }
      }
    }
    diag.items.push_back(item.done());
  }

  {
    ItemBuilder item("imaginary_copies", true);
    for (std::int32_t i = 0; i < t; ++i) {
      const ExpandedCycle& ec = cycles[static_cast<std::size_t>(i)].cycle;
      for (std::int32_t p = 0; p < ec.length(); ++p) {
        if (ec.real[static_cast<std::size_t>(p)]) continue;
        const Sum got = sums_d[static_cast<std::size_t>(i)][static_cast<std::size_t>(p)];
        item.expect(got == -1, [&] { return join({{"component", i + 1}, {"position", p}, {"sum", got}}); });
      }
    }
    diag.items.push_back(item.done());
  }

  {
    ItemBuilder item("real_copy_relation", true);
    const SumReport graph_sums = check_antimagic(g, labeling.graph_labeling);
    for (std::int32_t i = 0; i < t; ++i) {
      const ExpandedCycle& ec = cycles[static_cast<std::size_t>(i)].cycle;
      for (std::int32_t p : ec.real_positions) {
        const Vertex u = ec.positions[static_cast<std::size_t>(p)];
        const Sum sg = graph_sums.sums[static_cast<std::size_t>(u)];
        const Sum sd = sums_d[static_cast<std::size_t>(i)][static_cast<std::size_t>(p)];
        item.expect(sg == sd - (ec.half_degree - 1),
                    [&] { return join({{"vertex", u}, {"graph_sum", sg}, {"cycle_sum", sd}}); });
      }
    }
    diag.items.push_back(item.done());
  }

  {
    ItemBuilder item("outdegree_pattern", true);
    for (std::int32_t i = 0; i < t; ++i) {
      const OrientedCycle& oc = cycles[static_cast<std::size_t>(i)];
      const ExpandedCycle& ec = oc.cycle;
      for (std::int32_t p = 0; p < ec.length(); ++p) {
        const std::int32_t out = oc.out_degree(p);
        bool ok;
        if (!ec.real[static_cast<std::size_t>(p)]) {
          ok = out == 1;
        } else if (oc.parity == Parity::kOdd && p == ec.anchor.b) {
          ok = out == 1;
        } else {
          ok = out == 0 || out == 2;
        }
        item.expect(ok, [&] {
          return join({{"component", i + 1}, {"position", p}, {"real", ec.real[static_cast<std::size_t>(p)]},
                       {"outdegree", out}});
        });
      }
    }
    diag.items.push_back(item.done());
  }

  {
    ItemBuilder item("frontier_uniqueness", false);
    item.expect(labeling.ties.empty(), [&] {
      const FrontierTie& tie = labeling.ties.front();
      return join({{"component", tie.component + 1}, {"frontier_label", tie.frontier_label},
                   {"chosen_path", tie.chosen_path}, {"other_path", tie.other_path}});
    });
    diag.items.push_back(item.done());
  }

  return diag;
}

}  // namespace antimagic
