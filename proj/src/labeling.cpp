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
#include <queue>
#include <string>
#include <tuple>

#include "antimagic/error.hpp"

namespace antimagic {

LabelPool::LabelPool(Label first, Label last)
    : first_(first), last_(last), used_(static_cast<std::size_t>(std::max<Label>(0, last - first + 1)), false) {}

void LabelPool::take(Label label) {
  if (label < first_ || label > last_) {
    throw Error(ErrorCode::kInternal, "label " + std::to_string(label) + " outside its pool");
  }
  const auto idx = static_cast<std::size_t>(label - first_);
  if (used_[idx]) throw Error(ErrorCode::kInternal, "label " + std::to_string(label) + " used twice");
  used_[idx] = true;
  ++used_count_;
}

std::vector<Label> LabelPool::take_smallest(std::int32_t k) {
  std::vector<Label> out;
  while (static_cast<std::int32_t>(out.size()) < k) {
    while (cursor_ < used_.size() && used_[cursor_]) ++cursor_;
    if (cursor_ == used_.size()) throw Error(ErrorCode::kInternal, "label pool exhausted");
    used_[cursor_] = true;
    ++used_count_;
    out.push_back(first_ + static_cast<Label>(cursor_));
  }
  return out;
}

bool LabelPool::used(Label label) const {
  return label >= first_ && label <= last_ && used_[static_cast<std::size_t>(label - first_)];
}

bool LabelPool::used_is_prefix() const {
  return std::all_of(used_.begin(), used_.begin() + static_cast<std::ptrdiff_t>(used_count_),
                     [](bool b) { return b; });
}

namespace {

// Unit 0 is the closing arc, unit l is P_l.
struct CycleState {
  const OrientedCycle* oc = nullptr;
  std::vector<std::int32_t> arc_unit;
  std::vector<std::int32_t> name_of_position;  // l for real positions, 0 otherwise
  std::vector<bool> unit_labeled;
  std::vector<Label>* labels = nullptr;

  bool arc_labeled(std::int32_t arc) const {
    return unit_labeled[static_cast<std::size_t>(arc_unit[static_cast<std::size_t>(arc)])];
  }
};

CycleState make_state(const OrientedCycle& oc, std::vector<Label>& labels) {
  const ExpandedCycle& ec = oc.cycle;
  CycleState st;
  st.oc = &oc;
  st.labels = &labels;
  st.arc_unit.assign(static_cast<std::size_t>(ec.length()), -1);
  st.arc_unit[static_cast<std::size_t>(ec.closing_arc)] = 0;
  for (std::size_t idx = 0; idx < ec.good_paths.size(); ++idx) {
    const GoodPath& p = ec.good_paths[idx];
    for (std::int32_t k = 0, arc = p.first_arc; k < p.arc_count; ++k, arc = ec.next_position(arc)) {
      st.arc_unit[static_cast<std::size_t>(arc)] = static_cast<std::int32_t>(idx + 1);
    }
  }
  if (std::find(st.arc_unit.begin(), st.arc_unit.end(), -1) != st.arc_unit.end()) {
    throw Error(ErrorCode::kInternal, "good paths do not cover the cycle");
  }
  st.name_of_position.assign(static_cast<std::size_t>(ec.length()), 0);
  for (std::size_t l = 0; l < ec.real_positions.size(); ++l) {
    st.name_of_position[static_cast<std::size_t>(ec.real_positions[l])] = static_cast<std::int32_t>(l + 1);
  }
  st.unit_labeled.assign(ec.good_paths.size() + 1, false);
  labels.assign(static_cast<std::size_t>(ec.length()), 0);
  return st;
}

// Arcs of a unit in the order of its orientation.
std::vector<std::int32_t> arcs_along(const OrientedCycle& oc, std::int32_t unit) {
  const ExpandedCycle& ec = oc.cycle;
  std::vector<std::int32_t> arcs;
  if (unit == 0) {
    arcs.push_back(ec.closing_arc);
    return arcs;
  }
  const GoodPath& p = ec.good_paths[static_cast<std::size_t>(unit - 1)];
  for (std::int32_t k = 0, arc = p.first_arc; k < p.arc_count; ++k, arc = ec.next_position(arc)) {
    arcs.push_back(arc);
  }
  if (!oc.along[static_cast<std::size_t>(p.first_arc)]) std::reverse(arcs.begin(), arcs.end());
  return arcs;
}

void label_unit(CycleState& st, std::int32_t unit, std::span<const Label> values) {
  const auto arcs = arcs_along(*st.oc, unit);
  if (arcs.size() != values.size()) throw Error(ErrorCode::kInternal, "label batch size mismatch");
  for (std::size_t k = 0; k < arcs.size(); ++k) (*st.labels)[static_cast<std::size_t>(arcs[k])] = values[k];
  st.unit_labeled[static_cast<std::size_t>(unit)] = true;
}

struct Neighbor {
  std::int32_t unit;
  std::int32_t shared_position;
};

// Unlabeled units sharing an endpoint with `arc`. Since whole paths are
// labeled at once, such an endpoint is always a real position.
std::vector<Neighbor> unlabeled_neighbors(const CycleState& st, std::int32_t arc) {
  const ExpandedCycle& ec = st.oc->cycle;
  std::vector<Neighbor> out;
  const std::int32_t before = ec.prev_position(arc);
  const std::int32_t after = ec.next_position(arc);
  if (!st.arc_labeled(before)) out.push_back({st.arc_unit[static_cast<std::size_t>(before)], arc});
  if (!st.arc_labeled(after)) out.push_back({st.arc_unit[static_cast<std::size_t>(after)], after});
  if (out.size() == 2 && out[0].unit == out[1].unit) out.pop_back();
  return out;
}

using Candidate = std::tuple<Label, std::int32_t, std::int32_t>;  // label, state index, arc

// Greedy frontier propagation over `states` until they are fully labeled.
void propagate(std::vector<CycleState>& states, std::span<const std::int32_t> component_index,
               LabelPool& pool, LabelingResult& result) {
  std::priority_queue<Candidate, std::vector<Candidate>, std::greater<>> frontier;
  std::size_t remaining = 0;
  for (std::size_t s = 0; s < states.size(); ++s) {
    const CycleState& st = states[s];
    for (std::int32_t arc = 0; arc < st.oc->cycle.length(); ++arc) {
      if (st.arc_labeled(arc)) {
        frontier.emplace((*st.labels)[static_cast<std::size_t>(arc)], static_cast<std::int32_t>(s), arc);
      }
    }
    remaining += static_cast<std::size_t>(std::count(st.unit_labeled.begin(), st.unit_labeled.end(), false));
  }

  while (remaining > 0) {
    if (frontier.empty()) throw Error(ErrorCode::kInternal, "frontier emptied before labeling finished");
    const auto [label, s, arc] = frontier.top();
    frontier.pop();
    CycleState& st = states[static_cast<std::size_t>(s)];
    auto neighbors = unlabeled_neighbors(st, arc);
    if (neighbors.empty()) continue;

    const std::int32_t comp = component_index[static_cast<std::size_t>(s)];
    if (neighbors.size() == 2) {
      auto name = [&](const Neighbor& nb) {
        return st.name_of_position[static_cast<std::size_t>(nb.shared_position)];
      };
      if (name(neighbors[1]) < name(neighbors[0])) std::swap(neighbors[0], neighbors[1]);
      result.ties.push_back({comp, label, neighbors[0].unit, neighbors[1].unit});
    }
    const std::int32_t unit = neighbors[0].unit;
    const auto arcs = arcs_along(*st.oc, unit);
    const auto values = pool.take_smallest(static_cast<std::int32_t>(arcs.size()));
    label_unit(st, unit, values);
    --remaining;
    result.steps.push_back({comp, label, unit, values.front(), static_cast<std::int32_t>(values.size())});

    frontier.emplace((*st.labels)[static_cast<std::size_t>(arcs.front())], s, arcs.front());
    frontier.emplace((*st.labels)[static_cast<std::size_t>(arcs.back())], s, arcs.back());
    if (neighbors.size() == 2) frontier.emplace(label, s, arc);
  }
}

void initialize_anchor(CycleState& st, LabelPool& pool, Label closing, Label first_path_start) {
  pool.take(closing);
  pool.take(first_path_start);
  pool.take(first_path_start + 1);
  const Label closing_values[] = {closing};
  const Label path_values[] = {first_path_start, first_path_start + 1};
  label_unit(st, 0, closing_values);
  label_unit(st, 1, path_values);
}

}  // namespace

LabelingResult label_all(const Graph& g, std::span<const OrientedCycle> cycles,
                         const ComponentDecomposition& decomposition) {
  const std::int32_t t = decomposition.size();
  const std::int32_t s = decomposition.odd_count;
  if (static_cast<std::int32_t>(cycles.size()) != t) {
    throw Error(ErrorCode::kPrecondition, "one oriented cycle per component is required");
  }
  for (std::int32_t i = 0; i < t; ++i) {
    const Component& comp = decomposition.components[static_cast<std::size_t>(i)];
    const OrientedCycle& oc = cycles[static_cast<std::size_t>(i)];
    if (comp.odd != (i < s)) throw Error(ErrorCode::kPrecondition, "odd components must come first");
    if (i > 0 && i < s &&
        decomposition.components[static_cast<std::size_t>(i - 1)].vertex_count() > comp.vertex_count()) {
      throw Error(ErrorCode::kPrecondition, "odd components must be in ascending size");
    }
    if (oc.cycle.length() != comp.edge_count() || oc.cycle.real_count() != comp.vertex_count()) {
      throw Error(ErrorCode::kPrecondition, "cycle " + std::to_string(i) + " does not match its component");
    }
    if (oc.along.size() != static_cast<std::size_t>(oc.cycle.length())) {
      throw Error(ErrorCode::kPrecondition, "cycle " + std::to_string(i) + " is not oriented");
    }
    if ((oc.parity == Parity::kOdd) != comp.odd) {
      throw Error(ErrorCode::kPrecondition, "cycle " + std::to_string(i) + " oriented with the wrong parity");
    }
  }

  LabelingResult result;
  result.arc_labels.resize(static_cast<std::size_t>(t));

  // Odd components share [N_s].
  if (s > 0) {
    LabelPool pool(1, decomposition.labels_before(s));
    std::vector<CycleState> states;
    std::vector<std::int32_t> index;
    for (std::int32_t i = 0; i < s; ++i) {
      states.push_back(make_state(cycles[static_cast<std::size_t>(i)], result.arc_labels[static_cast<std::size_t>(i)]));
      index.push_back(i);
    }
    for (std::int32_t i = 1; i <= s; ++i) {
      initialize_anchor(states[static_cast<std::size_t>(i - 1)], pool, i, s + 2 * i - 1);
    }
    propagate(states, index, pool, result);
  }

  // Even components, one at a time, from {N_s+1, ..., N_t}.
  if (t > s) {
    LabelPool pool(decomposition.labels_before(s) + 1, decomposition.labels_before(t));
    for (std::int32_t i = s; i < t; ++i) {
      std::vector<CycleState> states;
      states.push_back(make_state(cycles[static_cast<std::size_t>(i)], result.arc_labels[static_cast<std::size_t>(i)]));
      const std::int32_t index[] = {i};
      const Label base = decomposition.labels_before(i);
      initialize_anchor(states.front(), pool, base + 1, base + 2);
      propagate(states, index, pool, result);
    }
  }

  // Transfer arc labels and directions onto the edges of g.
  const auto m = static_cast<std::size_t>(g.edge_count());
  OrientationAndLabeling& ol = result.graph_labeling;
  ol.forward.assign(m, 0);
  ol.label.assign(m, 0);
  std::vector<bool> seen(m, false);
  for (std::int32_t i = 0; i < t; ++i) {
    const OrientedCycle& oc = cycles[static_cast<std::size_t>(i)];
    for (std::int32_t arc = 0; arc < oc.cycle.length(); ++arc) {
      const auto e = static_cast<std::size_t>(oc.cycle.arc_edge[static_cast<std::size_t>(arc)]);
      if (e >= m || seen[e]) throw Error(ErrorCode::kInternal, "arc-to-edge map is not a bijection");
      seen[e] = true;
      const Vertex tail = oc.cycle.positions[static_cast<std::size_t>(oc.tail(arc))];
      ol.forward[e] = tail == g.edges()[e].u ? 1 : 0;
      ol.label[e] = result.arc_labels[static_cast<std::size_t>(i)][static_cast<std::size_t>(arc)];
    }
  }
  if (std::find(seen.begin(), seen.end(), false) != seen.end()) {
    throw Error(ErrorCode::kInternal, "some edge is not on any expanded cycle");
  }
  return result;
}

std::vector<SeenPair> seen_pairs(std::span<const OrientedCycle> cycles, const LabelingResult& labeling) {
  std::vector<SeenPair> out;
  for (std::size_t i = 0; i < cycles.size(); ++i) {
    const ExpandedCycle& ec = cycles[i].cycle;
    const auto& labels = labeling.arc_labels[i];
    for (std::size_t l = 0; l < ec.real_positions.size(); ++l) {
      const std::int32_t p = ec.real_positions[l];
      const Label a = labels[static_cast<std::size_t>(p)];
      const Label b = labels[static_cast<std::size_t>(ec.prev_position(p))];
      out.push_back({static_cast<std::int32_t>(i), static_cast<std::int32_t>(l + 1),
                     ec.positions[static_cast<std::size_t>(p)], std::min(a, b), std::max(a, b)});
    }
  }
  return out;
}

}  // namespace antimagic
