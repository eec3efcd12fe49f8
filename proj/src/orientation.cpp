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

#include "antimagic/orientation.hpp"

namespace antimagic {

ArcDirections orient(const ExpandedCycle& ec, Parity parity) {
  ArcDirections along(static_cast<std::size_t>(ec.length()), 0);
  along[static_cast<std::size_t>(ec.closing_arc)] = 1;
  for (std::size_t idx = 0; idx < ec.good_paths.size(); ++idx) {
    const std::size_t l = idx + 1;
    const bool odd_l = l % 2 == 1;
    const bool forward = parity == Parity::kOdd ? odd_l : !odd_l;
    const GoodPath& path = ec.good_paths[idx];
    for (std::int32_t k = 0, arc = path.first_arc; k < path.arc_count;
         ++k, arc = ec.next_position(arc)) {
      along[static_cast<std::size_t>(arc)] = forward ? 1 : 0;
    }
  }
  return along;
}

std::int32_t OrientedCycle::out_degree(std::int32_t position) const {
  const std::int32_t before = cycle.prev_position(position);
  return (tail(position) == position ? 1 : 0) + (tail(before) == position ? 1 : 0);
}

}  // namespace antimagic
