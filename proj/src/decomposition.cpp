// Copyright 2026 The gossipft Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "gossipft/decomposition.hpp"

#include <algorithm>
#include <limits>
#include <string>

namespace gossipft {

std::vector<std::size_t> Decomposition::block_sizes() const {
  std::vector<std::size_t> sizes;
  sizes.reserve(blocks.size());
  for (const auto& b : blocks) sizes.push_back(b.size());
  return sizes;
}

Decomposition decompose_by_label(const CallSchedule& g, std::span<const Label> block_last_labels) {
  if (block_last_labels.empty()) throw ScheduleError("decompose_by_label: no blocks given");
  for (std::size_t i = 0; i < block_last_labels.size(); ++i) {
    if (block_last_labels[i] == 0 || (i > 0 && block_last_labels[i] <= block_last_labels[i - 1])) {
      throw ScheduleError("decompose_by_label: boundaries must be positive and strictly increasing");
    }
  }
  if (block_last_labels.back() < g.max_label()) {
    throw ScheduleError("decompose_by_label: boundaries stop at label " +
                        std::to_string(block_last_labels.back()) + " but the schedule runs to " +
                        std::to_string(g.max_label()));
  }
  Decomposition d;
  d.blocks.resize(block_last_labels.size());
  std::size_t block = 0;
  for (CallId id = 0; id < g.size(); ++id) {
    while (g.call(id).label > block_last_labels[block]) ++block;
    d.blocks[block].push_back(id);
  }
  d.r.assign(d.blocks.size(), 0);
  return d;
}

std::vector<std::size_t> block_index(const CallSchedule& g, const Decomposition& d) {
  constexpr std::size_t kUnset = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> index(g.size(), kUnset);
  std::size_t covered = 0;
  for (std::size_t i = 0; i < d.blocks.size(); ++i) {
    for (CallId id : d.blocks[i]) {
      if (id >= g.size()) throw ScheduleError("decomposition names an unknown call");
      if (index[id] != kUnset) throw ScheduleError("decomposition blocks overlap");
      index[id] = i;
      ++covered;
    }
  }
  if (covered != g.size()) throw ScheduleError("decomposition blocks do not cover every call");

  Label previous_max = 0;
  for (const auto& block : d.blocks) {
    if (block.empty()) continue;
    Label lo = std::numeric_limits<Label>::max();
    Label hi = 0;
    for (CallId id : block) {
      lo = std::min(lo, g.call(id).label);
      hi = std::max(hi, g.call(id).label);
    }
    if (lo <= previous_max) throw ScheduleError("decomposition blocks are not label-ordered");
    previous_max = hi;
  }
  if (!d.r.empty() && d.r.size() != d.blocks.size()) {
    throw ScheduleError("decomposition r must have one entry per block");
  }
  return index;
}

}  // namespace gossipft
