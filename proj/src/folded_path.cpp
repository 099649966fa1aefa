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

#include "gossipft/folded_path.hpp"

#include <string>
#include <unordered_set>

namespace gossipft {

std::span<const CallId> FoldedPath::segment(std::size_t j) const {
  if (j >= segment_count()) throw std::out_of_range("FoldedPath::segment");
  const std::size_t first = j == 0 ? 0 : segment_starts_[j - 1];
  const std::size_t last = j < segment_starts_.size() ? segment_starts_[j] : edges_.size();
  return std::span<const CallId>(edges_).subspan(first, last - first);
}

FoldedPath fold_walk(const CallSchedule& g, NodeId start, std::span<const CallId> edges) {
  if (start >= g.n()) throw ScheduleError("walk starts outside the schedule");
  FoldedPath path;
  path.vertices_.push_back(start);
  std::unordered_set<CallId> seen;
  NodeId at = start;
  Label previous = 0;
  for (std::size_t idx = 0; idx < edges.size(); ++idx) {
    const CallId id = edges[idx];
    if (id >= g.size()) throw ScheduleError("walk uses unknown call " + std::to_string(id));
    if (!seen.insert(id).second) throw ScheduleError("walk repeats call " + std::to_string(id));
    const Call& c = g.call(id);
    if (!c.touches(at)) {
      throw ScheduleError("walk is disconnected at step " + std::to_string(idx));
    }
    if (idx > 0 && c.label <= previous) path.segment_starts_.push_back(idx);
    previous = c.label;
    at = c.other(at);
    path.vertices_.push_back(at);
    path.edges_.push_back(id);
  }
  return path;
}

FoldedPath fold_walk(const CallSchedule& g, std::span<const NodeId> vertices,
                     std::span<const CallId> edges) {
  if (vertices.size() != edges.size() + 1) {
    throw ScheduleError("walk needs exactly one more vertex than edges");
  }
  FoldedPath path = fold_walk(g, vertices.front(), edges);
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (path.vertices()[i] != vertices[i]) {
      throw ScheduleError("walk vertex " + std::to_string(i) + " does not match its calls");
    }
  }
  return path;
}

FoldedPath copy_of_path(const CallSchedule& g, const FoldedPath& path, std::size_t h,
                        std::size_t i) {
  const std::vector<CallId> ids = copy_of_subset(g, path.edges(), h, i);
  const CallSchedule big = replicate(g, h);
  return fold_walk(big, path.source(), ids);
}

FoldedPath lift_folded_path(const CallSchedule& g, const FoldedPath& path, std::size_t h,
                            std::size_t k) {
  const std::size_t s = path.folded_number();
  if (k < 1 || k + s > h) {
    throw ScheduleError("lift_folded_path: need 1 <= k and k + s <= h (k=" + std::to_string(k) +
                        ", s=" + std::to_string(s) + ", h=" + std::to_string(h) + ")");
  }
  std::vector<CallId> ids;
  ids.reserve(path.length());
  for (std::size_t j = 0; j < path.segment_count(); ++j) {
    for (CallId id : path.segment(j)) ids.push_back(id + (k + j - 1) * g.size());
  }
  return fold_walk(replicate(g, h), path.source(), ids);
}

bool pairwise_edge_disjoint(std::span<const FoldedPath> paths) {
  std::unordered_set<CallId> used;
  for (const auto& p : paths) {
    for (CallId id : p.edges()) {
      if (!used.insert(id).second) return false;
    }
  }
  return true;
}

std::size_t total_folded_number(std::span<const FoldedPath> paths) {
  std::size_t total = 0;
  for (const auto& p : paths) total += p.folded_number();
  return total;
}

}  // namespace gossipft
