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

#pragma once

#include <span>
#include <vector>

#include "gossipft/schedule.hpp"

namespace gossipft {

/// A walk split into maximal strictly ascending segments.
///
/// Segment boundaries sit exactly where the next call's label does not
/// exceed the previous one, so the folded number is the count of such
/// descents. Calls are referenced by id because endpoint pairs are
/// ambiguous in a multigraph. No call appears twice in one walk.
class FoldedPath {
 public:
  FoldedPath() = default;

  const std::vector<NodeId>& vertices() const { return vertices_; }
  const std::vector<CallId>& edges() const { return edges_; }
  // Indices into edges() where segments 2..s+1 begin.
  const std::vector<std::size_t>& segment_starts() const { return segment_starts_; }

  NodeId source() const { return vertices_.front(); }
  NodeId target() const { return vertices_.back(); }
  std::size_t length() const { return edges_.size(); }
  std::size_t folded_number() const { return segment_starts_.size(); }
  bool ascending() const { return segment_starts_.empty(); }

  std::size_t segment_count() const { return edges_.empty() ? 0 : segment_starts_.size() + 1; }
  // Edges of segment j (0-based).
  std::span<const CallId> segment(std::size_t j) const;

  friend bool operator==(const FoldedPath&, const FoldedPath&) = default;

 private:
  friend FoldedPath fold_walk(const CallSchedule&, NodeId, std::span<const CallId>);

  std::vector<NodeId> vertices_;
  std::vector<CallId> edges_;
  std::vector<std::size_t> segment_starts_;
};

// Walks the calls from `start` and partitions them into ascending
// segments. Throws ScheduleError on a call that does not continue the walk
// or is repeated.
FoldedPath fold_walk(const CallSchedule& g, NodeId start, std::span<const CallId> edges);

// As above, additionally checking an explicit vertex sequence.
FoldedPath fold_walk(const CallSchedule& g, std::span<const NodeId> vertices,
                     std::span<const CallId> edges);

// P_i: the copy of `path` inside replicate(g, h).
FoldedPath copy_of_path(const CallSchedule& g, const FoldedPath& path, std::size_t h,
                        std::size_t i);

// P(k) = P_k^(1) . P_{k+1}^(2) ... P_{k+s}^(s+1), an ascending walk in
// replicate(g, h). Requires 1 <= k and k + s <= h.
FoldedPath lift_folded_path(const CallSchedule& g, const FoldedPath& path, std::size_t h,
                            std::size_t k);

bool pairwise_edge_disjoint(std::span<const FoldedPath> paths);

std::size_t total_folded_number(std::span<const FoldedPath> paths);

}  // namespace gossipft
