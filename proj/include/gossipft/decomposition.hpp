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

/// Label-ordered partition of a schedule's calls into blocks
/// F(0)..F(l-1), together with the path parameters used by the
/// replication construction: p paths per ordered pair, total folded
/// number at most q, and r[i] paths whose last call lies in block i.
struct Decomposition {
  std::vector<std::vector<CallId>> blocks;
  std::size_t p = 0;
  std::size_t q = 0;
  std::vector<std::size_t> r;

  std::size_t block_count() const { return blocks.size(); }
  std::vector<std::size_t> block_sizes() const;
};

// Splits g into blocks of consecutive labels. block_last_labels[i] is the
// largest label in block i; the list must be strictly increasing and reach
// max_label(). p, q and r are left for the caller to fill in.
Decomposition decompose_by_label(const CallSchedule& g, std::span<const Label> block_last_labels);

// Block index of every call. Throws ScheduleError unless the blocks
// partition g's calls with strictly increasing labels across blocks.
std::vector<std::size_t> block_index(const CallSchedule& g, const Decomposition& d);

}  // namespace gossipft
