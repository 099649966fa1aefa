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

#include <optional>
#include <vector>

#include "gossipft/folded_path.hpp"

namespace gossipft {

/// Finds `count` pairwise edge-disjoint walks from source to target whose
/// total folded number is as small as possible; ties go to the smaller
/// total length. Returns nullopt when fewer than `count` edge-disjoint
/// walks exist. The result is sorted by the label of each walk's last
/// call. For source == target the family is empty.
///
/// This is an exact search: a min-cost flow on the graph whose states are
/// "arrived at v by call c", where stepping onto a call with a label not
/// above the arrival label costs one fold.
std::optional<std::vector<FoldedPath>> min_fold_family(const CallSchedule& g, NodeId source,
                                                       NodeId target, std::size_t count);

}  // namespace gossipft
