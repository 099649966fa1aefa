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

#include "gossipft/decomposition.hpp"
#include "gossipft/folded_path.hpp"
#include "gossipft/schedule.hpp"

namespace gossipft {

/// Inputs and derived sizes of one replication construction: the output
/// is h full copies of the base followed by blocks F(0)..F(w - h*l).
struct SchemeRecipe {
  CallSchedule base;
  Decomposition decomposition;
  std::size_t k = 0;
  std::size_t w = 0;
  std::size_t h = 0;
  // sum over 0 <= i <= w of |F(i mod l)|
  std::size_t predicted_calls = 0;
};

// Smallest w with sum_{0<=i<=w} r[i mod l] >= k + q + 1.
std::size_t choose_w(const Decomposition& d, std::size_t k);

SchemeRecipe plan_replicated(const CallSchedule& base, const Decomposition& d, std::size_t k);

struct BuiltScheme {
  CallSchedule schedule;
  SchemeRecipe recipe;
};

// Builds h*G + G'. Throws std::logic_error if the call count differs
// from the prediction made before construction.
BuiltScheme build_replicated(const CallSchedule& base, const Decomposition& d, std::size_t k);

/// Number of call-disjoint ascending walks the construction guarantees
/// for one pair from its folded family: each walk with folded number s
/// whose last call lies in a block occurring c times among blocks
/// 0..w contributes max(0, c - s).
std::size_t guaranteed_paths(const CallSchedule& base, const Decomposition& d,
                             std::span<const FoldedPath> family, std::size_t w);

/// Even n >= 2. Replicates W(floor(log2 n), n), or the hypercube when n is
/// a power of two, giving (n/2) ceil(log2 n) + nk/2 calls.
CallSchedule build_knodel_ft(std::size_t n, std::size_t k);

/// Odd n >= 3: the extra node n-1 calls `attach` k+1 times, then the
/// even scheme on nodes 0..n-2 runs, then k+1 more calls to `attach`.
/// The default attach node 0 is Knödel vertex (1,0).
CallSchedule build_knodel_ft_odd(std::size_t n, std::size_t k, NodeId attach = 0);

// Wheel construction for odd n >= 5 or even n >= 6.
CallSchedule build_wheel_ft(std::size_t n, std::size_t k);

}  // namespace gossipft
