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

#include <vector>

#include "gossipft/decomposition.hpp"
#include "gossipft/folded_path.hpp"
#include "gossipft/schedule.hpp"

namespace gossipft {

// Hub u, second hub u' (even n only), or rim vertex v_i / v'_i with
// i in 1..rim_count. Serialized as u -> 0, v_i -> 2i-1, v'_i -> 2i,
// u' -> n-1.
struct WheelVertex {
  enum class Kind { kHub, kHubPrime, kRim };

  Kind kind = Kind::kHub;
  std::size_t index = 0;
  bool primed = false;

  static WheelVertex hub() { return {Kind::kHub, 0, false}; }
  static WheelVertex hub_prime() { return {Kind::kHubPrime, 0, false}; }
  static WheelVertex rim(std::size_t i, bool primed) { return {Kind::kRim, i, primed}; }

  friend bool operator==(const WheelVertex&, const WheelVertex&) = default;
};

struct WheelParams {
  std::size_t n = 0;

  bool even() const { return n % 2 == 0; }
  // Number of (v_i, v'_i) pairs on the rim.
  std::size_t rim_count() const { return even() ? (n - 2) / 2 : (n - 1) / 2; }
};

NodeId wheel_node(std::size_t n, WheelVertex v);
WheelVertex wheel_vertex(std::size_t n, NodeId id);

struct WheelScheme {
  CallSchedule schedule;
  Decomposition decomposition;
};

/// Odd n >= 5. Labels: chords (v_i,v'_i) 1, (v'_i,u) 2, (v_i,u) 3,
/// (v'_i,v_{i+1}) 4; blocks {1}, {2,3}, {4}; p = q = 3, r = (1,1,1).
WheelScheme generate_wheel_odd(std::size_t n);

/// Even n >= 6. Labels: chords 1, (v'_i,u) 2, e_a = (u,u') 3, (v_i,u') 4,
/// e_b = (u,u') 5, (v'_i,v_{i+1}) 6; blocks {1}, {2..5}, {6}; p = 3,
/// r = (1,1,1), q = 3 for n <= 10 and q = 4 from n = 12.
WheelScheme generate_wheel_even(std::size_t n);

WheelScheme generate_wheel(std::size_t n);

// True when the odd-n closed-form catalogue covers this ordered pair.
bool wheel_template_applies(std::size_t n, WheelVertex source, WheelVertex target);

/// Three pairwise call-disjoint folded ascending walks from source to
/// target with the smallest total folded number (at most 3 for odd n). Uses the closed-form
/// catalogue where it applies and the exact minimum-fold search
/// otherwise (near rim pairs, the missing hub directions, and even n).
std::vector<FoldedPath> wheel_path_catalogue(const WheelScheme& wheel, WheelVertex source,
                                             WheelVertex target);

}  // namespace gossipft
