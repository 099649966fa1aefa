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

#include <doctest.h>

#include "gossipft/folded_path.hpp"
#include "gossipft/wheel.hpp"

using namespace gossipft;

namespace {

// Path 0-1-2-3-4 with the given labels on consecutive hops.
CallSchedule line(std::vector<Label> labels) {
  std::vector<Call> calls;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    calls.push_back({static_cast<NodeId>(i), static_cast<NodeId>(i + 1), labels[i]});
  }
  return CallSchedule(labels.size() + 1, calls);
}

std::vector<CallId> walk_ids(const CallSchedule& g) {
  std::vector<CallId> ids;
  for (NodeId v = 0; v + 1 < g.n(); ++v) {
    for (CallId id : g.incident(v)) {
      if (g.call(id).touches(v + 1)) ids.push_back(id);
    }
  }
  return ids;
}

}  // namespace

TEST_CASE("folded number counts descents") {
  const CallSchedule up = line({1, 2, 3});
  CHECK(fold_walk(up, 0, walk_ids(up)).folded_number() == 0);
  CHECK(fold_walk(up, 0, walk_ids(up)).ascending());

  const CallSchedule zig = line({2, 1, 3, 1});
  const FoldedPath p = fold_walk(zig, 0, walk_ids(zig));
  CHECK(p.folded_number() == 2);
  CHECK(p.segment_count() == 3);
  CHECK(p.segment(0).size() == 1);
  CHECK(p.segment(1).size() == 2);
  CHECK(p.target() == 4);

  // equal labels in a row also fold
  const CallSchedule flat = line({2, 2});
  CHECK(fold_walk(flat, 0, walk_ids(flat)).folded_number() == 1);
}

TEST_CASE("fold_walk rejects broken walks") {
  const CallSchedule g = line({1, 2, 3});
  const CallId gap[] = {0, 2};
  CHECK_THROWS_AS(fold_walk(g, 0, gap), ScheduleError);
  const CallId twice[] = {0, 0};
  CHECK_THROWS_AS(fold_walk(g, 0, twice), ScheduleError);
  const NodeId wrong[] = {0, 2};
  const CallId first[] = {0};
  CHECK_THROWS_AS(fold_walk(g, wrong, first), ScheduleError);
}

TEST_CASE("wheel catalogue path v_i -3- u -2- v'_{j-1} -4- v_j is 1-folded") {
  const WheelScheme w = generate_wheel_odd(11);
  const CallSchedule& g = w.schedule;
  const NodeId vi = wheel_node(11, WheelVertex::rim(1, false));
  const NodeId vpj = wheel_node(11, WheelVertex::rim(3, true));
  const NodeId vj = wheel_node(11, WheelVertex::rim(4, false));
  const CallId ids[] = {*g.find(vi, 0, 3), *g.find(0, vpj, 2), *g.find(vpj, vj, 4)};
  CHECK(fold_walk(g, vi, ids).folded_number() == 1);
}

TEST_CASE("copies and lifts") {
  const CallSchedule g = line({2, 1, 3});
  const FoldedPath p = fold_walk(g, 0, walk_ids(g));
  REQUIRE(p.folded_number() == 1);

  const FoldedPath p2 = copy_of_path(g, p, 3, 2);
  CHECK(p2.folded_number() == p.folded_number());

  const CallSchedule up = line({1, 2});
  CHECK(lift_folded_path(up, fold_walk(up, 0, walk_ids(up)), 1, 1).ascending());

  const FoldedPath l1 = lift_folded_path(g, p, 2, 1);
  CHECK(l1.ascending());
  CHECK(l1.source() == 0);
  CHECK(l1.target() == 3);

  const FoldedPath a = lift_folded_path(g, p, 3, 1);
  const FoldedPath b = lift_folded_path(g, p, 3, 2);
  CHECK(a.ascending());
  CHECK(b.ascending());
  const FoldedPath both[] = {a, b};
  CHECK(pairwise_edge_disjoint(both));
  CHECK(total_folded_number(both) == 0);

  CHECK_THROWS(lift_folded_path(g, p, 2, 2));
  CHECK_THROWS(lift_folded_path(g, p, 3, 0));
}
