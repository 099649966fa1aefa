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

#include "gossipft/decomposition.hpp"
#include "gossipft/knodel.hpp"
#include "gossipft/schedule.hpp"
#include "gossipft/wheel.hpp"

using namespace gossipft;

TEST_CASE("schedule canonicalizes, sorts and compacts labels") {
  const CallSchedule g(4, {{3, 1, 7}, {0, 2, 3}, {2, 0, 3}, {1, 2, 10}});
  REQUIRE(g.size() == 4);
  CHECK(g.max_label() == 3);
  CHECK(g.call(0) == Call{0, 2, 1});
  CHECK(g.call(1) == Call{0, 2, 1});  // parallel copies stay distinct
  CHECK(g.call(2) == Call{1, 3, 2});
  CHECK(g.call(3) == Call{1, 2, 3});
  CHECK(g.degree(2) == 3);
  CHECK(g.find(3, 1, 2) == CallId{2});
  CHECK_FALSE(g.find(0, 1, 1).has_value());
  const auto [lo, hi] = g.label_range(1);
  CHECK(lo == 0);
  CHECK(hi == 2);
}

TEST_CASE("schedule rejects malformed calls") {
  CHECK_THROWS_AS(CallSchedule(3, {{0, 3, 1}}), ScheduleError);
  CHECK_THROWS_AS(CallSchedule(3, {{1, 1, 1}}), ScheduleError);
  CHECK_THROWS_AS(CallSchedule(3, {{0, 1, 0}}), ScheduleError);
}

TEST_CASE("empty schedule") {
  const CallSchedule g(5);
  CHECK(g.empty());
  CHECK(g.max_label() == 0);
  CHECK(g.degree(4) == 0);
}

TEST_CASE("edge sum shifts the second summand by the first's max label") {
  const CallSchedule w3 = generate_knodel({10, 3});
  const CallSchedule w1 = generate_knodel({10, 1});
  const CallSchedule sum = edge_sum(w3, w1);
  CHECK(sum.size() == 20);
  CHECK(sum.max_label() == 4);
  const auto [lo, hi] = sum.label_range(4);
  CHECK(hi - lo == 5);
  for (CallId id = lo; id < hi; ++id) CHECK(sum.call(id).b == sum.call(id).a + 5);

  CHECK(edge_sum(w3, CallSchedule(10)) == w3);
  CHECK(edge_sum(CallSchedule(10), w3) == w3);

  const CallSchedule one(2, {{0, 1, 1}});
  const CallSchedule two = edge_sum(one, one);
  CHECK(two.call(0).label == 1);
  CHECK(two.call(1).label == 2);
  CHECK_THROWS_AS(edge_sum(one, CallSchedule(3)), ScheduleError);
}

TEST_CASE("replicate and copies of subsets") {
  const CallSchedule w = generate_knodel({10, 3});
  CHECK(replicate(w, 1) == w);
  const CallSchedule w2 = replicate(w, 2);
  CHECK(w2.size() == 30);
  CHECK(w2.max_label() == 6);
  CHECK_THROWS_AS(replicate(w, 0), ScheduleError);

  const Label bounds[] = {1, 2, 3};
  const Decomposition d = decompose_by_label(w, bounds);
  const auto image = copy_of_subset(w, d.blocks[0], 2, 2);
  REQUIRE(image.size() == d.blocks[0].size());
  for (std::size_t i = 0; i < image.size(); ++i) {
    const Call& orig = w.call(d.blocks[0][i]);
    const Call& copy = w2.call(image[i]);
    CHECK(copy.label == orig.label + 3);
    CHECK(copy.a == orig.a);
    CHECK(copy.b == orig.b);
  }
  CHECK(copy_of_subset(w, d.blocks[0], 2, 1) == d.blocks[0]);
  CHECK_THROWS(copy_of_subset(w, d.blocks[0], 2, 3));

  // singleton of label 2 in a schedule with max label 4, copy 3 -> label 10
  const CallSchedule g(3, {{0, 1, 1}, {1, 2, 2}, {0, 2, 3}, {0, 1, 4}});
  const CallId single[] = {1};
  const CallSchedule g3 = replicate(g, 3);
  CHECK(g3.call(copy_of_subset(g, single, 3, 3).front()).label == 10);
}

TEST_CASE("restrict_to and with_node_count") {
  const CallSchedule g(4, {{0, 1, 2}, {1, 2, 5}, {2, 3, 9}});
  const CallId keep[] = {0, 2};
  const CallSchedule r = restrict_to(g, keep);
  CHECK(r.size() == 2);
  CHECK(r.max_label() == 2);
  const CallSchedule big = with_node_count(g, 6);
  CHECK(big.n() == 6);
  CHECK(big.size() == 3);
  CHECK_THROWS(with_node_count(g, 3));
}

TEST_CASE("decompose_by_label") {
  const CallSchedule w = generate_knodel({10, 3});
  const Label per_label[] = {1, 2, 3};
  const Decomposition d = decompose_by_label(w, per_label);
  CHECK(d.block_count() == 3);
  CHECK(d.block_sizes() == std::vector<std::size_t>{5, 5, 5});

  const Label whole[] = {3};
  CHECK(decompose_by_label(w, whole).block_count() == 1);

  const Label short_list[] = {1, 2};
  CHECK_THROWS_AS(decompose_by_label(w, short_list), ScheduleError);
  const Label unsorted[] = {2, 1, 3};
  CHECK_THROWS_AS(decompose_by_label(w, unsorted), ScheduleError);

  const WheelScheme odd = generate_wheel_odd(11);
  CHECK(odd.decomposition.block_sizes() == std::vector<std::size_t>{5, 10, 5});

  // blocks partition the calls
  const auto index = block_index(odd.schedule, odd.decomposition);
  CHECK(index.size() == odd.schedule.size());
}
