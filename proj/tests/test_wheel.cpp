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

#include "gossipft/builder.hpp"
#include "gossipft/verify.hpp"
#include "gossipft/wheel.hpp"

using namespace gossipft;

TEST_CASE("odd wheel") {
  const WheelScheme w = generate_wheel_odd(11);
  CHECK(w.schedule.size() == 20);
  CHECK(w.schedule.max_label() == 4);
  CHECK(w.decomposition.block_sizes() == std::vector<std::size_t>{5, 10, 5});
  CHECK(w.decomposition.p == 3);
  CHECK(w.decomposition.q == 3);
  CHECK(w.decomposition.r == std::vector<std::size_t>{1, 1, 1});
  CHECK(generate_wheel_odd(5).schedule.size() == 8);
  CHECK_THROWS_AS(generate_wheel_odd(12), ScheduleError);
  CHECK_THROWS_AS(generate_wheel_odd(3), ScheduleError);
  CHECK_FALSE(is_round_schedulable(w.schedule));
}

TEST_CASE("even wheel") {
  const WheelScheme w = generate_wheel_even(12);
  CHECK(w.schedule.size() == 22);
  CHECK(w.schedule.max_label() == 6);
  CHECK(w.decomposition.block_sizes() == std::vector<std::size_t>{5, 12, 5});
  CHECK(w.schedule.find(0, 11, 3).has_value());
  CHECK(w.schedule.find(0, 11, 5).has_value());
  CHECK(w.decomposition.q == 4);
  CHECK(generate_wheel_even(10).decomposition.q == 3);
  CHECK_THROWS_AS(generate_wheel_even(4), ScheduleError);
  CHECK_THROWS_AS(generate_wheel_even(9), ScheduleError);
}

TEST_CASE("vertex naming") {
  CHECK(wheel_node(11, WheelVertex::hub()) == 0);
  CHECK(wheel_node(11, WheelVertex::rim(3, false)) == 5);
  CHECK(wheel_node(11, WheelVertex::rim(3, true)) == 6);
  CHECK(wheel_node(12, WheelVertex::hub_prime()) == 11);
  CHECK(wheel_vertex(12, 11) == WheelVertex::hub_prime());
  CHECK(wheel_vertex(11, 6) == WheelVertex::rim(3, true));
  CHECK_THROWS(wheel_node(11, WheelVertex::hub_prime()));
  CHECK_THROWS(wheel_node(11, WheelVertex::rim(6, false)));
}

TEST_CASE("closed-form catalogue: v_i to u") {
  const WheelScheme w = generate_wheel_odd(11);
  const auto fam = wheel_path_catalogue(w, WheelVertex::rim(2, false), WheelVertex::hub());
  REQUIRE(fam.size() == 3);
  std::vector<std::vector<Label>> labels;
  for (const auto& p : fam) {
    std::vector<Label> l;
    for (CallId id : p.edges()) l.push_back(w.schedule.call(id).label);
    labels.push_back(l);
  }
  std::sort(labels.begin(), labels.end());
  CHECK(labels == std::vector<std::vector<Label>>{{1, 2}, {3}, {4, 2}});
  CHECK(pairwise_edge_disjoint(fam));
}

TEST_CASE("closed-form catalogue: v'_i to v'_j ends with labels 1, 2, 4") {
  const WheelScheme w = generate_wheel_odd(13);
  const auto src = WheelVertex::rim(1, true);
  const auto dst = WheelVertex::rim(4, true);
  REQUIRE(wheel_template_applies(13, src, dst));
  const auto fam = wheel_path_catalogue(w, src, dst);
  std::vector<Label> last;
  for (const auto& p : fam) last.push_back(w.schedule.call(p.edges().back()).label);
  std::sort(last.begin(), last.end());
  CHECK(last == std::vector<Label>{1, 2, 4});
  CHECK(total_folded_number(fam) <= 3);
}

TEST_CASE("catalogue covers every pair of small odd wheels") {
  for (std::size_t n : {5, 7, 9, 11, 13}) {
    const WheelScheme w = generate_wheel_odd(n);
    for (NodeId s = 0; s < n; ++s) {
      for (NodeId t = 0; t < n; ++t) {
        if (s == t) continue;
        const auto fam = wheel_path_catalogue(w, wheel_vertex(n, s), wheel_vertex(n, t));
        CHECK(fam.size() == 3);
        CHECK(pairwise_edge_disjoint(fam));
        CHECK(total_folded_number(fam) <= 3);
        for (const auto& p : fam) {
          CHECK(p.source() == s);
          CHECK(p.target() == t);
        }
      }
    }
  }
}

TEST_CASE("catalogue respects wrap-around") {
  const std::size_t n = 13;  // six rim pairs
  const WheelScheme w = generate_wheel_odd(n);
  for (std::size_t i = 1; i <= 6; ++i) {
    const std::size_t j = (i + 2) % 6 + 1;  // i + 3 with wrap
    const auto fam = wheel_path_catalogue(w, WheelVertex::rim(i, false), WheelVertex::rim(j, true));
    CHECK(total_folded_number(fam) ==
          total_folded_number(wheel_path_catalogue(w, WheelVertex::rim(1, false),
                                                   WheelVertex::rim(4, true))));
  }
}

TEST_CASE("hub targets put every last call in the middle block") {
  // Every call at u lies in F(1), so r = (1,1,1) cannot hold for target u.
  const WheelScheme w = generate_wheel_odd(9);
  const auto index = block_index(w.schedule, w.decomposition);
  for (CallId id : w.schedule.incident(0)) CHECK(index[id] == 1);
}
