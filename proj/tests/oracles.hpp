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

// Slow, obviously-correct reference implementations used by the tests.

#pragma once

#include <algorithm>
#include <random>
#include <vector>

#include "gossipft/schedule.hpp"

namespace gossipft::testing {

// Depth-first search over (vertex, last label) states for a strictly
// ascending walk from s to t avoiding the failed call ids.
inline bool ascending_reachable(const CallSchedule& g, NodeId s, NodeId t,
                                const std::vector<CallId>& failed) {
  if (s == t) return true;
  // best[v] = smallest label with which v has been reached
  std::vector<Label> best(g.n(), ~Label{0});
  std::vector<std::pair<NodeId, Label>> stack{{s, 0}};
  best[s] = 0;
  while (!stack.empty()) {
    const auto [v, last] = stack.back();
    stack.pop_back();
    for (CallId id : g.incident(v)) {
      if (std::find(failed.begin(), failed.end(), id) != failed.end()) continue;
      const Call& c = g.call(id);
      if (c.label <= last) continue;
      const NodeId u = c.other(v);
      if (c.label < best[u]) {
        best[u] = c.label;
        if (u == t) return true;
        stack.push_back({u, c.label});
      }
    }
  }
  return false;
}

// Fault tolerance by definition: every fault set of size min(k, m) leaves
// an ascending walk for every ordered pair.
inline bool tolerant_by_definition(const CallSchedule& g, std::size_t k) {
  const std::size_t m = g.size();
  const std::size_t r = std::min(k, m);
  std::vector<bool> pick(m, false);
  std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(r), true);
  do {
    std::vector<CallId> failed;
    for (CallId i = 0; i < m; ++i) {
      if (pick[i]) failed.push_back(i);
    }
    for (NodeId s = 0; s < g.n(); ++s) {
      for (NodeId t = 0; t < g.n(); ++t) {
        if (!ascending_reachable(g, s, t, failed)) return false;
      }
    }
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return true;
}

// Smallest number of failed calls that cuts some pair, by enumeration.
inline std::size_t min_cut_by_enumeration(const CallSchedule& g, NodeId s, NodeId t) {
  const std::size_t m = g.size();
  for (std::size_t r = 0; r <= m; ++r) {
    std::vector<bool> pick(m, false);
    std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(r), true);
    do {
      std::vector<CallId> failed;
      for (CallId i = 0; i < m; ++i) {
        if (pick[i]) failed.push_back(i);
      }
      if (!ascending_reachable(g, s, t, failed)) return r;
    } while (std::prev_permutation(pick.begin(), pick.end()));
  }
  return m + 1;  // unreachable: removing everything always cuts s != t
}

}  // namespace gossipft::testing
