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

#include <algorithm>
#include <cstdint>
#include <limits>
#include <queue>
#include <vector>

namespace gossipft {

// Dinic's algorithm on integer capacities. Arcs keep their original
// capacity so the same network can be solved for many (source, sink)
// pairs via reset().
class MaxFlow {
 public:
  using Cap = std::int64_t;
  static constexpr Cap kInfinite = std::numeric_limits<Cap>::max() / 4;

  explicit MaxFlow(std::size_t nodes) : adj_(nodes), level_(nodes), next_(nodes) {}

  std::size_t node_count() const { return adj_.size(); }

  void add_arc(std::size_t from, std::size_t to, Cap cap) {
    adj_[from].push_back({to, cap, cap, adj_[to].size()});
    adj_[to].push_back({from, 0, 0, adj_[from].size() - 1});
  }

  void reset() {
    for (auto& arcs : adj_) {
      for (auto& a : arcs) a.cap = a.original;
    }
  }

  // Max flow from s to t, stopping early once `limit` is reached.
  Cap solve(std::size_t s, std::size_t t, Cap limit = kInfinite) {
    Cap flow = 0;
    while (flow < limit && bfs(s, t)) {
      std::fill(next_.begin(), next_.end(), 0);
      while (flow < limit) {
        const Cap pushed = dfs(s, t, limit - flow);
        if (pushed == 0) break;
        flow += pushed;
      }
    }
    return flow;
  }

 private:
  struct Arc {
    std::size_t to;
    Cap cap;
    Cap original;
    std::size_t rev;
  };

  bool bfs(std::size_t s, std::size_t t) {
    std::fill(level_.begin(), level_.end(), -1);
    std::queue<std::size_t> queue;
    level_[s] = 0;
    queue.push(s);
    while (!queue.empty()) {
      const std::size_t v = queue.front();
      queue.pop();
      for (const Arc& a : adj_[v]) {
        if (a.cap > 0 && level_[a.to] < 0) {
          level_[a.to] = level_[v] + 1;
          queue.push(a.to);
        }
      }
    }
    return level_[t] >= 0;
  }

  Cap dfs(std::size_t v, std::size_t t, Cap pushed) {
    if (v == t) return pushed;
    for (std::size_t& i = next_[v]; i < adj_[v].size(); ++i) {
      Arc& a = adj_[v][i];
      if (a.cap <= 0 || level_[a.to] != level_[v] + 1) continue;
      const Cap got = dfs(a.to, t, std::min(pushed, a.cap));
      if (got > 0) {
        a.cap -= got;
        adj_[a.to][a.rev].cap += got;
        return got;
      }
    }
    return 0;
  }

  std::vector<std::vector<Arc>> adj_;
  std::vector<int> level_;
  std::vector<std::size_t> next_;
};

}  // namespace gossipft
