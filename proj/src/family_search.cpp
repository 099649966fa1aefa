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

#include "gossipft/family_search.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <limits>
#include <stdexcept>

namespace gossipft {
namespace {

class MinCostFlow {
 public:
  struct Arc {
    std::size_t to;
    std::int64_t cap;
    std::int64_t cost;
    std::size_t rev;
  };

  explicit MinCostFlow(std::size_t nodes) : adj_(nodes) {}

  // Returns (node, index) of the forward arc.
  std::pair<std::size_t, std::size_t> add_arc(std::size_t from, std::size_t to, std::int64_t cap,
                                              std::int64_t cost) {
    adj_[from].push_back({to, cap, cost, adj_[to].size()});
    adj_[to].push_back({from, 0, -cost, adj_[from].size() - 1});
    return {from, adj_[from].size() - 1};
  }

  // Successive shortest paths with SPFA; unit augmentations.
  std::size_t run(std::size_t s, std::size_t t, std::size_t want) {
    constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max() / 4;
    std::size_t flow = 0;
    const std::size_t n = adj_.size();
    std::vector<std::int64_t> dist(n);
    std::vector<bool> queued(n);
    std::vector<std::pair<std::size_t, std::size_t>> parent(n);
    while (flow < want) {
      std::fill(dist.begin(), dist.end(), kInf);
      std::fill(queued.begin(), queued.end(), false);
      std::deque<std::size_t> queue{s};
      dist[s] = 0;
      queued[s] = true;
      while (!queue.empty()) {
        const std::size_t v = queue.front();
        queue.pop_front();
        queued[v] = false;
        for (std::size_t i = 0; i < adj_[v].size(); ++i) {
          const Arc& a = adj_[v][i];
          if (a.cap > 0 && dist[v] + a.cost < dist[a.to]) {
            dist[a.to] = dist[v] + a.cost;
            parent[a.to] = {v, i};
            if (!queued[a.to]) {
              queued[a.to] = true;
              queue.push_back(a.to);
            }
          }
        }
      }
      if (dist[t] == kInf) break;
      for (std::size_t v = t; v != s;) {
        auto [u, i] = parent[v];
        Arc& a = adj_[u][i];
        a.cap -= 1;
        adj_[v][a.rev].cap += 1;
        v = u;
      }
      ++flow;
    }
    return flow;
  }

  std::vector<std::vector<Arc>>& arcs() { return adj_; }

 private:
  std::vector<std::vector<Arc>> adj_;
};

}  // namespace

std::optional<std::vector<FoldedPath>> min_fold_family(const CallSchedule& g, NodeId source,
                                                       NodeId target, std::size_t count) {
  if (source >= g.n() || target >= g.n()) throw ScheduleError("min_fold_family: node out of range");
  if (source == target) return std::vector<FoldedPath>{};

  const std::size_t m = g.size();
  const std::int64_t fold_cost = static_cast<std::int64_t>(m) + 1;
  constexpr std::size_t kStart = 0;
  constexpr std::size_t kSink = 1;
  auto call_in = [](CallId c) { return 2 + 4 * c; };
  auto call_out = [](CallId c) { return 3 + 4 * c; };
  // Arrival state at endpoint `side` (0 = a, 1 = b) of call c.
  auto arrival = [](CallId c, int side) { return 4 + 4 * c + static_cast<std::size_t>(side); };

  MinCostFlow net(2 + 4 * m);

  using ArcRef = std::pair<std::size_t, std::size_t>;
  // Arcs into a call, with the vertex the walk leaves from.
  struct Step {
    ArcRef arc;
    NodeId at;
    CallId call;
  };
  std::vector<std::vector<Step>> entries(2 + 4 * m);
  std::vector<std::array<ArcRef, 2>> exits(m);
  std::vector<std::optional<ArcRef>> sink_arc(2 + 4 * m);

  for (CallId c : g.incident(source)) {
    entries[kStart].push_back({net.add_arc(kStart, call_in(c), 1, 1), source, c});
  }
  for (CallId c = 0; c < m; ++c) {
    const Call& call = g.call(c);
    net.add_arc(call_in(c), call_out(c), 1, 0);
    for (int side = 0; side < 2; ++side) {
      const NodeId v = side == 0 ? call.a : call.b;
      const std::size_t state = arrival(c, side);
      exits[c][static_cast<std::size_t>(side)] = net.add_arc(call_out(c), state, 1, 0);
      if (v == target) sink_arc[state] = net.add_arc(state, kSink, 1, 0);
      for (CallId next : g.incident(v)) {
        if (next == c) continue;
        const std::int64_t cost = (g.call(next).label <= call.label ? fold_cost : 0) + 1;
        entries[state].push_back({net.add_arc(state, call_in(next), 1, cost), v, next});
      }
    }
  }

  if (net.run(kStart, kSink, count) < count) return std::nullopt;

  auto& arcs = net.arcs();
  // A saturated unit arc carries flow; restoring its capacity consumes it.
  auto take = [&](const ArcRef& ref) {
    auto& a = arcs[ref.first][ref.second];
    if (a.cap != 0) return false;
    a.cap = 1;
    return true;
  };

  std::vector<FoldedPath> family;
  for (std::size_t path = 0; path < count; ++path) {
    std::vector<CallId> walk;
    std::size_t state = kStart;
    while (!(sink_arc[state] && take(*sink_arc[state]))) {
      const Step* step = nullptr;
      for (const Step& st : entries[state]) {
        if (take(st.arc)) {
          step = &st;
          break;
        }
      }
      if (step == nullptr) throw std::logic_error("min_fold_family: broken flow decomposition");
      const Call& call = g.call(step->call);
      const int side = take(exits[step->call][0]) ? 0 : (take(exits[step->call][1]) ? 1 : -1);
      if (side < 0) throw std::logic_error("min_fold_family: call carries no flow");
      const NodeId exit_vertex = side == 0 ? call.a : call.b;
      // Entering and leaving a call at the same endpoint never lowers the
      // cost, so such a bounce is simply dropped from the walk.
      if (exit_vertex != step->at) walk.push_back(step->call);
      state = arrival(step->call, side);
    }
    family.push_back(fold_walk(g, source, walk));
  }
  std::stable_sort(family.begin(), family.end(), [&](const FoldedPath& x, const FoldedPath& y) {
    return g.call(x.edges().back()).label < g.call(y.edges().back()).label;
  });
  return family;
}

}  // namespace gossipft
