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

#include "gossipft/schedule.hpp"

#include <algorithm>
#include <string>

namespace gossipft {

CallSchedule::CallSchedule(std::size_t n) : CallSchedule(n, {}) {}

CallSchedule::CallSchedule(std::size_t n, std::vector<Call> calls)
    : n_(n), calls_(std::move(calls)) {
  for (auto& c : calls_) {
    if (c.a >= n_ || c.b >= n_) {
      throw ScheduleError("call endpoint " + std::to_string(std::max(c.a, c.b)) +
                          " out of range for n=" + std::to_string(n_));
    }
    if (c.a == c.b) throw ScheduleError("self loop at node " + std::to_string(c.a));
    if (c.label == 0) throw ScheduleError("call labels must be positive");
    if (c.a > c.b) std::swap(c.a, c.b);
  }
  std::stable_sort(calls_.begin(), calls_.end(), [](const Call& x, const Call& y) {
    if (x.label != y.label) return x.label < y.label;
    if (x.a != y.a) return x.a < y.a;
    return x.b < y.b;
  });

  Label dense = 0;
  Label previous = 0;
  for (auto& c : calls_) {
    if (c.label != previous) {
      previous = c.label;
      ++dense;
    }
    c.label = dense;
  }

  incident_.assign(n_, {});
  label_start_.resize(static_cast<std::size_t>(dense) + 2);
  for (Label t = 0; t <= dense + 1; ++t) {
    label_start_[t] = static_cast<CallId>(
        std::partition_point(calls_.begin(), calls_.end(),
                             [t](const Call& c) { return c.label < t; }) -
        calls_.begin());
  }
  for (CallId id = 0; id < calls_.size(); ++id) {
    incident_[calls_[id].a].push_back(id);
    incident_[calls_[id].b].push_back(id);
  }
}

std::pair<CallId, CallId> CallSchedule::label_range(Label t) const {
  if (t == 0 || t > max_label()) return {calls_.size(), calls_.size()};
  return {label_start_[t], label_start_[t + 1]};
}

std::optional<CallId> CallSchedule::find(NodeId a, NodeId b, Label t) const {
  if (a > b) std::swap(a, b);
  if (a >= n_ || b >= n_) return std::nullopt;
  for (CallId id : incident_[a]) {
    const Call& c = calls_[id];
    if (c.b == b && c.a == a && c.label == t) return id;
  }
  return std::nullopt;
}

std::optional<CallId> CallSchedule::find_at(NodeId v, Label t) const {
  if (v >= n_) return std::nullopt;
  for (CallId id : incident_[v]) {
    if (calls_[id].label == t) return id;
  }
  return std::nullopt;
}

CallSchedule edge_sum(const CallSchedule& g1, const CallSchedule& g2) {
  if (g1.n() != g2.n()) {
    throw ScheduleError("edge_sum: node counts differ (" + std::to_string(g1.n()) + " vs " +
                        std::to_string(g2.n()) + ")");
  }
  std::vector<Call> calls(g1.calls().begin(), g1.calls().end());
  const Label shift = g1.max_label();
  for (Call c : g2.calls()) {
    c.label += shift;
    calls.push_back(c);
  }
  return CallSchedule(g1.n(), std::move(calls));
}

CallSchedule replicate(const CallSchedule& g, std::size_t h) {
  if (h == 0) throw ScheduleError("replicate: copy count must be positive");
  std::vector<Call> calls;
  calls.reserve(g.size() * h);
  for (std::size_t i = 0; i < h; ++i) {
    const Label shift = static_cast<Label>(i) * g.max_label();
    for (Call c : g.calls()) {
      c.label += shift;
      calls.push_back(c);
    }
  }
  return CallSchedule(g.n(), std::move(calls));
}

std::vector<CallId> copy_of_subset(const CallSchedule& g, std::span<const CallId> subset,
                                   std::size_t h, std::size_t i) {
  if (i < 1 || i > h) {
    throw ScheduleError("copy_of_subset: copy index " + std::to_string(i) + " outside 1.." +
                        std::to_string(h));
  }
  std::vector<CallId> out;
  out.reserve(subset.size());
  for (CallId id : subset) {
    if (id >= g.size()) throw ScheduleError("copy_of_subset: call id not in schedule");
    out.push_back(id + (i - 1) * g.size());
  }
  return out;
}

CallSchedule restrict_to(const CallSchedule& g, std::span<const CallId> ids) {
  std::vector<Call> calls;
  calls.reserve(ids.size());
  for (CallId id : ids) calls.push_back(g.call(id));
  return CallSchedule(g.n(), std::move(calls));
}

CallSchedule with_node_count(const CallSchedule& g, std::size_t n) {
  return CallSchedule(n, std::vector<Call>(g.calls().begin(), g.calls().end()));
}

}  // namespace gossipft
