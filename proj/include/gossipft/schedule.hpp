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

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace gossipft {

using NodeId = std::uint32_t;
using Label = std::uint32_t;
using CallId = std::size_t;

class ScheduleError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// One two-way call between a and b at discrete time `label`.
struct Call {
  NodeId a = 0;
  NodeId b = 0;
  Label label = 0;

  NodeId other(NodeId v) const { return v == a ? b : a; }
  bool touches(NodeId v) const { return a == v || b == v; }

  friend bool operator==(const Call&, const Call&) = default;
};

/// A gossip scheme: a labeled multigraph over nodes 0..n-1.
///
/// Calls are immutable once constructed and kept in a stable total order
/// (label, smaller endpoint, larger endpoint, insertion order), so a CallId
/// is simply the position in calls(). Endpoints are stored with a < b.
/// Labels are renumbered to the dense range 1..max_label() preserving
/// their relative order.
class CallSchedule {
 public:
  CallSchedule() = default;
  explicit CallSchedule(std::size_t n);
  CallSchedule(std::size_t n, std::vector<Call> calls);

  std::size_t n() const { return n_; }
  std::size_t size() const { return calls_.size(); }
  bool empty() const { return calls_.empty(); }
  Label max_label() const { return calls_.empty() ? 0 : calls_.back().label; }

  std::span<const Call> calls() const { return calls_; }
  const Call& call(CallId id) const { return calls_.at(id); }

  // Ids of calls touching v, ascending.
  std::span<const CallId> incident(NodeId v) const { return incident_.at(v); }
  std::size_t degree(NodeId v) const { return incident_.at(v).size(); }

  // Half-open id range of the calls carrying label t.
  std::pair<CallId, CallId> label_range(Label t) const;

  // First call joining a and b with label t.
  std::optional<CallId> find(NodeId a, NodeId b, Label t) const;
  // The call at v with label t, if any (first one for multi-edges).
  std::optional<CallId> find_at(NodeId v, Label t) const;

  friend bool operator==(const CallSchedule& x, const CallSchedule& y) {
    return x.n_ == y.n_ && x.calls_ == y.calls_;
  }

 private:
  std::size_t n_ = 0;
  std::vector<Call> calls_;
  std::vector<std::vector<CallId>> incident_;
  std::vector<CallId> label_start_;
};

// g1 followed by g2, with g2's labels shifted past max_label(g1).
CallSchedule edge_sum(const CallSchedule& g1, const CallSchedule& g2);

// h time-concatenated copies of g. Copy i (1-based) occupies ids
// [(i-1)*|g|, i*|g|).
CallSchedule replicate(const CallSchedule& g, std::size_t h);

// The image A_i of `subset` inside replicate(g, h).
std::vector<CallId> copy_of_subset(const CallSchedule& g, std::span<const CallId> subset,
                                   std::size_t h, std::size_t i);

// The schedule formed by the listed calls only (labels renumbered densely).
CallSchedule restrict_to(const CallSchedule& g, std::span<const CallId> ids);

// Same calls over a larger node set.
CallSchedule with_node_count(const CallSchedule& g, std::size_t n);

}  // namespace gossipft
