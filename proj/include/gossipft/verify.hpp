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

#include <boost/dynamic_bitset.hpp>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "gossipft/decomposition.hpp"
#include "gossipft/folded_path.hpp"
#include "gossipft/max_flow.hpp"
#include "gossipft/schedule.hpp"

namespace gossipft {

/// Which initial pieces each node holds; piece i starts at node i.
class KnowledgeState {
 public:
  explicit KnowledgeState(std::size_t n);

  std::size_t n() const { return rows_.size(); }
  bool knows(NodeId v, NodeId piece) const { return rows_.at(v).test(piece); }
  std::size_t count(NodeId v) const { return rows_.at(v).count(); }
  const boost::dynamic_bitset<>& row(NodeId v) const { return rows_.at(v); }
  // Every node knows every piece.
  bool complete() const;

  friend bool operator==(const KnowledgeState&, const KnowledgeState&) = default;

 private:
  friend KnowledgeState simulate(const CallSchedule&, std::span<const CallId>);
  friend std::vector<KnowledgeState> simulate_trace(const CallSchedule&, std::span<const CallId>);

  std::vector<boost::dynamic_bitset<>> rows_;
};

// Sorted, duplicate-free ids of failed calls.
using FaultSet = std::vector<CallId>;

/// Runs the schedule label by label. All calls sharing a label read the
/// knowledge held at the end of the previous label, so v learns piece u
/// exactly when a strictly ascending walk u -> v survives the faults.
KnowledgeState simulate(const CallSchedule& g, std::span<const CallId> faults = {});

// Knowledge after each label 1..max_label (index 0 is the initial state).
std::vector<KnowledgeState> simulate_trace(const CallSchedule& g,
                                           std::span<const CallId> faults = {});

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::uint64_t kDefaultBruteForceBudget = 10'000'000;

struct BruteForceResult {
  bool tolerant = true;
  FaultSet witness;  // inclusion-minimal failing fault set
  std::uint64_t fault_sets_checked = 0;
};

// Tries every fault set of exactly min(k, |calls|) calls. Throws
// BudgetExceeded when C(m, k) exceeds `budget`.
BruteForceResult is_k_fault_tolerant_bruteforce(const CallSchedule& g, std::size_t k,
                                                std::uint64_t budget = kDefaultBruteForceBudget);

/// Max-flow over the time-expanded network: one copy of every node per
/// label level joined by unbounded hold arcs, and per call a unit-capacity
/// bridge from both endpoints at the previous level to both endpoints at
/// the call's level. Its value is the maximum number of call-disjoint
/// ascending walks between two nodes and, equivalently, the fewest calls
/// whose failure cuts the pair.
class AscendingPathCounter {
 public:
  explicit AscendingPathCounter(const CallSchedule& g);

  std::size_t count(NodeId source, NodeId target,
                    std::size_t limit = std::numeric_limits<std::size_t>::max());

 private:
  std::size_t n_;
  std::size_t levels_;
  MaxFlow net_;
};

std::size_t count_edge_disjoint_ascending_paths(const CallSchedule& g, NodeId source,
                                                NodeId target);

struct FlowResult {
  bool tolerant = true;
  std::optional<std::size_t> min_pair_flow;  // unset when n < 2
  std::optional<std::pair<NodeId, NodeId>> deficient_pair;
};

// k-fault tolerant iff every ordered pair has at least k + 1 call-disjoint
// ascending walks. The deficient pair is the first pair (in sorted order)
// attaining the minimum flow.
FlowResult is_k_fault_tolerant_flow(const CallSchedule& g, std::size_t k);

using PairFamilies = std::map<std::pair<NodeId, NodeId>, std::vector<FoldedPath>>;

struct FamilyViolation {
  NodeId source = 0;
  NodeId target = 0;
  std::string what;
};

struct FamilyReport {
  std::size_t pairs_checked = 0;
  std::size_t max_total_folds = 0;
  std::vector<FamilyViolation> violations;

  bool ok() const { return violations.empty(); }
};

/// Checks the hypotheses of the replication construction pair by pair:
/// every ordered pair has exactly p walks in g from source to target,
/// pairwise call-disjoint, with total folded number at most q, and (when
/// r is non-empty) r[i] of them end with a call in block i.
FamilyReport check_folded_family(const CallSchedule& g, const PairFamilies& families,
                                 std::size_t p, std::size_t q, const Decomposition& d);

inline std::size_t duration(const CallSchedule& g) { return g.max_label(); }

// Every label's calls form a matching, so one label is one round.
bool is_round_schedulable(const CallSchedule& g);

struct VerificationReport {
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t k = 0;
  std::string method;
  bool verdict = false;
  std::optional<std::size_t> min_pair_flow;
  std::optional<std::pair<NodeId, NodeId>> deficient_pair;
  std::optional<FaultSet> witness;
  std::vector<Call> witness_calls;  // the witness ids resolved
  std::size_t duration = 0;
  bool round_schedulable = false;
  // Set when both oracles ran and disagreed.
  bool oracle_mismatch = false;

  std::string to_json() const;
};

enum class VerifyMethod { kFlow, kBruteForce, kBoth };

VerificationReport verify_scheme(const CallSchedule& g, std::size_t k, VerifyMethod method,
                                 std::uint64_t budget = kDefaultBruteForceBudget);

}  // namespace gossipft
