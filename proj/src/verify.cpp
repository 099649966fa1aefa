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

#include "gossipft/verify.hpp"

#include <json.hpp>
#include <numeric>
#include <set>

namespace gossipft {
namespace {

std::vector<char> fault_mask(const CallSchedule& g, std::span<const CallId> faults) {
  std::vector<char> mask(g.size(), 0);
  for (CallId id : faults) {
    if (id >= g.size()) throw ScheduleError("fault names a call outside the schedule");
    mask[id] = 1;
  }
  return mask;
}

// Applies one label's surviving calls against a snapshot of the state.
void apply_label(const CallSchedule& g, Label t, const std::vector<char>& failed,
                 std::vector<boost::dynamic_bitset<>>& rows) {
  const auto [first, last] = g.label_range(t);
  std::vector<std::pair<NodeId, boost::dynamic_bitset<>>> updates;
  for (CallId id = first; id < last; ++id) {
    if (failed[id]) continue;
    const Call& c = g.call(id);
    updates.emplace_back(c.a, rows[c.b]);
    updates.emplace_back(c.b, rows[c.a]);
  }
  for (auto& [v, bits] : updates) rows[v] |= bits;
}

__extension__ using u128 = unsigned __int128;

std::uint64_t binomial_capped(std::uint64_t m, std::uint64_t k, std::uint64_t cap) {
  if (k > m) return 0;
  k = std::min(k, m - k);
  std::uint64_t result = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    // result * (m - k + i) / i stays integral at every step.
    const u128 next = static_cast<u128>(result) * (m - k + i) / i;
    if (next > cap) return cap + 1;
    result = static_cast<std::uint64_t>(next);
  }
  return result;
}

bool fails(const CallSchedule& g, std::span<const CallId> faults) {
  return !simulate(g, faults).complete();
}

}  // namespace

KnowledgeState::KnowledgeState(std::size_t n) : rows_(n, boost::dynamic_bitset<>(n)) {
  for (std::size_t v = 0; v < n; ++v) rows_[v].set(v);
}

bool KnowledgeState::complete() const {
  for (const auto& row : rows_) {
    if (!row.all()) return false;
  }
  return true;
}

KnowledgeState simulate(const CallSchedule& g, std::span<const CallId> faults) {
  const std::vector<char> failed = fault_mask(g, faults);
  KnowledgeState state(g.n());
  for (Label t = 1; t <= g.max_label(); ++t) apply_label(g, t, failed, state.rows_);
  return state;
}

std::vector<KnowledgeState> simulate_trace(const CallSchedule& g, std::span<const CallId> faults) {
  const std::vector<char> failed = fault_mask(g, faults);
  std::vector<KnowledgeState> trace{KnowledgeState(g.n())};
  for (Label t = 1; t <= g.max_label(); ++t) {
    trace.push_back(trace.back());
    apply_label(g, t, failed, trace.back().rows_);
  }
  return trace;
}

BruteForceResult is_k_fault_tolerant_bruteforce(const CallSchedule& g, std::size_t k,
                                                std::uint64_t budget) {
  const std::size_t m = g.size();
  const std::size_t size = std::min(k, m);
  const std::uint64_t total = binomial_capped(m, size, budget);
  if (total > budget) {
    throw BudgetExceeded("brute force needs C(" + std::to_string(m) + "," + std::to_string(size) +
                         ") fault sets, over the budget of " + std::to_string(budget));
  }

  BruteForceResult result;
  std::vector<CallId> combo(size);
  std::iota(combo.begin(), combo.end(), CallId{0});
  while (true) {
    ++result.fault_sets_checked;
    if (fails(g, combo)) {
      result.tolerant = false;
      // Shrink to an inclusion-minimal failing set.
      FaultSet witness = combo;
      for (std::size_t i = 0; i < witness.size();) {
        FaultSet smaller = witness;
        smaller.erase(smaller.begin() + static_cast<std::ptrdiff_t>(i));
        if (fails(g, smaller)) {
          witness = std::move(smaller);
        } else {
          ++i;
        }
      }
      result.witness = std::move(witness);
      return result;
    }
    // Next combination in lexicographic order.
    std::size_t i = size;
    while (i > 0 && combo[i - 1] == m - size + i - 1) --i;
    if (i == 0) break;
    ++combo[i - 1];
    for (std::size_t j = i; j < size; ++j) combo[j] = combo[j - 1] + 1;
  }
  return result;
}

AscendingPathCounter::AscendingPathCounter(const CallSchedule& g)
    : n_(g.n()), levels_(g.max_label() + 1), net_(g.n() * (g.max_label() + 1) + 2 * g.size()) {
  auto at = [this](NodeId v, std::size_t level) { return v * levels_ + level; };
  for (NodeId v = 0; v < n_; ++v) {
    for (std::size_t t = 1; t < levels_; ++t) net_.add_arc(at(v, t - 1), at(v, t), MaxFlow::kInfinite);
  }
  const std::size_t base = n_ * levels_;
  for (CallId id = 0; id < g.size(); ++id) {
    const Call& c = g.call(id);
    const std::size_t in = base + 2 * id;
    const std::size_t out = in + 1;
    net_.add_arc(at(c.a, c.label - 1), in, MaxFlow::kInfinite);
    net_.add_arc(at(c.b, c.label - 1), in, MaxFlow::kInfinite);
    net_.add_arc(in, out, 1);
    net_.add_arc(out, at(c.a, c.label), MaxFlow::kInfinite);
    net_.add_arc(out, at(c.b, c.label), MaxFlow::kInfinite);
  }
}

std::size_t AscendingPathCounter::count(NodeId source, NodeId target, std::size_t limit) {
  if (source >= n_ || target >= n_) throw ScheduleError("path count: node out of range");
  if (source == target) throw ScheduleError("path count: source equals target");
  net_.reset();
  const MaxFlow::Cap cap = limit > static_cast<std::size_t>(MaxFlow::kInfinite)
                               ? MaxFlow::kInfinite
                               : static_cast<MaxFlow::Cap>(limit);
  return static_cast<std::size_t>(
      net_.solve(source * levels_, target * levels_ + levels_ - 1, cap));
}

std::size_t count_edge_disjoint_ascending_paths(const CallSchedule& g, NodeId source,
                                                NodeId target) {
  AscendingPathCounter counter(g);
  return counter.count(source, target);
}

FlowResult is_k_fault_tolerant_flow(const CallSchedule& g, std::size_t k) {
  FlowResult result;
  if (g.n() < 2) return result;
  AscendingPathCounter counter(g);
  for (NodeId s = 0; s < g.n(); ++s) {
    for (NodeId t = 0; t < g.n(); ++t) {
      if (s == t) continue;
      const std::size_t flow = counter.count(s, t);
      if (!result.min_pair_flow || flow < *result.min_pair_flow) {
        result.min_pair_flow = flow;
        result.deficient_pair = std::make_pair(s, t);
      }
    }
  }
  result.tolerant = *result.min_pair_flow >= k + 1;
  if (result.tolerant) result.deficient_pair.reset();
  return result;
}

FamilyReport check_folded_family(const CallSchedule& g, const PairFamilies& families,
                                 std::size_t p, std::size_t q, const Decomposition& d) {
  FamilyReport report;
  const std::vector<std::size_t> block = d.blocks.empty() ? std::vector<std::size_t>{}
                                                          : block_index(g, d);
  for (NodeId s = 0; s < g.n(); ++s) {
    for (NodeId t = 0; t < g.n(); ++t) {
      if (s == t) continue;
      ++report.pairs_checked;
      auto add = [&](std::string what) { report.violations.push_back({s, t, std::move(what)}); };
      const auto it = families.find({s, t});
      if (it == families.end()) {
        add("no family given");
        continue;
      }
      const auto& family = it->second;
      if (family.size() != p) {
        add("has " + std::to_string(family.size()) + " paths, expected " + std::to_string(p));
      }
      bool well_formed = true;
      for (const auto& path : family) {
        if (path.vertices().empty() || path.source() != s || path.target() != t) {
          add("path does not run from source to target");
          well_formed = false;
          continue;
        }
        try {
          if (fold_walk(g, s, path.edges()) != path) {
            add("path segmentation disagrees with the schedule");
            well_formed = false;
          }
        } catch (const ScheduleError& e) {
          add(std::string("path is not a walk in the schedule: ") + e.what());
          well_formed = false;
        }
      }
      if (!well_formed) continue;
      if (!pairwise_edge_disjoint(family)) add("paths share a call");
      const std::size_t folds = total_folded_number(family);
      report.max_total_folds = std::max(report.max_total_folds, folds);
      if (folds > q) {
        add("total folded number " + std::to_string(folds) + " exceeds " + std::to_string(q));
      }
      if (!d.r.empty()) {
        std::vector<std::size_t> hist(d.r.size(), 0);
        for (const auto& path : family) {
          if (!path.edges().empty()) ++hist[block[path.edges().back()]];
        }
        if (hist != d.r) {
          std::string shape;
          for (std::size_t i = 0; i < hist.size(); ++i) {
            shape += (i ? "," : "") + std::to_string(hist[i]);
          }
          add("last calls per block (" + shape + ") do not match r");
        }
      }
    }
  }
  return report;
}

bool is_round_schedulable(const CallSchedule& g) {
  for (Label t = 1; t <= g.max_label(); ++t) {
    const auto [first, last] = g.label_range(t);
    std::set<NodeId> busy;
    for (CallId id = first; id < last; ++id) {
      if (!busy.insert(g.call(id).a).second || !busy.insert(g.call(id).b).second) return false;
    }
  }
  return true;
}

std::string VerificationReport::to_json() const {
  nlohmann::ordered_json j;
  j["n"] = n;
  j["m"] = m;
  j["k"] = k;
  j["method"] = method;
  j["verdict"] = verdict ? "tolerant" : "not-tolerant";
  j["min_pair_flow"] = min_pair_flow ? nlohmann::ordered_json(*min_pair_flow) : nullptr;
  if (deficient_pair) {
    j["deficient_pair"] = {deficient_pair->first, deficient_pair->second};
  }
  j["witness"] = witness ? nlohmann::ordered_json(*witness) : nullptr;
  if (witness) {
    auto calls = nlohmann::ordered_json::array();
    for (const Call& c : witness_calls) calls.push_back({c.label, c.a, c.b});
    j["witness_calls"] = std::move(calls);
  }
  j["duration"] = duration;
  j["round_schedulable"] = round_schedulable;
  if (oracle_mismatch) j["oracle_mismatch"] = true;
  return j.dump(2);
}

VerificationReport verify_scheme(const CallSchedule& g, std::size_t k, VerifyMethod method,
                                 std::uint64_t budget) {
  VerificationReport report;
  report.n = g.n();
  report.m = g.size();
  report.k = k;
  report.duration = duration(g);
  report.round_schedulable = is_round_schedulable(g);
  std::optional<bool> flow_verdict;
  std::optional<bool> brute_verdict;
  if (method != VerifyMethod::kBruteForce) {
    const FlowResult flow = is_k_fault_tolerant_flow(g, k);
    flow_verdict = flow.tolerant;
    report.min_pair_flow = flow.min_pair_flow;
    report.deficient_pair = flow.deficient_pair;
  }
  if (method != VerifyMethod::kFlow) {
    const BruteForceResult brute = is_k_fault_tolerant_bruteforce(g, k, budget);
    brute_verdict = brute.tolerant;
    if (!brute.tolerant) {
      report.witness = brute.witness;
      for (CallId id : brute.witness) report.witness_calls.push_back(g.call(id));
    }
  }
  switch (method) {
    case VerifyMethod::kFlow:
      report.method = "flow";
      report.verdict = *flow_verdict;
      break;
    case VerifyMethod::kBruteForce:
      report.method = "brute";
      report.verdict = *brute_verdict;
      break;
    case VerifyMethod::kBoth:
      report.method = "both";
      report.oracle_mismatch = *flow_verdict != *brute_verdict;
      report.verdict = *flow_verdict && *brute_verdict;
      break;
  }
  return report;
}

}  // namespace gossipft
