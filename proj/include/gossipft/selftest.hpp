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

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "gossipft/schedule.hpp"
#include "gossipft/verify.hpp"

namespace gossipft {

struct SelftestResult {
  std::string name;
  bool passed = false;
  std::size_t cases = 0;
  std::size_t violations = 0;
  std::vector<std::string> failures;  // the first few violations
  double seconds = 0;
};

/// Random labeled multigraph with 2..max_n nodes, 0..max_m calls and
/// labels in 1..max_label.
CallSchedule random_schedule(std::mt19937_64& rng, std::size_t max_n, std::size_t max_m,
                             Label max_label);

/// Families from folded_path_family for every ordered pair of every even
/// n in [n_lo, n_hi]: floor(log2 n) call-disjoint walks, total folded
/// number at most floor(log2 n), one last call per label.
SelftestResult selftest_knodel_families(std::size_t n_lo = 6, std::size_t n_hi = 32);

/// Checks what the replication builders rely on for every pair: the
/// family of the base (Knödel, hypercube or wheel) is call-disjoint,
/// within the base's fold budget q, and its per-pair capacity covers
/// k + 1 walks for all k <= max_k.
SelftestResult selftest_builder_families(std::size_t max_k = 6);

/// Wheel families against the literal hypotheses p = q = 3, r = (1,1,1).
/// Hub targets cannot satisfy r, and far pairs on even wheels from
/// n = 12 need four folds, so this reports violations.
SelftestResult selftest_wheel_catalogue(std::size_t odd_hi = 15, std::size_t even_hi = 16);

/// Flow and brute-force verdicts on random schedules (n <= 8, m <= 20,
/// labels <= 8) for k in {0, 1, 2}.
SelftestResult selftest_oracles(std::size_t count = 1000, std::uint64_t seed = 20261018);

// The literal wheel check is opt-in since it is known to report violations.
std::vector<SelftestResult> run_selftests(bool literal_wheel = false);

}  // namespace gossipft
