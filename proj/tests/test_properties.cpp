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

// Randomized properties against the reference implementations in oracles.hpp.

#include <doctest.h>

#include <random>

#include "gossipft/family_search.hpp"
#include "gossipft/folded_path.hpp"
#include "gossipft/selftest.hpp"
#include "gossipft/verify.hpp"
#include "oracles.hpp"

using namespace gossipft;

namespace {

FaultSet random_faults(std::mt19937_64& rng, const CallSchedule& g) {
  FaultSet out;
  std::bernoulli_distribution coin(0.25);
  for (CallId id = 0; id < g.size(); ++id) {
    if (coin(rng)) out.push_back(id);
  }
  return out;
}

}  // namespace

TEST_CASE("simulation equals ascending reachability under faults") {
  std::mt19937_64 rng(11);
  for (int round = 0; round < 400; ++round) {
    const CallSchedule g = random_schedule(rng, 7, 18, 6);
    const FaultSet faults = random_faults(rng, g);
    const KnowledgeState s = simulate(g, faults);
    for (NodeId u = 0; u < g.n(); ++u) {
      for (NodeId v = 0; v < g.n(); ++v) {
        CHECK(s.knows(v, u) == testing::ascending_reachable(g, u, v, faults));
      }
    }
  }
}

TEST_CASE("flow value equals the smallest cutting fault set") {
  std::mt19937_64 rng(12);
  for (int round = 0; round < 150; ++round) {
    const CallSchedule g = random_schedule(rng, 5, 11, 5);
    AscendingPathCounter counter(g);
    for (NodeId s = 0; s < g.n(); ++s) {
      for (NodeId t = 0; t < g.n(); ++t) {
        if (s == t) continue;
        CHECK(counter.count(s, t) == testing::min_cut_by_enumeration(g, s, t));
      }
    }
  }
}

TEST_CASE("flow never exceeds the smaller endpoint degree") {
  std::mt19937_64 rng(13);
  for (int round = 0; round < 200; ++round) {
    const CallSchedule g = random_schedule(rng, 8, 30, 8);
    for (NodeId s = 0; s < g.n(); ++s) {
      for (NodeId t = 0; t < g.n(); ++t) {
        if (s == t) continue;
        CHECK(count_edge_disjoint_ascending_paths(g, s, t) <= std::min(g.degree(s), g.degree(t)));
      }
    }
  }
}

TEST_CASE("removing calls never increases the flow") {
  std::mt19937_64 rng(14);
  for (int round = 0; round < 200; ++round) {
    const CallSchedule g = random_schedule(rng, 7, 24, 7);
    if (g.empty()) continue;
    std::uniform_int_distribution<CallId> pick(0, g.size() - 1);
    const CallId drop = pick(rng);
    std::vector<CallId> keep;
    for (CallId id = 0; id < g.size(); ++id) {
      if (id != drop) keep.push_back(id);
    }
    const CallSchedule h = restrict_to(g, keep);
    for (NodeId s = 0; s < g.n(); ++s) {
      for (NodeId t = 0; t < g.n(); ++t) {
        if (s == t) continue;
        const std::size_t before = count_edge_disjoint_ascending_paths(g, s, t);
        const std::size_t after = count_edge_disjoint_ascending_paths(h, s, t);
        CHECK(after <= before);
        CHECK(after + 1 >= before);
      }
    }
  }
}

TEST_CASE("tolerance verdicts agree with the definition") {
  std::mt19937_64 rng(15);
  for (int round = 0; round < 150; ++round) {
    const CallSchedule g = random_schedule(rng, 5, 14, 6);
    for (std::size_t k = 0; k <= 2; ++k) {
      const bool truth = testing::tolerant_by_definition(g, k);
      CHECK(is_k_fault_tolerant_flow(g, k).tolerant == truth);
      CHECK(is_k_fault_tolerant_bruteforce(g, k).tolerant == truth);
    }
  }
}

TEST_CASE("min-fold families are disjoint trails and their lifts ascend") {
  std::mt19937_64 rng(16);
  for (int round = 0; round < 150; ++round) {
    const CallSchedule g = random_schedule(rng, 6, 16, 5);
    for (NodeId s = 0; s < g.n(); ++s) {
      for (NodeId t = 0; t < g.n(); ++t) {
        if (s == t) continue;
        const std::size_t count = std::min<std::size_t>(2, std::min(g.degree(s), g.degree(t)));
        const auto fam = min_fold_family(g, s, t, count);
        if (!fam) continue;
        CHECK(fam->size() == count);
        CHECK(pairwise_edge_disjoint(*fam));
        for (const FoldedPath& p : *fam) {
          CHECK(p.source() == s);
          CHECK(p.target() == t);
          CHECK(fold_walk(g, s, p.edges()) == p);
          const std::size_t h = p.folded_number() + 2;
          const FoldedPath a = lift_folded_path(g, p, h, 1);
          const FoldedPath b = lift_folded_path(g, p, h, 2);
          CHECK(a.ascending());
          CHECK(b.ascending());
          const FoldedPath pair[] = {a, b};
          CHECK(pairwise_edge_disjoint(pair));
        }
      }
    }
  }
}

TEST_CASE("oracle selftest on a fixed seed") {
  const SelftestResult r = selftest_oracles(200, 99);
  CHECK(r.passed);
  CHECK(r.cases == 600);
}
