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

#include "gossipft/selftest.hpp"

#include <chrono>

#include "gossipft/builder.hpp"
#include "gossipft/family_search.hpp"
#include "gossipft/int_math.hpp"
#include "gossipft/knodel.hpp"
#include "gossipft/wheel.hpp"

namespace gossipft {
namespace {

constexpr std::size_t kMaxListed = 8;

class Timer {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

void note(SelftestResult& r, std::string what) {
  ++r.violations;
  if (r.failures.size() < kMaxListed) r.failures.push_back(std::move(what));
  r.passed = false;
}

void absorb(SelftestResult& r, const std::string& label, const FamilyReport& report) {
  r.cases += report.pairs_checked;
  for (const auto& v : report.violations) {
    note(r, label + " " + std::to_string(v.source) + "->" + std::to_string(v.target) + ": " + v.what);
  }
}

PairFamilies all_min_fold(const CallSchedule& g, std::size_t p) {
  PairFamilies out;
  for (NodeId s = 0; s < g.n(); ++s) {
    for (NodeId t = 0; t < g.n(); ++t) {
      if (s == t) continue;
      if (auto f = min_fold_family(g, s, t, p)) out[{s, t}] = std::move(*f);
    }
  }
  return out;
}

// Pair-level capacity of the replication for every k up to max_k.
void check_capacity(SelftestResult& r, const std::string& label, const CallSchedule& g,
                    const Decomposition& d, const PairFamilies& families, std::size_t max_k) {
  for (std::size_t k = 0; k <= max_k; ++k) {
    const std::size_t w = choose_w(d, k);
    for (const auto& [pair, family] : families) {
      const std::size_t have = guaranteed_paths(g, d, family, w);
      if (have < k + 1) {
        note(r, label + " k=" + std::to_string(k) + " " + std::to_string(pair.first) + "->" +
                    std::to_string(pair.second) + ": capacity " + std::to_string(have));
      }
    }
  }
}

}  // namespace

CallSchedule random_schedule(std::mt19937_64& rng, std::size_t max_n, std::size_t max_m,
                             Label max_label) {
  std::uniform_int_distribution<std::size_t> pick_n(2, std::max<std::size_t>(2, max_n));
  std::uniform_int_distribution<std::size_t> pick_m(0, max_m);
  std::uniform_int_distribution<Label> pick_label(1, max_label);
  const std::size_t n = pick_n(rng);
  const std::size_t m = pick_m(rng);
  std::uniform_int_distribution<NodeId> pick_node(0, static_cast<NodeId>(n - 1));
  std::vector<Call> calls;
  calls.reserve(m);
  while (calls.size() < m) {
    const NodeId a = pick_node(rng);
    const NodeId b = pick_node(rng);
    if (a != b) calls.push_back({a, b, pick_label(rng)});
  }
  return CallSchedule(n, std::move(calls));
}

SelftestResult selftest_knodel_families(std::size_t n_lo, std::size_t n_hi) {
  Timer timer;
  SelftestResult r{"knodel-families", true, 0, 0, {}, 0};
  for (std::size_t n = n_lo + n_lo % 2; n <= n_hi; n += 2) {
    const std::size_t p = floor_log2(n);
    const CallSchedule g = generate_knodel({n, p});
    PairFamilies families;
    for (NodeId s = 0; s < n; ++s) {
      for (NodeId t = 0; t < n; ++t) {
        if (s != t) families[{s, t}] = folded_path_family(g, knodel_vertex(n, s), knodel_vertex(n, t));
      }
    }
    Decomposition d = knodel_decomposition(n);
    absorb(r, "n=" + std::to_string(n), check_folded_family(g, families, p, p, d));
  }
  r.seconds = timer.seconds();
  return r;
}

SelftestResult selftest_builder_families(std::size_t max_k) {
  Timer timer;
  SelftestResult r{"builder-families", true, 0, 0, {}, 0};
  auto run = [&](const std::string& label, const CallSchedule& g, const Decomposition& d) {
    const PairFamilies families = all_min_fold(g, d.p);
    Decomposition no_r = d;
    no_r.r.clear();
    absorb(r, label, check_folded_family(g, families, d.p, d.q, no_r));
    check_capacity(r, label, g, d, families, max_k);
  };
  for (std::size_t n = 6; n <= 32; n += 2) {
    if (is_power_of_two(n)) continue;
    run("knodel n=" + std::to_string(n), generate_knodel({n, floor_log2(n)}), knodel_decomposition(n));
  }
  for (std::size_t dim = 1; dim <= 5; ++dim) {
    run("hypercube dim=" + std::to_string(dim), generate_hypercube(dim), hypercube_decomposition(dim));
  }
  for (std::size_t n = 5; n <= 20; ++n) {
    const WheelScheme w = generate_wheel(n);
    run("wheel n=" + std::to_string(n), w.schedule, w.decomposition);
  }
  r.seconds = timer.seconds();
  return r;
}

SelftestResult selftest_wheel_catalogue(std::size_t odd_hi, std::size_t even_hi) {
  Timer timer;
  SelftestResult r{"wheel-catalogue", true, 0, 0, {}, 0};
  auto run = [&](std::size_t n) {
    const WheelScheme w = generate_wheel(n);
    PairFamilies families;
    for (NodeId s = 0; s < n; ++s) {
      for (NodeId t = 0; t < n; ++t) {
        if (s == t) continue;
        families[{s, t}] = wheel_path_catalogue(w, wheel_vertex(n, s), wheel_vertex(n, t));
      }
    }
    Decomposition literal = w.decomposition;
    literal.r = {1, 1, 1};
    absorb(r, "n=" + std::to_string(n), check_folded_family(w.schedule, families, 3, 3, literal));
  };
  for (std::size_t n = 5; n <= odd_hi; n += 2) run(n);
  for (std::size_t n = 6; n <= even_hi; n += 2) run(n);
  r.seconds = timer.seconds();
  return r;
}

SelftestResult selftest_oracles(std::size_t count, std::uint64_t seed) {
  Timer timer;
  SelftestResult r{"oracle-equivalence", true, 0, 0, {}, 0};
  std::mt19937_64 rng(seed);
  for (std::size_t i = 0; i < count; ++i) {
    const CallSchedule g = random_schedule(rng, 8, 20, 8);
    for (std::size_t k = 0; k <= 2; ++k) {
      ++r.cases;
      const bool flow = is_k_fault_tolerant_flow(g, k).tolerant;
      const bool brute = is_k_fault_tolerant_bruteforce(g, k).tolerant;
      if (flow != brute) {
        note(r, "sample " + std::to_string(i) + " k=" + std::to_string(k) + ": flow " +
                    (flow ? "yes" : "no") + ", brute force " + (brute ? "yes" : "no"));
      }
    }
  }
  r.seconds = timer.seconds();
  return r;
}

std::vector<SelftestResult> run_selftests(bool literal_wheel) {
  std::vector<SelftestResult> out{selftest_oracles(), selftest_knodel_families(),
                                  selftest_builder_families()};
  if (literal_wheel) out.push_back(selftest_wheel_catalogue());
  return out;
}

}  // namespace gossipft
