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

#include "gossipft/wheel.hpp"

#include <array>
#include <optional>
#include <stdexcept>
#include <string>

#include "gossipft/family_search.hpp"

namespace gossipft {
namespace {

void require_vertex(const WheelParams& params, WheelVertex v) {
  const bool ok = v.kind == WheelVertex::Kind::kHub ||
                  (v.kind == WheelVertex::Kind::kHubPrime && params.even()) ||
                  (v.kind == WheelVertex::Kind::kRim && v.index >= 1 &&
                   v.index <= params.rim_count());
  if (!ok) throw ScheduleError("invalid wheel vertex for n=" + std::to_string(params.n));
}

// Rim index i reduced into 1..k.
std::size_t wrap(std::ptrdiff_t i, std::size_t k) {
  const auto kk = static_cast<std::ptrdiff_t>(k);
  return static_cast<std::size_t>(((i - 1) % kk + kk) % kk + 1);
}

// A catalogue template step: which rim vertex (offset from i or j) or hub.
struct Hop {
  Label label;
  char kind;  // 'u' hub, 'v' rim, 'p' primed rim
  char anchor;  // 'i' or 'j'
  int offset;
};

struct Template {
  std::vector<Hop> hops;
};

// Paths of the closed-form catalogue for generic pairs, keyed by the
// source/target kinds. The start vertex is implied by the pair.
std::optional<std::array<Template, 3>> closed_form(char from, char to) {
  using T = std::array<Template, 3>;
  if (from == 'v' && to == 'u') {
    return T{Template{{{3, 'u', 'i', 0}}},
             Template{{{1, 'p', 'i', 0}, {2, 'u', 'i', 0}}},
             Template{{{4, 'p', 'i', -1}, {2, 'u', 'i', 0}}}};
  }
  if (from == 'u' && to == 'p') {
    return T{Template{{{2, 'p', 'j', 0}}},
             Template{{{3, 'v', 'j', 0}, {1, 'p', 'j', 0}}},
             Template{{{3, 'v', 'j', 1}, {4, 'p', 'j', 0}}}};
  }
  if (from == 'v' && to == 'v') {
    return T{Template{{{3, 'u', 'i', 0}, {2, 'p', 'j', -1}, {4, 'v', 'j', 0}}},
             Template{{{1, 'p', 'i', 0}, {2, 'u', 'i', 0}, {3, 'v', 'j', 1}, {4, 'p', 'j', 0},
                       {1, 'v', 'j', 0}}},
             Template{{{4, 'p', 'i', -1}, {2, 'u', 'i', 0}, {3, 'v', 'j', 0}}}};
  }
  if (from == 'v' && to == 'p') {
    return T{Template{{{3, 'u', 'i', 0}, {2, 'p', 'j', 0}}},
             Template{{{1, 'p', 'i', 0}, {2, 'u', 'i', 0}, {3, 'v', 'j', 0}, {1, 'p', 'j', 0}}},
             Template{{{4, 'p', 'i', -1}, {2, 'u', 'i', 0}, {3, 'v', 'j', 1}, {4, 'p', 'j', 0}}}};
  }
  if (from == 'p' && to == 'v') {
    return T{Template{{{2, 'u', 'i', 0}, {3, 'v', 'j', 1}, {4, 'p', 'j', 0}, {1, 'v', 'j', 0}}},
             Template{{{1, 'v', 'i', 0}, {3, 'u', 'i', 0}, {2, 'p', 'j', -1}, {4, 'v', 'j', 0}}},
             Template{{{4, 'v', 'i', 1}, {1, 'p', 'i', 1}, {2, 'u', 'i', 0}, {3, 'v', 'j', 0}}}};
  }
  if (from == 'p' && to == 'p') {
    return T{Template{{{2, 'u', 'i', 0}, {3, 'v', 'j', 0}, {1, 'p', 'j', 0}}},
             Template{{{1, 'v', 'i', 0}, {3, 'u', 'i', 0}, {2, 'p', 'j', 0}}},
             Template{{{4, 'v', 'i', 1}, {1, 'p', 'i', 1}, {2, 'u', 'i', 0}, {3, 'v', 'j', 1},
                       {4, 'p', 'j', 0}}}};
  }
  return std::nullopt;
}

char kind_code(WheelVertex v) {
  switch (v.kind) {
    case WheelVertex::Kind::kHub:
      return 'u';
    case WheelVertex::Kind::kHubPrime:
      return 'w';
    case WheelVertex::Kind::kRim:
      return v.primed ? 'p' : 'v';
  }
  return '?';
}

bool near_pair(std::size_t i, std::size_t j, std::size_t k) {
  for (int d : {-1, 0, 1, 2}) {
    if (wrap(static_cast<std::ptrdiff_t>(i) + d, k) == j) return true;
  }
  return false;
}

}  // namespace

NodeId wheel_node(std::size_t n, WheelVertex v) {
  const WheelParams params{n};
  require_vertex(params, v);
  switch (v.kind) {
    case WheelVertex::Kind::kHub:
      return 0;
    case WheelVertex::Kind::kHubPrime:
      return static_cast<NodeId>(n - 1);
    case WheelVertex::Kind::kRim:
      return static_cast<NodeId>(v.primed ? 2 * v.index : 2 * v.index - 1);
  }
  return 0;
}

WheelVertex wheel_vertex(std::size_t n, NodeId id) {
  const WheelParams params{n};
  if (id >= n) throw ScheduleError("node " + std::to_string(id) + " outside the wheel");
  if (id == 0) return WheelVertex::hub();
  if (params.even() && id == n - 1) return WheelVertex::hub_prime();
  return WheelVertex::rim((id + 1) / 2, id % 2 == 0);
}

WheelScheme generate_wheel_odd(std::size_t n) {
  if (n < 5 || n % 2 == 0) {
    throw ScheduleError("generate_wheel_odd: need odd n >= 5, got " + std::to_string(n));
  }
  const std::size_t k = WheelParams{n}.rim_count();
  auto v = [&](std::size_t i) { return wheel_node(n, WheelVertex::rim(wrap(static_cast<std::ptrdiff_t>(i), k), false)); };
  auto vp = [&](std::size_t i) { return wheel_node(n, WheelVertex::rim(wrap(static_cast<std::ptrdiff_t>(i), k), true)); };
  const NodeId u = 0;
  std::vector<Call> calls;
  for (std::size_t i = 1; i <= k; ++i) {
    calls.push_back({v(i), vp(i), 1});
    calls.push_back({vp(i), u, 2});
    calls.push_back({v(i), u, 3});
    calls.push_back({vp(i), v(i + 1), 4});
  }
  WheelScheme wheel{CallSchedule(n, std::move(calls)), {}};
  const Label bounds[] = {1, 3, 4};
  wheel.decomposition = decompose_by_label(wheel.schedule, bounds);
  wheel.decomposition.p = 3;
  wheel.decomposition.q = 3;
  wheel.decomposition.r = {1, 1, 1};
  return wheel;
}

WheelScheme generate_wheel_even(std::size_t n) {
  if (n < 6 || n % 2 != 0) {
    throw ScheduleError("generate_wheel_even: need even n >= 6, got " + std::to_string(n));
  }
  const std::size_t k = WheelParams{n}.rim_count();
  auto v = [&](std::size_t i) { return wheel_node(n, WheelVertex::rim(wrap(static_cast<std::ptrdiff_t>(i), k), false)); };
  auto vp = [&](std::size_t i) { return wheel_node(n, WheelVertex::rim(wrap(static_cast<std::ptrdiff_t>(i), k), true)); };
  const NodeId u = 0;
  const auto u2 = static_cast<NodeId>(n - 1);
  std::vector<Call> calls{{u, u2, 3}, {u, u2, 5}};
  for (std::size_t i = 1; i <= k; ++i) {
    calls.push_back({v(i), vp(i), 1});
    calls.push_back({vp(i), u, 2});
    calls.push_back({v(i), u2, 4});
    calls.push_back({vp(i), v(i + 1), 6});
  }
  WheelScheme wheel{CallSchedule(n, std::move(calls)), {}};
  const Label bounds[] = {1, 5, 6};
  wheel.decomposition = decompose_by_label(wheel.schedule, bounds);
  wheel.decomposition.p = 3;
  // From n = 12 on, far rim pairs v_i -> v_j need four folds in total:
  // the only walks into v_j through u' and v'_j both pass the hub pair.
  wheel.decomposition.q = n >= 12 ? 4 : 3;
  wheel.decomposition.r = {1, 1, 1};
  return wheel;
}

WheelScheme generate_wheel(std::size_t n) {
  return n % 2 == 0 ? generate_wheel_even(n) : generate_wheel_odd(n);
}

bool wheel_template_applies(std::size_t n, WheelVertex source, WheelVertex target) {
  const WheelParams params{n};
  if (params.even() || source == target) return false;
  const char from = kind_code(source);
  const char to = kind_code(target);
  if (!closed_form(from, to)) return false;
  if (from != 'u' && to != 'u') {
    return !near_pair(source.index, target.index, params.rim_count());
  }
  return true;
}

std::vector<FoldedPath> wheel_path_catalogue(const WheelScheme& wheel, WheelVertex source,
                                             WheelVertex target) {
  const CallSchedule& g = wheel.schedule;
  const std::size_t n = g.n();
  const WheelParams params{n};
  require_vertex(params, source);
  require_vertex(params, target);
  if (source == target) throw ScheduleError("wheel_path_catalogue: source equals target");
  const NodeId s = wheel_node(n, source);
  const NodeId t = wheel_node(n, target);

  if (wheel_template_applies(n, source, target)) {
    const auto templates = closed_form(kind_code(source), kind_code(target));
    const std::size_t k = params.rim_count();
    // For hub sources the single rim index is the target's.
    const std::size_t i = source.kind == WheelVertex::Kind::kRim ? source.index : target.index;
    const std::size_t j = target.kind == WheelVertex::Kind::kRim ? target.index : source.index;
    std::vector<FoldedPath> family;
    bool built = true;
    for (const Template& path : *templates) {
      std::vector<CallId> edges;
      NodeId at = s;
      for (const Hop& hop : path.hops) {
        const std::size_t base = hop.anchor == 'i' ? i : j;
        const std::size_t idx = wrap(static_cast<std::ptrdiff_t>(base) + hop.offset, k);
        const NodeId next = hop.kind == 'u' ? 0 : wheel_node(n, WheelVertex::rim(idx, hop.kind == 'p'));
        const auto id = g.find(at, next, hop.label);
        if (!id) {
          built = false;
          break;
        }
        edges.push_back(*id);
        at = next;
      }
      if (!built || at != t) {
        built = false;
        break;
      }
      family.push_back(fold_walk(g, s, edges));
    }
    if (built && pairwise_edge_disjoint(family) && total_folded_number(family) <= 3) {
      return family;
    }
  }

  auto found = min_fold_family(g, s, t, 3);
  if (!found) {
    throw std::logic_error("wheel_path_catalogue: fewer than 3 call-disjoint walks between " +
                           std::to_string(s) + " and " + std::to_string(t));
  }
  return *found;
}

}  // namespace gossipft
