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

#include "gossipft/builder.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

#include "gossipft/int_math.hpp"
#include "gossipft/knodel.hpp"
#include "gossipft/wheel.hpp"

namespace gossipft {

std::size_t choose_w(const Decomposition& d, std::size_t k) {
  const std::size_t l = d.r.size();
  if (l == 0 || std::accumulate(d.r.begin(), d.r.end(), std::size_t{0}) == 0) {
    throw ScheduleError("choose_w: every r_i is zero");
  }
  const std::size_t need = k + d.q + 1;
  std::size_t covered = 0;
  for (std::size_t w = 0;; ++w) {
    covered += d.r[w % l];
    if (covered >= need) return w;
  }
}

SchemeRecipe plan_replicated(const CallSchedule& base, const Decomposition& d, std::size_t k) {
  block_index(base, d);
  if (d.r.size() != d.blocks.size()) throw ScheduleError("decomposition needs one r per block");
  SchemeRecipe recipe;
  recipe.base = base;
  recipe.decomposition = d;
  recipe.k = k;
  recipe.w = choose_w(d, k);
  const std::size_t l = d.block_count();
  recipe.h = recipe.w / l;
  for (std::size_t i = 0; i <= recipe.w; ++i) recipe.predicted_calls += d.blocks[i % l].size();
  return recipe;
}

BuiltScheme build_replicated(const CallSchedule& base, const Decomposition& d, std::size_t k) {
  SchemeRecipe recipe = plan_replicated(base, d, k);
  const std::size_t l = d.block_count();
  std::vector<CallId> partial;
  for (std::size_t i = 0; i <= recipe.w - recipe.h * l; ++i) {
    partial.insert(partial.end(), d.blocks[i].begin(), d.blocks[i].end());
  }
  const CallSchedule tail = restrict_to(base, partial);
  CallSchedule out = recipe.h == 0 ? tail : edge_sum(replicate(base, recipe.h), tail);
  if (out.size() != recipe.predicted_calls) {
    throw std::logic_error("build_replicated: built " + std::to_string(out.size()) +
                           " calls but predicted " + std::to_string(recipe.predicted_calls));
  }
  return {std::move(out), std::move(recipe)};
}

std::size_t guaranteed_paths(const CallSchedule& base, const Decomposition& d,
                             std::span<const FoldedPath> family, std::size_t w) {
  const std::vector<std::size_t> block = block_index(base, d);
  const std::size_t l = d.block_count();
  std::size_t total = 0;
  for (const auto& path : family) {
    if (path.edges().empty()) continue;
    const std::size_t b = block[path.edges().back()];
    // Occurrences of block b among 0..w.
    const std::size_t copies = b > w ? 0 : (w - b) / l + 1;
    if (copies > path.folded_number()) total += copies - path.folded_number();
  }
  return total;
}

CallSchedule build_knodel_ft(std::size_t n, std::size_t k) {
  if (n < 2 || n % 2 != 0) {
    throw ScheduleError("build_knodel_ft: n must be even (use the odd wrapper for n=" +
                        std::to_string(n) + ")");
  }
  if (is_power_of_two(n)) {
    const std::size_t dim = floor_log2(n);
    return build_replicated(generate_hypercube(dim), hypercube_decomposition(dim), k).schedule;
  }
  const CallSchedule base = generate_knodel({n, floor_log2(n)});
  return build_replicated(base, knodel_decomposition(n), k).schedule;
}

CallSchedule build_knodel_ft_odd(std::size_t n, std::size_t k, NodeId attach) {
  if (n < 3 || n % 2 == 0) {
    throw ScheduleError("build_knodel_ft_odd: n must be odd and at least 3, got " +
                        std::to_string(n));
  }
  if (attach >= n - 1) throw ScheduleError("build_knodel_ft_odd: attach node out of range");
  const auto extra = static_cast<NodeId>(n - 1);
  const CallSchedule inner = with_node_count(build_knodel_ft(n - 1, k), n);
  const CallSchedule link(n, {{extra, attach, 1}});
  const CallSchedule links = replicate(link, k + 1);
  CallSchedule out = edge_sum(edge_sum(links, inner), links);
  const std::size_t expected = inner.size() + 2 * (k + 1);
  if (out.size() != expected) throw std::logic_error("build_knodel_ft_odd: call count mismatch");
  return out;
}

CallSchedule build_wheel_ft(std::size_t n, std::size_t k) {
  if (n < 5) throw ScheduleError("build_wheel_ft: n must be at least 5");
  if (n % 2 == 0 && n < 6) throw ScheduleError("build_wheel_ft: even n must be at least 6");
  const WheelScheme wheel = generate_wheel(n);
  return build_replicated(wheel.schedule, wheel.decomposition, k).schedule;
}

}  // namespace gossipft
