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

#include "gossipft/knodel.hpp"

#include <algorithm>
#include <string>

#include "gossipft/family_search.hpp"
#include "gossipft/int_math.hpp"

namespace gossipft {
namespace {

void require_even(std::size_t n, const char* what) {
  if (n < 2 || n % 2 != 0) {
    throw ScheduleError(std::string(what) + ": Knödel graphs need an even n >= 2, got " +
                        std::to_string(n));
  }
}

void require_vertex(std::size_t n, KnodelVertex v) {
  if ((v.side != 1 && v.side != 2) || v.pos >= n / 2) {
    throw ScheduleError("invalid Knödel vertex (" + std::to_string(v.side) + "," +
                        std::to_string(v.pos) + ") for n=" + std::to_string(n));
  }
}

// 2^ceil(log2(x+1)) - 1: the smallest jump 2^e - 1 covering distance x.
std::size_t covering_jump(std::size_t x) { return (std::size_t{1} << ceil_log2(x + 1)) - 1; }

}  // namespace

NodeId knodel_node(std::size_t n, KnodelVertex v) {
  require_vertex(n, v);
  return static_cast<NodeId>(v.side == 1 ? v.pos : n / 2 + v.pos);
}

KnodelVertex knodel_vertex(std::size_t n, NodeId id) {
  if (id >= n) throw ScheduleError("node " + std::to_string(id) + " outside Knödel graph");
  return id < n / 2 ? KnodelVertex{1, id} : KnodelVertex{2, id - n / 2};
}

CallSchedule generate_knodel(const KnodelParams& params) {
  const std::size_t n = params.n;
  require_even(n, "generate_knodel");
  if (params.delta < 1 || params.delta > ceil_log2(n)) {
    throw ScheduleError("generate_knodel: degree must lie in 1..ceil(log2 n)");
  }
  const std::size_t half = n / 2;
  std::vector<Call> calls;
  calls.reserve(params.delta * half);
  for (std::size_t l = 1; l <= params.delta; ++l) {
    const std::size_t jump = (std::size_t{1} << (l - 1)) - 1;
    for (std::size_t j = 0; j < half; ++j) {
      calls.push_back({static_cast<NodeId>(j), static_cast<NodeId>(half + (j + jump) % half),
                       static_cast<Label>(l)});
    }
  }
  return CallSchedule(n, std::move(calls));
}

std::size_t interval(std::size_t n, KnodelVertex target, KnodelVertex source) {
  require_vertex(n, target);
  require_vertex(n, source);
  const std::size_t half = n / 2;
  const std::size_t beta = target.pos;
  const std::size_t delta = source.pos;
  if (target.side == 1) return delta >= beta ? delta - beta : half - (beta - delta);
  return delta <= beta ? beta - delta : half - (delta - beta);
}

PathRecursion path_recursion(std::size_t n, KnodelVertex source, KnodelVertex target) {
  require_even(n, "ascending_path");
  require_vertex(n, source);
  require_vertex(n, target);
  const std::size_t half = n / 2;
  const std::size_t max_jump = (std::size_t{1} << (floor_log2(n) - 1)) - 1;
  const std::size_t r = interval(n, target, source);
  if (r > max_jump) {
    throw NoAscendingPath("no ascending path: interval " + std::to_string(r) + " exceeds " +
                          std::to_string(max_jump));
  }

  PathRecursion rec;
  KnodelVertex at = target;
  while (at != source) {
    // Remaining distance in the direction the next (earlier) call must jump.
    const std::size_t remaining = at.side == 1 ? (source.pos + half - at.pos) % half
                                               : (at.pos + half - source.pos) % half;
    const std::size_t jump = covering_jump(remaining);
    if (jump > max_jump || (!rec.steps.empty() && jump >= rec.steps.back())) {
      throw NoAscendingPath("ascending path recursion did not converge");
    }
    at = at.side == 1 ? KnodelVertex{2, (at.pos + jump) % half}
                      : KnodelVertex{1, (at.pos + half - jump) % half};
    rec.vertices.push_back(at);
    rec.steps.push_back(jump);
  }
  return rec;
}

FoldedPath ascending_path(const CallSchedule& w, KnodelVertex source, KnodelVertex target) {
  const std::size_t n = w.n();
  const PathRecursion rec = path_recursion(n, source, target);
  std::vector<CallId> edges;
  KnodelVertex later = target;
  std::vector<CallId> backwards;
  for (std::size_t i = 0; i < rec.length(); ++i) {
    const KnodelVertex earlier = rec.vertices[i];
    const Label label = static_cast<Label>(ceil_log2(rec.steps[i] + 1) + 1);
    const auto id = w.find(knodel_node(n, earlier), knodel_node(n, later), label);
    if (!id) throw ScheduleError("ascending_path: schedule is not W_{floor(log2 n),n}");
    backwards.push_back(*id);
    later = earlier;
  }
  edges.assign(backwards.rbegin(), backwards.rend());
  return fold_walk(w, knodel_node(n, source), edges);
}

FoldedPath ascending_path(std::size_t n, KnodelVertex source, KnodelVertex target) {
  require_even(n, "ascending_path");
  return ascending_path(generate_knodel({n, floor_log2(n)}), source, target);
}

std::vector<KnodelVertex> reachable_set(std::size_t n, std::size_t delta, KnodelVertex target) {
  require_even(n, "reachable_set");
  require_vertex(n, target);
  const std::size_t half = n / 2;
  const std::size_t span = std::min<std::size_t>(std::size_t{1} << (delta - 1), half);
  std::vector<KnodelVertex> out;
  for (int side = 1; side <= 2; ++side) {
    for (std::size_t d = 0; d < span; ++d) {
      const std::size_t pos =
          target.side == 1 ? (target.pos + d) % half : (target.pos + half - d) % half;
      out.push_back({side, pos});
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

CallSchedule gossip_base(std::size_t n) {
  require_even(n, "gossip_base");
  const CallSchedule w = generate_knodel({n, floor_log2(n)});
  if (is_power_of_two(n)) return w;
  return edge_sum(w, generate_knodel({n, 1}));
}

std::vector<KnodelVertex> staging_set(std::size_t n, std::size_t d) {
  require_even(n, "staging_set");
  if (d < 1 || d > floor_log2(n)) throw ScheduleError("staging_set: index out of range");
  if (d == 1) return {{2, 0}};
  std::vector<KnodelVertex> out;
  const std::size_t first = std::size_t{1} << (d - 2);
  for (int side = 1; side <= 2; ++side) {
    for (std::size_t j = 0; j < first; ++j) out.push_back({side, first + j});
  }
  return out;
}

std::vector<FoldedPath> folded_path_family(const CallSchedule& w, KnodelVertex source,
                                           KnodelVertex target) {
  const std::size_t n = w.n();
  require_vertex(n, source);
  require_vertex(n, target);
  const std::size_t p = floor_log2(n);
  auto family = min_fold_family(w, knodel_node(n, source), knodel_node(n, target), p);
  if (!family) {
    throw std::logic_error("folded_path_family: fewer than " + std::to_string(p) +
                           " edge-disjoint walks found");
  }
  return *family;
}

std::vector<FoldedPath> folded_path_family(std::size_t n, KnodelVertex source,
                                           KnodelVertex target) {
  require_even(n, "folded_path_family");
  return folded_path_family(generate_knodel({n, floor_log2(n)}), source, target);
}

Decomposition knodel_decomposition(std::size_t n) {
  require_even(n, "knodel_decomposition");
  const std::size_t levels = floor_log2(n);
  const CallSchedule w = generate_knodel({n, levels});
  std::vector<Label> bounds;
  for (std::size_t l = 1; l <= levels; ++l) bounds.push_back(static_cast<Label>(l));
  Decomposition d = decompose_by_label(w, bounds);
  d.p = levels;
  d.q = levels;
  d.r.assign(levels, 1);
  return d;
}

CallSchedule generate_hypercube(std::size_t dim) {
  if (dim == 0 || dim > 20) throw ScheduleError("generate_hypercube: dimension must be in 1..20");
  const std::size_t n = std::size_t{1} << dim;
  std::vector<Call> calls;
  calls.reserve(dim * n / 2);
  for (std::size_t l = 0; l < dim; ++l) {
    const std::size_t bit = std::size_t{1} << l;
    for (std::size_t v = 0; v < n; ++v) {
      if ((v & bit) == 0) {
        calls.push_back({static_cast<NodeId>(v), static_cast<NodeId>(v | bit),
                         static_cast<Label>(l + 1)});
      }
    }
  }
  return CallSchedule(n, std::move(calls));
}

Decomposition hypercube_decomposition(std::size_t dim) {
  const CallSchedule g = generate_hypercube(dim);
  std::vector<Label> bounds;
  for (std::size_t l = 1; l <= dim; ++l) bounds.push_back(static_cast<Label>(l));
  Decomposition d = decompose_by_label(g, bounds);
  d.p = dim;
  // Bit-fixing walks: fold only when the walk wraps past dimension dim.
  d.q = dim - 1;
  d.r.assign(dim, 1);
  return d;
}

}  // namespace gossipft
