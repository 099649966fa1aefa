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

#include <stdexcept>
#include <vector>

#include "gossipft/decomposition.hpp"
#include "gossipft/folded_path.hpp"
#include "gossipft/schedule.hpp"

namespace gossipft {

// Vertex (side, pos) of a Knödel graph, side in {1, 2}, pos in [0, n/2).
// Serialized as pos for side 1 and n/2 + pos for side 2.
struct KnodelVertex {
  int side = 1;
  std::size_t pos = 0;

  friend bool operator==(const KnodelVertex&, const KnodelVertex&) = default;
  friend auto operator<=>(const KnodelVertex&, const KnodelVertex&) = default;
};

struct KnodelParams {
  std::size_t n = 0;
  std::size_t delta = 0;
};

NodeId knodel_node(std::size_t n, KnodelVertex v);
KnodelVertex knodel_vertex(std::size_t n, NodeId id);

/// W_{delta,n}: for each label l in 1..delta, the perfect matching
/// (1,j) -- (2, (j + 2^(l-1) - 1) mod n/2). Requires even n >= 2 and
/// 1 <= delta <= ceil(log2 n).
CallSchedule generate_knodel(const KnodelParams& params);

// Cyclic distance from `source` toward `target` that governs whether an
// ascending path into `target` exists. Always in [0, n/2).
std::size_t interval(std::size_t n, KnodelVertex target, KnodelVertex source);

class NoAscendingPath : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The backward walk from target to source: vertices[i] is (a_{i+1}, b_{i+1})
/// and steps[i] is the jump f_{i+1}; vertices.back() is the source. Each
/// jump f = 2^x - 1 crosses the matching with label x + 1, and jumps
/// strictly shrink, so read forwards the walk is ascending.
struct PathRecursion {
  std::vector<KnodelVertex> vertices;
  std::vector<std::size_t> steps;

  std::size_t length() const { return steps.size(); }
};

// Throws NoAscendingPath when interval(target; source) exceeds
// 2^(floor(log2 n) - 1) - 1.
PathRecursion path_recursion(std::size_t n, KnodelVertex source, KnodelVertex target);

// The explicit ascending path in W_{floor(log2 n),n}; `w` must be that graph.
FoldedPath ascending_path(const CallSchedule& w, KnodelVertex source, KnodelVertex target);
FoldedPath ascending_path(std::size_t n, KnodelVertex source, KnodelVertex target);

// Vertices with an ascending path to `target` in W_{delta,n}, sorted.
std::vector<KnodelVertex> reachable_set(std::size_t n, std::size_t delta, KnodelVertex target);

// W_{log2 n,n} when n is a power of two, else W_{floor(log2 n),n} + W_{1,n}.
CallSchedule gossip_base(std::size_t n);

// Staging set V(d) for target (1,0): V(1) = {(2,0)}, and for d >= 2 the
// positions 2^(d-2) .. 2^(d-1)-1 on both sides.
std::vector<KnodelVertex> staging_set(std::size_t n, std::size_t d);

/// floor(log2 n) pairwise edge-disjoint folded ascending walks in
/// W_{floor(log2 n),n} from source to target with the least total folded
/// number. The i-th walk enters the target by its label-(i+1) call, i.e.
/// through staging set V(i+1) of the target. Empty for source == target.
std::vector<FoldedPath> folded_path_family(const CallSchedule& w, KnodelVertex source,
                                           KnodelVertex target);
std::vector<FoldedPath> folded_path_family(std::size_t n, KnodelVertex source,
                                           KnodelVertex target);

/// One block per label of W_{floor(log2 n),n}, p = floor(log2 n), every
/// r_i = 1, and q = floor(log2 n). For powers of two the builder uses the
/// hypercube instead, since W(m, 2^m) needs m folds for some pairs.
Decomposition knodel_decomposition(std::size_t n);

/// Hypercube on 2^dim nodes, dimension l carrying label l. Used in place
/// of W(m, 2^m) by the fault-tolerant builder: its folded families need
/// only m - 1 folds in total, which W(m, 2^m) does not achieve.
CallSchedule generate_hypercube(std::size_t dim);
Decomposition hypercube_decomposition(std::size_t dim);

}  // namespace gossipft
