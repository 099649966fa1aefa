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
#include <optional>
#include <string>
#include <vector>

namespace gossipft::bounds {

// Every bound takes n <= kMaxN so exact 64-bit arithmetic cannot overflow.
inline constexpr std::uint64_t kMaxN = std::uint64_t{1} << 24;
inline constexpr std::uint64_t kMaxK = std::uint64_t{1} << 20;

struct Interval {
  std::uint64_t lower = 0;
  std::uint64_t upper = 0;
};

/// Berman-Hawrylycz. Two lower bounds exist, one for k <= n-2 and one
/// for k >= n-2; at k = n-2 both are filled and `lower` is the larger.
/// Negative lower values are clamped to 0.
struct BhBounds {
  std::uint64_t lower = 0;
  std::uint64_t upper = 0;
  std::optional<std::uint64_t> lower_small_k;
  std::optional<std::uint64_t> lower_large_k;
};
BhBounds bh_bounds(std::uint64_t n, std::uint64_t k);

// Largest admissible p, floor(log2 n).
std::uint64_t max_p(std::uint64_t n);

/// ceil((k/2 + 2p)(n-1 + (n-1)/(2^p-1) + 2^p)). Without p, the minimum
/// over 1 <= p <= floor(log2 n) (smallest p on ties).
std::uint64_t haddad_bound(std::uint64_t n, std::uint64_t k, std::optional<std::uint64_t> p = {});
std::uint64_t haddad_best_p(std::uint64_t n, std::uint64_t k);

// n = 2^p only.
std::uint64_t haddad_pow2_bound(std::uint64_t n, std::uint64_t k);

/// floor(n(k+2)/2) <= tau <= n(n-1)/2 + ceil(nk/2). The upper value can
/// fall below the lower one for small n and large k.
Interval hou_shigeno_bounds(std::uint64_t n, std::uint64_t k);
bool hou_shigeno_consistent(std::uint64_t n, std::uint64_t k);

// Hasunuma-Nagamochi upper (power of two or general) and lower bounds.
Interval hn_bounds(std::uint64_t n, std::uint64_t k);

// The Haddad expression with factor (k/2 + p); minimized over p if absent.
std::uint64_t hn_factor_bound(std::uint64_t n, std::uint64_t k,
                              std::optional<std::uint64_t> p = {});

/// (n/2) ceil(log2 n) + nk/2 for even n, and the odd wrapper
/// ((n-1)/2) ceil(log2(n-1)) + (n-1)k/2 + 2(k+1). n >= 2.
std::uint64_t knodel_bound(std::uint64_t n, std::uint64_t k);

/// The wheel formulas, split on k mod 3. Odd n >= 5 or even n >= 6.
std::uint64_t wheel_bound(std::uint64_t n, std::uint64_t k);

/// Call count the wheel construction actually produces: sum over
/// 0 <= i <= k+q of the size of block i mod 3 (see generate_wheel).
/// Equals wheel_bound for odd n but not for even n.
std::uint64_t wheel_construction_calls(std::uint64_t n, std::uint64_t k);

// 2n - 3 + floor(n/2) for k = 1, 3n - 3 for k = 2.
std::uint64_t small_k_bound(std::uint64_t n, std::uint64_t k);

struct TimeBounds {
  std::uint64_t m = 0;  // ceil(log2 n)
  std::uint64_t lower = 0;
  std::uint64_t upper = 0;
  std::optional<std::uint64_t> exact;  // even n
  std::uint64_t haddad_upper = 0;
  std::uint64_t gargano_upper = 0;
};
TimeBounds time_bounds(std::uint64_t n, std::uint64_t k);

struct BoundRow {
  std::uint64_t n = 0;
  std::uint64_t k = 0;
  BhBounds bh;
  std::uint64_t haddad = 0;
  std::optional<std::uint64_t> haddad_pow2;
  Interval hou_shigeno;
  Interval hn;
  std::uint64_t hn_factor = 0;
  std::uint64_t knodel = 0;
  std::optional<std::uint64_t> wheel;
  std::optional<std::uint64_t> small_k;
  std::uint64_t construction_best = 0;
  // Smallest upper bound from the earlier literature.
  std::uint64_t previous_best = 0;
  bool strictly_best = false;
  std::uint64_t best_lower = 0;
};

BoundRow bound_row(std::uint64_t n, std::uint64_t k);

// Rows sorted by (n, k). Throws std::invalid_argument on empty ranges.
std::vector<BoundRow> compare_table(std::uint64_t n_lo, std::uint64_t n_hi, std::uint64_t k_lo,
                                    std::uint64_t k_hi);

std::string to_csv(const std::vector<BoundRow>& rows);
std::string to_text(const std::vector<BoundRow>& rows);

}  // namespace gossipft::bounds
