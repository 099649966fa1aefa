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

#include <bit>
#include <cstdint>
#include <stdexcept>

namespace gossipft {

// Integer logarithms; x must be positive.
constexpr unsigned floor_log2(std::uint64_t x) {
  if (x == 0) throw std::domain_error("floor_log2(0)");
  return static_cast<unsigned>(std::bit_width(x) - 1);
}

constexpr unsigned ceil_log2(std::uint64_t x) {
  if (x == 0) throw std::domain_error("ceil_log2(0)");
  return x == 1 ? 0u : static_cast<unsigned>(std::bit_width(x - 1));
}

constexpr bool is_power_of_two(std::uint64_t x) { return std::has_single_bit(x); }

// Smallest r with r*r >= x.
constexpr std::uint64_t ceil_sqrt(std::uint64_t x) {
  std::uint64_t r = 0;
  while (r * r < x) ++r;
  return r;
}

}  // namespace gossipft
