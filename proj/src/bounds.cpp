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

#include "gossipft/bounds.hpp"

#include <algorithm>
#include <boost/rational.hpp>
#include <iomanip>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "gossipft/int_math.hpp"

namespace gossipft::bounds {
namespace {

using Q = boost::rational<std::int64_t>;
using I = std::int64_t;

void require_n(std::uint64_t n, std::uint64_t k, std::uint64_t min_n, const char* who) {
  if (n < min_n || n > kMaxN) {
    throw std::invalid_argument(std::string(who) + ": n=" + std::to_string(n) + " out of range");
  }
  if (k > kMaxK) throw std::invalid_argument(std::string(who) + ": k too large");
}

I ceil_q(const Q& x) {
  const I num = x.numerator();
  const I den = x.denominator();  // always positive
  return num >= 0 ? (num + den - 1) / den : -((-num) / den);
}

I floor_q(const Q& x) {
  const I num = x.numerator();
  const I den = x.denominator();
  return num >= 0 ? num / den : -((-num + den - 1) / den);
}

std::uint64_t clamp0(I v) { return v < 0 ? 0 : static_cast<std::uint64_t>(v); }

I ceil_div(I a, I b) { return (a + b - 1) / b; }

std::uint64_t factor_bound(std::uint64_t n, std::uint64_t k, std::uint64_t p,
                           std::uint64_t p_weight) {
  if (p < 1 || p > max_p(n)) {
    throw std::invalid_argument("p=" + std::to_string(p) + " outside 1.." +
                                std::to_string(max_p(n)));
  }
  const I nn = static_cast<I>(n);
  const I two_p = I{1} << p;
  const Q factor = Q(static_cast<I>(k), 2) + Q(static_cast<I>(p_weight * p));
  const Q size = Q(nn - 1) + Q(nn - 1, two_p - 1) + Q(two_p);
  return clamp0(ceil_q(factor * size));
}

std::uint64_t best_over_p(std::uint64_t n, std::uint64_t k, std::uint64_t p_weight,
                          std::uint64_t* arg) {
  std::uint64_t best = std::numeric_limits<std::uint64_t>::max();
  for (std::uint64_t p = 1; p <= max_p(n); ++p) {
    const std::uint64_t v = factor_bound(n, k, p, p_weight);
    if (v < best) {
      best = v;
      if (arg) *arg = p;
    }
  }
  return best;
}

// Block sizes (F0, F1, F2) and fold budget of the wheel base.
struct WheelShape {
  std::uint64_t f0, f1, f2, q;
};

WheelShape wheel_shape(std::uint64_t n) {
  if (n % 2 == 1) return {(n - 1) / 2, n - 1, (n - 1) / 2, 3};
  return {(n - 2) / 2, n, (n - 2) / 2, n >= 12 ? std::uint64_t{4} : std::uint64_t{3}};
}

void require_wheel(std::uint64_t n, std::uint64_t k, const char* who) {
  require_n(n, k, 5, who);
  if (n % 2 == 0 && n < 6) throw std::invalid_argument(std::string(who) + ": even n must be >= 6");
}

}  // namespace

std::uint64_t max_p(std::uint64_t n) { return n < 2 ? 0 : floor_log2(n); }

BhBounds bh_bounds(std::uint64_t n, std::uint64_t k) {
  require_n(n, k, 2, "bh_bounds");
  const I nn = static_cast<I>(n);
  const I kk = static_cast<I>(k);
  const I root = static_cast<I>(ceil_sqrt(n));
  BhBounds out;
  out.upper = clamp0(floor_q((Q(kk) + Q(3, 2)) * Q(nn - 1)));
  if (k + 2 <= n) out.lower_small_k = clamp0(ceil_q(Q(kk + 4, 2) * Q(nn - 1)) - 2 * root + 1);
  if (k + 2 >= n) out.lower_large_k = clamp0(ceil_q(Q(kk + 3, 2) * Q(nn - 1)) - 2 * root);
  out.lower = std::max(out.lower_small_k.value_or(0), out.lower_large_k.value_or(0));
  return out;
}

std::uint64_t haddad_bound(std::uint64_t n, std::uint64_t k, std::optional<std::uint64_t> p) {
  require_n(n, k, 2, "haddad_bound");
  if (p) return factor_bound(n, k, *p, 2);
  return best_over_p(n, k, 2, nullptr);
}

std::uint64_t haddad_best_p(std::uint64_t n, std::uint64_t k) {
  require_n(n, k, 2, "haddad_best_p");
  std::uint64_t arg = 1;
  best_over_p(n, k, 2, &arg);
  return arg;
}

std::uint64_t haddad_pow2_bound(std::uint64_t n, std::uint64_t k) {
  require_n(n, k, 2, "haddad_pow2_bound");
  if (!is_power_of_two(n)) {
    throw std::invalid_argument("haddad_pow2_bound: n=" + std::to_string(n) +
                                " is not a power of two");
  }
  const std::uint64_t lg = floor_log2(n);
  const std::uint64_t half = n * lg / 2;
  const std::uint64_t first = ((k + 1 + lg - 1) / lg + 1) * half;
  const std::uint64_t second = ((k + 1) / lg + 1) * half + ((k + 1) % lg) * (2 * n - 4);
  return std::min(first, second);
}

Interval hou_shigeno_bounds(std::uint64_t n, std::uint64_t k) {
  require_n(n, k, 2, "hou_shigeno_bounds");
  return {n * (k + 2) / 2, n * (n - 1) / 2 + (n * k + 1) / 2};
}

bool hou_shigeno_consistent(std::uint64_t n, std::uint64_t k) {
  const Interval b = hou_shigeno_bounds(n, k);
  return b.lower <= b.upper;
}

Interval hn_bounds(std::uint64_t n, std::uint64_t k) {
  require_n(n, k, 2, "hn_bounds");
  const I nn = static_cast<I>(n);
  const I kk = static_cast<I>(k);
  Interval out;
  if (is_power_of_two(n)) {
    out.upper = n * floor_log2(n) / 2 + n * k / 2;
  } else {
    // ceil((k-1)/2), which is 0 at k = 0
    const I half = kk == 0 ? 0 : ceil_div(kk - 1, 2);
    out.upper = clamp0(2 * nn * static_cast<I>(floor_log2(n)) + nn * half);
  }
  const I a = ceil_div(3 * nn - 5, 2);
  const I inner = nn * kk + (nn + 1) / 2 - static_cast<I>(floor_log2(n));
  const I b = inner >= 0 ? ceil_div(inner, 2) : -((-inner) / 2);
  out.lower = clamp0(a + b);
  return out;
}

std::uint64_t hn_factor_bound(std::uint64_t n, std::uint64_t k, std::optional<std::uint64_t> p) {
  require_n(n, k, 2, "hn_factor_bound");
  if (p) return factor_bound(n, k, *p, 1);
  return best_over_p(n, k, 1, nullptr);
}

std::uint64_t knodel_bound(std::uint64_t n, std::uint64_t k) {
  require_n(n, k, 2, "knodel_bound");
  if (n % 2 == 0) return n / 2 * ceil_log2(n) + n * k / 2;
  return (n - 1) / 2 * ceil_log2(n - 1) + (n - 1) * k / 2 + 2 * (k + 1);
}

std::uint64_t wheel_bound(std::uint64_t n, std::uint64_t k) {
  require_wheel(n, k, "wheel_bound");
  const std::uint64_t r = k % 3;
  if (n % 2 == 1) {
    const std::uint64_t a = n - 1;
    const std::uint64_t base = r == 0 ? 5 * a / 2 : r == 1 ? 7 * a / 2 : 4 * a;
    return 2 * a * (k - r) / 3 + base;
  }
  const std::uint64_t base = r == 0 ? 5 * n / 2 - 4 : r == 1 ? 7 * n / 2 - 5 : 4 * n - 5;
  return (2 * n - 1) * (k - r) / 3 + base;
}

std::uint64_t wheel_construction_calls(std::uint64_t n, std::uint64_t k) {
  require_wheel(n, k, "wheel_construction_calls");
  const WheelShape s = wheel_shape(n);
  const std::uint64_t blocks = k + s.q + 1;
  const std::uint64_t full = blocks / 3;
  const std::uint64_t rest = blocks % 3;
  return full * (s.f0 + s.f1 + s.f2) + (rest >= 1 ? s.f0 : 0) + (rest >= 2 ? s.f1 : 0);
}

std::uint64_t small_k_bound(std::uint64_t n, std::uint64_t k) {
  require_n(n, k, 2, "small_k_bound");
  if (k == 1) return 2 * n - 3 + n / 2;
  if (k == 2) return 3 * n - 3;
  throw std::invalid_argument("small_k_bound: k must be 1 or 2, got " + std::to_string(k));
}

TimeBounds time_bounds(std::uint64_t n, std::uint64_t k) {
  require_n(n, k, 2, "time_bounds");
  TimeBounds t;
  t.m = ceil_log2(n);
  const std::uint64_t m = t.m;
  if (is_power_of_two(n)) {
    t.haddad_upper = m + (k + 1 + m - 1) / m * m;
    t.gargano_upper = m + k;
  } else {
    const std::uint64_t half = (m + 1) / 2;
    t.haddad_upper = 8 * m + 2 * m * ((k + 1 + half - 1) / half);
    t.gargano_upper = m + 3 * k + 1;
  }
  t.lower = m + k;
  t.upper = std::min(t.haddad_upper, t.gargano_upper);
  if (n % 2 == 0) {
    t.exact = m + k;
    t.upper = m + k;
  }
  return t;
}

BoundRow bound_row(std::uint64_t n, std::uint64_t k) {
  BoundRow row;
  row.n = n;
  row.k = k;
  row.bh = bh_bounds(n, k);
  row.haddad = haddad_bound(n, k);
  if (is_power_of_two(n)) row.haddad_pow2 = haddad_pow2_bound(n, k);
  row.hou_shigeno = hou_shigeno_bounds(n, k);
  row.hn = hn_bounds(n, k);
  row.hn_factor = hn_factor_bound(n, k);
  row.knodel = knodel_bound(n, k);
  if (n >= 5 && !(n % 2 == 0 && n < 6)) row.wheel = wheel_bound(n, k);
  if (k == 1 || k == 2) row.small_k = small_k_bound(n, k);

  row.construction_best = row.knodel;
  if (row.wheel) row.construction_best = std::min(row.construction_best, *row.wheel);
  if (row.small_k) row.construction_best = std::min(row.construction_best, *row.small_k);

  row.previous_best = std::min({row.haddad, row.hn.upper, row.hn_factor});
  // At k = 0 the Berman-Hawrylycz upper value drops below 2n - 4 for n > 5,
  // the classical minimum, so it cannot be a valid bound there.
  if (k >= 1) row.previous_best = std::min(row.previous_best, row.bh.upper);
  if (row.haddad_pow2) row.previous_best = std::min(row.previous_best, *row.haddad_pow2);
  if (hou_shigeno_consistent(n, k)) {
    row.previous_best = std::min(row.previous_best, row.hou_shigeno.upper);
  }
  row.strictly_best = row.construction_best < row.previous_best;
  row.best_lower = std::max({row.bh.lower, row.hou_shigeno.lower, row.hn.lower});
  return row;
}

std::vector<BoundRow> compare_table(std::uint64_t n_lo, std::uint64_t n_hi, std::uint64_t k_lo,
                                    std::uint64_t k_hi) {
  if (n_lo > n_hi || k_lo > k_hi) throw std::invalid_argument("compare_table: empty range");
  std::vector<BoundRow> rows;
  for (std::uint64_t n = n_lo; n <= n_hi; ++n) {
    for (std::uint64_t k = k_lo; k <= k_hi; ++k) rows.push_back(bound_row(n, k));
  }
  return rows;
}

namespace {

std::vector<std::string> header() {
  return {"n",      "k",         "bh_lower",  "bh_upper",   "haddad",      "haddad_pow2",
          "hs_lower", "hs_upper", "hn_lower",  "hn_upper",   "hn_factor",   "knodel",
          "wheel",  "small_k",   "best_lower", "construction", "previous_best", "strictly_best"};
}

std::string opt(const std::optional<std::uint64_t>& v) { return v ? std::to_string(*v) : "-"; }

std::vector<std::string> cells(const BoundRow& r) {
  auto s = [](std::uint64_t v) { return std::to_string(v); };
  return {s(r.n),
          s(r.k),
          s(r.bh.lower),
          s(r.bh.upper),
          s(r.haddad),
          opt(r.haddad_pow2),
          s(r.hou_shigeno.lower),
          s(r.hou_shigeno.upper) + (hou_shigeno_consistent(r.n, r.k) ? "" : "!"),
          s(r.hn.lower),
          s(r.hn.upper),
          s(r.hn_factor),
          s(r.knodel),
          opt(r.wheel),
          opt(r.small_k),
          s(r.best_lower),
          s(r.construction_best),
          s(r.previous_best),
          r.strictly_best ? "yes" : "no"};
}

}  // namespace

std::string to_csv(const std::vector<BoundRow>& rows) {
  std::ostringstream out;
  auto line = [&](const std::vector<std::string>& v) {
    for (std::size_t i = 0; i < v.size(); ++i) out << (i ? "," : "") << v[i];
    out << '\n';
  };
  line(header());
  for (const auto& r : rows) line(cells(r));
  return out.str();
}

std::string to_text(const std::vector<BoundRow>& rows) {
  std::vector<std::vector<std::string>> grid{header()};
  for (const auto& r : rows) grid.push_back(cells(r));
  std::vector<std::size_t> width(grid.front().size(), 0);
  for (const auto& g : grid) {
    for (std::size_t i = 0; i < g.size(); ++i) width[i] = std::max(width[i], g[i].size());
  }
  std::ostringstream out;
  for (const auto& g : grid) {
    for (std::size_t i = 0; i < g.size(); ++i) {
      out << (i ? "  " : "") << std::setw(static_cast<int>(width[i])) << g[i];
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace gossipft::bounds
