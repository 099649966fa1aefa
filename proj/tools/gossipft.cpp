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

// Command-line front end: generate, verify, simulate, bounds, time, selftest.

#include <CLI11.hpp>
#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "gossipft/bounds.hpp"
#include "gossipft/builder.hpp"
#include "gossipft/scheme_io.hpp"
#include "gossipft/selftest.hpp"
#include "gossipft/verify.hpp"

namespace {

using namespace gossipft;

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Range {
  std::uint64_t lo = 0;
  std::uint64_t hi = 0;
};

// "a..b" or a single number.
Range parse_range(const std::string& text, const char* what) {
  auto num = [&](const std::string& s) {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos || s.size() > 12) {
      throw UsageError(std::string("bad ") + what + " '" + text + "'");
    }
    return std::stoull(s);
  };
  const auto dots = text.find("..");
  Range r;
  if (dots == std::string::npos) {
    r.lo = r.hi = num(text);
  } else {
    r.lo = num(text.substr(0, dots));
    r.hi = num(text.substr(dots + 2));
  }
  if (r.lo > r.hi) throw UsageError(std::string("empty ") + what + " '" + text + "'");
  return r;
}

std::uint64_t brute_budget() {
  const char* env = std::getenv("GOSSIPFT_BRUTE_BUDGET");
  if (!env || !*env) return kDefaultBruteForceBudget;
  const std::string s(env);
  if (s.find_first_not_of("0123456789") != std::string::npos || s.size() > 18) {
    throw UsageError("GOSSIPFT_BRUTE_BUDGET must be a non-negative integer");
  }
  return std::stoull(s);
}

// Faults as "t u v;t u v", labels as written in the file.
FaultSet parse_faults(const std::string& spec, const RawScheme& raw, const CallSchedule& g) {
  FaultSet out;
  std::stringstream items(spec);
  std::string item;
  while (std::getline(items, item, ';')) {
    if (item.find_first_not_of(" \t") == std::string::npos) continue;
    std::istringstream in(item);
    std::uint64_t t = 0, u = 0, v = 0;
    std::string extra;
    if (!(in >> t >> u >> v) || (in >> extra)) throw UsageError("bad fault '" + item + "'");
    const auto dense = raw.dense_label(static_cast<Label>(t));
    bool found = false;
    if (dense && u < g.n() && v < g.n()) {
      // Repeated entries pick further parallel copies of the same call.
      const auto [first, last] = g.label_range(*dense);
      const Call want{static_cast<NodeId>(std::min(u, v)), static_cast<NodeId>(std::max(u, v)), *dense};
      for (CallId id = first; id < last && !found; ++id) {
        if (g.call(id) == want && std::find(out.begin(), out.end(), id) == out.end()) {
          out.push_back(id);
          found = true;
        }
      }
    }
    if (!found) throw UsageError("fault '" + item + "' is not a call of the scheme");
  }
  std::sort(out.begin(), out.end());
  return out;
}

int cmd_generate(const std::string& construction, std::size_t n, std::size_t k,
                 const std::string& out_path, const std::string& format, NodeId attach) {
  CallSchedule g;
  std::size_t predicted = 0;
  if (construction == "knodel") {
    if (n % 2 == 1) {
      throw UsageError("n=" + std::to_string(n) +
                       " is odd; the knodel construction needs even n (use --construction knodel-odd)");
    }
    if (n < 2) throw UsageError("knodel needs n >= 2");
    predicted = bounds::knodel_bound(n, k);
    g = build_knodel_ft(n, k);
  } else if (construction == "knodel-odd") {
    if (n % 2 == 0 || n < 3) throw UsageError("knodel-odd needs odd n >= 3");
    predicted = bounds::knodel_bound(n - 1, k) + 2 * (k + 1);
    g = build_knodel_ft_odd(n, k, attach);
  } else {
    if (n < 5 || (n % 2 == 0 && n < 6)) throw UsageError("wheel needs odd n >= 5 or even n >= 6");
    predicted = bounds::wheel_construction_calls(n, k);
    g = build_wheel_ft(n, k);
  }
  if (g.size() != predicted) {
    std::cerr << "error: built " << g.size() << " calls, predicted " << predicted << "\n";
    return kFail;
  }
  const Manifest manifest{construction, n, k, predicted};
  const std::string body = format == "json" ? scheme_to_json(g) : scheme_to_text(g, manifest);
  std::ostream* summary = &std::cout;
  if (out_path.empty() || out_path == "-") {
    std::cout << body;
    summary = &std::cerr;
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out || !(out << body)) throw UsageError("cannot write '" + out_path + "'");
  }
  *summary << "calls=" << g.size() << " duration=" << duration(g) << " predicted=" << predicted
           << "\n";
  return kPass;
}

int cmd_verify(const std::string& path, std::size_t k, const std::string& method) {
  const CallSchedule g = read_scheme(path);
  const VerifyMethod m = method == "brute"  ? VerifyMethod::kBruteForce
                         : method == "both" ? VerifyMethod::kBoth
                                            : VerifyMethod::kFlow;
  const VerificationReport report = verify_scheme(g, k, m, brute_budget());
  std::cout << report.to_json() << "\n";
  if (report.oracle_mismatch) std::cerr << "warning: flow and brute force disagree\n";
  return report.verdict ? kPass : kFail;
}

int cmd_simulate(const std::string& path, const std::string& fail) {
  const RawScheme raw = read_scheme_raw(path);
  const CallSchedule g = raw.build();
  const FaultSet faults = parse_faults(fail, raw, g);
  const KnowledgeState state = simulate(g, faults);
  for (NodeId v = 0; v < g.n(); ++v) {
    std::string row(g.n(), '0');
    for (NodeId p = 0; p < g.n(); ++p) {
      if (state.knows(v, p)) row[p] = '1';
    }
    std::cout << row << "\n";
  }
  std::cout << (state.complete() ? "complete" : "incomplete") << "\n";
  return state.complete() ? kPass : kFail;
}

int cmd_bounds(const std::string& n_range, const std::string& k_range, const std::string& format) {
  const Range n = parse_range(n_range, "n range");
  const Range k = parse_range(k_range, "k range");
  if (n.lo < 2) throw UsageError("n must be at least 2");
  const auto rows = bounds::compare_table(n.lo, n.hi, k.lo, k.hi);
  std::cout << (format == "csv" ? bounds::to_csv(rows) : bounds::to_text(rows));
  return kPass;
}

int cmd_time(std::size_t n, std::size_t k) {
  if (n < 2) throw UsageError("n must be at least 2");
  const bounds::TimeBounds t = bounds::time_bounds(n, k);
  if (t.exact) {
    std::cout << "exact " << *t.exact << "\n";
  } else {
    std::cout << "[" << t.lower << ", " << t.upper << "]\n";
  }
  return kPass;
}

int cmd_selftest(bool literal_wheel) {
  bool ok = true;
  for (const auto& r : run_selftests(literal_wheel)) {
    std::cout << (r.passed ? "PASS " : "FAIL ") << r.name << " cases=" << r.cases << " time="
              << r.seconds << "s";
    if (!r.passed) std::cout << " violations=" << r.violations;
    std::cout << "\n";
    for (const auto& f : r.failures) std::cout << "  " << f << "\n";
    ok = ok && r.passed;
  }
  return ok ? kPass : kFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fault-tolerant gossip schemes: build, verify, simulate, bound."};
  app.require_subcommand(1);

  std::string construction = "knodel", out_path, format = "text", file, method = "flow", fail;
  std::string n_range, k_range, table_format = "text";
  std::size_t n = 0, k = 0;
  NodeId attach = 0;
  bool literal_wheel = false;

  auto* gen = app.add_subcommand("generate", "Build a k-fault-tolerant scheme");
  gen->add_option("--construction", construction)
      ->check(CLI::IsMember({"knodel", "knodel-odd", "wheel"}));
  gen->add_option("--n", n)->required();
  gen->add_option("--k", k)->required();
  gen->add_option("--out", out_path, "Output file (default: stdout)");
  gen->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
  gen->add_option("--attach", attach, "knodel-odd: node the extra vertex calls");

  auto* ver = app.add_subcommand("verify", "Check k-fault tolerance of a scheme file");
  ver->add_option("file", file, "Scheme file or - for stdin")->required();
  ver->add_option("--k", k)->required();
  ver->add_option("--method", method)->check(CLI::IsMember({"flow", "brute", "both"}));

  auto* sim = app.add_subcommand("simulate", "Print the knowledge matrix after the scheme");
  sim->add_option("file", file, "Scheme file or - for stdin")->required();
  sim->add_option("--fail", fail, "Failed calls as \"t u v;t u v\"");

  auto* bnd = app.add_subcommand("bounds", "Table of call-count bounds");
  bnd->add_option("--n-range", n_range)->required();
  bnd->add_option("--k-range", k_range)->required();
  bnd->add_option("--format", table_format)->check(CLI::IsMember({"csv", "text"}));

  auto* tim = app.add_subcommand("time", "Bounds on the minimum gossip time");
  tim->add_option("--n", n)->required();
  tim->add_option("--k", k)->required();

  auto* st = app.add_subcommand("selftest", "Run the built-in validation suites");
  st->add_flag("--literal-wheel", literal_wheel, "Also check wheel families with q=3, r=(1,1,1)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kUsage;
  }

  try {
    if (*gen) return cmd_generate(construction, n, k, out_path, format, attach);
    if (*ver) return cmd_verify(file, k, method);
    if (*sim) return cmd_simulate(file, fail);
    if (*bnd) return cmd_bounds(n_range, k_range, table_format);
    if (*tim) return cmd_time(n, k);
    if (*st) return cmd_selftest(literal_wheel);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kFail;
  }
  return kUsage;
}
