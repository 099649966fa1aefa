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

#include "gossipft/scheme_io.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <limits>
#include <sstream>

#include <json.hpp>

namespace gossipft {
namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

// Reads exactly `count` unsigned integers from a line, nothing else.
std::vector<std::uint64_t> numbers(const std::string& line, std::size_t count,
                                   std::size_t line_no) {
  std::istringstream in(line);
  std::vector<std::uint64_t> out;
  std::string tok;
  while (in >> tok) {
    if (tok.find_first_not_of("0123456789") != std::string::npos || tok.size() > 18) {
      throw ParseError("line " + std::to_string(line_no) + ": expected a non-negative integer, got '" +
                       tok + "'");
    }
    out.push_back(std::stoull(tok));
  }
  if (out.size() != count) {
    throw ParseError("line " + std::to_string(line_no) + ": expected " + std::to_string(count) +
                     " integers, got " + std::to_string(out.size()));
  }
  return out;
}

Call make_call(std::uint64_t t, std::uint64_t u, std::uint64_t v, std::uint64_t n,
               const std::string& where) {
  if (t < 1 || t > std::numeric_limits<Label>::max()) throw ParseError(where + ": label must be >= 1");
  if (u >= n || v >= n) throw ParseError(where + ": endpoint out of range for n=" + std::to_string(n));
  if (u == v) throw ParseError(where + ": self call");
  return {static_cast<NodeId>(u), static_cast<NodeId>(v), static_cast<Label>(t)};
}

void check_n(std::uint64_t n) {
  if (n > std::numeric_limits<NodeId>::max()) throw ParseError("node count too large");
}

RawScheme parse_text(const std::string& text) {
  std::istringstream in(text);
  std::string raw;
  std::size_t line_no = 0;
  std::optional<std::uint64_t> n, m;
  std::vector<Call> calls;
  Label last = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    if (!n) {
      const auto head = numbers(line, 2, line_no);
      n = head[0];
      m = head[1];
      check_n(*n);
      calls.reserve(static_cast<std::size_t>(std::min<std::uint64_t>(*m, 1'000'000)));
      continue;
    }
    const auto c = numbers(line, 3, line_no);
    const std::string where = "line " + std::to_string(line_no);
    Call call = make_call(c[0], c[1], c[2], *n, where);
    if (call.label < last) throw ParseError(where + ": calls must be sorted by label");
    last = call.label;
    calls.push_back(call);
  }
  if (!n) throw ParseError("missing 'n m' header");
  if (calls.size() != *m) {
    throw ParseError("header announces " + std::to_string(*m) + " calls, found " +
                     std::to_string(calls.size()));
  }
  return {static_cast<std::size_t>(*n), std::move(calls)};
}

RawScheme parse_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("n") || !doc["n"].is_number_unsigned()) {
    throw ParseError("JSON scheme needs a non-negative integer field 'n'");
  }
  const auto n = doc["n"].get<std::uint64_t>();
  check_n(n);
  std::vector<Call> calls;
  if (doc.contains("calls")) {
    const auto& arr = doc["calls"];
    if (!arr.is_array()) throw ParseError("'calls' must be an array");
    for (std::size_t i = 0; i < arr.size(); ++i) {
      const auto& c = arr[i];
      const std::string where = "calls[" + std::to_string(i) + "]";
      if (!c.is_array() || c.size() != 3) throw ParseError(where + ": expected [t, u, v]");
      for (const auto& x : c) {
        if (!x.is_number_unsigned()) throw ParseError(where + ": entries must be non-negative integers");
      }
      calls.push_back(make_call(c[0].get<std::uint64_t>(), c[1].get<std::uint64_t>(),
                                c[2].get<std::uint64_t>(), n, where));
    }
  }
  return {static_cast<std::size_t>(n), std::move(calls)};
}

}  // namespace

void write_scheme_text(std::ostream& out, const CallSchedule& g,
                       const std::optional<Manifest>& manifest) {
  if (manifest) {
    out << "# builder=" << manifest->builder << " n=" << manifest->n << " k=" << manifest->k
        << " xi=" << manifest->xi << '\n';
  }
  out << g.n() << ' ' << g.size() << '\n';
  for (const Call& c : g.calls()) out << c.label << ' ' << c.a << ' ' << c.b << '\n';
}

std::string scheme_to_text(const CallSchedule& g, const std::optional<Manifest>& manifest) {
  std::ostringstream out;
  write_scheme_text(out, g, manifest);
  return out.str();
}

std::string scheme_to_json(const CallSchedule& g) {
  nlohmann::ordered_json doc;
  doc["n"] = g.n();
  auto calls = nlohmann::ordered_json::array();
  for (const Call& c : g.calls()) calls.push_back({c.label, c.a, c.b});
  doc["calls"] = std::move(calls);
  return doc.dump() + "\n";
}

std::optional<Label> RawScheme::dense_label(Label original) const {
  std::vector<Label> labels;
  for (const Call& c : calls) labels.push_back(c.label);
  std::sort(labels.begin(), labels.end());
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
  const auto it = std::lower_bound(labels.begin(), labels.end(), original);
  if (it == labels.end() || *it != original) return std::nullopt;
  return static_cast<Label>(it - labels.begin() + 1);
}

RawScheme parse_scheme_raw(const std::string& text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') return parse_json(text);
  return parse_text(text);
}

CallSchedule parse_scheme(const std::string& text) {
  try {
    return parse_scheme_raw(text).build();
  } catch (const ScheduleError& e) {
    throw ParseError(e.what());
  }
}

namespace {

std::string slurp(const std::string& path) {
  std::string text;
  if (path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open '" + path + "'");
    text.assign(std::istreambuf_iterator<char>(in), {});
  }
  return text;
}

}  // namespace

CallSchedule read_scheme(const std::string& path) { return parse_scheme(slurp(path)); }

RawScheme read_scheme_raw(const std::string& path) { return parse_scheme_raw(slurp(path)); }

std::optional<Manifest> parse_manifest(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    line = trim(line);
    if (line.empty()) continue;
    if (line.rfind("# builder=", 0) != 0) return std::nullopt;
    Manifest m;
    std::istringstream fields(line.substr(2));
    std::string kv;
    try {
      while (fields >> kv) {
        const auto eq = kv.find('=');
        if (eq == std::string::npos) return std::nullopt;
        const std::string key = kv.substr(0, eq);
        const std::string val = kv.substr(eq + 1);
        if (key == "builder") m.builder = val;
        else if (key == "n") m.n = std::stoull(val);
        else if (key == "k") m.k = std::stoull(val);
        else if (key == "xi") m.xi = std::stoull(val);
      }
    } catch (const std::exception&) {
      return std::nullopt;
    }
    return m;
  }
  return std::nullopt;
}

}  // namespace gossipft
