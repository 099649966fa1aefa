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

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "gossipft/schedule.hpp"

namespace gossipft {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Comment line written ahead of the header by the builders.
struct Manifest {
  std::string builder;
  std::size_t n = 0;
  std::size_t k = 0;
  std::size_t xi = 0;
};

/// Text form: optional '#' comment lines, then "n m", then m lines
/// "t u v" in non-decreasing t. Labels are written as stored (dense).
void write_scheme_text(std::ostream& out, const CallSchedule& g,
                       const std::optional<Manifest>& manifest = {});
std::string scheme_to_text(const CallSchedule& g, const std::optional<Manifest>& manifest = {});

// {"n": n, "calls": [[t, u, v], ...]}
std::string scheme_to_json(const CallSchedule& g);

/// Calls exactly as written in a file, before labels are compacted.
struct RawScheme {
  std::size_t n = 0;
  std::vector<Call> calls;

  CallSchedule build() const { return CallSchedule(n, calls); }
  // The compacted label that `original` maps to, if any call carries it.
  std::optional<Label> dense_label(Label original) const;
};

RawScheme parse_scheme_raw(const std::string& text);
RawScheme read_scheme_raw(const std::string& path);

/// Accepts either form; JSON is recognized by a leading '{'. Blank lines
/// and lines starting with '#' are skipped in the text form.
CallSchedule parse_scheme(const std::string& text);

// Reads a file, or standard input for "-". Throws ParseError.
CallSchedule read_scheme(const std::string& path);

std::optional<Manifest> parse_manifest(const std::string& text);

}  // namespace gossipft
