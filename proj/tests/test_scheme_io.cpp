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

#include <doctest.h>

#include "gossipft/builder.hpp"
#include "gossipft/scheme_io.hpp"
#include "gossipft/verify.hpp"

using namespace gossipft;

TEST_CASE("text round trip with manifest") {
  const CallSchedule g = build_wheel_ft(7, 2);
  const std::string text = scheme_to_text(g, Manifest{"wheel", 7, 2, g.size()});
  CHECK(text.rfind("# builder=wheel n=7 k=2 xi=24\n7 24\n", 0) == 0);
  CHECK(parse_scheme(text) == g);
  const auto m = parse_manifest(text);
  REQUIRE(m.has_value());
  CHECK(m->builder == "wheel");
  CHECK(m->xi == 24);
  CHECK_FALSE(parse_manifest("3 0\n").has_value());
}

TEST_CASE("json round trip") {
  const CallSchedule g = build_knodel_ft(6, 1);
  const std::string json = scheme_to_json(g);
  CHECK(json.rfind("{\"n\":6,\"calls\":[[1,", 0) == 0);
  CHECK(parse_scheme(json) == g);
  CHECK(parse_scheme("{\"n\": 3}").empty());
}

TEST_CASE("labels are compacted but remembered") {
  const RawScheme raw = parse_scheme_raw("3 2\n4 0 1\n9 1 2\n");
  CHECK(raw.calls.size() == 2);
  CHECK(raw.dense_label(9) == Label{2});
  CHECK_FALSE(raw.dense_label(5).has_value());
  CHECK(raw.build().max_label() == 2);
}

TEST_CASE("comments and blank lines are skipped") {
  const CallSchedule g = parse_scheme("# hello\n\n2 1\n# mid\n1 0 1\n");
  CHECK(g.size() == 1);
}

TEST_CASE("malformed input") {
  CHECK_THROWS_AS(parse_scheme(""), ParseError);
  CHECK_THROWS_AS(parse_scheme("3\n"), ParseError);
  CHECK_THROWS_AS(parse_scheme("3 2\n1 0 1\n"), ParseError);
  CHECK_THROWS_AS(parse_scheme("3 1\n0 0 1\n"), ParseError);
  CHECK_THROWS_AS(parse_scheme("3 1\n1 0 3\n"), ParseError);
  CHECK_THROWS_AS(parse_scheme("3 1\n1 1 1\n"), ParseError);
  CHECK_THROWS_AS(parse_scheme("3 2\n2 0 1\n1 1 2\n"), ParseError);
  CHECK_THROWS_AS(parse_scheme("3 1\n1 -1 2\n"), ParseError);
  CHECK_THROWS_AS(parse_scheme("3 1\n1 0 1 7\n"), ParseError);
  CHECK_THROWS_AS(parse_scheme("{\"n\": 3, \"calls\": [[1, 0]]}"), ParseError);
  CHECK_THROWS_AS(parse_scheme("{\"n\": -3}"), ParseError);
  CHECK_THROWS_AS(parse_scheme("{oops"), ParseError);
  CHECK_THROWS_AS(read_scheme("/nonexistent/scheme.txt"), ParseError);
}

TEST_CASE("verdict survives a file round trip") {
  const CallSchedule g = build_knodel_ft_odd(9, 2);
  const CallSchedule back = parse_scheme(scheme_to_text(g));
  CHECK(is_k_fault_tolerant_flow(back, 2).tolerant == is_k_fault_tolerant_flow(g, 2).tolerant);
  CHECK(is_k_fault_tolerant_flow(back, 3).tolerant == is_k_fault_tolerant_flow(g, 3).tolerant);
}
