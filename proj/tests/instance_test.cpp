// Copyright 2026 The Authors.
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

#include <random>
#include <string>

#include "decmin/instance.hpp"
#include "decmin/verify.hpp"

using namespace decmin;

namespace {
std::string data_path(const std::string& name) {
  return std::string(DECMIN_DATA_DIR) + "/" + name;
}
}  // namespace

TEST_CASE("parses the bundled desk instances") {
  auto i31 = parse_instance(data_path("example31.json"));
  CHECK(i31.n == 2);
  auto p31 = i31.oracle();
  CHECK(p31.eval(0b11) == ExtInt(3));
  CHECK(p31.ground().name(0) == "s1");

  auto i32 = parse_instance(data_path("example32.json"));
  CHECK(i32.n == 4);
  CHECK(i32.oracle().eval(0b0011) == ExtInt(3));

  auto i51 = parse_instance(data_path("example51.json"));
  CHECK(i51.oracle().eval(0b01) == ExtInt(3));
  CHECK(i51.oracle().eval(0b11) == ExtInt(5));

  auto i53 = parse_instance(data_path("example53.json"));
  CHECK(i53.oracle().eval(0b1111) == ExtInt(2));
}

TEST_CASE("validation rejects malformed instances") {
  CHECK_THROWS_AS(parse_instance_text("not json"), ValidationError);
  CHECK_THROWS_AS(
      parse_instance_text(R"({"n":2,"spec":{"type":"table","table":[1,0,0,3]}})"),
      ValidationError);
  CHECK_THROWS_AS(
      parse_instance_text(R"({"n":2,"spec":{"type":"table","table":[0,0,3]}})"),
      ValidationError);
  CHECK_THROWS_AS(
      parse_instance_text(
          R"({"n":2,"spec":{"type":"table","table":[0,0,0,"-inf"]}})"),
      ValidationError);
  // Strictly submodular: p({s1}) + p({s2}) > p(S) + p(empty).
  CHECK_THROWS_WITH_AS(
      parse_instance_text(R"({"n":2,"spec":{"type":"table","table":[0,1,1,1]}})"),
      doctest::Contains("supermodularity violated"), ValidationError);
  CHECK_THROWS_AS(
      parse_instance_text(R"({"n":2,"spec":{"type":"graph","edges":[[0,0]]}})"),
      ValidationError);
  CHECK_THROWS_AS(parse_instance_text(R"({"n":2})"), ValidationError);
}

TEST_CASE("minus infinity entries survive a round trip") {
  auto inst = parse_instance_text(
      R"({"n":2,"spec":{"type":"table","table":[0,"-inf",0,2]}})");
  auto p = inst.oracle();
  CHECK(p.eval(0b01).is_neg_inf());
  std::string text = serialize_instance(inst);
  auto again = parse_instance_text(text);
  CHECK(serialize_instance(again) == text);
  CHECK(again.oracle().eval(0b01).is_neg_inf());
}

TEST_CASE("graph and modular specs evaluate through the oracle") {
  auto g = parse_instance_text(
      R"({"n":3,"spec":{"type":"graph","edges":[[0,1],[0,1],[1,2]]}})");
  auto pg = g.oracle();
  CHECK(pg.eval(0b011) == ExtInt(2));  // the doubled edge counts twice
  CHECK(pg.eval(0b111) == ExtInt(3));

  auto m = parse_instance_text(
      R"({"n":3,"spec":{"type":"modular",)"
      R"("base":{"type":"graph","edges":[[0,1]]},"shift":[1,-1,0]}})");
  auto pm = m.oracle();
  CHECK(pm.eval(0b001) == ExtInt(1));
  CHECK(pm.eval(0b011) == ExtInt(1 + 1 - 1));
}

TEST_CASE("cost vectors parse as exact rationals") {
  auto inst = parse_instance_text(
      R"({"n":2,"spec":{"type":"table","table":[0,0,1,3]},"cost":["1/2",-3]})");
  REQUIRE(inst.cost.has_value());
  CHECK((*inst.cost)[0] == Rat(1, 2));
  CHECK((*inst.cost)[1] == Rat(-3));
  std::string text = serialize_instance(inst);
  auto again = parse_instance_text(text);
  CHECK(serialize_instance(again) == text);
}

TEST_CASE("serialization round trip is the identity on canonical files") {
  for (const char* name :
       {"example31.json", "example32.json", "example51.json", "example53.json"}) {
    auto inst = parse_instance(data_path(name));
    auto again = parse_instance_text(serialize_instance(inst));
    CHECK(serialize_instance(again) == serialize_instance(inst));
  }
}

TEST_CASE("instances capture arbitrary oracles as tables") {
  std::mt19937 rng(8);
  auto p = gen_random_instance(5, 5, rng);
  auto inst = instance_from_oracle(p);
  auto q = inst.oracle();
  REQUIRE(q.n() == p.n());
  for (Mask X = 0; X <= p.full(); ++X) CHECK(q.eval(X) == p.eval(X));
  // Round trip through text keeps every value.
  auto again = parse_instance_text(serialize_instance(inst));
  auto r = again.oracle();
  for (Mask X = 0; X <= p.full(); ++X) CHECK(r.eval(X) == p.eval(X));
}
