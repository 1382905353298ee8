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

#include "decmin/partitions.hpp"
#include "decmin/verify.hpp"
#include "fixtures.hpp"

using namespace decmin;
using namespace decmin::fixtures;

TEST_CASE("smallest maximizer of p(X) - beta|X|") {
  auto p31 = ex31();
  CHECK(smallest_maximizer(p31, Rat(1)) == 0b11);
  CHECK(smallest_maximizer(p31, Rat(2)) == 0);
  auto p32 = ex32();
  CHECK(smallest_maximizer(p32, Rat(1)) == 0b0011);
}

TEST_CASE("canonical partition of the n=2 instances") {
  auto c31 = canonical_partition_iterative(ex31());
  CHECK(c31.values == std::vector<Rat>{Rat(2)});
  CHECK(c31.chain == std::vector<Mask>{0b11});

  auto c51 = canonical_partition_iterative(ex51());
  CHECK(c51.values == std::vector<Rat>{Rat(3), Rat(2)});
  CHECK(c51.chain == std::vector<Mask>{0b01, 0b11});
  CHECK(c51.block(0) == 0b01);
  CHECK(c51.block(1) == 0b10);
}

TEST_CASE("canonical partition of the n=4 instances") {
  auto c32 = canonical_partition_iterative(ex32());
  CHECK(c32.values == std::vector<Rat>{Rat(2), Rat(1)});
  CHECK(c32.chain == std::vector<Mask>{0b0011, 0b1111});

  auto c53 = canonical_partition_iterative(ex53());
  CHECK(c53.values == std::vector<Rat>{Rat(1)});
  CHECK(c53.chain == std::vector<Mask>{0b1111});
}

TEST_CASE("direct scan agrees with the iterative construction") {
  for (auto p : {ex31(), ex32(), ex51(), ex53()}) {
    CHECK(canonical_partition_direct(p) == canonical_partition_iterative(p));
  }
}

TEST_CASE("canonical blocks of a modular function are its level sets") {
  auto p = table_oracle(3, {ExtInt(0), ExtInt(2), ExtInt(0), ExtInt(2),
                            ExtInt(2), ExtInt(4), ExtInt(2), ExtInt(4)});
  auto c = canonical_partition_iterative(p);
  CHECK(c.values == std::vector<Rat>{Rat(2), Rat(0)});
  CHECK(c.chain == std::vector<Mask>{0b101, 0b111});
}

TEST_CASE("principal partition critical values and chain") {
  auto pp31 = principal_partition(ex31());
  CHECK(pp31.values == std::vector<Rat>{Rat(3, 2)});
  CHECK(pp31.chain == std::vector<Mask>{0b11});

  auto pp32 = principal_partition(ex32());
  CHECK(pp32.values == std::vector<Rat>{Rat(3, 2), Rat(1, 2)});
  CHECK(pp32.chain == std::vector<Mask>{0b0011, 0b1111});

  // Uniform instance: single critical value k.
  auto uni = table_oracle(2, {ExtInt(0), ExtInt::neg_inf(), ExtInt::neg_inf(),
                              ExtInt(6)});
  auto ppu = principal_partition(uni);
  CHECK(ppu.values == std::vector<Rat>{Rat(3)});
  CHECK(ppu.chain == std::vector<Mask>{0b11});
}

TEST_CASE("min-norm point takes the critical value on each block") {
  CHECK(min_norm_point(ex31()) == RatVec{Rat(3, 2), Rat(3, 2)});
  CHECK(min_norm_point(ex32()) ==
        RatVec{Rat(3, 2), Rat(3, 2), Rat(1, 2), Rat(1, 2)});
  CHECK(min_norm_point(ex51()) == RatVec{Rat(3), Rat(2)});
}

TEST_CASE("canonical structure from the principal one") {
  auto pp = principal_partition(ex32());
  auto c = canonical_from_principal(pp, 4);
  CHECK(c == canonical_partition_iterative(ex32()));
  // Distinct ceilings may merge principal blocks.
  auto merged = ValuedChain{{0b01, 0b11}, {Rat(7, 4), Rat(5, 4)}};
  auto cm = canonical_from_principal(merged, 2);
  CHECK(cm.values == std::vector<Rat>{Rat(2)});
  CHECK(cm.chain == std::vector<Mask>{0b11});
}

TEST_CASE("canonical structure recovered from a dec-min element") {
  auto c51 = canonical_from_decmin(ex51(), IntVec{3, 2});
  CHECK(c51.values == std::vector<Rat>{Rat(3), Rat(2)});
  CHECK(c51.chain == std::vector<Mask>{0b01, 0b11});

  auto c32 = canonical_from_decmin(ex32(), IntVec{2, 1, 1, 0});
  CHECK(c32 == canonical_partition_iterative(ex32()));

  auto c53 = canonical_from_decmin(ex53(), IntVec{1, 0, 1, 0});
  CHECK(c53.values == std::vector<Rat>{Rat(1)});
  CHECK(c53.chain == std::vector<Mask>{0b1111});
}

TEST_CASE("certification accepts dec-min elements and reports violators") {
  auto res = certify_decmin(ex32(), IntVec{2, 2, 0, 0});
  REQUIRE(std::holds_alternative<std::pair<int, int>>(res));
  auto [s, t] = std::get<std::pair<int, int>>(res);
  IntVec moved{2, 2, 0, 0};
  ++moved[s];
  --moved[t];
  CHECK(is_member(ex32(), moved));
  CHECK(IntVec({2, 2, 0, 0})[t] >= IntVec({2, 2, 0, 0})[s] + 2);

  auto ok = certify_decmin(ex51(), IntVec{3, 2});
  REQUIRE(std::holds_alternative<DecMinCertificate>(ok));
  const auto& cert = std::get<DecMinCertificate>(ok);
  CHECK(cert.chain.chain == std::vector<Mask>{0b01, 0b11});
}

TEST_CASE("chain validation rejects malformed chains") {
  ValuedChain good{{0b01, 0b11}, {Rat(2), Rat(1)}};
  CHECK_NOTHROW(good.validate(2));
  ValuedChain not_nested{{0b10, 0b01}, {Rat(2), Rat(1)}};
  CHECK_THROWS_AS(not_nested.validate(2), std::logic_error);
  ValuedChain not_decreasing{{0b01, 0b11}, {Rat(1), Rat(1)}};
  CHECK_THROWS_AS(not_decreasing.validate(2), std::logic_error);
  ValuedChain not_full{{0b01}, {Rat(1)}};
  CHECK_THROWS_AS(not_full.validate(2), std::logic_error);
}

TEST_CASE("four canonical constructions agree on random instances") {
  std::mt19937 rng(99);
  for (int i = 0; i < 40; ++i) {
    auto p = gen_random_instance(5, 5, rng);
    auto c = canonical_partition_iterative(p);
    CHECK(canonical_partition_direct(p) == c);
    CHECK(canonical_from_principal(principal_partition(p), p.n()) == c);
    auto e = enumerate_members(p);
    auto decmins = brute_decmin_set(e);
    REQUIRE(!decmins.empty());
    CHECK(canonical_from_decmin(p, decmins.front()) == c);
  }
}
