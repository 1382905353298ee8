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
#include <set>

#include "decmin/decomp.hpp"
#include "decmin/partitions.hpp"
#include "decmin/relaxation.hpp"
#include "decmin/verify.hpp"
#include "fixtures.hpp"

using namespace decmin;
using namespace decmin::fixtures;

TEST_CASE("rounding box from a fractional point") {
  RoundingBox box = box_from(RatVec{Rat(3, 2), Rat(3, 2), Rat(1, 2), Rat(1, 2)});
  CHECK(box.lower == IntVec{1, 1, 0, 0});
  CHECK(box.upper == IntVec{2, 2, 1, 1});
  CHECK(box.unit_gap_support() == 0b1111);

  RoundingBox mixed = box_from(RatVec{Rat(2), Rat(1), Rat(1, 3), Rat(2, 3)});
  CHECK(mixed.lower == IntVec{2, 1, 0, 0});
  CHECK(mixed.upper == IntVec{2, 1, 1, 1});
  CHECK(mixed.unit_gap_support() == 0b1100);
}

TEST_CASE("box feasibility against the base-polyhedron") {
  auto p = ex32();
  CHECK(box_nonempty(p, IntVec{1, 1, 0, 0}, IntVec{2, 2, 1, 1}));
  CHECK(box_nonempty(p, IntVec{2, 1, 0, 0}, IntVec{2, 1, 1, 1}));
  CHECK_FALSE(box_nonempty(p, IntVec{0, 0, 0, 0}, IntVec{1, 1, 1, 1}));
  CHECK_FALSE(box_nonempty(p, IntVec{3, 0, 0, 0}, IntVec{4, 1, 1, 1}));
  CHECK_THROWS_AS(box_nonempty(p, IntVec{1, 1, 1, 1}, IntVec{0, 2, 2, 2}),
                  std::invalid_argument);
}

TEST_CASE("relaxation rounds the min-norm point to a dec-min element") {
  auto p = ex32();
  RatVec mr{Rat(3, 2), Rat(3, 2), Rat(1, 2), Rat(1, 2)};
  // Weights u^2 - l^2 over the unit-gap support are (3,3,1,1); the
  // cheapest feasible base has weight 4.
  IntVec m = continuous_relaxation_decmin(p, mr);
  CHECK(is_member(p, m));
  CHECK(square_sum(m) == 6);
  long long base_weight = 0;
  RoundingBox box = box_from(mr);
  for (int s = 0; s < 4; ++s) {
    long long w = box.upper[s] * box.upper[s] - box.lower[s] * box.lower[s];
    CHECK(w == (s < 2 ? 3 : 1));
    if (m[s] == box.upper[s]) base_weight += w;
  }
  CHECK(base_weight == 4);
}

TEST_CASE("relaxation from a fractional dec-min point off the chain") {
  auto p = ex32();
  IntVec m = continuous_relaxation_decmin(p, RatVec{Rat(2), Rat(1), Rat(1, 3),
                                                    Rat(2, 3)});
  // The box pins s1 = 2, s2 = 1; the remaining weights are (1,1).
  bool is_m1 = m == IntVec{2, 1, 1, 0};
  bool is_m2 = m == IntVec{2, 1, 0, 1};
  CHECK((is_m1 || is_m2));
}

TEST_CASE("relaxation rejects boxes that miss the polyhedron") {
  CHECK_THROWS_AS(
      continuous_relaxation_decmin(ex32(), RatVec{Rat(0), Rat(0), Rat(0), Rat(0)}),
      std::invalid_argument);
}

TEST_CASE("dec-min structure of the desk instances") {
  auto st32 = decmin_structure(ex32());
  CHECK(st32.base == IntVec{1, 1, 0, 0});
  std::set<Mask> bases;
  for (Mask I = 0; I <= full_mask(4); ++I) {
    if (popcount(I) == 2 && st32.independent(I)) bases.insert(I);
  }
  CHECK(bases == std::set<Mask>{0b0101, 0b1001, 0b0110, 0b1010});

  auto st51 = decmin_structure(ex51());
  CHECK(st51.base == IntVec{2, 1});
  CHECK(st51.independent(0b11));  // unique dec-min (3,2) = base + chi_S

  auto st53 = decmin_structure(ex53());
  CHECK(st53.base == IntVec{0, 0, 0, 0});
  CHECK(st53.independent(0b0101));
  CHECK_FALSE(st53.independent(0b0011));  // (1,1,0,0) is not a member
}

TEST_CASE("independence oracle is monotone (random instances)") {
  std::mt19937 rng(23);
  for (int i = 0; i < 15; ++i) {
    auto p = gen_random_instance(5, 5, rng);
    auto st = decmin_structure(p);
    for (Mask I = 0; I <= p.full(); ++I) {
      if (!st.independent(I)) continue;
      for (int s : mask_elements(I)) {
        CHECK(st.independent(I & ~(Mask(1) << s)));
      }
    }
  }
}

TEST_CASE("min-cost dec-min element") {
  auto p32 = ex32();
  CHECK(min_cost_decmin(p32, RatVec{Rat(0), Rat(1), Rat(0), Rat(1)}) ==
        IntVec{2, 1, 1, 0});
  IntVec any = min_cost_decmin(p32, RatVec(4, Rat(0)));
  CHECK(square_sum(any) == 6);
  CHECK(min_cost_decmin(ex51(), RatVec{Rat(5), Rat(-7)}) == IntVec{3, 2});
}

TEST_CASE("piecewise-linear square-sum extension") {
  CHECK(pwl_phi(Rat(2)) == Rat(4));
  CHECK(pwl_phi(Rat(-3)) == Rat(9));
  CHECK(pwl_phi(Rat(3, 2)) == Rat(3) * Rat(3, 2) - Rat(2));  // k = 1
  CHECK(pwl_phi(Rat(1, 2)) == Rat(1, 2));                    // k = 0
  CHECK(pwl_square_sum(RatVec{Rat(3, 2), Rat(3, 2), Rat(1, 2), Rat(1, 2)}) ==
        Rat(6));
  CHECK(pwl_square_sum(min_norm_point(ex31())) == Rat(5));
}
