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

#ifndef DECMIN_RELAXATION_HPP_
#define DECMIN_RELAXATION_HPP_

#include <functional>
#include <vector>

#include "decmin/partitions.hpp"
#include "decmin/setfn.hpp"

namespace decmin {

// Componentwise floor/ceiling box around a fractional point; the gap is
// 0 or 1 in every coordinate.
struct RoundingBox {
  IntVec lower, upper;

  Mask unit_gap_support() const {
    Mask m = 0;
    for (int i = 0; i < static_cast<int>(lower.size()); ++i)
      if (upper[i] == lower[i] + 1) m |= Mask(1) << i;
    return m;
  }
};

RoundingBox box_from(const RatVec& xstar);

// Whether B'(p) meets the box [l, u]; two SFM checks (u against p and
// the complement b against l).
bool box_nonempty(const SupermodularOracle& p, const IntVec& l, const IntVec& u);

// Independence in the matroid whose bases L satisfy l + chi_L in B:
// I (within the unit-gap support) extends to such a base.
bool matroid_independent(const SupermodularOracle& p, const RoundingBox& box,
                         Mask I);

// Box rounding + matroid greedy on the weight u^2 - l^2. The box of
// xstar must contain a dec-min element.
IntVec continuous_relaxation_decmin(const SupermodularOracle& p,
                                    const RatVec& xstar);

// All dec-min elements as a translated matroid basis family: the base
// vector takes beta_j - 1 on each canonical block, and independence is
// tested blockwise through box feasibility on the block minor.
struct DecMinStructure {
  IntVec base;                           // Delta*
  ValuedChain canonical;
  std::function<bool(Mask)> independent; // I subset of S
};

DecMinStructure decmin_structure(const SupermodularOracle& p);

// Cheapest dec-min element for the cost c: per canonical block, a
// minimum-weight base of the block matroid via the greedy algorithm.
IntVec min_cost_decmin(const SupermodularOracle& p, const RatVec& c);

// Piecewise-linear square-sum: sum of (2k+1)|xi| - k(k+1), k = floor|xi|.
Rat pwl_phi(const Rat& xi);
Rat pwl_square_sum(const RatVec& x);

}  // namespace decmin

#endif  // DECMIN_RELAXATION_HPP_
