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

#ifndef DECMIN_DECOMP_HPP_
#define DECMIN_DECOMP_HPP_

#include <functional>
#include <memory>
#include <vector>

#include "decmin/setfn.hpp"

namespace decmin {

// One recursion node of either decomposition algorithm. Element sets are
// recorded in the root ground-set's indices.
struct DecompNode {
  std::vector<int> elements;   // sub-ground-set of this node
  long long floor_avg = 0;     // a = floor(p(S)/|S|)
  IntVec x;                    // single-constraint guess (Groenevelt)
  IntVec y_or_z;               // minimal dominator y / relaxed-local-opt z
  std::vector<int> s_plus, s_minus, s_zero;
  std::vector<DecompNode> children;
};

struct DecompTrace {
  DecompNode root;
};

// Picks the k elements (local indices 0..n-1) that receive a+1 in the
// single-constraint solution; default takes the lowest k indices.
using TiePick = std::function<std::vector<int>(int n, int k)>;
TiePick lowest_indices_tie_pick();

// Element processing order for the minimal-dominator construction
// (local indices); default is index order.
using OrderPick = std::function<std::vector<int>(int n)>;
OrderPick index_order_pick();

struct GroeneveltOptions {
  TiePick tie_pick = lowest_indices_tie_pick();
  OrderPick dominator_order = index_order_pick();
};

// x = a*1 + chi_U with a = floor(pS/n), |U| = pS - a*n.
IntVec single_constraint_solution(long long pS, int n,
                                  const TiePick& tie_pick = lowest_indices_tie_pick());

// Minimal y >= x with y(X) >= p(X) for all X, by coordinatewise
// minimization in the given element order; unprocessed coordinates stand
// at their x-values during the sweep.
IntVec minimal_dominating_in_Q(const SupermodularOracle& p, const IntVec& x,
                               const std::vector<int>& order);
IntVec minimal_dominating_in_Q(const SupermodularOracle& p, const IntVec& x);

// Groenevelt-type decomposition; returns a square-sum minimizer of the
// M-convex set. The trace records every recursion node.
IntVec groenevelt_decmin(const SupermodularOracle& p, DecompTrace* trace = nullptr,
                         const GroeneveltOptions& opts = {});

// Exchange local search for the relaxed local-optimality condition at
// level a: no feasible move from z(s) <= a to z(t) >= a+1 with
// z(t) >= z(s)+2. Each step lowers G_a by at least 1.
IntVec minimize_Ga(const SupermodularOracle& p, long long a, IntVec start);

struct FujishigeSplit {
  Mask s_plus = 0, s_minus = 0, s_zero = 0;
};

// S+ / S- / S0 from the feasible-exchange unions around level a.
FujishigeSplit split_fujishige(const SupermodularOracle& p, const IntVec& z,
                               long long a);

// Fujishige-type decomposition; returns a square-sum minimizer.
IntVec fujishige_decmin(const SupermodularOracle& p, DecompTrace* trace = nullptr);

long long square_sum(const IntVec& x);
long long ga_value(const IntVec& x, long long a);

}  // namespace decmin

#endif  // DECMIN_DECOMP_HPP_
