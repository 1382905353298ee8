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

#include "decmin/decomp.hpp"

#include <algorithm>
#include <numeric>

namespace decmin {

namespace {

long long floor_div(long long a, long long b) {
  long long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

std::vector<int> subset_globals(const std::vector<int>& globals, Mask local) {
  std::vector<int> out;
  for (int i = 0; i < static_cast<int>(globals.size()); ++i)
    if (local >> i & 1) out.push_back(globals[i]);
  return out;
}

}  // namespace

long long square_sum(const IntVec& x) {
  long long s = 0;
  for (long long v : x) s += v * v;
  return s;
}

long long ga_value(const IntVec& x, long long a) {
  long long s = 0;
  for (long long v : x) s += std::max({a - v, 0LL, v - a - 1});
  return s;
}

TiePick lowest_indices_tie_pick() {
  return [](int n, int k) {
    (void)n;
    std::vector<int> u(k);
    std::iota(u.begin(), u.end(), 0);
    return u;
  };
}

OrderPick index_order_pick() {
  return [](int n) {
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    return order;
  };
}

IntVec single_constraint_solution(long long pS, int n, const TiePick& tie_pick) {
  if (n < 1) throw std::invalid_argument("empty ground-set");
  const long long a = floor_div(pS, n);
  const long long k = pS - a * n;
  IntVec x(n, a);
  auto u = tie_pick(n, static_cast<int>(k));
  if (static_cast<long long>(u.size()) != k) {
    throw std::invalid_argument("tie pick must choose exactly k elements");
  }
  for (int s : u) ++x[s];
  return x;
}

IntVec minimal_dominating_in_Q(const SupermodularOracle& p, const IntVec& x,
                               const std::vector<int>& order) {
  const int n = p.n();
  IntVec y = x;
  // Coordinate relaxation: y(s) must cover p(X) - y(X - s) for every X
  // containing s. After the first sweep y lies in Q; later sweeps only
  // lower coordinates (staying in Q), and at the fixed point every
  // coordinate above x(s) sits in a tight set, so y is minimal.
  bool changed = true;
  while (changed) {
    changed = false;
    for (int s : order) {
      long long need = x[s];
      const Mask bit = Mask(1) << s;
      const Mask rest = p.full() & ~bit;
      Mask sub = rest;
      while (true) {
        Mask X = sub | bit;
        ExtInt pv = p.eval(X);
        if (pv.is_finite()) {
          need = std::max(need, pv.value() - (vec_sum(y, X) - y[s]));
        }
        if (sub == 0) break;
        sub = (sub - 1) & rest;
      }
      if (need != y[s]) changed = true;
      y[s] = need;
    }
  }
  return y;
}

IntVec minimal_dominating_in_Q(const SupermodularOracle& p, const IntVec& x) {
  return minimal_dominating_in_Q(p, x, index_order_pick()(p.n()));
}

namespace {

void groenevelt_rec(const SupermodularOracle& p, const std::vector<int>& globals,
                    const GroeneveltOptions& opts, IntVec& out, DecompNode& node) {
  const int n = p.n();
  const long long pS = p.eval(p.full()).value();
  node.elements = globals;
  node.floor_avg = floor_div(pS, n);
  IntVec x = single_constraint_solution(pS, n, opts.tie_pick);
  node.x = x;
  if (is_member(p, x)) {
    for (int i = 0; i < n; ++i) out[globals[i]] = x[i];
    return;
  }
  IntVec y = minimal_dominating_in_Q(p, x, opts.dominator_order(n));
  node.y_or_z = y;
  const Mask splus = largest_tight(p, y);
  const Mask sminus = p.full() & ~splus;
  if (splus == 0 || splus == p.full()) {
    throw std::logic_error("groenevelt: degenerate split");
  }
  // Off S+ the dominator must coincide with x.
  for (int i = 0; i < n; ++i) {
    if (!(splus >> i & 1) && y[i] != x[i]) {
      throw std::logic_error("groenevelt: y != x off the tight part");
    }
  }
  node.s_plus = subset_globals(globals, splus);
  node.s_minus = subset_globals(globals, sminus);
  node.children.resize(2);
  groenevelt_rec(p.restrict_to(splus), subset_globals(globals, splus), opts, out,
                 node.children[0]);
  groenevelt_rec(p.contract_to(sminus), subset_globals(globals, sminus), opts, out,
                 node.children[1]);
}

}  // namespace

IntVec groenevelt_decmin(const SupermodularOracle& p, DecompTrace* trace,
                         const GroeneveltOptions& opts) {
  IntVec out(p.n(), 0);
  DecompTrace local;
  DecompTrace& t = trace ? *trace : local;
  std::vector<int> globals(p.n());
  std::iota(globals.begin(), globals.end(), 0);
  t.root = DecompNode{};
  groenevelt_rec(p, globals, opts, out, t.root);
  return out;
}

IntVec minimize_Ga(const SupermodularOracle& p, long long a, IntVec start) {
  const int n = p.n();
  IntVec z = std::move(start);
  bool moved = true;
  while (moved) {
    moved = false;
    for (int s = 0; s < n && !moved; ++s) {
      if (z[s] > a) continue;
      for (int t = 0; t < n && !moved; ++t) {
        if (z[t] < a + 1 || z[t] < z[s] + 2) continue;
        if (exchange_feasible(p, z, s, t)) {
          ++z[s];
          --z[t];
          moved = true;
        }
      }
    }
  }
  return z;
}

FujishigeSplit split_fujishige(const SupermodularOracle& p, const IntVec& z,
                               long long a) {
  const int n = p.n();
  FujishigeSplit sp;
  for (int t = 0; t < n; ++t) {
    if (z[t] < a + 2) continue;
    for (int s = 0; s < n; ++s)
      if (exchange_feasible(p, z, s, t)) sp.s_plus |= Mask(1) << s;
  }
  for (int s = 0; s < n; ++s) {
    if (z[s] > a - 1) continue;
    for (int t = 0; t < n; ++t)
      if (exchange_feasible(p, z, s, t)) sp.s_minus |= Mask(1) << t;
  }
  sp.s_zero = p.full() & ~(sp.s_plus | sp.s_minus);
  // Sandwich bounds implied by relaxed local optimality of z.
  for (int s = 0; s < n; ++s) {
    const bool in_plus = sp.s_plus >> s & 1;
    const bool in_minus = sp.s_minus >> s & 1;
    if (in_plus && in_minus) throw std::logic_error("split: S+ meets S-");
    if (z[s] >= a + 2 && !in_plus) throw std::logic_error("split: S+ too small");
    if (in_plus && z[s] < a + 1) throw std::logic_error("split: S+ too large");
    if (z[s] <= a - 1 && !in_minus) throw std::logic_error("split: S- too small");
    if (in_minus && z[s] > a) throw std::logic_error("split: S- too large");
  }
  if (sp.s_plus == p.full() || sp.s_minus == p.full()) {
    throw std::logic_error("split: S+ or S- equals S");
  }
  return sp;
}

namespace {

void fujishige_rec(const SupermodularOracle& p, const std::vector<int>& globals,
                   IntVec& out, DecompNode& node) {
  const int n = p.n();
  const long long pS = p.eval(p.full()).value();
  const long long a = floor_div(pS, n);
  node.elements = globals;
  node.floor_avg = a;
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  IntVec z = minimize_Ga(p, a, greedy_vertex(p, order));
  node.y_or_z = z;
  FujishigeSplit sp = split_fujishige(p, z, a);
  node.s_plus = subset_globals(globals, sp.s_plus);
  node.s_minus = subset_globals(globals, sp.s_minus);
  node.s_zero = subset_globals(globals, sp.s_zero);
  for (int i = 0; i < n; ++i)
    if (sp.s_zero >> i & 1) out[globals[i]] = z[i];
  if (sp.s_plus != 0) {
    node.children.emplace_back();
    fujishige_rec(p.restrict_to(sp.s_plus), subset_globals(globals, sp.s_plus),
                  out, node.children.back());
  }
  if (sp.s_minus != 0) {
    node.children.emplace_back();
    fujishige_rec(p.contract_to(sp.s_minus), subset_globals(globals, sp.s_minus),
                  out, node.children.back());
  }
}

}  // namespace

IntVec fujishige_decmin(const SupermodularOracle& p, DecompTrace* trace) {
  IntVec out(p.n(), 0);
  DecompTrace local;
  DecompTrace& t = trace ? *trace : local;
  std::vector<int> globals(p.n());
  std::iota(globals.begin(), globals.end(), 0);
  t.root = DecompNode{};
  fujishige_rec(p, globals, out, t.root);
  return out;
}

}  // namespace decmin
