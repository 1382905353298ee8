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

#include "decmin/relaxation.hpp"

#include <algorithm>
#include <numeric>

namespace decmin {

RoundingBox box_from(const RatVec& xstar) {
  RoundingBox box;
  box.lower.reserve(xstar.size());
  box.upper.reserve(xstar.size());
  for (const Rat& v : xstar) {
    box.lower.push_back(to_ll(rat_floor(v)));
    box.upper.push_back(to_ll(rat_ceil(v)));
  }
  return box;
}

bool box_nonempty(const SupermodularOracle& p, const IntVec& l, const IntVec& u) {
  for (size_t i = 0; i < l.size(); ++i) {
    if (l[i] > u[i]) throw std::invalid_argument("box_nonempty: l > u");
  }
  auto upper_ok = sfm_min<long long>(p.n(), [&](Mask X) -> ExtInt {
    ExtInt pv = p.eval(X);
    if (pv.is_neg_inf()) return ExtInt::pos_inf();
    return ExtInt(vec_sum(u, X) - pv.value());
  });
  if (upper_ok.min_value < 0) return false;
  auto lower_ok = sfm_min<long long>(p.n(), [&](Mask X) -> ExtInt {
    ExtInt bv = complement_b(p, X);
    if (bv.is_pos_inf()) return ExtInt::pos_inf();
    return ExtInt(bv.value() - vec_sum(l, X));
  });
  return lower_ok.min_value >= 0;
}

bool matroid_independent(const SupermodularOracle& p, const RoundingBox& box,
                         Mask I) {
  if ((I & ~box.unit_gap_support()) != 0) {
    throw std::invalid_argument("independence query outside the unit-gap support");
  }
  IntVec l = box.lower;
  for (int s = 0; s < p.n(); ++s)
    if (I >> s & 1) ++l[s];
  return box_nonempty(p, l, box.upper);
}

IntVec continuous_relaxation_decmin(const SupermodularOracle& p,
                                    const RatVec& xstar) {
  const int n = p.n();
  RoundingBox box = box_from(xstar);
  if (!box_nonempty(p, box.lower, box.upper)) {
    throw std::invalid_argument("relaxation: the rounding box misses B");
  }
  const Mask support = box.unit_gap_support();
  std::vector<int> elems = mask_elements(support);
  std::stable_sort(elems.begin(), elems.end(), [&](int a, int b) {
    long long wa = box.upper[a] * box.upper[a] - box.lower[a] * box.lower[a];
    long long wb = box.upper[b] * box.upper[b] - box.lower[b] * box.lower[b];
    return wa < wb;
  });
  Mask L = 0;
  for (int s : elems) {
    if (matroid_independent(p, box, L | (Mask(1) << s))) L |= Mask(1) << s;
  }
  IntVec m = box.lower;
  for (int s = 0; s < n; ++s)
    if (L >> s & 1) ++m[s];
  if (!is_member(p, m)) {
    throw std::logic_error("relaxation: greedy result not a member");
  }
  return m;
}

namespace {

// Minor of p on block S_j of the canonical chain: restriction to C_j
// contracted by C_{j-1}.
SupermodularOracle block_minor(const SupermodularOracle& p, Mask prev, Mask block) {
  const Mask cj = prev | block;
  if (prev == 0) {
    return cj == p.full() ? p : p.restrict_to(block);
  }
  if (cj == p.full()) return p.contract_to(block);
  SupermodularOracle r = p.restrict_to(cj);
  // Localize `block` in the restricted index space.
  Mask local = 0;
  auto elems = mask_elements(cj);
  for (int i = 0; i < static_cast<int>(elems.size()); ++i)
    if (block >> elems[i] & 1) local |= Mask(1) << i;
  return r.contract_to(local);
}

}  // namespace

DecMinStructure decmin_structure(const SupermodularOracle& p) {
  const int n = p.n();
  DecMinStructure st;
  st.canonical = canonical_partition_iterative(p);
  st.base.assign(n, 0);
  struct Block {
    SupermodularOracle minor;
    std::vector<int> elems;  // global indices, ascending
    long long beta;
  };
  auto blocks = std::make_shared<std::vector<Block>>();
  for (int j = 0; j < st.canonical.size(); ++j) {
    Mask prev = j == 0 ? 0 : st.canonical.chain[j - 1];
    Mask block = st.canonical.block(j);
    long long beta = to_ll(numerator(st.canonical.values[j]));
    for (int s : mask_elements(block)) st.base[s] = beta - 1;
    blocks->push_back({block_minor(p, prev, block), mask_elements(block), beta});
  }
  st.independent = [blocks](Mask I) {
    for (const Block& b : *blocks) {
      const int k = static_cast<int>(b.elems.size());
      IntVec l(k, b.beta - 1), u(k, b.beta);
      for (int i = 0; i < k; ++i)
        if (I >> b.elems[i] & 1) l[i] = b.beta;
      if (!box_nonempty(b.minor, l, u)) return false;
    }
    return true;
  };
  return st;
}

IntVec min_cost_decmin(const SupermodularOracle& p, const RatVec& c) {
  const int n = p.n();
  if (static_cast<int>(c.size()) != n) {
    throw std::invalid_argument("cost dimension mismatch");
  }
  DecMinStructure st = decmin_structure(p);
  IntVec m = st.base;
  // Blocks are independent (the canonical chain is tight for every
  // dec-min element), so a per-block greedy assembles the optimum.
  for (int j = 0; j < st.canonical.size(); ++j) {
    std::vector<int> elems = mask_elements(st.canonical.block(j));
    std::stable_sort(elems.begin(), elems.end(),
                     [&](int a, int b) { return c[a] < c[b]; });
    Mask chosen = 0;
    for (int s : elems) {
      Mask trial = chosen | (Mask(1) << s);
      // Other blocks at I = empty are feasible, so testing the full-I
      // oracle probes only this block.
      if (st.independent(trial)) chosen = trial;
    }
    for (int s : mask_elements(chosen)) ++m[s];
  }
  if (!is_member(p, m)) {
    throw std::logic_error("min_cost_decmin: result not a member");
  }
  return m;
}

Rat pwl_phi(const Rat& xi) {
  Rat a = xi < 0 ? Rat(-xi) : xi;
  BigInt k = rat_floor(a);
  return Rat(2 * k + 1) * a - Rat(k * (k + 1));
}

Rat pwl_square_sum(const RatVec& x) {
  Rat total = 0;
  for (const Rat& v : x) total += pwl_phi(v);
  return total;
}

}  // namespace decmin
