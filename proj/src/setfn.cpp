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

#include "decmin/setfn.hpp"

#include <algorithm>
#include <numeric>

namespace decmin {

std::vector<int> mask_elements(Mask X) {
  std::vector<int> out;
  for (int i = 0; X >> i; ++i)
    if (X >> i & 1) out.push_back(i);
  return out;
}

std::string mask_str(Mask X, int n) {
  std::string out = "{";
  bool first = true;
  for (int i = 0; i < n; ++i) {
    if (!(X >> i & 1)) continue;
    if (!first) out += ",";
    out += "s" + std::to_string(i + 1);
    first = false;
  }
  return out + "}";
}

SupermodularOracle::SupermodularOracle(GroundSet ground,
                                       std::function<ExtInt(Mask)> raw)
    : impl_(std::make_shared<Impl>()) {
  if (ground.n < 1 || ground.n > kMaxGroundSet) {
    throw std::invalid_argument("ground-set size out of range");
  }
  impl_->ground = std::move(ground);
  impl_->raw_fn = std::move(raw);
  if (eval(0) != ExtInt(0)) throw std::invalid_argument("p(empty) must be 0");
  if (!eval(full()).is_finite()) {
    throw std::invalid_argument("p(S) must be finite");
  }
}

ExtInt SupermodularOracle::eval(Mask X) const {
  impl_->queries.fetch_add(1, std::memory_order_relaxed);
  {
    std::lock_guard<std::mutex> lk(impl_->mu);
    auto it = impl_->memo.find(X);
    if (it != impl_->memo.end()) return it->second;
  }
  ExtInt v = impl_->raw_fn(X);
  if (v.is_pos_inf()) throw std::logic_error("supermodular p must not be +inf");
  impl_->raw.fetch_add(1, std::memory_order_relaxed);
  std::lock_guard<std::mutex> lk(impl_->mu);
  impl_->memo.emplace(X, v);
  return v;
}

namespace {

// Packs a local subset of the minor into the parent's index space.
Mask expand(Mask local, const std::vector<int>& elems) {
  Mask out = 0;
  for (int i = 0; i < static_cast<int>(elems.size()); ++i)
    if (local >> i & 1) out |= Mask(1) << elems[i];
  return out;
}

}  // namespace

SupermodularOracle SupermodularOracle::restrict_to(Mask keep) const {
  if (keep == 0 || keep == full()) {
    throw std::invalid_argument("restriction needs a proper nonempty subset");
  }
  GroundSet g;
  auto elems = mask_elements(keep);
  g.n = static_cast<int>(elems.size());
  for (int e : elems) g.names.push_back(ground().name(e));
  SupermodularOracle parent = *this;
  return SupermodularOracle(std::move(g), [parent, elems](Mask X) {
    return parent.eval(expand(X, elems));
  });
}

SupermodularOracle SupermodularOracle::contract_to(Mask keep) const {
  if (keep == 0 || keep == full()) {
    throw std::invalid_argument("contraction needs a proper nonempty subset");
  }
  const Mask rest = full() & ~keep;
  if (!eval(rest).is_finite()) {
    throw std::invalid_argument("contraction: p(S - keep) must be finite");
  }
  GroundSet g;
  auto elems = mask_elements(keep);
  g.n = static_cast<int>(elems.size());
  for (int e : elems) g.names.push_back(ground().name(e));
  SupermodularOracle parent = *this;
  return SupermodularOracle(std::move(g), [parent, elems, rest](Mask X) {
    return parent.eval(expand(X, elems) | rest) - parent.eval(rest);
  });
}

bool SupermodularOracle::check_supermodular(Mask* bad_x, Mask* bad_y) const {
  const Mask all = full();
  for (Mask X = 0; X <= all; ++X) {
    ExtInt px = eval(X);
    if (!px.is_finite()) continue;
    for (Mask Y = X + 1; Y <= all; ++Y) {
      ExtInt py = eval(Y);
      if (!py.is_finite()) continue;
      ExtInt lhs = px + py;
      ExtInt rhs = eval(X | Y) + eval(X & Y);
      if (lhs > rhs) {
        if (bad_x) *bad_x = X;
        if (bad_y) *bad_y = Y;
        return false;
      }
    }
  }
  return true;
}

ExtInt complement_b(const SupermodularOracle& p, Mask X) {
  ExtInt rest = p.eval(p.full() & ~X);
  if (rest.is_neg_inf()) return ExtInt::pos_inf();
  return p.eval(p.full()) - rest;
}

namespace {
int g_sfm_enum_limit = 22;
SfmBackendInt g_sfm_backend;
}  // namespace

int sfm_enum_limit() { return g_sfm_enum_limit; }
void set_sfm_enum_limit(int n) { g_sfm_enum_limit = n; }
void set_sfm_backend(SfmBackendInt backend) { g_sfm_backend = std::move(backend); }
const SfmBackendInt& sfm_backend() { return g_sfm_backend; }

namespace detail {
void throw_sfm_too_large(int n) {
  throw std::invalid_argument(
      "submodular minimization: n = " + std::to_string(n) +
      " exceeds the enumeration bound " + std::to_string(g_sfm_enum_limit) +
      " and no backend is registered");
}
}  // namespace detail

namespace {

// min over Z of x(Z) - p(Z); +inf where p(Z) = -inf.
template <class Vec, class T>
SfmResult<T> excess_min(const SupermodularOracle& p, const Vec& x,
                        Mask superset_of = 0) {
  return sfm_min<T>(
      p.n(),
      [&](Mask Z) -> Extended<T> {
        ExtInt pz = p.eval(Z);
        if (pz.is_neg_inf()) return Extended<T>::pos_inf();
        return Extended<T>(vec_sum(x, Z) - T(pz.value()));
      },
      superset_of);
}

template <class Vec, class T>
bool is_member_impl(const SupermodularOracle& p, const Vec& x) {
  if (static_cast<int>(x.size()) != p.n()) {
    throw std::invalid_argument("vector dimension mismatch");
  }
  if (T(vec_sum(x, p.full())) != T(p.eval(p.full()).value())) return false;
  return excess_min<Vec, T>(p, x).min_value >= T(0);
}

template <class Vec, class T>
Mask largest_tight_impl(const SupermodularOracle& p, const Vec& x) {
  auto r = excess_min<Vec, T>(p, x);
  if (r.min_value < T(0)) {
    throw std::invalid_argument("largest_tight: x not in Q");
  }
  return r.min_value == T(0) ? r.largest : Mask(0);
}

}  // namespace

bool is_member(const SupermodularOracle& p, const IntVec& x) {
  return is_member_impl<IntVec, long long>(p, x);
}

bool is_member(const SupermodularOracle& p, const RatVec& x) {
  return is_member_impl<RatVec, Rat>(p, x);
}

bool exchange_feasible(const SupermodularOracle& p, const IntVec& x, int s,
                       int t) {
  if (s == t) return true;
  IntVec moved = x;
  ++moved[s];
  --moved[t];
  return is_member(p, moved);
}

Mask smallest_tight_containing(const SupermodularOracle& p, const IntVec& x,
                               Mask T) {
  auto r = excess_min<IntVec, long long>(p, x, T);
  if (r.min_value != 0) {
    throw std::logic_error("smallest_tight_containing: no tight superset");
  }
  return r.smallest;
}

Mask largest_tight(const SupermodularOracle& p, const IntVec& x) {
  return largest_tight_impl<IntVec, long long>(p, x);
}

Mask largest_tight(const SupermodularOracle& p, const RatVec& x) {
  return largest_tight_impl<RatVec, Rat>(p, x);
}

IntVec greedy_vertex(const SupermodularOracle& p, const std::vector<int>& order) {
  if (static_cast<int>(order.size()) != p.n()) {
    throw std::invalid_argument("greedy_vertex: order must be a permutation");
  }
  IntVec x(p.n(), 0);
  Mask prefix = 0;
  ExtInt prev(0);
  for (int e : order) {
    prefix |= Mask(1) << e;
    ExtInt cur = p.eval(prefix);
    if (!cur.is_finite()) {
      throw std::invalid_argument("greedy_vertex: -inf on a prefix");
    }
    x[e] = cur.value() - prev.value();
    prev = cur;
  }
  return x;
}

Rat lovasz_extension(const SupermodularOracle& p, const RatVec& pi) {
  const int n = p.n();
  if (static_cast<int>(pi.size()) != n) {
    throw std::invalid_argument("vector dimension mismatch");
  }
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return pi[a] > pi[b]; });
  Rat total = 0;
  Mask prefix = 0;
  for (int j = 0; j < n; ++j) {
    prefix |= Mask(1) << order[j];
    Rat gap = (j + 1 < n) ? pi[order[j]] - pi[order[j + 1]] : pi[order[j]];
    if (gap == 0) continue;
    ExtInt pv = p.eval(prefix);
    if (!pv.is_finite()) {
      throw std::invalid_argument("lovasz_extension: -inf prefix with nonzero gap");
    }
    total += Rat(pv.value()) * gap;
  }
  return total;
}

}  // namespace decmin
