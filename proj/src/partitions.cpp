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

#include "decmin/partitions.hpp"

#include <algorithm>
#include <optional>

namespace decmin {

void ValuedChain::validate(int n) const {
  if (chain.size() != values.size() || chain.empty()) {
    throw std::logic_error("ValuedChain: size mismatch");
  }
  if (chain.back() != full_mask(n)) {
    throw std::logic_error("ValuedChain: chain must end at S");
  }
  for (int j = 1; j < size(); ++j) {
    if ((chain[j - 1] & ~chain[j]) != 0 || chain[j - 1] == chain[j]) {
      throw std::logic_error("ValuedChain: chain not strictly nested");
    }
    if (!(values[j] < values[j - 1])) {
      throw std::logic_error("ValuedChain: values not strictly decreasing");
    }
  }
}

namespace {

// Calls fn on every submask of `space`, including 0.
template <class Fn>
void for_each_submask(Mask space, Fn&& fn) {
  Mask sub = space;
  while (true) {
    fn(sub);
    if (sub == 0) break;
    sub = (sub - 1) & space;
  }
}

// max over nonempty X in `space` of (p(X u C) - p(C)) / |X|, exact.
Rat max_ratio(const SupermodularOracle& p, Mask C) {
  const Mask space = p.full() & ~C;
  const long long pc = p.eval(C).value();
  std::optional<Rat> best;
  for_each_submask(space, [&](Mask X) {
    if (X == 0) return;
    ExtInt v = p.eval(X | C);
    if (!v.is_finite()) return;
    Rat ratio(BigInt(v.value() - pc), BigInt(popcount(X)));
    if (!best || ratio > *best) best = ratio;
  });
  if (!best) throw std::logic_error("max_ratio: p = -inf beyond C");
  return *best;
}

// Smallest / largest maximizer of p(X u C) - p(C) - beta|X| over
// submasks X of S - C. The empty set always scores 0.
std::pair<Mask, Mask> extreme_maximizers(const SupermodularOracle& p, Mask C,
                                         const Rat& beta) {
  const Mask space = p.full() & ~C;
  const long long pc = p.eval(C).value();
  Rat best = 0;
  Mask smallest = 0, largest = 0;
  bool found = false;
  for_each_submask(space, [&](Mask X) {
    ExtInt v = p.eval(X | C);
    if (!v.is_finite()) return;
    Rat score = Rat(BigInt(v.value() - pc)) - beta * popcount(X);
    if (!found || score > best) {
      found = true;
      best = score;
      smallest = X;
      largest = X;
    } else if (score == best) {
      smallest &= X;
      largest |= X;
    }
  });
  return {smallest, largest};
}

}  // namespace

Mask smallest_maximizer(const SupermodularOracle& p, const Rat& beta) {
  return extreme_maximizers(p, 0, beta).first;
}

ValuedChain canonical_partition_iterative(const SupermodularOracle& p) {
  ValuedChain out;
  Mask C = 0;
  while (C != p.full()) {
    Rat beta = rat_ceil(max_ratio(p, C));
    Mask Sj = extreme_maximizers(p, C, beta - 1).first;
    if (Sj == 0) throw std::logic_error("canonical partition: empty block");
    C |= Sj;
    out.chain.push_back(C);
    out.values.push_back(beta);
  }
  out.validate(p.n());
  return out;
}

ValuedChain canonical_partition_direct(const SupermodularOracle& p) {
  ValuedChain out;
  BigInt beta = rat_ceil(max_ratio(p, 0));
  Mask prev = smallest_maximizer(p, Rat(beta));  // = L(beta_1) = empty set
  while (true) {
    Mask cur = smallest_maximizer(p, Rat(beta - 1));
    if (cur != prev) {
      out.chain.push_back(cur);
      out.values.push_back(Rat(beta));
    }
    if (cur == p.full()) break;
    prev = cur;
    --beta;
  }
  out.validate(p.n());
  return out;
}

ValuedChain principal_partition(const SupermodularOracle& p) {
  ValuedChain out;
  Mask C = 0;
  while (C != p.full()) {
    Rat lambda = max_ratio(p, C);
    Mask grow = extreme_maximizers(p, C, lambda).second;
    if (grow == 0) throw std::logic_error("principal partition: empty step");
    C |= grow;
    out.chain.push_back(C);
    out.values.push_back(lambda);
  }
  out.validate(p.n());
  return out;
}

RatVec min_norm_point(const ValuedChain& pp, int n) {
  RatVec m(n);
  for (int i = 0; i < pp.size(); ++i) {
    Mask block = pp.block(i);
    for (int s = 0; s < n; ++s)
      if (block >> s & 1) m[s] = pp.values[i];
  }
  return m;
}

RatVec min_norm_point(const SupermodularOracle& p) {
  return min_norm_point(principal_partition(p), p.n());
}

ValuedChain canonical_from_principal(const ValuedChain& pp, int n) {
  ValuedChain out;
  for (int i = 0; i < pp.size(); ++i) {
    Rat beta(rat_ceil(pp.values[i]));
    if (out.values.empty() || beta != out.values.back()) {
      out.chain.push_back(pp.chain[i]);
      out.values.push_back(beta);
    } else {
      out.chain.back() = pp.chain[i];  // C_j = hat-C at max I(j)
    }
  }
  out.validate(n);
  return out;
}

ValuedChain canonical_from_decmin(const SupermodularOracle& p, const IntVec& m) {
  const int n = p.n();
  ValuedChain out;
  Mask C = 0;
  while (C != p.full()) {
    long long beta = 0;
    bool first = true;
    for (int s = 0; s < n; ++s) {
      if (C >> s & 1) continue;
      if (first || m[s] > beta) beta = m[s];
      first = false;
    }
    Mask top = C;
    for (int s = 0; s < n; ++s)
      if (m[s] >= beta) top |= Mask(1) << s;
    Mask Cj = smallest_tight_containing(p, m, top);
    Mask block = Cj & ~C;
    for (int s = 0; s < n; ++s) {
      if ((block >> s & 1) && (m[s] < beta - 1 || m[s] > beta)) {
        throw std::invalid_argument(
            "canonical_from_decmin: block not near-uniform (input not dec-min?)");
      }
    }
    C = Cj;
    out.chain.push_back(C);
    out.values.push_back(Rat(beta));
  }
  out.validate(n);
  return out;
}

CertifyResult certify_decmin(const SupermodularOracle& p, const IntVec& m) {
  const int n = p.n();
  if (!is_member(p, m)) {
    throw std::invalid_argument("certify_decmin: m is not a member");
  }
  for (int s = 0; s < n; ++s) {
    for (int t = 0; t < n; ++t) {
      if (m[t] >= m[s] + 2 && exchange_feasible(p, m, s, t)) {
        return std::make_pair(s, t);
      }
    }
  }
  // No 1-tightening step, so m is dec-min; the canonical chain recovered
  // from m is a valid witness chain: each member is m-top and m-tight,
  // and m is near-uniform on each block.
  DecMinCertificate cert;
  cert.chain = canonical_from_decmin(p, m);
  cert.witness = m;
  for (int j = 0; j < cert.chain.size(); ++j) {
    Mask Cj = cert.chain.chain[j];
    if (vec_sum(m, Cj) != p.eval(Cj).value()) {
      throw std::logic_error("certificate chain member not m-tight");
    }
    long long inside_min = 0, outside_max = 0;
    bool has_in = false, has_out = false;
    for (int s = 0; s < n; ++s) {
      if (Cj >> s & 1) {
        if (!has_in || m[s] < inside_min) inside_min = m[s];
        has_in = true;
      } else {
        if (!has_out || m[s] > outside_max) outside_max = m[s];
        has_out = true;
      }
    }
    if (has_in && has_out && inside_min < outside_max) {
      throw std::logic_error("certificate chain member not m-top");
    }
  }
  return cert;
}

}  // namespace decmin
