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

#ifndef DECMIN_PARTITIONS_HPP_
#define DECMIN_PARTITIONS_HPP_

#include <utility>
#include <variant>
#include <vector>

#include "decmin/setfn.hpp"

namespace decmin {

// Strictly nested chain C_1 c ... c C_k = S with strictly decreasing
// values; blocks C_j - C_{j-1} partition S. Holds either the canonical
// structure (integer essential values) or the principal structure
// (rational critical values).
struct ValuedChain {
  std::vector<Mask> chain;
  std::vector<Rat> values;

  int size() const { return static_cast<int>(chain.size()); }
  Mask block(int j) const {
    return j == 0 ? chain[0] : chain[j] & ~chain[j - 1];
  }
  bool operator==(const ValuedChain&) const = default;

  void validate(int n) const;  // nesting, decrease, final member = S
};

struct DecMinCertificate {
  ValuedChain chain;
  IntVec witness;
};

// Smallest maximizer L(beta) of p(X) - beta|X|.
Mask smallest_maximizer(const SupermodularOracle& p, const Rat& beta);

// Canonical partition by the iterative contraction scheme.
ValuedChain canonical_partition_iterative(const SupermodularOracle& p);

// Canonical partition by the downward integer scan over L(beta).
ValuedChain canonical_partition_direct(const SupermodularOracle& p);

// Principal partition: critical values (exact rationals) and the
// principal chain, by recursive exact ratio maximization.
ValuedChain principal_partition(const SupermodularOracle& p);

// Fractional dec-min point: the critical value on each principal block.
RatVec min_norm_point(const SupermodularOracle& p);
RatVec min_norm_point(const ValuedChain& pp, int n);

// Canonical structure from the principal one: distinct ceilings of the
// critical values, blocks aggregated accordingly.
ValuedChain canonical_from_principal(const ValuedChain& pp, int n);

// Canonical structure recovered from any dec-min element.
ValuedChain canonical_from_decmin(const SupermodularOracle& p, const IntVec& m);

// Either a certificate of dec-minimality or a violating 1-tightening
// pair (s, t), meaning m + chi_s - chi_t stays a member with
// m(t) >= m(s) + 2.
using CertifyResult = std::variant<DecMinCertificate, std::pair<int, int>>;
CertifyResult certify_decmin(const SupermodularOracle& p, const IntVec& m);

}  // namespace decmin

#endif  // DECMIN_PARTITIONS_HPP_
