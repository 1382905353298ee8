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

#ifndef DECMIN_SETFN_HPP_
#define DECMIN_SETFN_HPP_

#include <atomic>
#include <cstdint>
#include <functional>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "decmin/extended.hpp"
#include "decmin/rational.hpp"

namespace decmin {

// Ground-set elements are 0..n-1; subsets are bitmasks (bit i = element i).
using Mask = std::uint32_t;
using IntVec = std::vector<long long>;
using RatVec = std::vector<Rat>;

constexpr int kMaxGroundSet = 30;

inline int popcount(Mask m) { return __builtin_popcount(m); }
inline Mask full_mask(int n) { return (n == 32) ? ~Mask(0) : ((Mask(1) << n) - 1); }

inline long long vec_sum(const IntVec& x, Mask X) {
  long long s = 0;
  for (int i = 0; i < static_cast<int>(x.size()); ++i)
    if (X >> i & 1) s += x[i];
  return s;
}

inline Rat vec_sum(const RatVec& x, Mask X) {
  Rat s = 0;
  for (int i = 0; i < static_cast<int>(x.size()); ++i)
    if (X >> i & 1) s += x[i];
  return s;
}

std::vector<int> mask_elements(Mask X);
std::string mask_str(Mask X, int n);

struct GroundSet {
  int n = 0;
  std::vector<std::string> names;  // empty, or one label per element

  std::string name(int i) const {
    return names.empty() ? "s" + std::to_string(i + 1) : names[i];
  }
};

// Integer-valued supermodular function given by an evaluation oracle.
// p(empty) = 0, p(S) finite, p(X) may be -inf for other X. Immutable
// after construction except for the memo cache, which is safe under
// concurrent reads. Evaluation counts are exposed so that algorithms
// can be compared by oracle cost.
class SupermodularOracle {
 public:
  SupermodularOracle() = default;
  SupermodularOracle(GroundSet ground, std::function<ExtInt(Mask)> raw);

  int n() const { return impl_->ground.n; }
  Mask full() const { return full_mask(n()); }
  const GroundSet& ground() const { return impl_->ground; }

  ExtInt eval(Mask X) const;

  // Total eval() queries and raw (cache-miss) evaluations.
  std::uint64_t query_count() const { return impl_->queries.load(); }
  std::uint64_t raw_count() const { return impl_->raw.load(); }

  // Minors. `keep` must be a proper nonempty subset of S; elements of
  // the minor are keep's bits in increasing order. Both minors are
  // supermodular with value 0 at the empty set.
  SupermodularOracle restrict_to(Mask keep) const;   // p+(X) = p(X)
  SupermodularOracle contract_to(Mask keep) const;   // p-(X) = p(X u (S-keep)) - p(S-keep)

  // Exhaustive supermodularity check over all pairs; n <= 12 intended.
  // Returns true if no violating pair; on failure reports one pair.
  bool check_supermodular(Mask* bad_x = nullptr, Mask* bad_y = nullptr) const;

 private:
  struct Impl {
    GroundSet ground;
    std::function<ExtInt(Mask)> raw_fn;
    mutable std::mutex mu;
    mutable std::unordered_map<Mask, ExtInt> memo;
    mutable std::atomic<std::uint64_t> queries{0};
    mutable std::atomic<std::uint64_t> raw{0};
  };
  std::shared_ptr<Impl> impl_;
};

// b(X) = p(S) - p(S-X), the complementary submodular function; +inf
// where p(S-X) = -inf.
ExtInt complement_b(const SupermodularOracle& p, Mask X);

template <class T>
struct SfmResult {
  T min_value{};
  Mask smallest = 0;  // intersection of all minimizers (itself a minimizer)
  Mask largest = 0;   // union of all minimizers
};

// Enumeration bound for the default SFM backend (configurable).
int sfm_enum_limit();
void set_sfm_enum_limit(int n);

// Optional strongly polynomial backend for integer-valued submodular
// minimization; used when n exceeds the enumeration limit.
using SfmBackendInt =
    std::function<SfmResult<long long>(int, const std::function<ExtInt(Mask)>&)>;
void set_sfm_backend(SfmBackendInt backend);
const SfmBackendInt& sfm_backend();

namespace detail {
[[noreturn]] void throw_sfm_too_large(int n);
}

// Minimizes a submodular f over subsets of S (restricted to supersets of
// `superset_of`), returning the minimum with the smallest and largest
// minimizers. f may take the value +inf (Extended); f must be finite
// somewhere in the scanned range.
template <class T, class F>
SfmResult<T> sfm_min(int n, F&& f, Mask superset_of = 0) {
  if (n > sfm_enum_limit()) {
    if constexpr (std::is_same_v<T, long long>) {
      if (sfm_backend() && superset_of == 0) {
        return sfm_backend()(n, std::function<ExtInt(Mask)>(f));
      }
    }
    detail::throw_sfm_too_large(n);
  }
  const Mask all = full_mask(n);
  const Mask var = all & ~superset_of;
  bool found = false;
  SfmResult<T> res;
  // Iterate supersets of superset_of via submasks of the free positions.
  Mask sub = var;
  while (true) {
    Mask X = sub | superset_of;
    Extended<T> v = f(X);
    if (!v.is_pos_inf()) {
      if (v.is_neg_inf()) throw std::logic_error("sfm_min: f = -inf");
      if (!found || v.value() < res.min_value) {
        found = true;
        res.min_value = v.value();
        res.smallest = X;
        res.largest = X;
      } else if (v.value() == res.min_value) {
        res.smallest &= X;
        res.largest |= X;
      }
    }
    if (sub == 0) break;
    sub = (sub - 1) & var;
  }
  if (!found) throw std::logic_error("sfm_min: f = +inf everywhere");
  return res;
}

// Membership in B'(p): x(S) = p(S) and min_Z (x(Z) - p(Z)) >= 0.
bool is_member(const SupermodularOracle& p, const IntVec& x);
bool is_member(const SupermodularOracle& p, const RatVec& x);

// Whether x + chi_s - chi_t stays in the M-convex set (x must be a member).
bool exchange_feasible(const SupermodularOracle& p, const IntVec& x, int s,
                       int t);

// Smallest x-tight set containing T (exists: S is tight for members).
Mask smallest_tight_containing(const SupermodularOracle& p, const IntVec& x,
                               Mask T);

// Largest x-tight set, for x in the supermodular polyhedron Q.
Mask largest_tight(const SupermodularOracle& p, const IntVec& x);
Mask largest_tight(const SupermodularOracle& p, const RatVec& x);

// Base-polyhedron vertex from prefix differences of `order`.
IntVec greedy_vertex(const SupermodularOracle& p, const std::vector<int>& order);

// Lovasz extension, Eq-(5)-style sum over the sorted order of pi; a zero
// gap contributes 0 even at p = -inf; a -inf prefix with positive gap
// is an error.
Rat lovasz_extension(const SupermodularOracle& p, const RatVec& pi);

}  // namespace decmin

#endif  // DECMIN_SETFN_HPP_
