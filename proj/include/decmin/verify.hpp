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

#ifndef DECMIN_VERIFY_HPP_
#define DECMIN_VERIFY_HPP_

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "decmin/setfn.hpp"

namespace decmin {

struct EnumeratedSet {
  std::vector<IntVec> members;
  IntVec lower_bounds, upper_bounds;  // [p({s}), p(S) - p(S-s)]
};

// All integral points of B'(p), by filtering the per-element bounds box
// through membership. Throws on infinite bounds or when the box volume
// exceeds `cap`.
EnumeratedSet enumerate_members(const SupermodularOracle& p,
                                std::uint64_t cap = 1u << 20);

std::vector<IntVec> brute_decmin_set(const EnumeratedSet& e);
std::vector<IntVec> brute_incmax_set(const EnumeratedSet& e);
std::vector<IntVec> brute_sqsum_min_set(const EnumeratedSet& e);

// Dec-min order: lexicographic comparison of the decreasingly sorted
// component multisets. Negative result means a beats b.
int compare_dec_profiles(const IntVec& a, const IntVec& b);

struct DualityReport {
  bool weak_duality_ok = true;
  bool equality_attained = false;
  long long min_square_sum = 0;
  long long best_dual = 0;
  // Eq-(7)-style check at pi = 2 m_R (reported, not asserted).
  bool continuous_dual_matches = false;
  std::string detail;
};

// Scans all integer pi with max-norm <= pi_range; pi_range <= 0 picks
// the default 2*(max |component bound|) + 2.
DualityReport check_minmax_duality(const SupermodularOracle& p,
                                   long long pi_range = 0);

struct BatteryItem {
  std::string name;
  bool pass = true;
  std::string detail;
};

struct BatteryReport {
  std::vector<BatteryItem> items;
  bool all_pass() const {
    for (const auto& it : items)
      if (!it.pass) return false;
    return true;
  }
};

struct BatteryOptions {
  bool with_duality = true;      // pi scan is exponential in n
  long long pi_range = 0;
  int hull_max_n = 5;            // convex-hull check gates
  int hull_max_decmin = 12;
  std::uint32_t cost_seed = 1;   // random costs for the min-cost check
};

// Runs every cross-module invariant against one instance.
BatteryReport run_theorem_battery(const SupermodularOracle& p,
                                  const BatteryOptions& opts = {});

// Random instance generators. All are certified supermodular by
// construction or by exhaustive check.
SupermodularOracle gen_graph_instance(int n, int edges, std::mt19937& rng);
SupermodularOracle gen_modular_shift(const SupermodularOracle& base,
                                     long long range, std::mt19937& rng);
// Rejection-sampled explicit table (n <= 5); throws if no supermodular
// table is found within the attempt budget.
SupermodularOracle gen_table_instance(int n, long long range, std::mt19937& rng,
                                      int max_attempts = 2000);
// Mixed draw used by the property suite.
SupermodularOracle gen_random_instance(int max_n, long long range,
                                       std::mt19937& rng);

}  // namespace decmin

#endif  // DECMIN_VERIFY_HPP_
