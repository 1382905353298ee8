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

#ifndef DECMIN_INSTANCE_HPP_
#define DECMIN_INSTANCE_HPP_

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "decmin/setfn.hpp"

namespace decmin {

// A serializable problem instance. The function spec is one of:
//   table   — explicit 2^n values indexed by bitmask (-inf as "-inf")
//   graph   — induced-edge-count of a multigraph (edge list)
//   modular — a base spec shifted by an integral weight vector
struct InstanceSpec {
  enum class Kind { kTable, kGraph, kModular };
  Kind kind = Kind::kTable;
  std::vector<ExtInt> table;                 // kTable: 2^n entries
  std::vector<std::pair<int, int>> edges;    // kGraph
  std::shared_ptr<InstanceSpec> base;        // kModular
  IntVec shift;                              // kModular: n entries
};

struct Instance {
  int n = 0;
  std::vector<std::string> names;  // empty or n labels
  InstanceSpec spec;
  std::optional<RatVec> cost;

  SupermodularOracle oracle() const;
};

struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Parses and validates an instance. Validation: p(empty) = 0, p(S)
// finite, supermodularity (full pairwise check for n <= 12, random
// sample with a warning on `warning` otherwise). Throws ValidationError
// with the offending detail (including a violating X, Y pair).
Instance parse_instance(const std::string& path, std::string* warning = nullptr);
Instance parse_instance_text(const std::string& json_text,
                             std::string* warning = nullptr);

// Canonical serialization: fixed key order, bitmask index order, -inf as
// the string "-inf", rationals as "num/den". gen -> parse -> gen is the
// identity on files.
std::string serialize_instance(const Instance& inst);
void write_instance(const Instance& inst, const std::string& path);

// Explicit-table instance capturing an arbitrary oracle (n <= 12).
Instance instance_from_oracle(const SupermodularOracle& p);

}  // namespace decmin

#endif  // DECMIN_INSTANCE_HPP_
