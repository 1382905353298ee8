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

#ifndef DECMIN_TESTS_FIXTURES_HPP_
#define DECMIN_TESTS_FIXTURES_HPP_

#include <memory>
#include <vector>

#include "decmin/setfn.hpp"

namespace decmin::fixtures {

inline SupermodularOracle table_oracle(int n, std::vector<ExtInt> table) {
  auto t = std::make_shared<std::vector<ExtInt>>(std::move(table));
  return SupermodularOracle(GroundSet{n, {}}, [t](Mask X) { return (*t)[X]; });
}

// n=2 desk instance: two members differ by one exchange; three members
// total {(0,3),(1,2),(2,1)}.
inline SupermodularOracle ex31() {
  return table_oracle(2, {ExtInt(0), ExtInt(0), ExtInt(1), ExtInt(3)});
}

// n=4 desk instance with five members m1..m5 and a two-block canonical
// partition ({s1,s2},{s3,s4}).
inline SupermodularOracle ex32() {
  return table_oracle(4, {ExtInt(0), ExtInt(1), ExtInt(1), ExtInt(3),
                          ExtInt(0), ExtInt(1), ExtInt(1), ExtInt(3),
                          ExtInt(0), ExtInt(1), ExtInt(1), ExtInt(3),
                          ExtInt(0), ExtInt(2), ExtInt(2), ExtInt(4)});
}

// n=2 desk instance with a unique dec-min element (3,2).
inline SupermodularOracle ex51() {
  return table_oracle(2, {ExtInt(0), ExtInt(3), ExtInt(0), ExtInt(5)});
}

// n=4 desk instance where every member is dec-min and the canonical
// partition is the trivial single block.
inline SupermodularOracle ex53() {
  return table_oracle(4, {ExtInt(0), ExtInt(0), ExtInt(0), ExtInt(1),
                          ExtInt(0), ExtInt(0), ExtInt(0), ExtInt(1),
                          ExtInt(0), ExtInt(0), ExtInt(0), ExtInt(1),
                          ExtInt(1), ExtInt(1), ExtInt(1), ExtInt(2)});
}

}  // namespace decmin::fixtures

#endif  // DECMIN_TESTS_FIXTURES_HPP_
