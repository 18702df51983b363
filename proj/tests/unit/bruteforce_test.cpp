// Copyright 2026 The qsinn Authors
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


#include <numbers>
#include <sstream>

#include <gtest/gtest.h>

#include "qsinn/oracle/bruteforce.hpp"
#include "qsinn/quantum/instances.hpp"
#include "qsinn/quantum/network_circuit.hpp"

namespace qsinn::oracle {
namespace {

using std::numbers::pi;

std::vector<classical::Sample> toy() {
  return {{-1.5 * pi, 2}, {-0.5 * pi, -2}, {0.5 * pi, 2}, {1.5 * pi, -2}};
}

TEST(BruteForce, ToyBranches) {
  CallCounter calls;
  const auto r =
      exhaustive_search(quantum::quantum_network(2), toy(), &calls);
  ASSERT_EQ(r.size(), 4u);
  EXPECT_EQ(r[0].bitstring, "00");
  EXPECT_EQ(r[0].correct_count, 4);
  EXPECT_EQ(r[0].mse, 0.0);
  for (int i = 1; i < 4; ++i) {
    EXPECT_EQ(r[i].correct_count, 0);
  }
  EXPECT_EQ(calls.forward_calls, 16u);
  EXPECT_EQ(maximizers(r), (std::vector<std::uint64_t>{0}));
}

TEST(BruteForce, EmptyDatasetTies) {
  const auto r = exhaustive_search(quantum::quantum_network(3), {});
  EXPECT_EQ(r.size(), 8u);
  EXPECT_EQ(maximizers(r).size(), 8u);
  for (std::size_t i = 0; i < r.size(); ++i) {
    EXPECT_EQ(r[i].bits, i);
  }
}

TEST(BruteForce, SortedOnRandomInstances) {
  for (std::uint64_t s = 0; s < 10; ++s) {
    const auto inst = quantum::random_instance(s);
    const auto r = exhaustive_search(quantum::quantum_network(inst.hidden),
                                     quantum::to_classical(inst.data));
    for (std::size_t i = 1; i < r.size(); ++i) {
      EXPECT_TRUE(r[i - 1].correct_count > r[i].correct_count ||
                  (r[i - 1].correct_count == r[i].correct_count &&
                   r[i - 1].bits < r[i].bits));
    }
  }
}

TEST(BruteForce, Guardrails) {
  EXPECT_THROW(exhaustive_search(classical::NetworkConfig::toy_sinnn(), toy()),
               std::invalid_argument);
  EXPECT_THROW(exhaustive_search(quantum::quantum_network(25), toy()),
               std::invalid_argument);
}

TEST(BruteForce, CsvOutput) {
  std::ostringstream out;
  write_branches_csv(out, exhaustive_search(quantum::quantum_network(2), toy()));
  EXPECT_EQ(out.str().substr(0, out.str().find('\n')), "bits,correct_count,mse");
  EXPECT_NE(out.str().find("00,4,0\n"), std::string::npos);
}

}  // namespace
}  // namespace qsinn::oracle
