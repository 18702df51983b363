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


#ifndef QSINN_ORACLE_BRUTEFORCE_HPP
#define QSINN_ORACLE_BRUTEFORCE_HPP

#include <cstdint>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "qsinn/classical/network.hpp"

namespace qsinn::oracle {

inline constexpr int kMaxBruteForceWeights = 24;

struct BranchReport {
  /// Sign bits, weight 0 most significant; bit set means D(w) = -1.
  std::uint64_t bits = 0;
  std::string bitstring;
  int correct_count = 0;
  double mse = 0.0;
};

/// Counts classical forward evaluations (one per weight branch and pair).
struct CallCounter {
  std::uint64_t forward_calls = 0;
};

/// Correct predictions of the discrete network with the given sign bits.
int correct_count(const classical::NetworkConfig& config, std::uint64_t bits,
                  std::span<const classical::Sample> data,
                  CallCounter* counter = nullptr);

/// Every sign assignment, sorted by correct_count descending then bits
/// ascending. Throws std::invalid_argument for continuous networks or more
/// than 24 weights.
std::vector<BranchReport> exhaustive_search(
    const classical::NetworkConfig& config,
    std::span<const classical::Sample> data, CallCounter* counter = nullptr);

/// Bits of every branch tied at the top correct_count, ascending.
std::vector<std::uint64_t> maximizers(const std::vector<BranchReport>& sorted);

/// Columns bits, correct_count, mse.
void write_branches_csv(std::ostream& out,
                        const std::vector<BranchReport>& reports);

}  // namespace qsinn::oracle

#endif  // QSINN_ORACLE_BRUTEFORCE_HPP
