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


#include "qsinn/oracle/bruteforce.hpp"

#include <algorithm>
#include <stdexcept>

#include "qsinn/experiment/csv.hpp"

namespace qsinn::oracle {

namespace {

std::string to_bitstring(std::uint64_t bits, std::size_t count) {
  std::string s(count, '0');
  for (std::size_t q = 0; q < count; ++q) {
    if ((bits >> (count - 1 - q)) & 1) {
      s[q] = '1';
    }
  }
  return s;
}

BranchReport evaluate(const classical::NetworkConfig& config,
                      std::uint64_t bits,
                      std::span<const classical::Sample> data,
                      CallCounter* counter) {
  BranchReport r;
  r.bits = bits;
  r.bitstring = to_bitstring(bits, config.num_weights());
  const auto w = classical::WeightSpace::from_sign_index(bits,
                                                         config.num_weights());
  double sq = 0.0;
  for (const auto& s : data) {
    const double pred =
        static_cast<double>(classical::dsinnn_forward(config, w, s.x));
    if (counter != nullptr) {
      ++counter->forward_calls;
    }
    r.correct_count += pred == s.y ? 1 : 0;
    sq += (pred - s.y) * (pred - s.y);
  }
  r.mse = data.empty() ? 0.0 : sq / static_cast<double>(data.size());
  return r;
}

void check_config(const classical::NetworkConfig& config) {
  config.validate();
  if (config.mode != classical::Mode::discrete) {
    throw std::invalid_argument("brute force needs a discrete network");
  }
  if (config.num_weights() > kMaxBruteForceWeights) {
    throw std::invalid_argument("brute force is capped at 24 weights");
  }
}

}  // namespace

int correct_count(const classical::NetworkConfig& config, std::uint64_t bits,
                  std::span<const classical::Sample> data,
                  CallCounter* counter) {
  check_config(config);
  return evaluate(config, bits, data, counter).correct_count;
}

std::vector<BranchReport> exhaustive_search(
    const classical::NetworkConfig& config,
    std::span<const classical::Sample> data, CallCounter* counter) {
  check_config(config);
  const std::uint64_t branches = std::uint64_t{1} << config.num_weights();
  std::vector<BranchReport> out;
  out.reserve(branches);
  for (std::uint64_t b = 0; b < branches; ++b) {
    out.push_back(evaluate(config, b, data, counter));
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const BranchReport& a, const BranchReport& b) {
                     return a.correct_count > b.correct_count;
                   });
  return out;
}

std::vector<std::uint64_t> maximizers(const std::vector<BranchReport>& sorted) {
  std::vector<std::uint64_t> out;
  for (const auto& r : sorted) {
    if (r.correct_count != sorted.front().correct_count) {
      break;
    }
    out.push_back(r.bits);
  }
  std::sort(out.begin(), out.end());
  return out;
}

void write_branches_csv(std::ostream& out,
                        const std::vector<BranchReport>& reports) {
  out << "bits,correct_count,mse\n";
  for (const auto& r : reports) {
    out << r.bitstring << ',' << r.correct_count << ','
        << experiment::format_real(r.mse) << '\n';
  }
}

}  // namespace qsinn::oracle
