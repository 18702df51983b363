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

#include "qsinn/experiment/dataset.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

#include "qsinn/classical/rng.hpp"

namespace qsinn::experiment {

using std::numbers::pi;

std::string to_string(TargetFunction target) {
  return target == TargetFunction::sine_sum ? "sine_sum" : "rounded_sine_sum";
}

TargetFunction target_from_string(const std::string& name) {
  if (name == "sine_sum") {
    return TargetFunction::sine_sum;
  }
  if (name == "rounded_sine_sum") {
    return TargetFunction::rounded_sine_sum;
  }
  throw std::invalid_argument("unknown target function '" + name + "'");
}

double evaluate_target(TargetFunction target, double x) {
  double y = 0.0;
  for (int k = 1; k <= 5; ++k) {
    y += std::sin(k * x);
  }
  return target == TargetFunction::sine_sum ? y : std::round(y);
}

DatasetSpec DatasetSpec::sinnn_default() { return DatasetSpec{}; }

DatasetSpec DatasetSpec::dsinnn_default() {
  DatasetSpec s;
  s.target = TargetFunction::rounded_sine_sum;
  s.lo = -7.0 * pi;
  s.hi = 7.0 * pi;
  s.normalize = false;
  return s;
}

std::vector<Sample> Dataset::train() const {
  std::vector<Sample> out;
  out.reserve(train_indices.size());
  for (std::size_t i : train_indices) {
    out.push_back(samples[i]);
  }
  return out;
}

std::vector<Sample> Dataset::test() const {
  std::vector<Sample> out;
  out.reserve(test_indices.size());
  for (std::size_t i : test_indices) {
    out.push_back(samples[i]);
  }
  return out;
}

Dataset generate_dataset(const DatasetSpec& spec, std::uint64_t seed) {
  if (spec.count < 2) {
    throw std::invalid_argument("dataset needs at least two samples");
  }
  if (!(spec.lo < spec.hi)) {
    throw std::invalid_argument("dataset interval is empty");
  }
  if (!(spec.split_fraction > 0.0 && spec.split_fraction < 1.0)) {
    throw std::invalid_argument("split fraction must lie in (0, 1)");
  }
  Dataset d;
  classical::CounterStream xs(seed, classical::kDatasetSampleStream);
  for (int i = 0; i < spec.count; ++i) {
    const double x = xs.uniform(spec.lo, spec.hi);
    const double y = evaluate_target(spec.target, x);
    const double fed =
        spec.normalize ? 2.0 * (x - spec.lo) / (spec.hi - spec.lo) - 1.0 : x;
    d.samples.push_back({fed, y});
  }

  std::vector<std::size_t> order(spec.count);
  std::iota(order.begin(), order.end(), std::size_t{0});
  classical::CounterStream shuffle(seed, classical::kDatasetSplitStream);
  for (std::size_t i = order.size() - 1; i > 0; --i) {
    std::swap(order[i], order[shuffle.below(i + 1)]);
  }
  const auto n_train = static_cast<std::size_t>(
      std::lround(spec.split_fraction * spec.count));
  d.train_indices.assign(order.begin(), order.begin() + n_train);
  d.test_indices.assign(order.begin() + n_train, order.end());
  std::sort(d.train_indices.begin(), d.train_indices.end());
  std::sort(d.test_indices.begin(), d.test_indices.end());
  return d;
}

Dataset toy_dataset() {
  Dataset d;
  d.samples = {{-1.5 * pi, 2.0}, {-0.5 * pi, -2.0}, {0.5 * pi, 2.0},
               {1.5 * pi, -2.0}};
  d.train_indices = {0, 1, 2, 3};
  return d;
}

}  // namespace qsinn::experiment
