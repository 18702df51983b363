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

#ifndef QSINN_EXPERIMENT_DATASET_HPP
#define QSINN_EXPERIMENT_DATASET_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "qsinn/classical/network.hpp"

namespace qsinn::experiment {

using classical::Sample;

enum class TargetFunction {
  /// y = sum_{k=1..5} sin(kx).
  sine_sum,
  /// y = round(sum_{k=1..5} sin(kx)), integers in [-5, 5].
  rounded_sine_sum,
};

std::string to_string(TargetFunction target);
TargetFunction target_from_string(const std::string& name);
double evaluate_target(TargetFunction target, double x);

struct DatasetSpec {
  TargetFunction target = TargetFunction::sine_sum;
  double lo = -3.5 * 3.141592653589793;
  double hi = 3.5 * 3.141592653589793;
  int count = 200;
  double split_fraction = 0.8;
  /// Rescale x linearly from [lo, hi] to [-1, 1] after computing y.
  bool normalize = true;

  /// 200 points on [-7pi/2, 7pi/2], normalized.
  static DatasetSpec sinnn_default();
  /// 200 points on [-7pi, 7pi], rounded targets, not normalized.
  static DatasetSpec dsinnn_default();
};

/// Sample list plus a disjoint train/test split covering every index.
struct Dataset {
  std::vector<Sample> samples;
  std::vector<std::size_t> train_indices;
  std::vector<std::size_t> test_indices;

  std::vector<Sample> train() const;
  std::vector<Sample> test() const;
};

/// x i.i.d. uniform on [lo, hi) from CounterStream(seed, dataset stream);
/// the split shuffles indices with a separate stream and keeps
/// round(split_fraction * count) for training, both sides sorted.
/// Throws std::invalid_argument on count < 2, an empty interval, or a split
/// fraction outside (0, 1).
Dataset generate_dataset(const DatasetSpec& spec, std::uint64_t seed);

/// The four fixed pairs (-3pi/2, 2), (-pi/2, -2), (pi/2, 2), (3pi/2, -2);
/// every pair is a training pair.
Dataset toy_dataset();

}  // namespace qsinn::experiment

#endif  // QSINN_EXPERIMENT_DATASET_HPP
