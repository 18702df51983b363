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

#ifndef QSINN_EXPERIMENT_TRAINING_HPP
#define QSINN_EXPERIMENT_TRAINING_HPP

#include <span>
#include <vector>

#include "qsinn/classical/network.hpp"

namespace qsinn::experiment {

struct TrainOptions {
  double learning_rate = 0.002;
  int epochs = 300;
};

struct TrainResult {
  classical::WeightSpace weights;
  /// Training loss before each update plus the loss after the last one.
  std::vector<double> loss_history;
  double final_loss = 0.0;
  /// Set when a loss or gradient became non-finite; training stops there.
  bool diverged = false;
};

/// Full-batch gradient descent with the straight-through gradient.
/// Throws std::invalid_argument on an empty batch, a non-positive or
/// non-finite learning rate, or negative epochs.
TrainResult train_gd(const classical::NetworkConfig& config,
                     classical::WeightSpace initial,
                     std::span<const classical::Sample> batch,
                     const TrainOptions& options);

struct BadMinimumRule {
  double factor = 2.0;
  double margin = 1e-4;
};

/// True when loss > factor * global_min and loss > global_min + margin.
/// A non-finite loss is bad. Throws on a negative or non-finite global_min.
bool classify_bad_minimum(double loss, double global_min,
                          const BadMinimumRule& rule = {});

}  // namespace qsinn::experiment

#endif  // QSINN_EXPERIMENT_TRAINING_HPP
