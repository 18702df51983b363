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

#include "qsinn/experiment/training.hpp"

#include <cmath>
#include <stdexcept>

namespace qsinn::experiment {

TrainResult train_gd(const classical::NetworkConfig& config,
                     classical::WeightSpace initial,
                     std::span<const classical::Sample> batch,
                     const TrainOptions& options) {
  if (batch.empty()) {
    throw std::invalid_argument("training batch is empty");
  }
  if (!(options.learning_rate > 0.0) || !std::isfinite(options.learning_rate)) {
    throw std::invalid_argument("learning rate must be positive and finite");
  }
  if (options.epochs < 0) {
    throw std::invalid_argument("epochs must be non-negative");
  }
  config.validate();
  TrainResult result;
  result.weights = std::move(initial);
  result.loss_history.reserve(options.epochs + 1);
  for (int epoch = 0; epoch < options.epochs; ++epoch) {
    classical::LossGradient lg;
    try {
      lg = classical::loss_and_ste_gradient(config, result.weights, batch);
    } catch (const std::invalid_argument&) {
      // Non-finite pre-activations in discrete mode.
      result.diverged = true;
      break;
    }
    result.loss_history.push_back(lg.loss);
    if (!std::isfinite(lg.loss)) {
      result.diverged = true;
      break;
    }
    for (std::size_t k = 0; k < lg.gradient.size(); ++k) {
      result.weights.values[k] -= options.learning_rate * lg.gradient[k];
    }
  }
  if (!result.diverged) {
    try {
      result.final_loss = classical::batch_loss(config, result.weights, batch);
    } catch (const std::invalid_argument&) {
      result.final_loss = NAN;
    }
    result.loss_history.push_back(result.final_loss);
    result.diverged = !std::isfinite(result.final_loss);
  } else {
    result.final_loss =
        result.loss_history.empty() ? NAN : result.loss_history.back();
    if (std::isfinite(result.final_loss)) {
      result.final_loss = NAN;
    }
  }
  return result;
}

bool classify_bad_minimum(double loss, double global_min,
                          const BadMinimumRule& rule) {
  if (!std::isfinite(global_min) || global_min < 0.0) {
    throw std::invalid_argument("global minimum must be finite and >= 0");
  }
  if (!std::isfinite(loss)) {
    return true;
  }
  return loss > rule.factor * global_min && loss > global_min + rule.margin;
}

}  // namespace qsinn::experiment
