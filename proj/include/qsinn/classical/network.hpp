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

#ifndef QSINN_CLASSICAL_NETWORK_HPP
#define QSINN_CLASSICAL_NETWORK_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace qsinn::classical {

enum class Mode { continuous, discrete };

/// Hidden-neuron output discretizer in discrete mode: D (+-1) or D' (+-1/0).
enum class Activation { binary, ternary };

/// -1 if x < 0, +1 otherwise (D(0) = +1). Throws on non-finite input.
int discretize(double x);

/// -1 below -0.1, +1 above 0.1, 0 in between. Throws on non-finite input.
int ternary_discretize(double a);

/// Layer widths drop by one per hidden layer until they reach 5, then stay
/// at 5. A first width below 5 is kept constant.
std::vector<int> decreasing_widths(int first_width, int num_hidden_layers);

/// min(pi/2, pi/2^(m-1)) with m = floor(log2(fan_in)).
double discrete_layer_scale(int fan_in);

/// Sine network with a scalar-sum output.
///
/// layer_widths = {input width, hidden width 1, ..., hidden width L}. Hidden
/// layer l computes sin(scale_l * sum_i w_ij z_i + sine_offset); in discrete
/// mode the weight is replaced by D(w) and the sine by D or D' of it. The
/// first hidden layer uses first_layer_scale, deeper ones deep_layer_scales.
struct NetworkConfig {
  std::vector<int> layer_widths;
  double first_layer_scale = 1.0;
  std::vector<double> deep_layer_scales;
  Mode mode = Mode::continuous;
  Activation activation = Activation::ternary;
  double sine_offset = 0.0;

  /// sin(w1 x) + sin(w2 x).
  static NetworkConfig toy_sinnn();
  /// D(sin(D(w1) x)) + D(sin(D(w2) x)).
  static NetworkConfig toy_dsinnn();
  /// Decreasing continuous network, deep scales 1.
  static NetworkConfig sinnn(int first_width, int num_hidden_layers,
                             double first_layer_scale = 20.0);
  /// Decreasing discrete network with D' outputs and the fan-in scale rule.
  static NetworkConfig dsinnn(int first_width, int num_hidden_layers,
                              double first_layer_scale = 1.0,
                              double sine_offset = 0.1);
  /// Single hidden layer of `hidden` neurons fed by scalar x, D' outputs,
  /// no offset; the shape the quantum trainer realizes.
  static NetworkConfig single_layer_dsinnn(int hidden);

  int num_hidden_layers() const {
    return static_cast<int>(layer_widths.size()) - 1;
  }
  std::size_t num_weights() const;
  /// Start of hidden layer l's weights in the flat vector.
  std::size_t layer_offset(int layer) const;
  double layer_scale(int layer) const;

  /// Throws std::invalid_argument on any broken invariant.
  void validate() const;
};

/// Flat weight vector; hidden layer l stores w_ij at
/// layer_offset(l) + i * fan_out + j. In discrete mode the values are the
/// continuous shadow weights whose signs define the network.
struct WeightSpace {
  std::vector<double> values;

  std::size_t size() const { return values.size(); }

  /// Bit q set means weight q is negative (D(w) = -1); bit 0 of the string
  /// is weight 0, written first.
  static WeightSpace from_sign_bits(const std::string& bits);
  static WeightSpace from_sign_index(std::uint64_t index, std::size_t count);
};

struct Sample {
  double x;
  double y;
};

double sinnn_forward(const NetworkConfig& config, const WeightSpace& weights,
                     double x);
long dsinnn_forward(const NetworkConfig& config, const WeightSpace& weights,
                    double x);
/// Mode-agnostic forward pass.
double predict(const NetworkConfig& config, const WeightSpace& weights,
               double x);

/// Mean of squared differences. Throws on empty or unequal inputs.
double mse_loss(std::span<const double> predictions,
                std::span<const double> targets);

struct LossGradient {
  double loss;
  std::vector<double> gradient;
};

/// MSE and its gradient over the batch. Every discretizer acts in the
/// forward pass and is replaced by the identity in the backward pass.
LossGradient loss_and_ste_gradient(const NetworkConfig& config,
                                   const WeightSpace& weights,
                                   std::span<const Sample> batch);

std::vector<double> ste_gradient(const NetworkConfig& config,
                                 const WeightSpace& weights,
                                 std::span<const Sample> batch);

double batch_loss(const NetworkConfig& config, const WeightSpace& weights,
                  std::span<const Sample> batch);

/// First layer U(-1, 1) (the forward pass applies first_layer_scale), deeper
/// layers U(-sqrt(6/n), sqrt(6/n)) with n the fan-in. Layer l draws from
/// CounterStream(seed, l).
WeightSpace init_siren(const NetworkConfig& config, std::uint64_t seed);

/// Every weight U(lo, hi) from CounterStream(seed, 0).
WeightSpace init_uniform(const NetworkConfig& config, std::uint64_t seed,
                         double lo, double hi);

}  // namespace qsinn::classical

#endif  // QSINN_CLASSICAL_NETWORK_HPP
