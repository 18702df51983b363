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

#include "qsinn/classical/network.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "qsinn/classical/rng.hpp"

namespace qsinn::classical {

namespace {

struct Trace {
  // inputs[l] feeds hidden layer l; pre[l] is its sine argument.
  std::vector<std::vector<double>> inputs;
  std::vector<std::vector<double>> pre;
  double output = 0.0;
};

double effective_weight(const NetworkConfig& config, double w) {
  return config.mode == Mode::discrete ? discretize(w) : w;
}

double activate(const NetworkConfig& config, double arg) {
  const double s = std::sin(arg);
  if (config.mode == Mode::continuous) {
    return s;
  }
  return config.activation == Activation::binary ? discretize(s)
                                                 : ternary_discretize(s);
}

void check_weights(const NetworkConfig& config, const WeightSpace& weights) {
  if (weights.size() != config.num_weights()) {
    throw std::invalid_argument(
        "weight vector has " + std::to_string(weights.size()) +
        " entries but the network needs " +
        std::to_string(config.num_weights()));
  }
}

Trace forward_trace(const NetworkConfig& config, const WeightSpace& weights,
                    double x) {
  check_weights(config, weights);
  if (config.layer_widths.front() != 1) {
    throw std::invalid_argument("networks take a scalar input");
  }
  Trace t;
  std::vector<double> z{x};
  for (int l = 0; l < config.num_hidden_layers(); ++l) {
    const int fan_in = config.layer_widths[l];
    const int fan_out = config.layer_widths[l + 1];
    const std::size_t base = config.layer_offset(l);
    const double scale = config.layer_scale(l);
    std::vector<double> pre(fan_out, 0.0);
    std::vector<double> out(fan_out, 0.0);
    for (int j = 0; j < fan_out; ++j) {
      double acc = 0.0;
      for (int i = 0; i < fan_in; ++i) {
        acc += effective_weight(config, weights.values[base + i * fan_out + j]) *
               z[i];
      }
      pre[j] = scale * acc + config.sine_offset;
      out[j] = activate(config, pre[j]);
    }
    t.inputs.push_back(std::move(z));
    t.pre.push_back(std::move(pre));
    z = std::move(out);
  }
  for (double v : z) {
    t.output += v;
  }
  return t;
}

}  // namespace

int discretize(double x) {
  if (!std::isfinite(x)) {
    throw std::invalid_argument("discretize needs a finite input");
  }
  return x < 0.0 ? -1 : 1;
}

int ternary_discretize(double a) {
  if (!std::isfinite(a)) {
    throw std::invalid_argument("ternary_discretize needs a finite input");
  }
  if (a < -0.1) {
    return -1;
  }
  if (a > 0.1) {
    return 1;
  }
  return 0;
}

std::vector<int> decreasing_widths(int first_width, int num_hidden_layers) {
  if (first_width < 1 || num_hidden_layers < 1) {
    throw std::invalid_argument("architecture needs positive width and depth");
  }
  std::vector<int> widths{first_width};
  for (int l = 1; l < num_hidden_layers; ++l) {
    const int prev = widths.back();
    widths.push_back(prev > 5 ? prev - 1 : prev);
  }
  return widths;
}

double discrete_layer_scale(int fan_in) {
  if (fan_in < 1) {
    throw std::invalid_argument("fan-in must be positive");
  }
  const int m = std::bit_width(static_cast<unsigned>(fan_in)) - 1;
  return std::min(std::numbers::pi / 2.0, std::ldexp(std::numbers::pi, 1 - m));
}

NetworkConfig NetworkConfig::toy_sinnn() {
  NetworkConfig c;
  c.layer_widths = {1, 2};
  c.first_layer_scale = 1.0;
  c.mode = Mode::continuous;
  return c;
}

NetworkConfig NetworkConfig::toy_dsinnn() {
  NetworkConfig c;
  c.layer_widths = {1, 2};
  c.first_layer_scale = 1.0;
  c.mode = Mode::discrete;
  c.activation = Activation::binary;
  return c;
}

NetworkConfig NetworkConfig::sinnn(int first_width, int num_hidden_layers,
                                   double first_layer_scale) {
  NetworkConfig c;
  c.layer_widths = {1};
  for (int w : decreasing_widths(first_width, num_hidden_layers)) {
    c.layer_widths.push_back(w);
  }
  c.first_layer_scale = first_layer_scale;
  c.deep_layer_scales.assign(num_hidden_layers - 1, 1.0);
  c.mode = Mode::continuous;
  return c;
}

NetworkConfig NetworkConfig::dsinnn(int first_width, int num_hidden_layers,
                                    double first_layer_scale,
                                    double sine_offset) {
  NetworkConfig c;
  c.layer_widths = {1};
  for (int w : decreasing_widths(first_width, num_hidden_layers)) {
    c.layer_widths.push_back(w);
  }
  c.first_layer_scale = first_layer_scale;
  for (int l = 1; l < num_hidden_layers; ++l) {
    c.deep_layer_scales.push_back(discrete_layer_scale(c.layer_widths[l]));
  }
  c.mode = Mode::discrete;
  c.activation = Activation::ternary;
  c.sine_offset = sine_offset;
  return c;
}

NetworkConfig NetworkConfig::single_layer_dsinnn(int hidden) {
  NetworkConfig c;
  c.layer_widths = {1, hidden};
  c.first_layer_scale = 1.0;
  c.mode = Mode::discrete;
  c.activation = Activation::ternary;
  return c;
}

std::size_t NetworkConfig::num_weights() const {
  return layer_offset(num_hidden_layers());
}

std::size_t NetworkConfig::layer_offset(int layer) const {
  std::size_t offset = 0;
  for (int l = 0; l < layer; ++l) {
    offset += static_cast<std::size_t>(layer_widths[l]) * layer_widths[l + 1];
  }
  return offset;
}

double NetworkConfig::layer_scale(int layer) const {
  return layer == 0 ? first_layer_scale : deep_layer_scales.at(layer - 1);
}

void NetworkConfig::validate() const {
  if (layer_widths.size() < 2) {
    throw std::invalid_argument("network needs an input and a hidden layer");
  }
  for (int w : layer_widths) {
    if (w < 1) {
      throw std::invalid_argument("layer widths must be >= 1");
    }
  }
  if (static_cast<int>(deep_layer_scales.size()) != num_hidden_layers() - 1) {
    throw std::invalid_argument("one deep-layer scale per hidden layer after "
                                "the first");
  }
  if (!std::isfinite(first_layer_scale) || !std::isfinite(sine_offset)) {
    throw std::invalid_argument("scales and offset must be finite");
  }
  if (mode == Mode::discrete) {
    for (int l = 1; l < num_hidden_layers(); ++l) {
      if (deep_layer_scales[l - 1] != discrete_layer_scale(layer_widths[l])) {
        throw std::invalid_argument(
            "discrete deep-layer scale must follow the fan-in rule");
      }
    }
  }
}

WeightSpace WeightSpace::from_sign_bits(const std::string& bits) {
  WeightSpace w;
  for (char c : bits) {
    if (c != '0' && c != '1') {
      throw std::invalid_argument("sign bits must be 0 or 1");
    }
    w.values.push_back(c == '1' ? -1.0 : 1.0);
  }
  return w;
}

WeightSpace WeightSpace::from_sign_index(std::uint64_t index,
                                         std::size_t count) {
  WeightSpace w;
  for (std::size_t q = 0; q < count; ++q) {
    const bool negative = (index >> (count - 1 - q)) & 1;
    w.values.push_back(negative ? -1.0 : 1.0);
  }
  return w;
}

double sinnn_forward(const NetworkConfig& config, const WeightSpace& weights,
                     double x) {
  if (config.mode != Mode::continuous) {
    throw std::invalid_argument("sinnn_forward needs a continuous network");
  }
  return forward_trace(config, weights, x).output;
}

long dsinnn_forward(const NetworkConfig& config, const WeightSpace& weights,
                    double x) {
  if (config.mode != Mode::discrete) {
    throw std::invalid_argument("dsinnn_forward needs a discrete network");
  }
  return std::lround(forward_trace(config, weights, x).output);
}

double predict(const NetworkConfig& config, const WeightSpace& weights,
               double x) {
  return forward_trace(config, weights, x).output;
}

double mse_loss(std::span<const double> predictions,
                std::span<const double> targets) {
  if (predictions.empty() || predictions.size() != targets.size()) {
    throw std::invalid_argument("mse_loss needs equal nonempty inputs");
  }
  double sum = 0.0;
  for (std::size_t i = 0; i < predictions.size(); ++i) {
    const double d = predictions[i] - targets[i];
    sum += d * d;
  }
  return sum / static_cast<double>(predictions.size());
}

LossGradient loss_and_ste_gradient(const NetworkConfig& config,
                                   const WeightSpace& weights,
                                   std::span<const Sample> batch) {
  if (batch.empty()) {
    throw std::invalid_argument("gradient needs a nonempty batch");
  }
  LossGradient result{0.0, std::vector<double>(config.num_weights(), 0.0)};
  const double inv_n = 1.0 / static_cast<double>(batch.size());
  for (const Sample& s : batch) {
    const Trace t = forward_trace(config, weights, s.x);
    const double residual = t.output - s.y;
    result.loss += residual * residual * inv_n;

    // d loss / d z for the last hidden layer's outputs.
    std::vector<double> grad_out(config.layer_widths.back(),
                                 2.0 * residual * inv_n);
    for (int l = config.num_hidden_layers() - 1; l >= 0; --l) {
      const int fan_in = config.layer_widths[l];
      const int fan_out = config.layer_widths[l + 1];
      const std::size_t base = config.layer_offset(l);
      const double scale = config.layer_scale(l);
      std::vector<double> grad_in(fan_in, 0.0);
      for (int j = 0; j < fan_out; ++j) {
        const double g_pre = grad_out[j] * std::cos(t.pre[l][j]);
        for (int i = 0; i < fan_in; ++i) {
          const std::size_t k = base + i * fan_out + j;
          result.gradient[k] += g_pre * scale * t.inputs[l][i];
          grad_in[i] += g_pre * scale * effective_weight(config, weights.values[k]);
        }
      }
      grad_out = std::move(grad_in);
    }
  }
  return result;
}

std::vector<double> ste_gradient(const NetworkConfig& config,
                                 const WeightSpace& weights,
                                 std::span<const Sample> batch) {
  return loss_and_ste_gradient(config, weights, batch).gradient;
}

double batch_loss(const NetworkConfig& config, const WeightSpace& weights,
                  std::span<const Sample> batch) {
  if (batch.empty()) {
    throw std::invalid_argument("loss needs a nonempty batch");
  }
  double sum = 0.0;
  for (const Sample& s : batch) {
    const double d = forward_trace(config, weights, s.x).output - s.y;
    sum += d * d;
  }
  return sum / static_cast<double>(batch.size());
}

WeightSpace init_siren(const NetworkConfig& config, std::uint64_t seed) {
  config.validate();
  WeightSpace w;
  w.values.reserve(config.num_weights());
  for (int l = 0; l < config.num_hidden_layers(); ++l) {
    const int fan_in = config.layer_widths[l];
    const double bound = l == 0 ? 1.0 : std::sqrt(6.0 / fan_in);
    CounterStream stream(seed, static_cast<std::uint64_t>(l));
    const std::size_t count =
        static_cast<std::size_t>(fan_in) * config.layer_widths[l + 1];
    for (std::size_t k = 0; k < count; ++k) {
      w.values.push_back(stream.uniform(-bound, bound));
    }
  }
  return w;
}

WeightSpace init_uniform(const NetworkConfig& config, std::uint64_t seed,
                         double lo, double hi) {
  config.validate();
  CounterStream stream(seed, 0);
  WeightSpace w;
  for (std::size_t k = 0; k < config.num_weights(); ++k) {
    w.values.push_back(stream.uniform(lo, hi));
  }
  return w;
}

}  // namespace qsinn::classical
