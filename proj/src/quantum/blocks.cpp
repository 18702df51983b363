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


#include "qsinn/quantum/blocks.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <stdexcept>

namespace qsinn::quantum {

using sim::Circuit;
using sim::Complex;
using sim::GateOp;
using sim::Index;

int decode_ternary(int alpha_sign, int alpha_value) {
  if (alpha_value == 0) {
    return 0;
  }
  return alpha_sign ? -1 : 1;
}

SineOutput sine_bits(const FixedPointEncoding& e) {
  SineOutput out;
  const int b_n = e.n < e.m ? e.magnitude[e.n] : 0;
  out.alpha_sign = e.sign ^ b_n;
  for (int i = 0; i < e.n && i < e.m; ++i) {
    out.alpha_value |= e.magnitude[i];
  }
  const unsigned long mag = static_cast<unsigned long>(std::labs(e.k));
  out.q = static_cast<long>(mag >> e.n);
  const unsigned long rem = mag & ((1UL << e.n) - 1);
  out.r = std::ldexp(static_cast<double>(rem) * std::numbers::pi, -e.n);
  return out;
}

int sine_ancilla_count(SineVariant variant, int n) {
  if (variant == SineVariant::ancilla) {
    return 2;
  }
  return n >= 2 ? 1 : 0;
}

namespace {

// Magnitude bit b_i of a register {sign, b_{m-1}, ..., b_0}.
int magnitude_qubit(std::span<const int> input, int i) {
  const int m = static_cast<int>(input.size()) - 1;
  return input[1 + (m - 1 - i)];
}

void check_sine_args(std::span<const int> input, int n, SineVariant variant,
                     std::span<const int> ancillas) {
  const int m = static_cast<int>(input.size()) - 1;
  if (n < 1 || m < n) {
    throw std::invalid_argument("sine block needs 1 <= n <= m");
  }
  if (static_cast<int>(ancillas.size()) != sine_ancilla_count(variant, n)) {
    throw std::invalid_argument("wrong number of sine ancillas");
  }
}

}  // namespace

PairQubits append_sine(Circuit& circuit, std::span<const int> input, int n,
                       SineVariant variant, std::span<const int> ancillas) {
  check_sine_args(input, n, variant, ancillas);
  const int m = static_cast<int>(input.size()) - 1;
  if (variant == SineVariant::ancilla) {
    // Truth table over {input..., anc_sign, anc_value}.
    std::vector<int> targets(input.begin(), input.end());
    targets.push_back(ancillas[0]);
    targets.push_back(ancillas[1]);
    const Index size = Index{1} << targets.size();
    std::vector<Index> table(size);
    for (Index s = 0; s < size; ++s) {
      const Index reg = s >> 2;
      const Index mag = reg & ((Index{1} << m) - 1);
      const int sign = static_cast<int>(reg >> m);
      const int b_n = n < m ? static_cast<int>((mag >> n) & 1) : 0;
      const int a_sign = sign ^ b_n;
      const int a_value = (mag & ((Index{1} << n) - 1)) != 0 ? 1 : 0;
      table[s] = s ^ static_cast<Index>((a_sign << 1) | a_value);
    }
    circuit.add(GateOp::permutation(std::move(targets), std::move(table)));
    return {ancillas[0], ancillas[1]};
  }

  if (n < m) {
    circuit.add(GateOp::x(input[0], {magnitude_qubit(input, n)}));
  }
  if (n == 1) {
    return {input[0], magnitude_qubit(input, 0)};
  }
  std::vector<int> targets;
  for (int i = n - 1; i >= 0; --i) {
    targets.push_back(magnitude_qubit(input, i));
  }
  targets.push_back(ancillas[0]);
  const Index size = Index{1} << targets.size();
  std::vector<Index> table(size);
  for (Index s = 0; s < size; ++s) {
    table[s] = (s >> 1) != 0 ? s ^ 1 : s;
  }
  circuit.add(GateOp::permutation(std::move(targets), std::move(table)));
  return {input[0], ancillas[0]};
}

Circuit sine_circuit(int m, int n, SineVariant variant, PairQubits* pair) {
  const int anc = sine_ancilla_count(variant, n);
  Circuit c(m + 1 + anc);
  std::vector<int> input(m + 1);
  std::vector<int> ancillas(anc);
  for (int q = 0; q <= m; ++q) {
    input[q] = q;
  }
  for (int a = 0; a < anc; ++a) {
    ancillas[a] = m + 1 + a;
  }
  const PairQubits out = append_sine(c, input, n, variant, ancillas);
  if (pair != nullptr) {
    *pair = out;
  }
  return c;
}

PlusCircuitLayout PlusCircuitLayout::for_fan_in(int fan_in,
                                                long max_abs_target) {
  if (fan_in < 1) {
    throw std::invalid_argument("plus block needs fan_in >= 1");
  }
  PlusCircuitLayout l;
  l.fan_in = fan_in;
  l.count_width = std::bit_width(static_cast<unsigned>(fan_in));
  l.twos_width = l.count_width + 1;
  l.magnitude_width =
      std::max(l.count_width,
               quantum::magnitude_width(static_cast<unsigned long>(std::labs(max_abs_target))));
  return l;
}

PlusStages PlusCircuitLayout::evaluate(std::span<const int> pair_codes) const {
  if (static_cast<int>(pair_codes.size()) != fan_in) {
    throw std::invalid_argument("plus block input count mismatch");
  }
  PlusStages st;
  for (int code : pair_codes) {
    if (code == 1) {
      ++st.p;
    } else if (code == 3) {
      ++st.n_neg;
    } else if (code != 0 && code != 2) {
      throw std::invalid_argument("pair code must lie in [0, 3]");
    }
  }
  const unsigned mod = 1U << twos_width;
  st.n_neg_twos = (mod - st.n_neg) % mod;
  st.sum_twos = (st.p + st.n_neg_twos) % mod;
  st.sum = (st.sum_twos & (mod >> 1)) ? static_cast<long>(st.sum_twos) - mod
                                      : static_cast<long>(st.sum_twos);
  st.code = encode_signed(st.sum, magnitude_width);
  return st;
}

void append_plus(Circuit& circuit, const PlusCircuitLayout& layout,
                 std::span<const PairQubits> pairs,
                 std::span<const int> output) {
  if (static_cast<int>(pairs.size()) != layout.fan_in ||
      static_cast<int>(output.size()) != layout.output_width()) {
    throw std::invalid_argument("plus block register size mismatch");
  }
  if (layout.fan_in > 8) {
    throw std::invalid_argument("plus block supports at most 8 inputs");
  }
  std::vector<int> targets;
  for (const auto& [s, v] : pairs) {
    targets.push_back(s);
    targets.push_back(v);
  }
  targets.insert(targets.end(), output.begin(), output.end());
  const int out_w = layout.output_width();
  const Index size = Index{1} << targets.size();
  std::vector<Index> table(size);
  std::vector<int> codes(layout.fan_in);
  for (Index s = 0; s < size; ++s) {
    const Index in = s >> out_w;
    for (int j = 0; j < layout.fan_in; ++j) {
      codes[j] = static_cast<int>((in >> (2 * (layout.fan_in - 1 - j))) & 3);
    }
    table[s] = s ^ layout.evaluate(codes).code;
  }
  circuit.add(GateOp::permutation(std::move(targets), std::move(table)));
}

Circuit plus_circuit(const PlusCircuitLayout& layout) {
  Circuit c(2 * layout.fan_in + layout.output_width());
  std::vector<PairQubits> pairs;
  for (int j = 0; j < layout.fan_in; ++j) {
    pairs.emplace_back(2 * j, 2 * j + 1);
  }
  std::vector<int> output;
  for (int q = 0; q < layout.output_width(); ++q) {
    output.push_back(2 * layout.fan_in + q);
  }
  append_plus(c, layout, pairs, output);
  return c;
}

void append_checker(Circuit& circuit, const CheckerQubits& q, double angle) {
  const std::size_t w = q.predicted.size();
  if (q.target.size() != w || q.equal.size() != w || w == 0) {
    throw std::invalid_argument("checker register widths differ");
  }
  Circuit compute(circuit.num_qubits());
  for (std::size_t k = 0; k < w; ++k) {
    compute.add(GateOp::x(q.equal[k], {q.predicted[k]}));
    compute.add(GateOp::x(q.equal[k], {q.target[k]}));
    compute.add(GateOp::x(q.equal[k]));
  }
  compute.add(GateOp::x(q.all_equal, q.equal));
  circuit.append(compute);
  const Complex phase = std::polar(1.0, angle);
  circuit.add(GateOp::unitary({q.phase_qubit},
                              Eigen::MatrixXcd::Identity(2, 2) * phase,
                              {q.all_equal}));
  circuit.append(compute.inverse());
}

}  // namespace qsinn::quantum
