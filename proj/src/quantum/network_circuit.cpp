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


#include "qsinn/quantum/network_circuit.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <stdexcept>

#include "qsinn/sim/sparse_state.hpp"

namespace qsinn::quantum {

using sim::Circuit;
using sim::GateOp;
using sim::Index;

std::vector<classical::Sample> to_classical(
    const std::vector<QuantumSample>& data) {
  std::vector<classical::Sample> out;
  out.reserve(data.size());
  for (const auto& s : data) {
    out.push_back({s.x(), static_cast<double>(s.y)});
  }
  return out;
}

classical::NetworkConfig quantum_network(int hidden) {
  return classical::NetworkConfig::single_layer_dsinnn(hidden);
}

int default_phase_bits(std::size_t num_pairs) {
  if (num_pairs == 0) {
    return 1;
  }
  const std::size_t two_n = 2 * num_pairs;
  const int ceil_log = std::bit_width(two_n - 1);
  return std::has_single_bit(num_pairs) ? ceil_log : ceil_log + 2;
}

namespace {

constexpr int kMaxCircuitScale = 4;

std::vector<int> take(int& next, int count) {
  std::vector<int> out(count);
  for (int& q : out) {
    q = next++;
  }
  return out;
}

void x_encode(Circuit& c, const std::vector<int>& reg, Index code) {
  const int w = static_cast<int>(reg.size());
  for (int i = 0; i < w; ++i) {
    if ((code >> (w - 1 - i)) & 1) {
      c.add(GateOp::x(reg[i]));
    }
  }
}

}  // namespace

QsinnLayout QsinnLayout::build(const std::vector<QuantumSample>& data,
                               int hidden, int phase_bits,
                               SineVariant variant) {
  if (hidden < 1 || phase_bits < 1) {
    throw std::invalid_argument("layout needs hidden >= 1 and phase bits >= 1");
  }
  QsinnLayout l;
  l.format = input_format(data);
  if (l.format.n > kMaxCircuitScale) {
    throw std::invalid_argument("inputs need a scale above 4");
  }
  l.hidden = hidden;
  l.variant = variant;
  long max_y = 0;
  for (const auto& s : data) {
    max_y = std::max(max_y, std::labs(s.y));
  }
  l.plus = PlusCircuitLayout::for_fan_in(hidden, max_y);
  int next = 0;
  l.phase = take(next, phase_bits);
  l.weights = take(next, hidden);
  for (int j = 0; j < hidden; ++j) {
    l.copies.push_back(take(next, l.format.m + 1));
  }
  for (int j = 0; j < hidden; ++j) {
    l.sine_ancillas.push_back(
        take(next, sine_ancilla_count(variant, l.format.n)));
  }
  l.sum = take(next, l.plus.output_width());
  l.target = take(next, l.plus.output_width());
  l.equal = take(next, l.plus.output_width());
  l.all_equal = next++;
  l.num_qubits = next;
  if (l.num_qubits > sim::kMaxAddressableQubits) {
    throw std::invalid_argument("circuit needs more than 62 qubits");
  }
  return l;
}

std::uint64_t QsinnLayout::weight_basis(std::uint64_t weight_bits) const {
  Index index = 0;
  for (int j = 0; j < hidden; ++j) {
    if ((weight_bits >> (hidden - 1 - j)) & 1) {
      index |= sim::qubit_mask(weights[j], num_qubits);
    }
  }
  return index;
}

Circuit feed_forward(const QsinnLayout& l, const QuantumSample& s) {
  Circuit c(l.num_qubits);
  const Index x_code =
      encode_numerator(numerator_at(s, l.format.n), l.format.n, l.format.m)
          .index();
  for (const auto& copy : l.copies) {
    x_encode(c, copy, x_code);
  }
  x_encode(c, l.target, encode_signed(s.y, l.plus.magnitude_width));
  for (int j = 0; j < l.hidden; ++j) {
    c.add(GateOp::x(l.copies[j][0], {l.weights[j]}));
  }
  std::vector<PairQubits> pairs;
  for (int j = 0; j < l.hidden; ++j) {
    pairs.push_back(append_sine(c, l.copies[j], l.format.n, l.variant,
                                l.sine_ancillas[j]));
  }
  append_plus(c, l.plus, pairs, l.sum);
  return c;
}

Circuit pair_unitary(const QsinnLayout& l, const QuantumSample& s,
                     std::size_t num_pairs) {
  const Circuit ff = feed_forward(l, s);
  Circuit c(l.num_qubits);
  c.append(ff);
  CheckerQubits q;
  q.predicted = l.sum;
  q.target = l.target;
  q.equal = l.equal;
  q.all_equal = l.all_equal;
  q.phase_qubit = l.weights[0];
  append_checker(c, q, std::numbers::pi / static_cast<double>(num_pairs));
  c.append(ff.inverse());
  return c;
}

Circuit build_U(const QsinnLayout& l, const std::vector<QuantumSample>& data) {
  Circuit u(l.num_qubits);
  for (const auto& s : data) {
    u.append(pair_unitary(l, s, data.size()));
  }
  return u;
}

std::vector<double> extract_eigenphases(const QsinnLayout& l,
                                        const Circuit& u) {
  std::vector<double> phases;
  const Index branches = Index{1} << l.hidden;
  for (Index w = 0; w < branches; ++w) {
    const Index start = l.weight_basis(w);
    sim::SparseState state(l.num_qubits, start);
    sim::run(u, state);
    const auto amp = state.amplitude(start);
    if (std::abs(std::abs(amp) - 1.0) > 1e-10) {
      throw std::runtime_error("weight branch is not an eigenstate of U");
    }
    phases.push_back(std::arg(amp));
  }
  return phases;
}

}  // namespace qsinn::quantum
