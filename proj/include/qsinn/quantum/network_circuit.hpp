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


#ifndef QSINN_QUANTUM_NETWORK_CIRCUIT_HPP
#define QSINN_QUANTUM_NETWORK_CIRCUIT_HPP

#include <cstdint>
#include <vector>

#include "qsinn/classical/network.hpp"
#include "qsinn/quantum/blocks.hpp"
#include "qsinn/quantum/encoding.hpp"
#include "qsinn/sim/circuit.hpp"

namespace qsinn::quantum {

/// x as a double for the classical forward pass.
std::vector<classical::Sample> to_classical(
    const std::vector<QuantumSample>& data);

/// Single hidden layer of `hidden` D' neurons fed by scalar x, summed.
classical::NetworkConfig quantum_network(int hidden);

/// Smallest N' with 2^N' >= 2N when N is a power of two, else
/// ceil(log2(2N)) + 2. N = 0 gives 1.
int default_phase_bits(std::size_t num_pairs);

/// Register map, in order: phase | weights | input copies | sine ancillas |
/// sum | target | equality ancillas | all-equal ancilla.
struct QsinnLayout {
  InputFormat format;
  int hidden = 0;
  SineVariant variant = SineVariant::compact;
  PlusCircuitLayout plus;
  std::vector<int> phase;
  std::vector<int> weights;
  /// copies[j] = {sign, b_{m-1}, ..., b_0} for neuron j.
  std::vector<std::vector<int>> copies;
  std::vector<std::vector<int>> sine_ancillas;
  std::vector<int> sum;
  std::vector<int> target;
  std::vector<int> equal;
  int all_equal = -1;
  int num_qubits = 0;

  /// Throws std::invalid_argument when hidden < 1, phase_bits < 1, the
  /// register exceeds 62 qubits, or the scale exceeds 4 (the sine block
  /// matches D' only up to n = 4).
  static QsinnLayout build(const std::vector<QuantumSample>& data, int hidden,
                           int phase_bits,
                           SineVariant variant = SineVariant::compact);

  /// Basis index with the weight register set to `weight_bits` (weight 0
  /// most significant) and every other qubit 0.
  std::uint64_t weight_basis(std::uint64_t weight_bits) const;
};

/// Encodes x into every copy and y into the target, flips copy signs on
/// negative weights, applies the sine blocks and the plus block.
sim::Circuit feed_forward(const QsinnLayout& layout, const QuantumSample& s);

/// FF^-1 * checker * FF with phase pi / num_pairs.
sim::Circuit pair_unitary(const QsinnLayout& layout, const QuantumSample& s,
                          std::size_t num_pairs);

/// U = U_N ... U_1.
sim::Circuit build_U(const QsinnLayout& layout,
                     const std::vector<QuantumSample>& data);

/// Runs U on every weight basis state with the sparse backend and returns
/// arg of each eigenvalue in (-pi, pi]. Throws std::runtime_error if a
/// branch is not an eigenstate with clean ancillas within 1e-10.
std::vector<double> extract_eigenphases(const QsinnLayout& layout,
                                        const sim::Circuit& u);

}  // namespace qsinn::quantum

#endif  // QSINN_QUANTUM_NETWORK_CIRCUIT_HPP
