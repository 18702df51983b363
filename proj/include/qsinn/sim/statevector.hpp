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

#ifndef QSINN_SIM_STATEVECTOR_HPP
#define QSINN_SIM_STATEVECTOR_HPP

#include <span>
#include <string_view>
#include <vector>

#include "qsinn/sim/gate.hpp"

namespace qsinn::sim {

/// Dense limit; 2^26 amplitudes is 1 GiB.
inline constexpr int kMaxDenseQubits = 26;

/// Exact dense statevector over `num_qubits` qubits. Gates are applied in
/// place by strided updates over amplitude groups; no operator matrix larger
/// than a gate's own target block is ever formed.
class StateVector {
 public:
  /// |0...0>.
  explicit StateVector(int num_qubits);

  int num_qubits() const { return num_qubits_; }
  Index dimension() const { return Index{1} << num_qubits_; }
  std::span<const Complex> amplitudes() const { return amplitudes_; }
  Complex amplitude(Index index) const { return amplitudes_.at(index); }
  double norm() const;

  /// Validates `op` against the register, then applies it.
  void apply(const GateOp& op);

 private:
  void apply_single(const GateOp& op, Index control_mask);
  void apply_permutation(const GateOp& op, Index control_mask);
  void apply_matrix(const GateOp& op, Index control_mask);

  int num_qubits_;
  std::vector<Complex> amplitudes_;
};

/// Basis state named by a bitstring; character q is qubit q.
/// Throws std::invalid_argument on a length mismatch or a non-binary digit.
StateVector init_basis(int num_qubits, std::string_view bitstring);

/// Helpers shared by both backends for gathering target sub-indices.
Index control_mask_of(const GateOp& op, int num_qubits);
std::vector<Index> target_masks_of(const GateOp& op, int num_qubits);
Index extract_bits(Index index, std::span<const Index> masks);
Index deposit_bits(Index index, std::span<const Index> masks, Index value);

}  // namespace qsinn::sim

#endif  // QSINN_SIM_STATEVECTOR_HPP
