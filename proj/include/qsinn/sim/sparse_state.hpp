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

#ifndef QSINN_SIM_SPARSE_STATE_HPP
#define QSINN_SIM_SPARSE_STATE_HPP

#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "qsinn/sim/gate.hpp"

namespace qsinn::sim {

/// Exact statevector that stores only nonzero amplitudes.
///
/// Reversible-arithmetic circuits keep the support size equal to the number
/// of superposed branches, so registers far wider than the dense limit stay
/// cheap as long as only a few qubits are ever put in superposition.
class SparseState {
 public:
  struct Entry {
    Index index;
    Complex amplitude;
  };

  /// |0...0>.
  explicit SparseState(int num_qubits);
  /// Single basis state with amplitude 1.
  SparseState(int num_qubits, Index basis_index);

  int num_qubits() const { return num_qubits_; }
  std::span<const Entry> entries() const { return entries_; }
  std::size_t support_size() const { return entries_.size(); }
  Complex amplitude(Index index) const;
  double norm() const;

  void apply(const GateOp& op);

  /// Amplitudes below this magnitude are dropped after interfering gates.
  static constexpr double kPruneTolerance = 1e-14;

 private:
  int num_qubits_;
  std::vector<Entry> entries_;
};

SparseState sparse_basis(int num_qubits, std::string_view bitstring);

}  // namespace qsinn::sim

#endif  // QSINN_SIM_SPARSE_STATE_HPP
