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

#ifndef QSINN_SIM_GATE_HPP
#define QSINN_SIM_GATE_HPP

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace qsinn::sim {

using Complex = std::complex<double>;
using Index = std::uint64_t;

/// Largest register any backend addresses with a 64-bit basis index.
inline constexpr int kMaxAddressableQubits = 62;

/// Bit ordering used everywhere: qubit 0 is the most significant bit of the
/// basis index, so qubit q of an n-qubit register sits at bit (n - 1 - q).
constexpr int bit_position(int qubit, int num_qubits) {
  return num_qubits - 1 - qubit;
}

constexpr Index qubit_mask(int qubit, int num_qubits) {
  return Index{1} << bit_position(qubit, num_qubits);
}

enum class GateKind { hadamard, pauli_x, phase, permutation, custom_unitary };

std::string to_string(GateKind kind);

/// One (multi-)controlled operation. Controls fire on |1>.
///
/// `permutation` and `custom_unitary` act on the ordered target list as a
/// sub-register whose first target is the most significant bit, matching the
/// global ordering. A permutation table maps sub-register basis index i to
/// table[i]; a custom matrix is 2^t x 2^t in that same basis.
struct GateOp {
  GateKind kind = GateKind::pauli_x;
  std::vector<int> targets;
  std::vector<int> controls;
  double angle = 0.0;
  std::vector<Index> table;
  Eigen::MatrixXcd matrix;

  static GateOp h(int target);
  static GateOp x(int target, std::vector<int> controls = {});
  /// diag(1, e^{i angle}) on the target.
  static GateOp phase(int target, double angle, std::vector<int> controls = {});
  static GateOp permutation(std::vector<int> targets, std::vector<Index> table,
                            std::vector<int> controls = {});
  static GateOp unitary(std::vector<int> targets, Eigen::MatrixXcd matrix,
                        std::vector<int> controls = {});
  static GateOp swap(int a, int b);

  GateOp inverse() const;
  GateOp with_control(int control) const;

  /// True when a custom matrix has no off-diagonal entries.
  bool is_diagonal() const;
};

/// Throws std::invalid_argument when indices are out of range, targets and
/// controls overlap, a table is not a bijection, or a matrix is not unitary
/// within `tolerance`.
void validate(const GateOp& op, int num_qubits, double tolerance = 1e-12);

}  // namespace qsinn::sim

#endif  // QSINN_SIM_GATE_HPP
