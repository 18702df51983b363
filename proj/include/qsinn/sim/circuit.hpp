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

#ifndef QSINN_SIM_CIRCUIT_HPP
#define QSINN_SIM_CIRCUIT_HPP

#include <cstddef>
#include <vector>

#include "qsinn/sim/gate.hpp"

namespace qsinn::sim {

/// An ordered gate list over a fixed register width. Circuits are plain
/// values; building one never touches a state.
class Circuit {
 public:
  Circuit() = default;
  explicit Circuit(int num_qubits) : num_qubits_(num_qubits) {}

  int num_qubits() const { return num_qubits_; }
  const std::vector<GateOp>& ops() const { return ops_; }
  std::size_t size() const { return ops_.size(); }
  bool empty() const { return ops_.empty(); }

  /// Validates the gate against this register before appending it.
  Circuit& add(GateOp op);
  Circuit& append(const Circuit& other);

  Circuit inverse() const;
  /// Every gate gains `control`; the result is the controlled circuit.
  Circuit controlled(int control) const;

 private:
  int num_qubits_ = 0;
  std::vector<GateOp> ops_;
};

/// Applies every gate of `circuit` in order. Works for any state type that
/// exposes `num_qubits()` and `apply(const GateOp&)`.
template <typename State>
void run(const Circuit& circuit, State& state) {
  for (const GateOp& op : circuit.ops()) {
    state.apply(op);
  }
}

/// Applies U^power to `state` conditioned on `control` being |1>.
/// Throws std::invalid_argument when power < 1 or `control` is touched by U.
template <typename State>
void controlled_unitary_power(State& state, const Circuit& unitary, int power,
                              int control);

}  // namespace qsinn::sim

#include "qsinn/sim/circuit_impl.hpp"

#endif  // QSINN_SIM_CIRCUIT_HPP
