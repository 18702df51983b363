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

#include "qsinn/sim/circuit.hpp"

#include <stdexcept>
#include <string>

namespace qsinn::sim {

Circuit& Circuit::add(GateOp op) {
  validate(op, num_qubits_);
  ops_.push_back(std::move(op));
  return *this;
}

Circuit& Circuit::append(const Circuit& other) {
  if (other.num_qubits_ != num_qubits_) {
    throw std::invalid_argument("cannot append a circuit over " +
                                std::to_string(other.num_qubits_) +
                                " qubits to one over " +
                                std::to_string(num_qubits_));
  }
  ops_.insert(ops_.end(), other.ops_.begin(), other.ops_.end());
  return *this;
}

Circuit Circuit::inverse() const {
  Circuit inv(num_qubits_);
  inv.ops_.reserve(ops_.size());
  for (auto it = ops_.rbegin(); it != ops_.rend(); ++it) {
    inv.ops_.push_back(it->inverse());
  }
  return inv;
}

Circuit Circuit::controlled(int control) const {
  Circuit out(num_qubits_);
  for (const GateOp& op : ops_) {
    out.add(op.with_control(control));
  }
  return out;
}

}  // namespace qsinn::sim
