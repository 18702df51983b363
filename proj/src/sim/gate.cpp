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

#include "qsinn/sim/gate.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace qsinn::sim {

std::string to_string(GateKind kind) {
  switch (kind) {
    case GateKind::hadamard:
      return "hadamard";
    case GateKind::pauli_x:
      return "pauli_x";
    case GateKind::phase:
      return "phase";
    case GateKind::permutation:
      return "permutation";
    case GateKind::custom_unitary:
      return "custom_unitary";
  }
  return "unknown";
}

GateOp GateOp::h(int target) {
  GateOp op;
  op.kind = GateKind::hadamard;
  op.targets = {target};
  return op;
}

GateOp GateOp::x(int target, std::vector<int> controls) {
  GateOp op;
  op.kind = GateKind::pauli_x;
  op.targets = {target};
  op.controls = std::move(controls);
  return op;
}

GateOp GateOp::phase(int target, double angle, std::vector<int> controls) {
  GateOp op;
  op.kind = GateKind::phase;
  op.targets = {target};
  op.controls = std::move(controls);
  op.angle = angle;
  return op;
}

GateOp GateOp::permutation(std::vector<int> targets, std::vector<Index> table,
                           std::vector<int> controls) {
  GateOp op;
  op.kind = GateKind::permutation;
  op.targets = std::move(targets);
  op.table = std::move(table);
  op.controls = std::move(controls);
  return op;
}

GateOp GateOp::unitary(std::vector<int> targets, Eigen::MatrixXcd matrix,
                       std::vector<int> controls) {
  GateOp op;
  op.kind = GateKind::custom_unitary;
  op.targets = std::move(targets);
  op.matrix = std::move(matrix);
  op.controls = std::move(controls);
  return op;
}

GateOp GateOp::swap(int a, int b) {
  return permutation({a, b}, {0, 2, 1, 3});
}

GateOp GateOp::inverse() const {
  GateOp inv = *this;
  switch (kind) {
    case GateKind::hadamard:
    case GateKind::pauli_x:
      break;
    case GateKind::phase:
      inv.angle = -angle;
      break;
    case GateKind::permutation:
      for (Index i = 0; i < table.size(); ++i) {
        inv.table[table[i]] = i;
      }
      break;
    case GateKind::custom_unitary:
      inv.matrix = matrix.adjoint();
      break;
  }
  return inv;
}

GateOp GateOp::with_control(int control) const {
  GateOp op = *this;
  op.controls.push_back(control);
  return op;
}

bool GateOp::is_diagonal() const {
  if (kind == GateKind::phase) {
    return true;
  }
  if (kind != GateKind::custom_unitary) {
    return false;
  }
  for (Eigen::Index c = 0; c < matrix.cols(); ++c) {
    for (Eigen::Index r = 0; r < matrix.rows(); ++r) {
      if (r != c && matrix(r, c) != Complex{0.0, 0.0}) {
        return false;
      }
    }
  }
  return true;
}

void validate(const GateOp& op, int num_qubits, double tolerance) {
  if (op.targets.empty()) {
    throw std::invalid_argument("gate has no targets");
  }
  std::vector<int> all = op.targets;
  all.insert(all.end(), op.controls.begin(), op.controls.end());
  for (int q : all) {
    if (q < 0 || q >= num_qubits) {
      throw std::invalid_argument("qubit index " + std::to_string(q) +
                                  " out of range for " +
                                  std::to_string(num_qubits) + " qubits");
    }
  }
  std::sort(all.begin(), all.end());
  if (std::adjacent_find(all.begin(), all.end()) != all.end()) {
    throw std::invalid_argument("gate targets and controls must be distinct");
  }

  const std::size_t t = op.targets.size();
  switch (op.kind) {
    case GateKind::hadamard:
    case GateKind::pauli_x:
    case GateKind::phase:
      if (t != 1) {
        throw std::invalid_argument(to_string(op.kind) +
                                    " acts on exactly one target");
      }
      break;
    case GateKind::permutation: {
      if (t >= 32) {
        throw std::invalid_argument("permutation target list too wide");
      }
      const Index dim = Index{1} << t;
      if (op.table.size() != dim) {
        throw std::invalid_argument("permutation table size must be 2^targets");
      }
      std::vector<bool> seen(dim, false);
      for (Index v : op.table) {
        if (v >= dim || seen[v]) {
          throw std::invalid_argument("permutation table is not a bijection");
        }
        seen[v] = true;
      }
      break;
    }
    case GateKind::custom_unitary: {
      if (t >= 16) {
        throw std::invalid_argument("custom unitary target list too wide");
      }
      const auto dim = static_cast<Eigen::Index>(Index{1} << t);
      if (op.matrix.rows() != dim || op.matrix.cols() != dim) {
        throw std::invalid_argument("custom unitary must be 2^targets square");
      }
      const Eigen::MatrixXcd gram = op.matrix.adjoint() * op.matrix;
      const double err =
          (gram - Eigen::MatrixXcd::Identity(dim, dim)).cwiseAbs().maxCoeff();
      if (err > tolerance) {
        throw std::invalid_argument("custom matrix is not unitary");
      }
      break;
    }
  }
}

}  // namespace qsinn::sim
