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

#include "qsinn/sim/statevector.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace qsinn::sim {

Index control_mask_of(const GateOp& op, int num_qubits) {
  Index mask = 0;
  for (int c : op.controls) {
    mask |= qubit_mask(c, num_qubits);
  }
  return mask;
}

std::vector<Index> target_masks_of(const GateOp& op, int num_qubits) {
  std::vector<Index> masks;
  masks.reserve(op.targets.size());
  for (int t : op.targets) {
    masks.push_back(qubit_mask(t, num_qubits));
  }
  return masks;
}

Index extract_bits(Index index, std::span<const Index> masks) {
  Index value = 0;
  for (Index m : masks) {
    value = (value << 1) | ((index & m) ? 1 : 0);
  }
  return value;
}

Index deposit_bits(Index index, std::span<const Index> masks, Index value) {
  const std::size_t t = masks.size();
  for (std::size_t j = 0; j < t; ++j) {
    const bool bit = (value >> (t - 1 - j)) & 1;
    index = bit ? (index | masks[j]) : (index & ~masks[j]);
  }
  return index;
}

StateVector::StateVector(int num_qubits) : num_qubits_(num_qubits) {
  if (num_qubits < 1 || num_qubits > kMaxDenseQubits) {
    throw std::invalid_argument("dense statevector supports 1.." +
                                std::to_string(kMaxDenseQubits) + " qubits");
  }
  amplitudes_.assign(Index{1} << num_qubits, Complex{0.0, 0.0});
  amplitudes_[0] = 1.0;
}

double StateVector::norm() const {
  double sum = 0.0;
  for (const Complex& a : amplitudes_) {
    sum += std::norm(a);
  }
  return std::sqrt(sum);
}

void StateVector::apply(const GateOp& op) {
  validate(op, num_qubits_);
  const Index cmask = control_mask_of(op, num_qubits_);
  switch (op.kind) {
    case GateKind::hadamard:
    case GateKind::pauli_x:
    case GateKind::phase:
      apply_single(op, cmask);
      break;
    case GateKind::permutation:
      apply_permutation(op, cmask);
      break;
    case GateKind::custom_unitary:
      apply_matrix(op, cmask);
      break;
  }
}

void StateVector::apply_single(const GateOp& op, Index cmask) {
  const Index tmask = qubit_mask(op.targets.front(), num_qubits_);
  const Index dim = dimension();
  if (op.kind == GateKind::phase) {
    const Complex factor = std::polar(1.0, op.angle);
    const Index need = cmask | tmask;
    for (Index i = 0; i < dim; ++i) {
      if ((i & need) == need) {
        amplitudes_[i] *= factor;
      }
    }
    return;
  }
  const double s = 1.0 / std::numbers::sqrt2;
  for (Index i = 0; i < dim; ++i) {
    if ((i & tmask) || (i & cmask) != cmask) {
      continue;
    }
    Complex& a0 = amplitudes_[i];
    Complex& a1 = amplitudes_[i | tmask];
    if (op.kind == GateKind::pauli_x) {
      std::swap(a0, a1);
    } else {
      const Complex u = a0;
      const Complex v = a1;
      a0 = s * (u + v);
      a1 = s * (u - v);
    }
  }
}

void StateVector::apply_permutation(const GateOp& op, Index cmask) {
  const std::vector<Index> masks = target_masks_of(op, num_qubits_);
  const Index dim = dimension();
  std::vector<Complex> out(dim, Complex{0.0, 0.0});
  for (Index i = 0; i < dim; ++i) {
    if ((i & cmask) != cmask) {
      out[i] = amplitudes_[i];
      continue;
    }
    const Index sub = extract_bits(i, masks);
    out[deposit_bits(i, masks, op.table[sub])] = amplitudes_[i];
  }
  amplitudes_.swap(out);
}

void StateVector::apply_matrix(const GateOp& op, Index cmask) {
  const std::vector<Index> masks = target_masks_of(op, num_qubits_);
  Index all_targets = 0;
  for (Index m : masks) {
    all_targets |= m;
  }
  const auto sub_dim = static_cast<Eigen::Index>(Index{1} << masks.size());
  std::vector<Index> offsets(static_cast<std::size_t>(sub_dim));
  for (Eigen::Index s = 0; s < sub_dim; ++s) {
    offsets[s] = deposit_bits(0, masks, static_cast<Index>(s));
  }

  const Index dim = dimension();
  if (op.is_diagonal()) {
    const Eigen::VectorXcd diag = op.matrix.diagonal();
    for (Index i = 0; i < dim; ++i) {
      if ((i & cmask) == cmask) {
        amplitudes_[i] *= diag(static_cast<Eigen::Index>(extract_bits(i, masks)));
      }
    }
    return;
  }

  Eigen::VectorXcd block(sub_dim);
  for (Index base = 0; base < dim; ++base) {
    if ((base & all_targets) || (base & cmask) != cmask) {
      continue;
    }
    for (Eigen::Index s = 0; s < sub_dim; ++s) {
      block(s) = amplitudes_[base | offsets[s]];
    }
    const Eigen::VectorXcd result = op.matrix * block;
    for (Eigen::Index s = 0; s < sub_dim; ++s) {
      amplitudes_[base | offsets[s]] = result(s);
    }
  }
}

StateVector init_basis(int num_qubits, std::string_view bitstring) {
  if (static_cast<int>(bitstring.size()) != num_qubits) {
    throw std::invalid_argument("bitstring length " +
                                std::to_string(bitstring.size()) +
                                " does not match " +
                                std::to_string(num_qubits) + " qubits");
  }
  StateVector state(num_qubits);
  for (int q = 0; q < num_qubits; ++q) {
    if (bitstring[q] == '1') {
      state.apply(GateOp::x(q));
    } else if (bitstring[q] != '0') {
      throw std::invalid_argument("bitstring must contain only 0 and 1");
    }
  }
  return state;
}

}  // namespace qsinn::sim
