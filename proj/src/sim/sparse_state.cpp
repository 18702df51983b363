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

#include "qsinn/sim/sparse_state.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <unordered_map>

#include "qsinn/sim/statevector.hpp"

namespace qsinn::sim {

SparseState::SparseState(int num_qubits) : SparseState(num_qubits, 0) {}

SparseState::SparseState(int num_qubits, Index basis_index)
    : num_qubits_(num_qubits) {
  if (num_qubits < 1 || num_qubits > kMaxAddressableQubits) {
    throw std::invalid_argument("sparse state supports 1.." +
                                std::to_string(kMaxAddressableQubits) +
                                " qubits");
  }
  if (num_qubits < 64 && (basis_index >> num_qubits) != 0) {
    throw std::invalid_argument("basis index out of range");
  }
  entries_.push_back({basis_index, Complex{1.0, 0.0}});
}

Complex SparseState::amplitude(Index index) const {
  for (const Entry& e : entries_) {
    if (e.index == index) {
      return e.amplitude;
    }
  }
  return {0.0, 0.0};
}

double SparseState::norm() const {
  double sum = 0.0;
  for (const Entry& e : entries_) {
    sum += std::norm(e.amplitude);
  }
  return std::sqrt(sum);
}

void SparseState::apply(const GateOp& op) {
  validate(op, num_qubits_);
  const Index cmask = control_mask_of(op, num_qubits_);
  const std::vector<Index> masks = target_masks_of(op, num_qubits_);
  auto active = [cmask](Index i) { return (i & cmask) == cmask; };

  switch (op.kind) {
    case GateKind::pauli_x:
      for (Entry& e : entries_) {
        if (active(e.index)) {
          e.index ^= masks.front();
        }
      }
      return;
    case GateKind::phase: {
      const Complex factor = std::polar(1.0, op.angle);
      for (Entry& e : entries_) {
        if (active(e.index) && (e.index & masks.front())) {
          e.amplitude *= factor;
        }
      }
      return;
    }
    case GateKind::permutation:
      for (Entry& e : entries_) {
        if (active(e.index)) {
          e.index = deposit_bits(e.index, masks,
                                 op.table[extract_bits(e.index, masks)]);
        }
      }
      return;
    case GateKind::hadamard:
    case GateKind::custom_unitary:
      break;
  }

  if (op.kind == GateKind::custom_unitary && op.is_diagonal()) {
    for (Entry& e : entries_) {
      if (active(e.index)) {
        const auto s = static_cast<Eigen::Index>(extract_bits(e.index, masks));
        e.amplitude *= op.matrix(s, s);
      }
    }
    return;
  }

  Eigen::MatrixXcd matrix;
  if (op.kind == GateKind::hadamard) {
    matrix = Eigen::MatrixXcd::Constant(2, 2, 1.0 / std::numbers::sqrt2);
    matrix(1, 1) = -1.0 / std::numbers::sqrt2;
  } else {
    matrix = op.matrix;
  }

  // Mixing gate: accumulate in first-seen order so results are reproducible.
  std::unordered_map<Index, std::size_t> slot;
  std::vector<Entry> out;
  out.reserve(entries_.size() * 2);
  auto add = [&](Index index, Complex amp) {
    auto [it, inserted] = slot.try_emplace(index, out.size());
    if (inserted) {
      out.push_back({index, amp});
    } else {
      out[it->second].amplitude += amp;
    }
  };
  for (const Entry& e : entries_) {
    if (!active(e.index)) {
      add(e.index, e.amplitude);
      continue;
    }
    const auto col = static_cast<Eigen::Index>(extract_bits(e.index, masks));
    for (Eigen::Index row = 0; row < matrix.rows(); ++row) {
      const Complex m = matrix(row, col);
      if (m != Complex{0.0, 0.0}) {
        add(deposit_bits(e.index, masks, static_cast<Index>(row)),
            m * e.amplitude);
      }
    }
  }
  entries_.clear();
  for (const Entry& e : out) {
    if (std::abs(e.amplitude) >= kPruneTolerance) {
      entries_.push_back(e);
    }
  }
}

SparseState sparse_basis(int num_qubits, std::string_view bitstring) {
  if (static_cast<int>(bitstring.size()) != num_qubits) {
    throw std::invalid_argument("bitstring length does not match qubit count");
  }
  Index index = 0;
  for (int q = 0; q < num_qubits; ++q) {
    if (bitstring[q] == '1') {
      index |= qubit_mask(q, num_qubits);
    } else if (bitstring[q] != '0') {
      throw std::invalid_argument("bitstring must contain only 0 and 1");
    }
  }
  return SparseState(num_qubits, index);
}

}  // namespace qsinn::sim
