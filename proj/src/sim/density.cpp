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

#include "qsinn/sim/density.hpp"

#include <algorithm>
#include <cstdio>
#include <ostream>
#include <stdexcept>
#include <unordered_map>
#include <vector>

namespace qsinn::sim {

namespace {

std::vector<Index> subset_masks(std::span<const int> subset, int num_qubits) {
  if (subset.empty()) {
    throw std::invalid_argument("reduced_density needs a nonempty subset");
  }
  std::vector<int> sorted(subset.begin(), subset.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw std::invalid_argument("reduced_density subset repeats a qubit");
  }
  if (subset.size() > 14) {
    throw std::invalid_argument("reduced_density subset too large");
  }
  std::vector<Index> masks;
  for (int q : subset) {
    if (q < 0 || q >= num_qubits) {
      throw std::invalid_argument("reduced_density qubit out of range");
    }
    masks.push_back(qubit_mask(q, num_qubits));
  }
  return masks;
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

DensityMatrix reduced_density(const StateVector& state,
                              std::span<const int> subset) {
  const std::vector<Index> masks = subset_masks(subset, state.num_qubits());
  Index all = 0;
  for (Index m : masks) {
    all |= m;
  }
  const auto sub_dim = static_cast<Eigen::Index>(Index{1} << masks.size());
  std::vector<Index> offsets(static_cast<std::size_t>(sub_dim));
  for (Eigen::Index s = 0; s < sub_dim; ++s) {
    offsets[s] = deposit_bits(0, masks, static_cast<Index>(s));
  }

  DensityMatrix out{Eigen::MatrixXcd::Zero(sub_dim, sub_dim)};
  Eigen::VectorXcd block(sub_dim);
  const auto amps = state.amplitudes();
  for (Index rest = 0; rest < state.dimension(); ++rest) {
    if (rest & all) {
      continue;
    }
    bool any = false;
    for (Eigen::Index s = 0; s < sub_dim; ++s) {
      block(s) = amps[rest | offsets[s]];
      any = any || block(s) != Complex{0.0, 0.0};
    }
    if (any) {
      out.rho.noalias() += block * block.adjoint();
    }
  }
  return out;
}

DensityMatrix reduced_density(const SparseState& state,
                              std::span<const int> subset) {
  const std::vector<Index> masks = subset_masks(subset, state.num_qubits());
  Index all = 0;
  for (Index m : masks) {
    all |= m;
  }
  const auto sub_dim = static_cast<Eigen::Index>(Index{1} << masks.size());

  std::unordered_map<Index, std::vector<SparseState::Entry>> groups;
  std::vector<Index> order;
  for (const SparseState::Entry& e : state.entries()) {
    const Index rest = e.index & ~all;
    auto [it, inserted] = groups.try_emplace(rest);
    if (inserted) {
      order.push_back(rest);
    }
    it->second.push_back({extract_bits(e.index, masks), e.amplitude});
  }

  DensityMatrix out{Eigen::MatrixXcd::Zero(sub_dim, sub_dim)};
  for (Index rest : order) {
    for (const auto& a : groups[rest]) {
      for (const auto& b : groups[rest]) {
        out.rho(static_cast<Eigen::Index>(a.index),
                static_cast<Eigen::Index>(b.index)) +=
            a.amplitude * std::conj(b.amplitude);
      }
    }
  }
  return out;
}

std::string density_violation(const DensityMatrix& density, double tolerance) {
  const Eigen::MatrixXcd& rho = density.rho;
  if (rho.rows() == 0 || rho.rows() != rho.cols()) {
    return "density matrix must be square and nonempty";
  }
  if ((rho - rho.adjoint()).cwiseAbs().maxCoeff() > tolerance) {
    return "density matrix is not Hermitian";
  }
  if (std::abs(rho.trace() - Complex{1.0, 0.0}) > tolerance) {
    return "density matrix trace differs from 1";
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(rho);
  if (solver.eigenvalues().minCoeff() < -1e-10) {
    return "density matrix has a negative eigenvalue";
  }
  return {};
}

void write_json_dump(std::ostream& out, const Eigen::MatrixXcd& matrix) {
  out << "{\"rows\": " << matrix.rows() << ", \"cols\": " << matrix.cols()
      << ", \"data\": [";
  for (Eigen::Index r = 0; r < matrix.rows(); ++r) {
    out << (r ? ",\n  [" : "\n  [");
    for (Eigen::Index c = 0; c < matrix.cols(); ++c) {
      out << (c ? ", " : "") << '[' << format_double(matrix(r, c).real())
          << ", " << format_double(matrix(r, c).imag()) << ']';
    }
    out << ']';
  }
  out << "\n]}\n";
}

void write_json_dump(std::ostream& out, const StateVector& state) {
  const auto amps = state.amplitudes();
  Eigen::MatrixXcd column(static_cast<Eigen::Index>(amps.size()), 1);
  for (std::size_t i = 0; i < amps.size(); ++i) {
    column(static_cast<Eigen::Index>(i), 0) = amps[i];
  }
  write_json_dump(out, column);
}

}  // namespace qsinn::sim
