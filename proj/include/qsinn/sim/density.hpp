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

#ifndef QSINN_SIM_DENSITY_HPP
#define QSINN_SIM_DENSITY_HPP

#include <iosfwd>
#include <span>
#include <string>

#include <Eigen/Dense>

#include "qsinn/sim/sparse_state.hpp"
#include "qsinn/sim/statevector.hpp"

namespace qsinn::sim {

/// Reduced state of a qubit subset. Row/column index follows the subset
/// order given to reduced_density, first listed qubit most significant.
struct DensityMatrix {
  Eigen::MatrixXcd rho;

  Eigen::Index dimension() const { return rho.rows(); }
  double trace() const { return rho.trace().real(); }
  /// Diagonal as real probabilities.
  Eigen::VectorXd probabilities() const { return rho.diagonal().real(); }
};

/// Partial trace over every qubit not in `subset`.
/// Throws std::invalid_argument on an empty subset, a repeated qubit, or an
/// out-of-range index.
DensityMatrix reduced_density(const StateVector& state,
                              std::span<const int> subset);
DensityMatrix reduced_density(const SparseState& state,
                              std::span<const int> subset);

/// Hermitian and unit trace within `tolerance`, eigenvalues >= -1e-10.
/// Returns an empty string when valid, otherwise the first violation.
std::string density_violation(const DensityMatrix& density,
                              double tolerance = 1e-12);

/// JSON text dump: {"rows": r, "cols": c, "data": [[[re, im], ...], ...]}
/// row-major, every number with 17 significant digits.
void write_json_dump(std::ostream& out, const Eigen::MatrixXcd& matrix);
void write_json_dump(std::ostream& out, const StateVector& state);

}  // namespace qsinn::sim

#endif  // QSINN_SIM_DENSITY_HPP
