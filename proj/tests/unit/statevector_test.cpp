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

#include <cmath>
#include <numbers>
#include <random>
#include <sstream>
#include <stdexcept>

#include "gtest/gtest.h"

#include "qsinn/sim/circuit.hpp"
#include "qsinn/sim/density.hpp"
#include "qsinn/sim/sparse_state.hpp"
#include "qsinn/sim/statevector.hpp"

using namespace qsinn::sim;

namespace {

Eigen::MatrixXcd random_unitary(int dim, std::mt19937& rng) {
  std::normal_distribution<double> g;
  Eigen::MatrixXcd a(dim, dim);
  for (int r = 0; r < dim; ++r) {
    for (int c = 0; c < dim; ++c) {
      a(r, c) = Complex{g(rng), g(rng)};
    }
  }
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(a);
  return qr.householderQ() * Eigen::MatrixXcd::Identity(dim, dim);
}

std::vector<Index> random_permutation(int bits, std::mt19937& rng) {
  std::vector<Index> table(std::size_t{1} << bits);
  for (Index i = 0; i < table.size(); ++i) {
    table[i] = i;
  }
  std::shuffle(table.begin(), table.end(), rng);
  return table;
}

StateVector random_state(int n, std::mt19937& rng) {
  StateVector s(n);
  s.apply(GateOp::unitary({0, 1}, random_unitary(4, rng)));
  for (int q = 0; q < n; ++q) {
    s.apply(GateOp::h(q));
    s.apply(GateOp::phase(q, 0.37 * (q + 1)));
  }
  s.apply(GateOp::unitary({n - 1, 0}, random_unitary(4, rng)));
  return s;
}

// One gate of every kind, with and without controls, on a 4-qubit register.
std::vector<GateOp> gate_zoo(std::mt19937& rng) {
  return {
      GateOp::h(2),
      GateOp::x(1),
      GateOp::x(3, {0, 2}),
      GateOp::phase(0, 0.81),
      GateOp::phase(2, -1.3, {1}),
      GateOp::permutation({3, 1, 0}, random_permutation(3, rng)),
      GateOp::permutation({2, 0}, random_permutation(2, rng), {3}),
      GateOp::unitary({1}, random_unitary(2, rng)),
      GateOp::unitary({0, 3}, random_unitary(4, rng), {2}),
      GateOp::swap(0, 3),
  };
}

double max_diff(const StateVector& a, const StateVector& b) {
  double d = 0.0;
  for (Index i = 0; i < a.dimension(); ++i) {
    d = std::max(d, std::abs(a.amplitude(i) - b.amplitude(i)));
  }
  return d;
}

}  // namespace

TEST(StateVector, init_basis_uses_qubit0_as_msb) {
  StateVector s00 = init_basis(2, "00");
  EXPECT_EQ(s00.amplitude(0), Complex(1.0, 0.0));
  StateVector s101 = init_basis(3, "101");
  EXPECT_EQ(s101.amplitude(0b101), Complex(1.0, 0.0));
  EXPECT_NEAR(s101.norm(), 1.0, 1e-15);
  StateVector s100 = init_basis(3, "100");
  EXPECT_EQ(s100.amplitude(4), Complex(1.0, 0.0));
}

TEST(StateVector, init_basis_rejects_length_mismatch) {
  EXPECT_THROW(init_basis(3, "10"), std::invalid_argument);
  EXPECT_THROW(init_basis(2, "12"), std::invalid_argument);
}

TEST(StateVector, hadamard_on_zero) {
  StateVector s(1);
  s.apply(GateOp::h(0));
  EXPECT_NEAR(s.amplitude(0).real(), 1.0 / std::numbers::sqrt2, 1e-15);
  EXPECT_NEAR(s.amplitude(1).real(), 1.0 / std::numbers::sqrt2, 1e-15);
}

TEST(StateVector, x_with_zero_control_is_identity) {
  StateVector s = init_basis(2, "00");
  s.apply(GateOp::x(1, {0}));
  EXPECT_EQ(s.amplitude(0), Complex(1.0, 0.0));
  StateVector t = init_basis(2, "10");
  t.apply(GateOp::x(1, {0}));
  EXPECT_EQ(t.amplitude(0b11), Complex(1.0, 0.0));
}

TEST(StateVector, rejects_overlapping_or_out_of_range_qubits) {
  StateVector s(3);
  EXPECT_THROW(s.apply(GateOp::x(1, {1})), std::invalid_argument);
  EXPECT_THROW(s.apply(GateOp::x(3)), std::invalid_argument);
  EXPECT_THROW(s.apply(GateOp::permutation({0, 1}, {0, 0, 1, 2})),
               std::invalid_argument);
  Eigen::MatrixXcd not_unitary = Eigen::MatrixXcd::Identity(2, 2) * 2.0;
  EXPECT_THROW(s.apply(GateOp::unitary({0}, not_unitary)),
               std::invalid_argument);
}

TEST(StateVector, every_gate_kind_preserves_norm) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    StateVector s = random_state(4, rng);
    for (const GateOp& g : gate_zoo(rng)) {
      s.apply(g);
      ASSERT_NEAR(s.norm(), 1.0, 1e-12) << to_string(g.kind);
    }
  }
}

TEST(StateVector, gate_then_inverse_is_identity) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const StateVector start = random_state(4, rng);
    for (const GateOp& g : gate_zoo(rng)) {
      StateVector s = start;
      s.apply(g);
      s.apply(g.inverse());
      ASSERT_LT(max_diff(s, start), 1e-10) << to_string(g.kind);
    }
  }
}

TEST(StateVector, circuit_inverse_undoes_circuit) {
  std::mt19937 rng(3);
  Circuit c(4);
  for (const GateOp& g : gate_zoo(rng)) {
    c.add(g);
  }
  const StateVector start = random_state(4, rng);
  StateVector s = start;
  run(c, s);
  run(c.inverse(), s);
  EXPECT_LT(max_diff(s, start), 1e-10);
}

TEST(SparseState, agrees_with_dense_on_random_circuits) {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 10; ++trial) {
    StateVector dense(4);
    SparseState sparse(4);
    for (int q = 0; q < 4; ++q) {
      dense.apply(GateOp::h(q));
      sparse.apply(GateOp::h(q));
    }
    for (const GateOp& g : gate_zoo(rng)) {
      dense.apply(g);
      sparse.apply(g);
    }
    for (Index i = 0; i < dense.dimension(); ++i) {
      ASSERT_LT(std::abs(dense.amplitude(i) - sparse.amplitude(i)), 1e-12);
    }
    EXPECT_NEAR(sparse.norm(), 1.0, 1e-12);
  }
}

TEST(SparseState, wide_register_with_few_branches) {
  SparseState s(48);
  s.apply(GateOp::h(0));
  s.apply(GateOp::x(47, {0}));
  s.apply(GateOp::x(30, {47}));
  EXPECT_EQ(s.support_size(), 2u);
  const Index top = qubit_mask(0, 48) | qubit_mask(47, 48) | qubit_mask(30, 48);
  EXPECT_NEAR(std::abs(s.amplitude(top)), 1.0 / std::numbers::sqrt2, 1e-15);
}

TEST(SparseState, interference_prunes_cancelled_branches) {
  SparseState s(1);
  s.apply(GateOp::h(0));
  s.apply(GateOp::h(0));
  EXPECT_EQ(s.support_size(), 1u);
  EXPECT_NEAR(s.amplitude(0).real(), 1.0, 1e-15);
}

TEST(ReducedDensity, product_state) {
  StateVector s(2);
  s.apply(GateOp::h(1));
  const std::vector<int> q0{0};
  const DensityMatrix rho = reduced_density(s, q0);
  EXPECT_NEAR(std::abs(rho.rho(0, 0) - 1.0), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(rho.rho(1, 1)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(rho.rho(0, 1)), 0.0, 1e-15);
}

TEST(ReducedDensity, bell_state_is_maximally_mixed) {
  StateVector s(2);
  s.apply(GateOp::h(0));
  s.apply(GateOp::x(1, {0}));
  const std::vector<int> q1{1};
  const DensityMatrix rho = reduced_density(s, q1);
  EXPECT_NEAR(rho.rho(0, 0).real(), 0.5, 1e-15);
  EXPECT_NEAR(rho.rho(1, 1).real(), 0.5, 1e-15);
  EXPECT_NEAR(std::abs(rho.rho(0, 1)), 0.0, 1e-15);
  EXPECT_EQ(density_violation(rho), "");
}

TEST(ReducedDensity, mixture_of_two_register_values) {
  // Register (q1, q2) entangled with a 4-valued label on (q0, q3): three
  // labels carry |00>, one carries |10>.
  StateVector s(4);
  s.apply(GateOp::h(0));
  s.apply(GateOp::h(3));
  s.apply(GateOp::x(1, {0, 3}));
  const std::vector<int> reg{1, 2};
  const DensityMatrix rho = reduced_density(s, reg);
  Eigen::MatrixXcd expected = Eigen::MatrixXcd::Zero(4, 4);
  expected(0, 0) = 0.75;
  expected(2, 2) = 0.25;
  EXPECT_LT((rho.rho - expected).cwiseAbs().maxCoeff(), 1e-15);

  SparseState sp(4);
  sp.apply(GateOp::h(0));
  sp.apply(GateOp::h(3));
  sp.apply(GateOp::x(1, {0, 3}));
  EXPECT_LT((reduced_density(sp, reg).rho - expected).cwiseAbs().maxCoeff(),
            1e-15);
}

TEST(ReducedDensity, rejects_bad_subsets) {
  StateVector s(2);
  EXPECT_THROW(reduced_density(s, std::vector<int>{}), std::invalid_argument);
  EXPECT_THROW(reduced_density(s, std::vector<int>{2}), std::invalid_argument);
  EXPECT_THROW(reduced_density(s, std::vector<int>{0, 0}),
               std::invalid_argument);
}

TEST(ReducedDensity, always_valid_on_random_states) {
  std::mt19937 rng(19);
  for (int trial = 0; trial < 20; ++trial) {
    StateVector s = random_state(5, rng);
    const std::vector<int> sub{static_cast<int>(trial % 5),
                               static_cast<int>((trial + 2) % 5)};
    EXPECT_EQ(density_violation(reduced_density(s, sub)), "");
  }
}

TEST(ReducedDensity, permutation_on_other_qubits_commutes) {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 10; ++trial) {
    StateVector s = random_state(5, rng);
    const std::vector<int> kept{0, 4};
    const DensityMatrix before = reduced_density(s, kept);
    s.apply(GateOp::permutation({1, 2, 3}, random_permutation(3, rng)));
    const DensityMatrix after = reduced_density(s, kept);
    EXPECT_LT((before.rho - after.rho).cwiseAbs().maxCoeff(), 1e-12);
  }
}

TEST(ControlledPower, power_one_with_zero_control_is_identity) {
  Circuit u(2);
  u.add(GateOp::x(1));
  StateVector s(2);
  controlled_unitary_power(s, u, 1, 0);
  EXPECT_EQ(s.amplitude(0), Complex(1.0, 0.0));
}

TEST(ControlledPower, power_two_equals_two_applications) {
  std::mt19937 rng(29);
  Circuit u(3);
  u.add(GateOp::unitary({1, 2}, random_unitary(4, rng)));
  StateVector a = random_state(3, rng);
  StateVector b = a;
  controlled_unitary_power(a, u, 2, 0);
  controlled_unitary_power(b, u, 1, 0);
  controlled_unitary_power(b, u, 1, 0);
  EXPECT_LT(max_diff(a, b), 1e-12);
}

TEST(ControlledPower, phase_power_accumulates) {
  // Marked branch |1> on qubit 1, control |1>: phase(pi/4)^4 = e^{i pi}.
  Circuit u(2);
  u.add(GateOp::phase(1, std::numbers::pi / 4));
  StateVector s = init_basis(2, "11");
  controlled_unitary_power(s, u, 4, 0);
  EXPECT_NEAR(s.amplitude(3).real(), -1.0, 1e-12);
  EXPECT_NEAR(s.amplitude(3).imag(), 0.0, 1e-12);
}

TEST(ControlledPower, rejects_non_positive_power) {
  Circuit u(2);
  u.add(GateOp::x(1));
  StateVector s(2);
  EXPECT_THROW(controlled_unitary_power(s, u, 0, 0), std::invalid_argument);
}

TEST(JsonDump, row_major_pairs) {
  Eigen::MatrixXcd m(2, 2);
  m << Complex(0.75, 0), Complex(0, 0.5), Complex(0, -0.5), Complex(0.25, 0);
  std::ostringstream out;
  write_json_dump(out, m);
  const std::string text = out.str();
  EXPECT_NE(text.find("\"rows\": 2"), std::string::npos);
  EXPECT_NE(text.find("[[0.75, 0], [0, 0.5]]"), std::string::npos);
  EXPECT_NE(text.find("[[0, -0.5], [0.25, 0]]"), std::string::npos);
}
