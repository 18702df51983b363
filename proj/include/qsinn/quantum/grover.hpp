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


#ifndef QSINN_QUANTUM_GROVER_HPP
#define QSINN_QUANTUM_GROVER_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "qsinn/quantum/network_circuit.hpp"
#include "qsinn/sim/circuit.hpp"
#include "qsinn/sim/density.hpp"

namespace qsinn::quantum {

/// A weight-diagonal unitary together with the registers phase estimation
/// needs. `controlled_power` appends U^power controlled on one qubit.
struct UnitaryModel {
  int num_qubits = 0;
  std::vector<int> phase;
  std::vector<int> weights;
  std::function<void(sim::Circuit&, int control, std::uint64_t power)>
      controlled_power;
};

/// Full gate-level U on the layout's register; powers repeat the
/// controlled circuit.
UnitaryModel gate_level_model(const QsinnLayout& layout, sim::Circuit u);

/// Register of phase_bits phase qubits then one qubit per weight; U is the
/// diagonal matrix of e^{i phases[w]}, and powers scale the phases.
UnitaryModel compiled_model(const std::vector<double>& phases, int hidden,
                            int phase_bits);

/// QFT on the register with reg[0] the most significant bit.
sim::Circuit qft(int num_qubits, const std::vector<int>& reg);

/// Hadamards on the phase register, the controlled U^(2^(N'-1-i)) ladder
/// with phase qubit i, and the inverse QFT. Readout j = 0.j_1 j_2 ... with
/// j_1 on phase qubit 0.
sim::Circuit phase_estimation(const UnitaryModel& model);

/// Throws std::invalid_argument unless 0 < tau < 1 lies on the N'-bit grid.
void validate_threshold(double tau, int phase_bits);

/// -1 on phase-register states with j >= tau.
sim::GateOp oracle_pm(const std::vector<int>& phase, double tau);

/// H^M (2|0><0| - I) H^M on the weight register.
sim::Circuit diffusion(int num_qubits, const std::vector<int>& weights);

/// Phase estimation, oracle, inverse phase estimation, diffusion.
sim::Circuit grover_iteration(const UnitaryModel& model, double tau);

/// Hadamards on the weight register.
sim::Circuit weight_superposition(const UnitaryModel& model);

enum class Backend { automatic, dense, sparse };

/// Weight-register distribution after `iterations` Grover iterations from
/// the uniform superposition, plus the probability that any non-weight
/// qubit ends outside |0>.
struct GroverRun {
  std::vector<double> weight_probabilities;
  double ancilla_leakage = 0.0;
  double norm = 1.0;
};

GroverRun run_grover(const UnitaryModel& model, double tau, int iterations,
                     Backend backend = Backend::automatic);

/// Reduced density matrices at the three stages of one Grover iteration.
struct GroverSnapshots {
  sim::DensityMatrix phase_after_estimation;
  sim::DensityMatrix weights_after_uncompute;
  sim::DensityMatrix weights_after_diffusion;
  double ancilla_leakage = 0.0;
};

GroverSnapshots grover_snapshots(const UnitaryModel& model, double tau,
                                 Backend backend = Backend::automatic);

/// Grid threshold separating c correct pairs from c - 1:
/// ceil(2^N' (c - 1/2) / (2N)) / 2^N'.
double threshold_for_count(int count, std::size_t num_pairs, int phase_bits);

enum class ExecutionMode {
  /// Every iteration simulates the full feed-forward circuit.
  gate_level,
  /// Eigenphases come from the gate-level U once; iterations run on the
  /// phase and weight registers only.
  compiled,
};

struct QTrainConfig {
  std::vector<QuantumSample> data;
  int hidden = 2;
  /// 0 applies default_phase_bits.
  int phase_bits = 0;
  double delta = 0.1;
  ExecutionMode mode = ExecutionMode::compiled;
  SineVariant variant = SineVariant::compact;
  Backend backend = Backend::automatic;
  /// When > 0 only this threshold is searched.
  double fixed_threshold = 0.0;
  /// When > 0 every search uses exactly this many iterations.
  int fixed_iterations = 0;
};

struct RoundReport {
  int threshold_count = 0;
  double tau = 0.0;
  int iterations = 0;
  std::uint64_t candidate = 0;
  double candidate_probability = 0.0;
  int candidate_correct = 0;
  bool verified = false;
};

struct CallReport {
  std::uint64_t grover_iterations = 0;
  std::uint64_t pe_invocations = 0;
  std::uint64_t classical_verifications = 0;
  /// N * 2^M forward calls of the exhaustive classical search.
  std::uint64_t classical_bruteforce_calls = 0;
};

struct QTrainResult {
  /// False when no candidate met any threshold.
  bool improved = false;
  std::uint64_t best = 0;
  std::string best_bits;
  int best_correct = 0;
  double best_probability = 0.0;
  /// Weight distribution of the run that produced `best`.
  std::vector<double> weight_probabilities;
  std::vector<RoundReport> rounds;
  CallReport calls;
  int phase_bits = 0;
  int num_qubits = 0;
  std::vector<double> eigenphases;
};

/// Descending-threshold search: thresholds from N correct pairs down by one
/// per failed round, at most ceil(log2(N / delta)) rounds; each round tries
/// r = 1, ceil(1.28 r), ... up to ceil(pi/4 sqrt(2^M)) from fresh states and
/// classically verifies the most likely weight string (ties in ascending
/// order). A round stops once
/// a verified candidate loses probability.
QTrainResult grover_train(const QTrainConfig& config);

}  // namespace qsinn::quantum

#endif  // QSINN_QUANTUM_GROVER_HPP
