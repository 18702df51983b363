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


#ifndef QSINN_QUANTUM_BLOCKS_HPP
#define QSINN_QUANTUM_BLOCKS_HPP

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "qsinn/quantum/encoding.hpp"
#include "qsinn/sim/circuit.hpp"

namespace qsinn::quantum {

/// (sign, value) qubit pair carrying a ternary neuron output:
/// |01> = +1, |11> = -1, |00> and |10> = 0.
using PairQubits = std::pair<int, int>;

int decode_ternary(int alpha_sign, int alpha_value);

// ---------------------------------------------------------------- sine

/// Classical semantics of the sine block: |z| = q*pi + r with 0 <= r < pi.
struct SineOutput {
  int alpha_sign = 0;
  int alpha_value = 0;
  long q = 0;
  double r = 0.0;

  int value() const { return decode_ternary(alpha_sign, alpha_value); }
};

/// alpha_sign = b_sign xor b_n (b_n = 0 when m = n); alpha_value = OR of
/// b_0 .. b_{n-1}.
SineOutput sine_bits(const FixedPointEncoding& e);

enum class SineVariant {
  /// Two fresh ancillas per neuron receive alpha_sign and alpha_value.
  ancilla,
  /// alpha_sign is formed in place on the sign qubit; alpha_value is b_0
  /// itself when n = 1, else one ancilla holds the OR.
  compact,
};

/// Number of ancillas the variant needs for scale n.
int sine_ancilla_count(SineVariant variant, int n);

/// Appends the sine block for one input register laid out as
/// {sign, b_{m-1}, ..., b_0} and returns the output pair.
PairQubits append_sine(sim::Circuit& circuit, std::span<const int> input,
                       int n, SineVariant variant,
                       std::span<const int> ancillas);

/// Standalone block: qubits 0..m are the input register, the ancillas
/// follow. Output pair returned through `pair`.
sim::Circuit sine_circuit(int m, int n, SineVariant variant,
                          PairQubits* pair = nullptr);

// ---------------------------------------------------------------- plus

/// Intermediate values of the four plus stages.
struct PlusStages {
  /// Count of +1 inputs.
  unsigned p = 0;
  /// Count of -1 inputs.
  unsigned n_neg = 0;
  /// -n_neg in two's complement over twos_width bits.
  unsigned n_neg_twos = 0;
  /// p + (-n_neg) in two's complement over twos_width bits.
  unsigned sum_twos = 0;
  long sum = 0;
  /// Sign-magnitude code of sum over the output register.
  std::uint64_t code = 0;
};

struct PlusCircuitLayout {
  int fan_in = 1;
  /// Width of the p and n_neg counters.
  int count_width = 1;
  /// count_width + 1.
  int twos_width = 2;
  /// Magnitude bits of the output register.
  int magnitude_width = 1;

  int output_width() const { return magnitude_width + 1; }

  /// Counters sized for fan_in; magnitude wide enough for max(fan_in,
  /// max_abs_target) so targets share the register format.
  static PlusCircuitLayout for_fan_in(int fan_in, long max_abs_target = 0);

  /// pair_codes[j] = 2 * alpha_sign + alpha_value.
  PlusStages evaluate(std::span<const int> pair_codes) const;
};

/// XORs the sign-magnitude sum of the pairs into `output` (sign qubit
/// first). Throws if more than 8 inputs.
void append_plus(sim::Circuit& circuit, const PlusCircuitLayout& layout,
                 std::span<const PairQubits> pairs, std::span<const int> output);

/// Standalone block: pairs on qubits 0..2*fan_in-1, output register after.
sim::Circuit plus_circuit(const PlusCircuitLayout& layout);

// ---------------------------------------------------------------- checker

/// Qubits of the equality check.
struct CheckerQubits {
  std::vector<int> predicted;
  std::vector<int> target;
  /// One equality ancilla per register qubit.
  std::vector<int> equal;
  int all_equal = -1;
  /// Qubit carrying the phase gate; the phase is global on it, so the
  /// block acts as a branch-relative phase.
  int phase_qubit = -1;
};

/// Multiplies branches with predicted == target by e^{i angle} and returns
/// every ancilla to |0>.
void append_checker(sim::Circuit& circuit, const CheckerQubits& q,
                    double angle);

}  // namespace qsinn::quantum

#endif  // QSINN_QUANTUM_BLOCKS_HPP
