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

#ifndef QSINN_QUANTUM_ENCODING_HPP
#define QSINN_QUANTUM_ENCODING_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace qsinn::quantum {

/// Training pair with x = k * pi / 2^n held exactly and an integer target.
struct QuantumSample {
  long k = 0;
  int n = 1;
  long y = 0;

  double x() const;
};

/// The four toy pairs at n = 1.
std::vector<QuantumSample> toy_quantum_dataset();

/// Smallest n >= 1 at which every input is an integer multiple of pi/2^n.
/// Throws std::invalid_argument on a negative per-sample scale.
int common_scale(const std::vector<QuantumSample>& data);

/// k rescaled to scale n. Throws if the sample is not representable at n.
long numerator_at(const QuantumSample& s, int n);

/// Number of bits needed for |v|: 0 for v = 0.
int magnitude_width(unsigned long v);

/// Sign plus m magnitude bits. x = k * pi / 2^n; b_sign = 1 for k < 0 and 0
/// for k = 0.
struct FixedPointEncoding {
  int n = 1;
  int m = 1;
  long k = 0;
  int sign = 0;
  /// magnitude[i] = b_i (least significant first).
  std::vector<int> magnitude;

  /// Register order: sign, b_{m-1}, ..., b_0.
  std::string bits() const;
  /// Same order as bits(), sign most significant.
  std::uint64_t index() const;
  double value() const;
};

/// m defaults to max(magnitude_width(|k|), n). Throws std::invalid_argument
/// if |k| needs more than m bits.
FixedPointEncoding encode_numerator(long k, int n, int m = 0);

/// Throws std::invalid_argument unless x is a multiple of pi/2^n within 1e-9.
FixedPointEncoding encode_input(double x, int n, int m = 0);

/// Shared input format of a dataset: common scale n and width m.
struct InputFormat {
  int n = 1;
  int m = 1;
};

InputFormat input_format(const std::vector<QuantumSample>& data);

/// Signed integer at scale 1: sign bit most significant, then
/// magnitude_bits bits; zero is all zeros. Throws if |v| does not fit.
std::uint64_t encode_signed(long v, int magnitude_bits);
long decode_signed(std::uint64_t code, int magnitude_bits);

/// Lines "k, n, y" with '#' comments and blank lines ignored. Throws
/// std::invalid_argument with the line number on malformed input.
std::vector<QuantumSample> parse_quantum_dataset(const std::string& text);

}  // namespace qsinn::quantum

#endif  // QSINN_QUANTUM_ENCODING_HPP
