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

#include "qsinn/quantum/encoding.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace qsinn::quantum {

namespace {

constexpr int kMaxScale = 30;

}  // namespace

double QuantumSample::x() const {
  return std::ldexp(static_cast<double>(k) * std::numbers::pi, -n);
}

std::vector<QuantumSample> toy_quantum_dataset() {
  return {{-3, 1, 2}, {-1, 1, -2}, {1, 1, 2}, {3, 1, -2}};
}

int common_scale(const std::vector<QuantumSample>& data) {
  int n = 1;
  for (const auto& s : data) {
    if (s.n < 0 || s.n > kMaxScale) {
      throw std::invalid_argument("sample scale out of range");
    }
    // Strip factors of two from k to find the sample's own minimal scale.
    long k = s.k;
    int own = s.n;
    while (own > 0 && k % 2 == 0) {
      k /= 2;
      --own;
    }
    n = std::max(n, own);
  }
  return n;
}

long numerator_at(const QuantumSample& s, int n) {
  if (n >= s.n) {
    return s.k * (1L << (n - s.n));
  }
  const long div = 1L << (s.n - n);
  if (s.k % div != 0) {
    throw std::invalid_argument("sample not representable at this scale");
  }
  return s.k / div;
}

int magnitude_width(unsigned long v) { return std::bit_width(v); }

std::string FixedPointEncoding::bits() const {
  std::string out(1, static_cast<char>('0' + sign));
  for (int i = m - 1; i >= 0; --i) {
    out.push_back(static_cast<char>('0' + magnitude[i]));
  }
  return out;
}

std::uint64_t FixedPointEncoding::index() const {
  std::uint64_t v = static_cast<std::uint64_t>(sign) << m;
  for (int i = 0; i < m; ++i) {
    v |= static_cast<std::uint64_t>(magnitude[i]) << i;
  }
  return v;
}

double FixedPointEncoding::value() const {
  return std::ldexp(static_cast<double>(k) * std::numbers::pi, -n);
}

FixedPointEncoding encode_numerator(long k, int n, int m) {
  if (n < 1 || n > kMaxScale) {
    throw std::invalid_argument("scale n must lie in [1, 30]");
  }
  const unsigned long mag = static_cast<unsigned long>(std::labs(k));
  const int need = magnitude_width(mag);
  if (m <= 0) {
    m = std::max(need, n);
  }
  if (need > m || m > 62) {
    throw std::invalid_argument("magnitude does not fit the register width");
  }
  FixedPointEncoding e;
  e.n = n;
  e.m = m;
  e.k = k;
  e.sign = k < 0 ? 1 : 0;
  e.magnitude.resize(m);
  for (int i = 0; i < m; ++i) {
    e.magnitude[i] = static_cast<int>((mag >> i) & 1UL);
  }
  return e;
}

FixedPointEncoding encode_input(double x, int n, int m) {
  if (!std::isfinite(x) || n < 1 || n > kMaxScale) {
    throw std::invalid_argument("input must be finite with 1 <= n <= 30");
  }
  const double scaled = std::ldexp(x / std::numbers::pi, n);
  const double k = std::round(scaled);
  if (std::abs(scaled - k) > 1e-9 || std::abs(k) > 0x1p52) {
    throw std::invalid_argument("input is not a multiple of pi/2^n");
  }
  return encode_numerator(static_cast<long>(k), n, m);
}

InputFormat input_format(const std::vector<QuantumSample>& data) {
  InputFormat f;
  f.n = common_scale(data);
  unsigned long max_k = 0;
  for (const auto& s : data) {
    max_k = std::max(max_k,
                     static_cast<unsigned long>(std::labs(numerator_at(s, f.n))));
  }
  f.m = std::max(magnitude_width(max_k), f.n);
  return f;
}

std::uint64_t encode_signed(long v, int magnitude_bits) {
  const unsigned long mag = static_cast<unsigned long>(std::labs(v));
  if (magnitude_bits < 0 || magnitude_bits > 62 ||
      magnitude_width(mag) > magnitude_bits) {
    throw std::invalid_argument("value does not fit the register width");
  }
  const std::uint64_t sign = v < 0 ? 1 : 0;
  return (sign << magnitude_bits) | mag;
}

long decode_signed(std::uint64_t code, int magnitude_bits) {
  const long mag =
      static_cast<long>(code & ((std::uint64_t{1} << magnitude_bits) - 1));
  return ((code >> magnitude_bits) & 1) ? -mag : mag;
}

std::vector<QuantumSample> parse_quantum_dataset(const std::string& text) {
  std::vector<QuantumSample> out;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) {
      line.erase(hash);
    }
    if (line.find_first_not_of(" \t\r") == std::string::npos) {
      continue;
    }
    std::replace(line.begin(), line.end(), ',', ' ');
    std::istringstream fields(line);
    QuantumSample s;
    std::string extra;
    if (!(fields >> s.k >> s.n >> s.y) || (fields >> extra) || s.n < 0 ||
        s.n > kMaxScale) {
      throw std::invalid_argument("dataset line " + std::to_string(line_no) +
                                  ": expected 'k, n, y' with 0 <= n <= 30");
    }
    out.push_back(s);
  }
  return out;
}

}  // namespace qsinn::quantum
