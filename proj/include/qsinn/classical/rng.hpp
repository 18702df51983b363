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

#ifndef QSINN_CLASSICAL_RNG_HPP
#define QSINN_CLASSICAL_RNG_HPP

#include <array>
#include <cstdint>

namespace qsinn::classical {

/// Philox4x32-10 (Salmon et al., "Parallel random numbers: as easy as
/// 1, 2, 3", SC'11). Pure function of (counter, key); no hidden state.
struct Philox4x32 {
  using Counter = std::array<std::uint32_t, 4>;
  using Key = std::array<std::uint32_t, 2>;

  static Counter block(Counter counter, Key key);
};

/// Reproducible uniform stream.
///
/// Key = 64-bit master seed (low word first). Counter words are
/// [draw_lo, draw_hi, stream_lo, stream_hi]; each Philox block yields two
/// 64-bit draws, and a double is the top 53 bits of a draw scaled by 2^-53.
/// Streams with different ids never share a counter, so (seed, stream)
/// pairs are independent. Bit-identical on every platform.
class CounterStream {
 public:
  CounterStream(std::uint64_t seed, std::uint64_t stream);

  std::uint64_t next_u64();
  /// [0, 1).
  double uniform();
  /// [lo, hi).
  double uniform(double lo, double hi);
  /// Uniform integer in [0, bound). bound must be positive.
  std::uint64_t below(std::uint64_t bound);

 private:
  Philox4x32::Key key_;
  std::uint64_t stream_;
  std::uint64_t block_index_ = 0;
  std::array<std::uint64_t, 2> buffer_{};
  int buffered_ = 0;
};

/// Stream ids reserved by the experiment code. Weight init for hidden layer
/// l uses stream l.
inline constexpr std::uint64_t kDatasetSampleStream = 1u << 20;
inline constexpr std::uint64_t kDatasetSplitStream = (1u << 20) + 1;
inline constexpr std::uint64_t kInstanceStream = (1u << 20) + 2;

}  // namespace qsinn::classical

#endif  // QSINN_CLASSICAL_RNG_HPP
