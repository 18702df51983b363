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


#ifndef QSINN_QUANTUM_INSTANCES_HPP
#define QSINN_QUANTUM_INSTANCES_HPP

#include <cstdint>
#include <vector>

#include "qsinn/quantum/encoding.hpp"

namespace qsinn::quantum {

struct InstanceSpec {
  int min_hidden = 2;
  int max_hidden = 4;
  int min_pairs = 2;
  int max_pairs = 8;
  /// Inputs are k * pi / 2^n with n drawn from [1, max_scale] and
  /// |x| <= 2 pi.
  int max_scale = 2;
  /// Chance that a label is moved by +-1 away from the planted output.
  double corruption = 0.2;
};

struct RandomInstance {
  int hidden = 0;
  std::vector<QuantumSample> data;
  /// Sign bits of the weight string that produced the clean labels.
  std::uint64_t planted = 0;
};

/// Deterministic in (seed, spec); draws from the instance stream.
RandomInstance random_instance(std::uint64_t seed,
                               const InstanceSpec& spec = {});

}  // namespace qsinn::quantum

#endif  // QSINN_QUANTUM_INSTANCES_HPP
