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

#ifndef QSINN_SIM_CIRCUIT_IMPL_HPP
#define QSINN_SIM_CIRCUIT_IMPL_HPP

#include <stdexcept>

namespace qsinn::sim {

template <typename State>
void controlled_unitary_power(State& state, const Circuit& unitary, int power,
                              int control) {
  if (power < 1) {
    throw std::invalid_argument("controlled_unitary_power needs power >= 1");
  }
  const Circuit controlled = unitary.controlled(control);
  for (int p = 0; p < power; ++p) {
    run(controlled, state);
  }
}

}  // namespace qsinn::sim

#endif  // QSINN_SIM_CIRCUIT_IMPL_HPP
