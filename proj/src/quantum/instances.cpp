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


#include "qsinn/quantum/instances.hpp"

#include <cstdlib>
#include <stdexcept>

#include "qsinn/classical/network.hpp"
#include "qsinn/classical/rng.hpp"
#include "qsinn/quantum/network_circuit.hpp"

namespace qsinn::quantum {

RandomInstance random_instance(std::uint64_t seed, const InstanceSpec& spec) {
  if (spec.min_hidden < 1 || spec.max_hidden < spec.min_hidden ||
      spec.min_pairs < 1 || spec.max_pairs < spec.min_pairs ||
      spec.max_scale < 1 || spec.max_scale > 4) {
    throw std::invalid_argument("invalid instance spec");
  }
  classical::CounterStream rng(seed, classical::kInstanceStream);
  auto between = [&rng](long lo, long hi) {
    return lo + static_cast<long>(rng.below(static_cast<std::uint64_t>(hi - lo + 1)));
  };
  RandomInstance inst;
  inst.hidden = static_cast<int>(between(spec.min_hidden, spec.max_hidden));
  const int pairs = static_cast<int>(between(spec.min_pairs, spec.max_pairs));
  inst.planted = rng.below(std::uint64_t{1} << inst.hidden);
  const auto net = quantum_network(inst.hidden);
  const auto w =
      classical::WeightSpace::from_sign_index(inst.planted, inst.hidden);
  for (int i = 0; i < pairs; ++i) {
    QuantumSample s;
    s.n = static_cast<int>(between(1, spec.max_scale));
    const long bound = 2L << s.n;
    s.k = between(-bound, bound);
    s.y = classical::dsinnn_forward(net, w, s.x());
    if (rng.uniform() < spec.corruption) {
      const long step = rng.below(2) == 0 ? -1 : 1;
      s.y = std::labs(s.y + step) <= inst.hidden ? s.y + step : s.y - step;
    }
    inst.data.push_back(s);
  }
  return inst;
}

}  // namespace qsinn::quantum
