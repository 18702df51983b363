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

#ifndef QSINN_EXPERIMENT_LANDSCAPE_HPP
#define QSINN_EXPERIMENT_LANDSCAPE_HPP

#include <ostream>
#include <vector>

namespace qsinn::experiment {

struct GridSpec {
  double lo = -3.0;
  double hi = 3.0;
  double step = 0.05;

  /// lo + i * step for i = 0 .. round((hi - lo) / step). Throws on a
  /// non-positive step or hi < lo.
  std::vector<double> axis() const;
};

/// Toy continuous loss on a square grid; loss[i][j] is at (axis[i], axis[j]).
struct LandscapeGrid {
  std::vector<double> axis;
  std::vector<std::vector<double>> loss;
};

struct GridMinimum {
  std::size_t i = 0;
  std::size_t j = 0;
  double w1 = 0.0;
  double w2 = 0.0;
  double loss = 0.0;
};

LandscapeGrid toy_landscape(const GridSpec& grid);

/// Interior points strictly below all eight neighbours, ascending by loss.
std::vector<GridMinimum> find_local_minima(const LandscapeGrid& grid);

/// Columns w1, w2, loss.
void write_landscape_csv(std::ostream& out, const LandscapeGrid& grid);

}  // namespace qsinn::experiment

#endif  // QSINN_EXPERIMENT_LANDSCAPE_HPP
