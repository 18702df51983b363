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

#include "qsinn/experiment/landscape.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "qsinn/classical/network.hpp"
#include "qsinn/experiment/csv.hpp"
#include "qsinn/experiment/dataset.hpp"

namespace qsinn::experiment {

std::vector<double> GridSpec::axis() const {
  if (!(step > 0.0) || !std::isfinite(step) || !(hi >= lo)) {
    throw std::invalid_argument("grid needs step > 0 and hi >= lo");
  }
  const long n = std::lround((hi - lo) / step);
  std::vector<double> out(n + 1);
  for (long i = 0; i <= n; ++i) {
    out[i] = lo + static_cast<double>(i) * step;
  }
  return out;
}

LandscapeGrid toy_landscape(const GridSpec& grid) {
  const auto config = classical::NetworkConfig::toy_sinnn();
  const auto batch = toy_dataset().train();
  LandscapeGrid out;
  out.axis = grid.axis();
  const std::size_t n = out.axis.size();
  out.loss.assign(n, std::vector<double>(n));
  classical::WeightSpace w{{0.0, 0.0}};
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      w.values = {out.axis[i], out.axis[j]};
      out.loss[i][j] = classical::batch_loss(config, w, batch);
    }
  }
  return out;
}

std::vector<GridMinimum> find_local_minima(const LandscapeGrid& grid) {
  std::vector<GridMinimum> out;
  const std::size_t n = grid.axis.size();
  for (std::size_t i = 1; i + 1 < n; ++i) {
    for (std::size_t j = 1; j + 1 < n; ++j) {
      const double v = grid.loss[i][j];
      bool strict = true;
      for (int di = -1; di <= 1 && strict; ++di) {
        for (int dj = -1; dj <= 1; ++dj) {
          if ((di != 0 || dj != 0) && !(v < grid.loss[i + di][j + dj])) {
            strict = false;
            break;
          }
        }
      }
      if (strict) {
        out.push_back({i, j, grid.axis[i], grid.axis[j], v});
      }
    }
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const GridMinimum& a, const GridMinimum& b) {
                     return a.loss < b.loss;
                   });
  return out;
}

void write_landscape_csv(std::ostream& out, const LandscapeGrid& grid) {
  out << "w1,w2,loss\n";
  for (std::size_t i = 0; i < grid.axis.size(); ++i) {
    for (std::size_t j = 0; j < grid.axis.size(); ++j) {
      out << format_real(grid.axis[i]) << ',' << format_real(grid.axis[j])
          << ',' << format_real(grid.loss[i][j]) << '\n';
    }
  }
}

}  // namespace qsinn::experiment
