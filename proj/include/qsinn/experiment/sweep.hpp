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

#ifndef QSINN_EXPERIMENT_SWEEP_HPP
#define QSINN_EXPERIMENT_SWEEP_HPP

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "qsinn/experiment/dataset.hpp"
#include "qsinn/experiment/training.hpp"

namespace qsinn::experiment {

enum class ModelKind { sinnn, dsinnn };

std::string to_string(ModelKind kind);
ModelKind model_from_string(const std::string& name);

struct Architecture {
  int first_width = 10;
  int num_hidden_layers = 3;

  friend bool operator==(const Architecture&, const Architecture&) = default;
};

struct SweepConfig {
  ModelKind model = ModelKind::sinnn;
  std::vector<Architecture> architectures{{10, 3}};
  int seeds = 20;
  /// Seeds run from base_seed to base_seed + seeds - 1.
  std::uint64_t base_seed = 0;
  TrainOptions train;
  DatasetSpec dataset = DatasetSpec::sinnn_default();
  /// One dataset per sweep, shared by every architecture and seed.
  std::uint64_t dataset_seed = 0;
  double first_layer_scale = 20.0;
  BadMinimumRule rule;
  /// 0 picks std::thread::hardware_concurrency().
  int threads = 0;

  /// Throws std::invalid_argument on any broken invariant.
  void validate() const;
  classical::NetworkConfig network(const Architecture& arch) const;
};

struct SeedRecord {
  Architecture arch;
  std::uint64_t seed = 0;
  double final_train_loss = 0.0;
  double final_test_loss = 0.0;
  std::vector<double> loss_history;
  bool bad_train = false;
  bool bad_test = false;
};

struct ArchitectureSummary {
  Architecture arch;
  double global_min_train = 0.0;
  double global_min_test = 0.0;
  double frac_bad_train = 0.0;
  double frac_bad_test = 0.0;
  double frac_good_generalize = 0.0;
};

struct SweepResult {
  /// Sorted by architecture order in the config, then seed.
  std::vector<SeedRecord> records;
  std::vector<ArchitectureSummary> summaries;
};

/// Fills the bad flags of every record and returns per-architecture
/// aggregates. Global minima ignore non-finite losses; an architecture with
/// no finite loss gets NaN minima and every run is bad.
std::vector<ArchitectureSummary> summarize(std::vector<SeedRecord>& records,
                                           const std::vector<Architecture>& archs,
                                           const BadMinimumRule& rule);

/// Trains every (architecture, seed) from init_siren and aggregates.
/// Results do not depend on the thread count.
SweepResult run_sweep(const SweepConfig& config);

void write_sweep_csv(std::ostream& out, const SweepResult& result);
void write_heatmap_csv(std::ostream& out, const SweepResult& result);

}  // namespace qsinn::experiment

#endif  // QSINN_EXPERIMENT_SWEEP_HPP
