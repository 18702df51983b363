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

#include "qsinn/experiment/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <thread>

#include "qsinn/experiment/csv.hpp"

namespace qsinn::experiment {

std::string to_string(ModelKind kind) {
  return kind == ModelKind::sinnn ? "sinnn" : "dsinnn";
}

ModelKind model_from_string(const std::string& name) {
  if (name == "sinnn") {
    return ModelKind::sinnn;
  }
  if (name == "dsinnn") {
    return ModelKind::dsinnn;
  }
  throw std::invalid_argument("unknown model '" + name + "'");
}

void SweepConfig::validate() const {
  if (architectures.empty()) {
    throw std::invalid_argument("sweep needs at least one architecture");
  }
  for (const auto& a : architectures) {
    if (a.first_width < 1 || a.num_hidden_layers < 1) {
      throw std::invalid_argument("architecture needs width >= 1, layers >= 1");
    }
  }
  if (seeds < 1) {
    throw std::invalid_argument("seeds must be >= 1");
  }
  if (train.epochs < 1) {
    throw std::invalid_argument("epochs must be >= 1");
  }
  if (!(train.learning_rate > 0.0) || !std::isfinite(train.learning_rate)) {
    throw std::invalid_argument("learning rate must be positive and finite");
  }
  if (!(rule.factor > 1.0)) {
    throw std::invalid_argument("bad-minimum factor must exceed 1");
  }
  if (!(rule.margin >= 0.0)) {
    throw std::invalid_argument("bad-minimum margin must be >= 0");
  }
  if (threads < 0) {
    throw std::invalid_argument("threads must be >= 0");
  }
}

classical::NetworkConfig SweepConfig::network(const Architecture& arch) const {
  return model == ModelKind::sinnn
             ? classical::NetworkConfig::sinnn(arch.first_width,
                                               arch.num_hidden_layers,
                                               first_layer_scale)
             : classical::NetworkConfig::dsinnn(arch.first_width,
                                                arch.num_hidden_layers,
                                                first_layer_scale);
}

namespace {

double finite_min(const std::vector<SeedRecord>& records, std::size_t begin,
                  std::size_t end, bool test) {
  double m = std::numeric_limits<double>::infinity();
  for (std::size_t k = begin; k < end; ++k) {
    const double v =
        test ? records[k].final_test_loss : records[k].final_train_loss;
    if (std::isfinite(v)) {
      m = std::min(m, v);
    }
  }
  return std::isfinite(m) ? m : std::numeric_limits<double>::quiet_NaN();
}

bool is_bad(double loss, double global_min, const BadMinimumRule& rule) {
  return std::isnan(global_min) || classify_bad_minimum(loss, global_min, rule);
}

}  // namespace

std::vector<ArchitectureSummary> summarize(
    std::vector<SeedRecord>& records, const std::vector<Architecture>& archs,
    const BadMinimumRule& rule) {
  std::vector<ArchitectureSummary> out;
  std::size_t begin = 0;
  for (const auto& arch : archs) {
    std::size_t end = begin;
    while (end < records.size() && records[end].arch == arch) {
      ++end;
    }
    if (end == begin) {
      throw std::invalid_argument("records missing for an architecture");
    }
    ArchitectureSummary s;
    s.arch = arch;
    s.global_min_train = finite_min(records, begin, end, false);
    s.global_min_test = finite_min(records, begin, end, true);
    int bad_train = 0;
    int bad_test = 0;
    int good_train = 0;
    int good_both = 0;
    for (std::size_t k = begin; k < end; ++k) {
      auto& r = records[k];
      r.bad_train = is_bad(r.final_train_loss, s.global_min_train, rule);
      r.bad_test = is_bad(r.final_test_loss, s.global_min_test, rule);
      bad_train += r.bad_train;
      bad_test += r.bad_test;
      if (!r.bad_train) {
        ++good_train;
        good_both += !r.bad_test;
      }
    }
    const double n = static_cast<double>(end - begin);
    s.frac_bad_train = bad_train / n;
    s.frac_bad_test = bad_test / n;
    s.frac_good_generalize =
        good_train > 0 ? static_cast<double>(good_both) / good_train : 0.0;
    out.push_back(s);
    begin = end;
  }
  if (begin != records.size()) {
    throw std::invalid_argument("records do not match architecture order");
  }
  return out;
}

SweepResult run_sweep(const SweepConfig& config) {
  config.validate();
  const Dataset data = generate_dataset(config.dataset, config.dataset_seed);
  const auto train = data.train();
  const auto test = data.test();

  SweepResult result;
  for (const auto& arch : config.architectures) {
    for (int s = 0; s < config.seeds; ++s) {
      SeedRecord r;
      r.arch = arch;
      r.seed = config.base_seed + static_cast<std::uint64_t>(s);
      result.records.push_back(r);
    }
  }

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k = next++; k < result.records.size(); k = next++) {
      auto& r = result.records[k];
      const auto net = config.network(r.arch);
      auto trained = train_gd(net, classical::init_siren(net, r.seed), train,
                              config.train);
      r.final_train_loss = trained.final_loss;
      r.loss_history = std::move(trained.loss_history);
      if (trained.diverged || test.empty()) {
        r.final_test_loss = std::numeric_limits<double>::quiet_NaN();
      } else {
        try {
          r.final_test_loss = classical::batch_loss(net, trained.weights, test);
        } catch (const std::invalid_argument&) {
          r.final_test_loss = std::numeric_limits<double>::quiet_NaN();
        }
      }
    }
  };
  unsigned n_threads = config.threads > 0
                           ? static_cast<unsigned>(config.threads)
                           : std::max(1u, std::thread::hardware_concurrency());
  n_threads = static_cast<unsigned>(
      std::min<std::size_t>(n_threads, result.records.size()));
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 1; t < n_threads; ++t) {
      pool.emplace_back(worker);
    }
    worker();
  }
  result.summaries =
      summarize(result.records, config.architectures, config.rule);
  return result;
}

void write_sweep_csv(std::ostream& out, const SweepResult& result) {
  out << "arch_first_width,arch_layers,seed,final_train_loss,final_test_loss,"
         "bad_train,bad_test\n";
  for (const auto& r : result.records) {
    out << r.arch.first_width << ',' << r.arch.num_hidden_layers << ','
        << r.seed << ',' << format_real(r.final_train_loss) << ','
        << format_real(r.final_test_loss) << ',' << (r.bad_train ? 1 : 0)
        << ',' << (r.bad_test ? 1 : 0) << '\n';
  }
}

void write_heatmap_csv(std::ostream& out, const SweepResult& result) {
  out << "arch_first_width,arch_layers,frac_bad_train,frac_bad_test,"
         "frac_good_generalize,global_min_train,global_min_test\n";
  for (const auto& s : result.summaries) {
    out << s.arch.first_width << ',' << s.arch.num_hidden_layers << ','
        << format_real(s.frac_bad_train) << ',' << format_real(s.frac_bad_test)
        << ',' << format_real(s.frac_good_generalize) << ','
        << format_real(s.global_min_train) << ','
        << format_real(s.global_min_test) << '\n';
  }
}

}  // namespace qsinn::experiment
