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

#include <cmath>
#include <numbers>
#include <set>
#include <sstream>

#include <gtest/gtest.h>

#include "qsinn/experiment/csv.hpp"
#include "qsinn/experiment/dataset.hpp"
#include "qsinn/experiment/landscape.hpp"
#include "qsinn/experiment/sweep.hpp"
#include "qsinn/experiment/training.hpp"

namespace qsinn::experiment {
namespace {

using classical::NetworkConfig;
using classical::WeightSpace;
using std::numbers::pi;

TEST(Dataset, ToyPairsAreFixed) {
  const auto d = toy_dataset();
  ASSERT_EQ(d.samples.size(), 4u);
  EXPECT_DOUBLE_EQ(d.samples[0].x, -1.5 * pi);
  EXPECT_EQ(d.samples[0].y, 2.0);
  EXPECT_EQ(d.samples[1].y, -2.0);
  EXPECT_EQ(d.samples[2].y, 2.0);
  EXPECT_DOUBLE_EQ(d.samples[3].x, 1.5 * pi);
  EXPECT_EQ(d.samples[3].y, -2.0);
  EXPECT_EQ(d.train().size(), 4u);
  EXPECT_TRUE(d.test().empty());
}

TEST(Dataset, SinnnSplitAndRange) {
  const auto d = generate_dataset(DatasetSpec::sinnn_default(), 7);
  EXPECT_EQ(d.samples.size(), 200u);
  EXPECT_EQ(d.train_indices.size(), 160u);
  EXPECT_EQ(d.test_indices.size(), 40u);
  std::set<std::size_t> all(d.train_indices.begin(), d.train_indices.end());
  all.insert(d.test_indices.begin(), d.test_indices.end());
  EXPECT_EQ(all.size(), 200u);
  for (const auto& s : d.samples) {
    EXPECT_GE(s.x, -1.0);
    EXPECT_LE(s.x, 1.0);
    const double raw = s.x * 3.5 * pi;
    EXPECT_NEAR(s.y, evaluate_target(TargetFunction::sine_sum, raw), 1e-9);
  }
}

TEST(Dataset, DsinnnTargetsAreSmallIntegers) {
  const auto d = generate_dataset(DatasetSpec::dsinnn_default(), 3);
  for (const auto& s : d.samples) {
    EXPECT_GE(s.x, -7.0 * pi);
    EXPECT_LT(s.x, 7.0 * pi);
    EXPECT_EQ(s.y, std::round(s.y));
    EXPECT_GE(s.y, -5.0);
    EXPECT_LE(s.y, 5.0);
  }
}

TEST(Dataset, DeterministicPerSeed) {
  const auto a = generate_dataset(DatasetSpec::sinnn_default(), 11);
  const auto b = generate_dataset(DatasetSpec::sinnn_default(), 11);
  const auto c = generate_dataset(DatasetSpec::sinnn_default(), 12);
  EXPECT_EQ(a.samples[5].x, b.samples[5].x);
  EXPECT_EQ(a.test_indices, b.test_indices);
  EXPECT_NE(a.samples[5].x, c.samples[5].x);
}

TEST(Dataset, RejectsBadSpecs) {
  DatasetSpec s;
  s.count = 1;
  EXPECT_THROW(generate_dataset(s, 0), std::invalid_argument);
  s = DatasetSpec{};
  s.hi = s.lo;
  EXPECT_THROW(generate_dataset(s, 0), std::invalid_argument);
  s = DatasetSpec{};
  s.split_fraction = 1.0;
  EXPECT_THROW(generate_dataset(s, 0), std::invalid_argument);
  EXPECT_THROW(target_from_string("cosine"), std::invalid_argument);
}

TEST(Training, GlobalMinimumIsStationary) {
  const auto cfg = NetworkConfig::toy_sinnn();
  const auto batch = toy_dataset().train();
  const auto r = train_gd(cfg, WeightSpace{{1.0, 1.0}}, batch, {0.01, 100});
  EXPECT_NEAR(r.weights.values[0], 1.0, 1e-12);
  EXPECT_NEAR(r.weights.values[1], 1.0, 1e-12);
  EXPECT_NEAR(r.final_loss, 0.0, 1e-24);
  EXPECT_EQ(r.loss_history.size(), 101u);
  EXPECT_FALSE(r.diverged);
}

TEST(Training, DiscreteToyPositiveOrthantReachesZero) {
  const auto cfg = NetworkConfig::toy_dsinnn();
  const auto batch = toy_dataset().train();
  for (double a : {0.1, 0.7, 2.5}) {
    for (double b : {0.3, 1.9}) {
      const auto r = train_gd(cfg, WeightSpace{{a, b}}, batch, {0.01, 50});
      EXPECT_EQ(r.final_loss, 0.0);
    }
  }
}

TEST(Training, LossDecreasesOnSmallSinnn) {
  const auto cfg = NetworkConfig::sinnn(6, 2);
  const auto data = generate_dataset(DatasetSpec::sinnn_default(), 1);
  const auto r =
      train_gd(cfg, classical::init_siren(cfg, 4), data.train(), {0.002, 50});
  EXPECT_LT(r.final_loss, r.loss_history.front());
}

TEST(Training, DivergenceIsRecordedNotThrown) {
  const auto cfg = NetworkConfig::sinnn(6, 2);
  const auto data = generate_dataset(DatasetSpec::sinnn_default(), 1);
  const auto r =
      train_gd(cfg, classical::init_siren(cfg, 4), data.train(), {1e300, 5});
  EXPECT_TRUE(r.diverged);
  EXPECT_FALSE(std::isfinite(r.final_loss));
}

TEST(Training, RejectsBadOptions) {
  const auto cfg = NetworkConfig::toy_sinnn();
  const auto batch = toy_dataset().train();
  EXPECT_THROW(train_gd(cfg, WeightSpace{{1, 1}}, batch, {0.0, 1}),
               std::invalid_argument);
  EXPECT_THROW(train_gd(cfg, WeightSpace{{1, 1}}, {}, {0.1, 1}),
               std::invalid_argument);
}

TEST(BadMinimum, Examples) {
  EXPECT_TRUE(classify_bad_minimum(0.5, 0.2, {2.0, 1e-4}));
  EXPECT_FALSE(classify_bad_minimum(0.00005, 0.0, {2.0, 1e-4}));
  EXPECT_FALSE(classify_bad_minimum(0.3, 0.2, {2.0, 1e-4}));
  EXPECT_TRUE(classify_bad_minimum(NAN, 0.2));
  EXPECT_THROW(classify_bad_minimum(0.1, -1.0), std::invalid_argument);
}

TEST(BadMinimum, MonotoneInLoss) {
  for (double gm : {0.0, 1e-5, 0.01, 0.3}) {
    bool seen_bad = false;
    for (double loss = gm; loss < gm + 2.0; loss += 1e-3) {
      const bool bad = classify_bad_minimum(loss, gm);
      EXPECT_FALSE(seen_bad && !bad);
      seen_bad = seen_bad || bad;
    }
    EXPECT_TRUE(seen_bad);
  }
}

TEST(Sweep, SingleSeedIsNeverBad) {
  SweepConfig cfg;
  cfg.architectures = {{6, 2}};
  cfg.seeds = 1;
  cfg.train.epochs = 10;
  const auto r = run_sweep(cfg);
  ASSERT_EQ(r.summaries.size(), 1u);
  EXPECT_EQ(r.summaries[0].frac_bad_train, 0.0);
  EXPECT_EQ(r.summaries[0].frac_bad_test, 0.0);
  EXPECT_EQ(r.summaries[0].frac_good_generalize, 1.0);
}

TEST(Sweep, AggregationIsPureAndThreadIndependent) {
  SweepConfig cfg;
  cfg.architectures = {{6, 2}, {5, 1}};
  cfg.seeds = 4;
  cfg.train.epochs = 20;
  cfg.threads = 1;
  const auto a = run_sweep(cfg);
  cfg.threads = 3;
  const auto b = run_sweep(cfg);
  ASSERT_EQ(a.records.size(), 8u);
  for (std::size_t k = 0; k < a.records.size(); ++k) {
    EXPECT_EQ(a.records[k].final_train_loss, b.records[k].final_train_loss);
    EXPECT_EQ(a.records[k].seed, b.records[k].seed);
  }
  auto records = a.records;
  const auto again = summarize(records, cfg.architectures, cfg.rule);
  for (std::size_t s = 0; s < again.size(); ++s) {
    EXPECT_EQ(again[s].frac_bad_train, a.summaries[s].frac_bad_train);
    EXPECT_EQ(again[s].global_min_test, a.summaries[s].global_min_test);
    EXPECT_LT(again[s].frac_bad_train, 1.0);
    EXPECT_GE(again[s].frac_good_generalize, 0.0);
    EXPECT_LE(again[s].frac_good_generalize, 1.0);
  }
}

TEST(Sweep, SummarizeHandMadeRecords) {
  const Architecture arch{3, 1};
  std::vector<SeedRecord> rs(4);
  const double train[] = {0.1, 0.15, 0.5, NAN};
  const double test[] = {0.2, 0.9, 0.3, NAN};
  for (int k = 0; k < 4; ++k) {
    rs[k].arch = arch;
    rs[k].seed = k;
    rs[k].final_train_loss = train[k];
    rs[k].final_test_loss = test[k];
  }
  const auto s = summarize(rs, {arch}, {});
  EXPECT_EQ(s[0].global_min_train, 0.1);
  EXPECT_EQ(s[0].global_min_test, 0.2);
  EXPECT_EQ(s[0].frac_bad_train, 0.5);
  EXPECT_EQ(s[0].frac_bad_test, 0.5);
  EXPECT_EQ(s[0].frac_good_generalize, 0.5);
}

TEST(Sweep, CsvSchemas) {
  SweepConfig cfg;
  cfg.architectures = {{5, 1}};
  cfg.seeds = 2;
  cfg.train.epochs = 2;
  const auto r = run_sweep(cfg);
  std::ostringstream sweep;
  write_sweep_csv(sweep, r);
  EXPECT_EQ(sweep.str().substr(0, sweep.str().find('\n')),
            "arch_first_width,arch_layers,seed,final_train_loss,"
            "final_test_loss,bad_train,bad_test");
  std::ostringstream heat;
  write_heatmap_csv(heat, r);
  EXPECT_EQ(heat.str().substr(0, heat.str().find('\n')),
            "arch_first_width,arch_layers,frac_bad_train,frac_bad_test,"
            "frac_good_generalize,global_min_train,global_min_test");
  EXPECT_EQ(format_real(0.1), "0.10000000000000001");
}

TEST(Sweep, RejectsBadConfig) {
  SweepConfig cfg;
  cfg.seeds = 0;
  EXPECT_THROW(run_sweep(cfg), std::invalid_argument);
  cfg = SweepConfig{};
  cfg.rule.factor = 1.0;
  EXPECT_THROW(run_sweep(cfg), std::invalid_argument);
}

TEST(Landscape, ZeroAtOptimumAndSymmetric) {
  const auto g = toy_landscape({});
  ASSERT_EQ(g.axis.size(), 121u);
  EXPECT_EQ(g.axis[80], 1.0);
  EXPECT_NEAR(g.loss[80][80], 0.0, 1e-12);
  for (std::size_t i = 0; i < g.axis.size(); ++i) {
    for (std::size_t j = 0; j < g.axis.size(); ++j) {
      EXPECT_EQ(g.loss[i][j], g.loss[j][i]);
    }
  }
}

TEST(Landscape, PeriodFourAlongEachAxis) {
  // Step 0.25 keeps every grid point exact, so the shift is exact too.
  const auto g = toy_landscape({-3.0, 5.0, 0.25});
  for (std::size_t i = 0; i + 16 < g.axis.size(); ++i) {
    for (std::size_t j = 0; j < g.axis.size(); ++j) {
      EXPECT_NEAR(g.loss[i][j], g.loss[i + 16][j], 1e-12);
      EXPECT_NEAR(g.loss[j][i], g.loss[j][i + 16], 1e-12);
    }
  }
}

TEST(Landscape, OneGlobalAndAtLeastEightLocalMinima) {
  const auto minima = find_local_minima(toy_landscape({}));
  ASSERT_FALSE(minima.empty());
  EXPECT_NEAR(minima[0].loss, 0.0, 1e-12);
  EXPECT_DOUBLE_EQ(minima[0].w1, 1.0);
  EXPECT_DOUBLE_EQ(minima[0].w2, 1.0);
  int zero = 0;
  int positive = 0;
  for (const auto& m : minima) {
    (m.loss < 1e-12 ? zero : positive) += 1;
  }
  EXPECT_EQ(zero, 1);
  EXPECT_GE(positive, 8);
}

TEST(Landscape, CsvHeader) {
  std::ostringstream out;
  write_landscape_csv(out, toy_landscape({0.0, 0.1, 0.05}));
  EXPECT_EQ(out.str().substr(0, 11), "w1,w2,loss\n");
  EXPECT_THROW(GridSpec({0.0, 1.0, 0.0}).axis(), std::invalid_argument);
}

}  // namespace
}  // namespace qsinn::experiment
