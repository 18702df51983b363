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


// Command-line entry point: landscape, train-classical, sweep, brute-force,
// train-quantum and verify-circuits.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qsinn/classical/network.hpp"
#include "qsinn/experiment/csv.hpp"
#include "qsinn/experiment/dataset.hpp"
#include "qsinn/experiment/landscape.hpp"
#include "qsinn/experiment/sweep.hpp"
#include "qsinn/experiment/training.hpp"
#include "qsinn/oracle/bruteforce.hpp"
#include "qsinn/quantum/blocks.hpp"
#include "qsinn/quantum/encoding.hpp"
#include "qsinn/quantum/grover.hpp"
#include "qsinn/quantum/network_circuit.hpp"
#include "qsinn/sim/density.hpp"
#include "qsinn/sim/sparse_state.hpp"

namespace {

namespace fs = std::filesystem;
using nlohmann::json;
using namespace qsinn;

constexpr const char* kVersion = "0.1.0";

/// Raised for invalid user input; maps to exit code 1.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Common {
  std::string config;
  std::uint64_t seed = 0;
  int threads = 0;
  std::string out_dir = ".";
};

struct Run {
  std::string subcommand;
  json artifacts = json::array();
  json results = json::object();
  fs::path dir;

  std::ofstream open(const std::string& name) {
    fs::create_directories(dir);
    const fs::path p = dir / name;
    std::ofstream out(p);
    if (!out) {
      throw ConfigError("cannot write " + p.string());
    }
    artifacts.push_back(p.string());
    return out;
  }
};

void add_common(CLI::App* sub, Common& c) {
  sub->add_option("--config", c.config, "Flat key=value file mirroring flag names");
  sub->add_option("--seed", c.seed, "Master seed")->capture_default_str();
  sub->add_option("--threads", c.threads, "Worker threads (0 = all cores)")
      ->capture_default_str()
      ->check(CLI::NonNegativeNumber);
  sub->add_option("--out-dir", c.out_dir, "Output directory")
      ->capture_default_str();
}

/// Fills options not given on the command line from a key=value file.
void apply_config_file(CLI::App* sub, const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw ConfigError("cannot read config file " + path);
  }
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) {
      line.erase(hash);
    }
    const auto trim = [](std::string v) {
      const auto b = v.find_first_not_of(" \t\r");
      const auto e = v.find_last_not_of(" \t\r");
      return b == std::string::npos ? std::string{} : v.substr(b, e - b + 1);
    };
    line = trim(line);
    if (line.empty()) {
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ConfigError(path + ":" + std::to_string(lineno) + ": expected key=value");
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    CLI::Option* opt = nullptr;
    try {
      opt = sub->get_option("--" + key);
    } catch (const CLI::OptionNotFound&) {
    }
    if (opt == nullptr || key == "config") {
      throw ConfigError(path + ":" + std::to_string(lineno) + ": unknown key '" +
                        key + "' for " + sub->get_name());
    }
    if (opt->count() > 0) {
      continue;
    }
    try {
      opt->add_result(value);
      opt->run_callback();
    } catch (const CLI::Error& e) {
      throw ConfigError(path + ":" + std::to_string(lineno) + ": " + e.what());
    }
  }
}

json resolved_options(const CLI::App* sub) {
  json cfg = json::object();
  for (const CLI::Option* opt : sub->get_options()) {
    const std::string name = opt->get_name(false, true);
    if (name.empty() || name == "--help" || name == "--config" ||
        name.rfind("--", 0) != 0) {
      continue;
    }
    const std::string key = name.substr(2);
    if (opt->count() > 0) {
      const auto& res = opt->results();
      std::string joined;
      for (std::size_t i = 0; i < res.size(); ++i) {
        joined += (i ? "," : "") + res[i];
      }
      cfg[key] = joined;
    } else {
      cfg[key] = opt->get_default_str();
    }
  }
  return cfg;
}

std::vector<quantum::QuantumSample> load_quantum_dataset(
    const std::string& spec) {
  if (spec == "toy") {
    return quantum::toy_quantum_dataset();
  }
  std::ifstream in(spec);
  if (!in) {
    throw ConfigError("cannot read dataset file " + spec);
  }
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return quantum::parse_quantum_dataset(buf.str());
  } catch (const std::invalid_argument& e) {
    throw ConfigError(spec + ": " + e.what());
  }
}

// ------------------------------------------------------------- landscape

struct LandscapeArgs {
  experiment::GridSpec grid;
};

void run_landscape(const LandscapeArgs& a, Run& run) {
  const auto g = experiment::toy_landscape(a.grid);
  auto out = run.open("landscape.csv");
  experiment::write_landscape_csv(out, g);
  const auto minima = experiment::find_local_minima(g);
  int zero = 0;
  json list = json::array();
  for (const auto& m : minima) {
    zero += m.loss < 1e-12 ? 1 : 0;
    list.push_back({{"w1", m.w1}, {"w2", m.w2}, {"loss", m.loss}});
  }
  run.results["global_minima"] = zero;
  run.results["positive_local_minima"] = static_cast<int>(minima.size()) - zero;
  run.results["minima"] = list;
  std::printf("grid %zux%zu: %d zero-loss minima, %d positive local minima\n",
              g.axis.size(), g.axis.size(), zero,
              static_cast<int>(minima.size()) - zero);
}

// ------------------------------------------------------- train-classical

struct ClassicalArgs {
  std::string model = "toy-sinnn";
  int width = 10;
  int layers = 3;
  int seeds = 20;
  double lr = 0.01;
  int epochs = 1000;
  double init_lo = -3.0;
  double init_hi = 3.0;
  double first_scale = 0.0;
  std::uint64_t dataset_seed = 0;
};

void run_train_classical(const ClassicalArgs& a, const Common& c, Run& run) {
  const bool toy = a.model == "toy-sinnn" || a.model == "toy-dsinnn";
  classical::NetworkConfig net;
  experiment::Dataset data;
  if (a.model == "toy-sinnn") {
    net = classical::NetworkConfig::toy_sinnn();
  } else if (a.model == "toy-dsinnn") {
    net = classical::NetworkConfig::toy_dsinnn();
  } else if (a.model == "sinnn") {
    net = classical::NetworkConfig::sinnn(a.width, a.layers,
                                          a.first_scale > 0 ? a.first_scale : 20.0);
  } else if (a.model == "dsinnn") {
    net = classical::NetworkConfig::dsinnn(a.width, a.layers,
                                           a.first_scale > 0 ? a.first_scale : 1.0);
  } else {
    throw ConfigError("unknown model " + a.model);
  }
  if (toy) {
    data = experiment::toy_dataset();
  } else {
    data = experiment::generate_dataset(
        a.model == "sinnn" ? experiment::DatasetSpec::sinnn_default()
                           : experiment::DatasetSpec::dsinnn_default(),
        a.dataset_seed);
  }
  const auto train = data.train();
  const auto test = data.test();
  std::vector<experiment::TrainResult> results;
  std::vector<double> test_losses;
  for (int s = 0; s < a.seeds; ++s) {
    const std::uint64_t seed = c.seed + static_cast<std::uint64_t>(s);
    const auto init = toy ? classical::init_uniform(net, seed, a.init_lo, a.init_hi)
                          : classical::init_siren(net, seed);
    results.push_back(experiment::train_gd(net, init, train, {a.lr, a.epochs}));
    test_losses.push_back(
        test.empty() || results.back().diverged
            ? NAN
            : classical::batch_loss(net, results.back().weights, test));
  }
  // The toy global minimum is exactly 0; otherwise use the best seed.
  double gm = toy ? 0.0 : INFINITY;
  if (!toy) {
    for (const auto& r : results) {
      if (std::isfinite(r.final_loss)) {
        gm = std::min(gm, r.final_loss);
      }
    }
  }
  auto hist = run.open("history.csv");
  hist << "seed,epoch,loss\n";
  auto summary = run.open("training.csv");
  summary << "seed,final_train_loss,final_test_loss,bad_train\n";
  int bad = 0;
  for (int s = 0; s < a.seeds; ++s) {
    const auto& r = results[s];
    const std::uint64_t seed = c.seed + static_cast<std::uint64_t>(s);
    for (std::size_t e = 0; e < r.loss_history.size(); ++e) {
      hist << seed << ',' << e << ','
           << experiment::format_real(r.loss_history[e]) << '\n';
    }
    const bool is_bad = !std::isfinite(gm) ||
                        experiment::classify_bad_minimum(r.final_loss, gm);
    bad += is_bad ? 1 : 0;
    summary << seed << ',' << experiment::format_real(r.final_loss) << ','
            << experiment::format_real(test_losses[s]) << ','
            << (is_bad ? 1 : 0) << '\n';
  }
  run.results["global_min_train"] = gm;
  run.results["bad_runs"] = bad;
  run.results["runs"] = a.seeds;
  std::printf("%s: %d/%d runs in bad minima (global min %.17g)\n",
              a.model.c_str(), bad, a.seeds, gm);
}

// ----------------------------------------------------------------- sweep

struct SweepArgs {
  std::string model = "sinnn";
  std::vector<std::string> archs{"10x3"};
  int seeds = 20;
  double lr = 0.002;
  int epochs = 300;
  double factor = 2.0;
  double margin = 1e-4;
  double first_scale = 0.0;
  std::uint64_t dataset_seed = 0;
};

experiment::Architecture parse_arch(const std::string& s) {
  const auto x = s.find('x');
  try {
    if (x == std::string::npos) {
      throw std::invalid_argument(s);
    }
    return {std::stoi(s.substr(0, x)), std::stoi(s.substr(x + 1))};
  } catch (const std::exception&) {
    throw ConfigError("architecture must look like WIDTHxLAYERS, got " + s);
  }
}

void run_sweep_cmd(const SweepArgs& a, const Common& c, Run& run) {
  experiment::SweepConfig cfg;
  cfg.model = experiment::model_from_string(a.model);
  cfg.architectures.clear();
  for (const auto& s : a.archs) {
    cfg.architectures.push_back(parse_arch(s));
  }
  cfg.seeds = a.seeds;
  cfg.base_seed = c.seed;
  cfg.train = {a.lr, a.epochs};
  cfg.dataset = cfg.model == experiment::ModelKind::sinnn
                    ? experiment::DatasetSpec::sinnn_default()
                    : experiment::DatasetSpec::dsinnn_default();
  cfg.dataset_seed = a.dataset_seed;
  cfg.first_layer_scale =
      a.first_scale > 0 ? a.first_scale
                        : (cfg.model == experiment::ModelKind::sinnn ? 20.0 : 1.0);
  cfg.rule = {a.factor, a.margin};
  cfg.threads = c.threads;
  const auto result = experiment::run_sweep(cfg);
  auto sweep = run.open("sweep.csv");
  experiment::write_sweep_csv(sweep, result);
  auto heat = run.open("heatmap.csv");
  experiment::write_heatmap_csv(heat, result);
  json rows = json::array();
  for (const auto& s : result.summaries) {
    rows.push_back({{"arch_first_width", s.arch.first_width},
                    {"arch_layers", s.arch.num_hidden_layers},
                    {"frac_bad_train", s.frac_bad_train},
                    {"frac_bad_test", s.frac_bad_test},
                    {"frac_good_generalize", s.frac_good_generalize}});
    std::printf("%dx%d: frac_bad_train %.3f frac_bad_test %.3f\n",
                s.arch.first_width, s.arch.num_hidden_layers, s.frac_bad_train,
                s.frac_bad_test);
  }
  run.results["heatmap"] = rows;
}

// ----------------------------------------------------------- brute-force

struct BruteArgs {
  std::string dataset = "toy";
  int hidden = 2;
};

void run_brute_force(const BruteArgs& a, Run& run) {
  const auto data = load_quantum_dataset(a.dataset);
  oracle::CallCounter calls;
  const auto reports = oracle::exhaustive_search(
      quantum::quantum_network(a.hidden), quantum::to_classical(data), &calls);
  auto out = run.open("branches.csv");
  oracle::write_branches_csv(out, reports);
  json best = json::array();
  for (auto b : oracle::maximizers(reports)) {
    best.push_back(b);
  }
  run.results["maximizers"] = best;
  run.results["max_correct"] = reports.front().correct_count;
  run.results["classical_calls"] = calls.forward_calls;
  std::printf("best %s with %d/%zu correct, %llu classical calls\n",
              reports.front().bitstring.c_str(), reports.front().correct_count,
              data.size(), static_cast<unsigned long long>(calls.forward_calls));
}

// --------------------------------------------------------- train-quantum

struct QuantumArgs {
  std::string dataset = "toy";
  int hidden = 2;
  int phase_bits = 0;
  double threshold = 0.0;
  int iterations = 0;
  std::string mode = "compiled";
  std::string variant = "compact";
  std::vector<std::string> dumps;
};

void run_train_quantum(const QuantumArgs& a, Run& run) {
  quantum::QTrainConfig cfg;
  cfg.data = load_quantum_dataset(a.dataset);
  cfg.hidden = a.hidden;
  cfg.phase_bits = a.phase_bits;
  cfg.fixed_threshold = a.threshold;
  cfg.fixed_iterations = a.iterations;
  cfg.mode = a.mode == "gate-level" ? quantum::ExecutionMode::gate_level
                                    : quantum::ExecutionMode::compiled;
  cfg.variant = a.variant == "ancilla" ? quantum::SineVariant::ancilla
                                       : quantum::SineVariant::compact;
  const auto r = quantum::grover_train(cfg);

  json rounds = json::array();
  for (const auto& rep : r.rounds) {
    rounds.push_back({{"threshold_count", rep.threshold_count},
                      {"tau", rep.tau},
                      {"iterations", rep.iterations},
                      {"candidate", rep.candidate},
                      {"candidate_probability", rep.candidate_probability},
                      {"candidate_correct", rep.candidate_correct},
                      {"verified", rep.verified}});
  }
  run.results = {{"improved", r.improved},
                 {"best_bits", r.best_bits},
                 {"best_correct", r.best_correct},
                 {"best_probability", r.best_probability},
                 {"weight_probabilities", r.weight_probabilities},
                 {"phase_bits", r.phase_bits},
                 {"simulated_qubits", r.num_qubits},
                 {"eigenphases", r.eigenphases},
                 {"rounds", rounds},
                 {"grover_iterations", r.calls.grover_iterations},
                 {"pe_invocations", r.calls.pe_invocations},
                 {"classical_verifications", r.calls.classical_verifications},
                 {"classical_bruteforce_calls", r.calls.classical_bruteforce_calls}};
  if (!r.improved) {
    std::printf("no improvement over random: no candidate met any threshold\n");
  } else {
    std::printf("weights %s with probability %.12f (%d/%zu correct), %llu "
                "Grover iterations\n",
                r.best_bits.c_str(), r.best_probability, r.best_correct,
                cfg.data.size(),
                static_cast<unsigned long long>(r.calls.grover_iterations));
  }

  if (a.dumps.empty()) {
    return;
  }
  // Dumps come from one Grover iteration at the chosen threshold.
  const double tau = a.threshold > 0
                         ? a.threshold
                         : quantum::threshold_for_count(
                               static_cast<int>(cfg.data.size()),
                               cfg.data.size(), r.phase_bits);
  const auto layout =
      quantum::QsinnLayout::build(cfg.data, cfg.hidden, r.phase_bits, cfg.variant);
  const auto u = quantum::build_U(layout, cfg.data);
  const auto model =
      cfg.mode == quantum::ExecutionMode::gate_level
          ? quantum::gate_level_model(layout, u)
          : quantum::compiled_model(quantum::extract_eigenphases(layout, u),
                                    cfg.hidden, r.phase_bits);
  const auto snap = quantum::grover_snapshots(model, tau);
  for (const auto& kind : a.dumps) {
    const auto& rho = kind == "phase"    ? snap.phase_after_estimation.rho
                      : kind == "weight" ? snap.weights_after_uncompute.rho
                                         : snap.weights_after_diffusion.rho;
    auto out = run.open("density_" + kind + ".json");
    sim::write_json_dump(out, rho);
  }
}

// ------------------------------------------------------- verify-circuits

void run_verify(Run& run) {
  int sine_pass = 0;
  int sine_fail = 0;
  for (auto variant : {quantum::SineVariant::ancilla,
                       quantum::SineVariant::compact}) {
    for (int n = 1; n <= 4; ++n) {
      for (int m = n; m <= 6; ++m) {
        quantum::PairQubits pair;
        const auto c = quantum::sine_circuit(m, n, variant, &pair);
        const int anc = quantum::sine_ancilla_count(variant, n);
        for (long k = -(1L << m) + 1; k < (1L << m); ++k) {
          const auto e = quantum::encode_numerator(k, n, m);
          sim::SparseState s(c.num_qubits(), e.index() << anc);
          sim::run(c, s);
          const auto out = s.entries()[0].index;
          const auto bit = [&](int q) {
            return (out & sim::qubit_mask(q, c.num_qubits())) ? 1 : 0;
          };
          const int got = quantum::decode_ternary(bit(pair.first), bit(pair.second));
          const int want = classical::ternary_discretize(
              std::sin(std::ldexp(static_cast<double>(k) * std::numbers::pi, -n)));
          (got == want && s.support_size() == 1 ? sine_pass : sine_fail) += 1;
        }
      }
    }
  }
  int plus_pass = 0;
  int plus_fail = 0;
  for (int fan_in = 1; fan_in <= 4; ++fan_in) {
    const auto layout = quantum::PlusCircuitLayout::for_fan_in(fan_in);
    const auto c = quantum::plus_circuit(layout);
    const int w = layout.output_width();
    for (sim::Index in = 0; in < (sim::Index{1} << (2 * fan_in)); ++in) {
      long want = 0;
      for (int j = 0; j < fan_in; ++j) {
        const auto code = (in >> (2 * (fan_in - 1 - j))) & 3;
        want += code == 1 ? 1 : code == 3 ? -1 : 0;
      }
      sim::SparseState s(c.num_qubits(), in << w);
      sim::run(c, s);
      const auto out = s.entries()[0].index;
      const long got =
          quantum::decode_signed(out & ((sim::Index{1} << w) - 1), w - 1);
      (got == want && (out >> w) == in ? plus_pass : plus_fail) += 1;
    }
  }
  run.results = {{"sine_pass", sine_pass}, {"sine_fail", sine_fail},
                 {"plus_pass", plus_pass}, {"plus_fail", plus_fail}};
  std::printf("sine: %d PASS, %d FAIL\nplus: %d PASS, %d FAIL\n", sine_pass,
              sine_fail, plus_pass, plus_fail);
  if (sine_fail + plus_fail > 0) {
    throw std::runtime_error("circuit verification failed");
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sinusoidal network workbench: classical experiments and "
               "Grover-based quantum training on an exact simulator"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  Common common;
  LandscapeArgs land;
  ClassicalArgs cls;
  SweepArgs sw;
  BruteArgs bf;
  QuantumArgs qa;

  auto* landscape = app.add_subcommand("landscape", "Toy loss landscape grid");
  landscape->add_option("--lo", land.grid.lo)->capture_default_str();
  landscape->add_option("--hi", land.grid.hi)->capture_default_str();
  landscape->add_option("--step", land.grid.step)->capture_default_str();

  auto* train = app.add_subcommand("train-classical", "Multi-seed gradient descent");
  train->add_option("--model", cls.model)
      ->check(CLI::IsMember({"toy-sinnn", "toy-dsinnn", "sinnn", "dsinnn"}))
      ->capture_default_str();
  train->add_option("--width", cls.width)->capture_default_str();
  train->add_option("--layers", cls.layers)->capture_default_str();
  train->add_option("--seeds", cls.seeds)->check(CLI::PositiveNumber)->capture_default_str();
  train->add_option("--lr", cls.lr)->capture_default_str();
  train->add_option("--epochs", cls.epochs)->check(CLI::NonNegativeNumber)->capture_default_str();
  train->add_option("--init-lo", cls.init_lo, "Toy init lower bound")->capture_default_str();
  train->add_option("--init-hi", cls.init_hi, "Toy init upper bound")->capture_default_str();
  train->add_option("--first-scale", cls.first_scale, "First-layer scale (0 = model default)")
      ->capture_default_str();
  train->add_option("--dataset-seed", cls.dataset_seed)->capture_default_str();

  auto* sweep = app.add_subcommand("sweep", "Architecture x seed sweep with heatmap");
  sweep->add_option("--model", sw.model)
      ->check(CLI::IsMember({"sinnn", "dsinnn"}))
      ->capture_default_str();
  sweep->add_option("--arch", sw.archs, "WIDTHxLAYERS, repeatable")
      ->delimiter(',')
      ->capture_default_str();
  sweep->add_option("--seeds", sw.seeds)->capture_default_str();
  sweep->add_option("--lr", sw.lr)->capture_default_str();
  sweep->add_option("--epochs", sw.epochs)->capture_default_str();
  sweep->add_option("--factor", sw.factor)->capture_default_str();
  sweep->add_option("--margin", sw.margin)->capture_default_str();
  sweep->add_option("--first-scale", sw.first_scale, "First-layer scale (0 = model default)")
      ->capture_default_str();
  sweep->add_option("--dataset-seed", sw.dataset_seed)->capture_default_str();

  auto* brute = app.add_subcommand("brute-force", "Exhaustive sign search");
  brute->add_option("--dataset", bf.dataset, "toy or a 'k, n, y' file")->capture_default_str();
  brute->add_option("--hidden", bf.hidden)->capture_default_str();

  auto* tq = app.add_subcommand("train-quantum", "Grover training on the simulator");
  tq->add_option("--dataset", qa.dataset, "toy or a 'k, n, y' file")->capture_default_str();
  tq->add_option("--hidden", qa.hidden)->capture_default_str();
  tq->add_option("--phase-bits", qa.phase_bits, "0 = default rule")->capture_default_str();
  tq->add_option("--threshold", qa.threshold, "Fixed tau (0 = descending schedule)")
      ->capture_default_str();
  tq->add_option("--iterations", qa.iterations, "Fixed r (0 = schedule)")->capture_default_str();
  tq->add_option("--mode", qa.mode)
      ->check(CLI::IsMember({"compiled", "gate-level"}))
      ->capture_default_str();
  tq->add_option("--sine-variant", qa.variant)
      ->check(CLI::IsMember({"compact", "ancilla"}))
      ->capture_default_str();
  tq->add_option("--dump-density", qa.dumps, "phase, weight or final; repeatable")
      ->check(CLI::IsMember({"phase", "weight", "final"}));

  auto* verify = app.add_subcommand("verify-circuits",
                                    "Exhaustive sine and plus circuit checks");

  for (auto* sub : {landscape, train, sweep, brute, tq, verify}) {
    add_common(sub, common);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    std::cerr << app.help();
    return 1;
  }

  CLI::App* sub = app.get_subcommands().front();
  Run run;
  run.subcommand = sub->get_name();
  run.dir = common.out_dir;
  const auto start = std::chrono::steady_clock::now();
  try {
    if (!common.config.empty()) {
      apply_config_file(sub, common.config);
      run.dir = common.out_dir;
    }
    if (sub == landscape) {
      run_landscape(land, run);
    } else if (sub == train) {
      run_train_classical(cls, common, run);
    } else if (sub == sweep) {
      run_sweep_cmd(sw, common, run);
    } else if (sub == brute) {
      run_brute_force(bf, run);
    } else if (sub == tq) {
      run_train_quantum(qa, run);
    } else {
      run_verify(run);
    }
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal failure: " << e.what() << '\n';
    return 2;
  }
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  try {
    fs::create_directories(run.dir);
    const fs::path manifest_path = run.dir / (run.subcommand + ".manifest.json");
    json manifest = {{"subcommand", run.subcommand},
                     {"config", resolved_options(sub)},
                     {"seed", common.seed},
                     {"artifacts", run.artifacts},
                     {"results", run.results},
                     {"tool_version", kVersion},
                     {"wall_clock_seconds", seconds}};
    std::ofstream(manifest_path) << manifest.dump(2) << '\n';
  } catch (const std::exception& e) {
    std::cerr << "internal failure: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
