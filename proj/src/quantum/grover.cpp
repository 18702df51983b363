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


#include "qsinn/quantum/grover.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "qsinn/oracle/bruteforce.hpp"
#include "qsinn/sim/sparse_state.hpp"
#include "qsinn/sim/statevector.hpp"

namespace qsinn::quantum {

using sim::Circuit;
using sim::Complex;
using sim::GateOp;
using sim::Index;

namespace {

constexpr int kDenseLimit = 22;
constexpr double kTieTolerance = 1e-9;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

std::vector<int> range(int begin, int count) {
  std::vector<int> out(count);
  for (int i = 0; i < count; ++i) {
    out[i] = begin + i;
  }
  return out;
}

bool use_dense(Backend backend, int num_qubits) {
  if (backend == Backend::automatic) {
    return num_qubits <= kDenseLimit;
  }
  return backend == Backend::dense;
}

Index mask_of(const std::vector<int>& qubits, int num_qubits) {
  Index m = 0;
  for (int q : qubits) {
    m |= sim::qubit_mask(q, num_qubits);
  }
  return m;
}

double leakage(const sim::StateVector& s, Index keep) {
  double out = 0.0;
  const auto& a = s.amplitudes();
  for (Index i = 0; i < static_cast<Index>(a.size()); ++i) {
    if ((i & ~keep) != 0) {
      out += std::norm(a[i]);
    }
  }
  return out;
}

double leakage(const sim::SparseState& s, Index keep) {
  double out = 0.0;
  for (const auto& e : s.entries()) {
    if ((e.index & ~keep) != 0) {
      out += std::norm(e.amplitude);
    }
  }
  return out;
}

std::vector<double> to_vector(const Eigen::VectorXd& v) {
  return {v.data(), v.data() + v.size()};
}

template <typename State>
GroverRun run_on(State state, const UnitaryModel& model, double tau,
                 int iterations) {
  sim::run(weight_superposition(model), state);
  const Circuit step = grover_iteration(model, tau);
  for (int r = 0; r < iterations; ++r) {
    sim::run(step, state);
  }
  GroverRun out;
  out.weight_probabilities =
      to_vector(sim::reduced_density(state, model.weights).probabilities());
  out.ancilla_leakage =
      leakage(state, mask_of(model.weights, model.num_qubits));
  out.norm = state.norm();
  return out;
}

template <typename State>
GroverSnapshots snapshots_on(State state, const UnitaryModel& model,
                             double tau) {
  validate_threshold(tau, static_cast<int>(model.phase.size()));
  sim::run(weight_superposition(model), state);
  const Circuit pe = phase_estimation(model);
  sim::run(pe, state);
  GroverSnapshots out;
  out.phase_after_estimation = sim::reduced_density(state, model.phase);
  state.apply(oracle_pm(model.phase, tau));
  sim::run(pe.inverse(), state);
  out.weights_after_uncompute = sim::reduced_density(state, model.weights);
  sim::run(diffusion(model.num_qubits, model.weights), state);
  out.weights_after_diffusion = sim::reduced_density(state, model.weights);
  out.ancilla_leakage =
      leakage(state, mask_of(model.weights, model.num_qubits));
  return out;
}

}  // namespace

UnitaryModel gate_level_model(const QsinnLayout& layout, Circuit u) {
  UnitaryModel m;
  m.num_qubits = layout.num_qubits;
  m.phase = layout.phase;
  m.weights = layout.weights;
  m.controlled_power = [u = std::move(u)](Circuit& c, int control,
                                          std::uint64_t power) {
    const Circuit cu = u.controlled(control);
    for (std::uint64_t p = 0; p < power; ++p) {
      c.append(cu);
    }
  };
  return m;
}

UnitaryModel compiled_model(const std::vector<double>& phases, int hidden,
                            int phase_bits) {
  if (phases.size() != (std::size_t{1} << hidden) || phase_bits < 1) {
    throw std::invalid_argument("compiled model needs 2^hidden phases");
  }
  UnitaryModel m;
  m.num_qubits = phase_bits + hidden;
  m.phase = range(0, phase_bits);
  m.weights = range(phase_bits, hidden);
  m.controlled_power = [phases, weights = m.weights](
                           Circuit& c, int control, std::uint64_t power) {
    const auto dim = static_cast<Eigen::Index>(phases.size());
    Eigen::MatrixXcd d = Eigen::MatrixXcd::Zero(dim, dim);
    for (Eigen::Index w = 0; w < dim; ++w) {
      const double angle =
          std::fmod(static_cast<double>(power) * phases[w], kTwoPi);
      d(w, w) = std::polar(1.0, angle);
    }
    c.add(GateOp::unitary(weights, d, {control}));
  };
  return m;
}

Circuit qft(int num_qubits, const std::vector<int>& reg) {
  Circuit c(num_qubits);
  const int n = static_cast<int>(reg.size());
  for (int i = 0; i < n; ++i) {
    c.add(GateOp::h(reg[i]));
    for (int j = i + 1; j < n; ++j) {
      c.add(GateOp::phase(reg[i], kTwoPi / std::ldexp(1.0, j - i + 1),
                          {reg[j]}));
    }
  }
  for (int i = 0; i < n / 2; ++i) {
    c.add(GateOp::swap(reg[i], reg[n - 1 - i]));
  }
  return c;
}

Circuit phase_estimation(const UnitaryModel& model) {
  Circuit c(model.num_qubits);
  const int n = static_cast<int>(model.phase.size());
  for (int q : model.phase) {
    c.add(GateOp::h(q));
  }
  for (int i = 0; i < n; ++i) {
    model.controlled_power(c, model.phase[i], std::uint64_t{1} << (n - 1 - i));
  }
  c.append(qft(model.num_qubits, model.phase).inverse());
  return c;
}

void validate_threshold(double tau, int phase_bits) {
  if (phase_bits < 1 || phase_bits > 20) {
    throw std::invalid_argument("phase bits must lie in [1, 20]");
  }
  const double scaled = std::ldexp(tau, phase_bits);
  if (!(tau > 0.0 && tau < 1.0) ||
      std::abs(scaled - std::round(scaled)) > 1e-9) {
    throw std::invalid_argument(
        "threshold must lie in (0, 1) on the phase-register grid");
  }
}

GateOp oracle_pm(const std::vector<int>& phase, double tau) {
  const int n = static_cast<int>(phase.size());
  validate_threshold(tau, n);
  const auto first = static_cast<Eigen::Index>(std::llround(std::ldexp(tau, n)));
  const Eigen::Index dim = Eigen::Index{1} << n;
  Eigen::MatrixXcd d = Eigen::MatrixXcd::Identity(dim, dim);
  for (Eigen::Index j = first; j < dim; ++j) {
    d(j, j) = -1.0;
  }
  return GateOp::unitary(phase, d);
}

Circuit diffusion(int num_qubits, const std::vector<int>& weights) {
  if (weights.empty()) {
    throw std::invalid_argument("diffusion needs at least one qubit");
  }
  Circuit c(num_qubits);
  for (int q : weights) {
    c.add(GateOp::h(q));
  }
  for (int q : weights) {
    c.add(GateOp::x(q));
  }
  std::vector<int> controls(weights.begin(), weights.end() - 1);
  c.add(GateOp::phase(weights.back(), std::numbers::pi, controls));
  for (int q : weights) {
    c.add(GateOp::x(q));
  }
  c.add(GateOp::unitary({weights.front()}, -Eigen::MatrixXcd::Identity(2, 2)));
  for (int q : weights) {
    c.add(GateOp::h(q));
  }
  return c;
}

Circuit grover_iteration(const UnitaryModel& model, double tau) {
  const Circuit pe = phase_estimation(model);
  Circuit c(model.num_qubits);
  c.append(pe);
  c.add(oracle_pm(model.phase, tau));
  c.append(pe.inverse());
  c.append(diffusion(model.num_qubits, model.weights));
  return c;
}

Circuit weight_superposition(const UnitaryModel& model) {
  Circuit c(model.num_qubits);
  for (int q : model.weights) {
    c.add(GateOp::h(q));
  }
  return c;
}

GroverRun run_grover(const UnitaryModel& model, double tau, int iterations,
                     Backend backend) {
  if (iterations < 0) {
    throw std::invalid_argument("iterations must be >= 0");
  }
  validate_threshold(tau, static_cast<int>(model.phase.size()));
  if (use_dense(backend, model.num_qubits)) {
    return run_on(sim::StateVector(model.num_qubits), model, tau, iterations);
  }
  return run_on(sim::SparseState(model.num_qubits), model, tau, iterations);
}

GroverSnapshots grover_snapshots(const UnitaryModel& model, double tau,
                                 Backend backend) {
  if (use_dense(backend, model.num_qubits)) {
    return snapshots_on(sim::StateVector(model.num_qubits), model, tau);
  }
  return snapshots_on(sim::SparseState(model.num_qubits), model, tau);
}

double threshold_for_count(int count, std::size_t num_pairs, int phase_bits) {
  if (count < 1 || static_cast<std::size_t>(count) > num_pairs) {
    throw std::invalid_argument("threshold count must lie in [1, N]");
  }
  const double grid = std::ldexp(1.0, phase_bits);
  const double exact =
      grid * (count - 0.5) / (2.0 * static_cast<double>(num_pairs));
  return std::ceil(exact - 1e-12) / grid;
}

namespace {

std::vector<int> iteration_schedule(int hidden, int fixed) {
  if (fixed > 0) {
    return {fixed};
  }
  const int cap = static_cast<int>(
      std::ceil(std::numbers::pi / 4.0 * std::sqrt(std::ldexp(1.0, hidden))));
  std::vector<int> out;
  for (int r = 1; r <= cap;
       r = std::max(r + 1, static_cast<int>(std::ceil(1.28 * r)))) {
    out.push_back(r);
  }
  return out;
}

std::string bits_of(std::uint64_t v, int width) {
  std::string s(width, '0');
  for (int q = 0; q < width; ++q) {
    if ((v >> (width - 1 - q)) & 1) {
      s[q] = '1';
    }
  }
  return s;
}

}  // namespace

QTrainResult grover_train(const QTrainConfig& config) {
  const std::size_t n_pairs = config.data.size();
  if (n_pairs == 0) {
    throw std::invalid_argument("quantum training needs at least one pair");
  }
  if (!(config.delta > 0.0)) {
    throw std::invalid_argument("delta must be positive");
  }
  QTrainResult result;
  result.phase_bits = config.phase_bits > 0 ? config.phase_bits
                                            : default_phase_bits(n_pairs);
  const QsinnLayout layout = QsinnLayout::build(
      config.data, config.hidden, result.phase_bits, config.variant);
  Circuit u = build_U(layout, config.data);
  UnitaryModel model;
  if (config.mode == ExecutionMode::gate_level) {
    model = gate_level_model(layout, std::move(u));
  } else {
    result.eigenphases = extract_eigenphases(layout, u);
    model = compiled_model(result.eigenphases, config.hidden,
                           result.phase_bits);
  }
  result.num_qubits = model.num_qubits;

  const auto net = quantum_network(config.hidden);
  const auto samples = to_classical(config.data);
  result.calls.classical_bruteforce_calls =
      static_cast<std::uint64_t>(n_pairs) << config.hidden;

  struct Threshold {
    int count;
    double tau;
  };
  std::vector<Threshold> thresholds;
  if (config.fixed_threshold > 0.0) {
    validate_threshold(config.fixed_threshold, result.phase_bits);
    const int count = static_cast<int>(
        std::ceil(config.fixed_threshold * 2.0 * n_pairs - 1e-9));
    thresholds.push_back({count, config.fixed_threshold});
  } else {
    const int rounds = std::max(
        1, static_cast<int>(std::ceil(std::log2(n_pairs / config.delta))));
    const int n = static_cast<int>(n_pairs);
    for (int c = n; c >= 1 && c > n - rounds; --c) {
      thresholds.push_back(
          {c, threshold_for_count(c, n_pairs, result.phase_bits)});
    }
  }

  const auto schedule =
      iteration_schedule(config.hidden, config.fixed_iterations);
  GroverRun last;
  for (const auto& th : thresholds) {
    bool found = false;
    for (int r : schedule) {
      GroverRun run = run_grover(model, th.tau, r, config.backend);
      result.calls.grover_iterations += r;
      result.calls.pe_invocations += r;
      RoundReport rep;
      rep.threshold_count = th.count;
      rep.tau = th.tau;
      rep.iterations = r;
      // Strings tied at the top probability are verified in ascending
      // order, as repeated measurement would eventually do.
      const auto& probs = run.weight_probabilities;
      const double top = *std::max_element(probs.begin(), probs.end());
      bool first = true;
      for (std::uint64_t w = 0; w < probs.size(); ++w) {
        if (probs[w] < top - kTieTolerance) {
          continue;
        }
        const int correct = oracle::correct_count(net, w, samples);
        ++result.calls.classical_verifications;
        if (first || correct >= th.count) {
          rep.candidate = w;
          rep.candidate_probability = probs[w];
          rep.candidate_correct = correct;
          first = false;
        }
        if (correct >= th.count) {
          break;
        }
      }
      rep.verified = rep.candidate_correct >= th.count;
      result.rounds.push_back(rep);
      if (rep.verified && (!found || rep.candidate_probability >
                                         result.best_probability)) {
        found = true;
        result.best = rep.candidate;
        result.best_correct = rep.candidate_correct;
        result.best_probability = rep.candidate_probability;
        result.weight_probabilities = run.weight_probabilities;
      } else if (found) {
        break;
      }
      last = std::move(run);
    }
    if (found) {
      result.improved = true;
      break;
    }
  }
  if (!result.improved) {
    result.weight_probabilities = last.weight_probabilities;
    result.best = result.rounds.empty() ? 0 : result.rounds.back().candidate;
    result.best_correct =
        result.rounds.empty() ? 0 : result.rounds.back().candidate_correct;
    result.best_probability =
        result.rounds.empty() ? 0.0 : result.rounds.back().candidate_probability;
  }
  result.best_bits = bits_of(result.best, config.hidden);
  return result;
}

}  // namespace qsinn::quantum
