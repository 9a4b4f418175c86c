#include "schnorr/vqe.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <iomanip>
#include <numbers>
#include <sstream>

#include "schnorr/error.hpp"
#include "schnorr/nelder_mead.hpp"
#include "schnorr/random.hpp"

namespace schnorr {
namespace {

void apply_ry(StateVector& state, int n, int qubit, double theta) {
  const std::uint64_t mask = std::uint64_t{1} << (n - 1 - qubit);
  const double c = std::cos(theta / 2), s = std::sin(theta / 2);
  const auto dim = static_cast<std::uint64_t>(state.size());
  for (std::uint64_t i = 0; i < dim; ++i) {
    if (i & mask) continue;
    const auto lo = static_cast<Eigen::Index>(i);
    const auto hi = static_cast<Eigen::Index>(i | mask);
    const std::complex<double> a0 = state[lo], a1 = state[hi];
    state[lo] = c * a0 - s * a1;
    state[hi] = s * a0 + c * a1;
  }
}

void apply_cnot(StateVector& state, int n, int control, int target) {
  const std::uint64_t cmask = std::uint64_t{1} << (n - 1 - control);
  const std::uint64_t tmask = std::uint64_t{1} << (n - 1 - target);
  const auto dim = static_cast<std::uint64_t>(state.size());
  for (std::uint64_t i = 0; i < dim; ++i) {
    if ((i & cmask) && !(i & tmask))
      std::swap(state[static_cast<Eigen::Index>(i)],
                state[static_cast<Eigen::Index>(i | tmask)]);
  }
}

void check_dimension(Eigen::Index size, const DiagonalHamiltonian& h) {
  if (size != h.energies.size())
    throw Error(ErrorCode::kLengthMismatch,
                "state dimension " + std::to_string(size) +
                    " does not match Hamiltonian dimension " +
                    std::to_string(h.energies.size()));
}

struct RestartRun {
  RestartRecord record;
  Eigen::VectorXd params;
};

RestartRun run_restart(const DiagonalHamiltonian& h, const Eigen::VectorXd& energies,
                       double ground, const VqeConfig& config, int restart) {
  const Ansatz ansatz{h.n_qubits, config.depth};
  RestartRun run;
  run.record.seed = derive_seed(config.seed, Stream::kVqeRestart,
                                static_cast<std::uint64_t>(restart));
  Rng rng(config.seed, Stream::kVqeRestart, static_cast<std::uint64_t>(restart));
  Eigen::VectorXd start(ansatz.parameter_count());
  for (Eigen::Index i = 0; i < start.size(); ++i)
    start[i] = rng.uniform(-std::numbers::pi, std::numbers::pi);

  const double slack = 1e-9 * std::max(1.0, std::abs(ground));
  auto objective = [&](const Eigen::VectorXd& params) {
    const double value = probabilities(apply_ansatz(ansatz, params)).dot(energies);
    if (value < ground - slack)
      throw Error(ErrorCode::kInternalInconsistency,
                  "expectation below the exact ground energy");
    return value;
  };
  NelderMeadOptions options;
  options.max_iterations = config.max_iterations;
  options.tolerance = config.tolerance;
  const auto result = nelder_mead(objective, start, options);
  run.params = result.x;
  run.record.expectation = result.value;
  run.record.iterations = result.iterations;
  run.record.converged = result.converged;
  return run;
}

}  // namespace

StateVector apply_ansatz(const Ansatz& ansatz, const Eigen::VectorXd& params) {
  const int n = ansatz.n_qubits;
  if (n < 0 || ansatz.depth < 0)
    throw Error(ErrorCode::kInvalidArgument, "negative ansatz size");
  if (n > kMaxQubits)
    throw Error(ErrorCode::kCapacity, "too many qubits for statevector simulation");
  if (params.size() != ansatz.parameter_count())
    throw Error(ErrorCode::kLengthMismatch,
                "expected " + std::to_string(ansatz.parameter_count()) +
                    " parameters, got " + std::to_string(params.size()));
  StateVector state = StateVector::Zero(Eigen::Index{1} << n);
  state[0] = 1.0;
  Eigen::Index p = 0;
  for (int layer = 0; layer <= ansatz.depth; ++layer) {
    for (int q = 0; q < n; ++q) apply_ry(state, n, q, params[p++]);
    if (layer == ansatz.depth) break;
    for (int q = 0; q + 1 < n; ++q) apply_cnot(state, n, q, q + 1);
  }
  return state;
}

Eigen::VectorXd probabilities(const StateVector& state) {
  return state.cwiseAbs2();
}

double expectation(const Eigen::VectorXd& probabilities,
                   const DiagonalHamiltonian& h) {
  check_dimension(probabilities.size(), h);
  return probabilities.dot(h.real_energies());
}

double expectation(const StateVector& state, const DiagonalHamiltonian& h) {
  return expectation(probabilities(state), h);
}

void VqeConfig::validate() const {
  if (depth < 0 || max_iterations <= 0 || restarts <= 0 || threads <= 0 ||
      shots < 0 || !(tolerance > 0))
    throw Error(ErrorCode::kInvalidArgument, "invalid VQE configuration");
}

double VqeOutcome::probability(const Bitstring& x) const {
  return probability_table[static_cast<Eigen::Index>(bitstring_index(x))];
}

std::uint64_t argmax_index(const Eigen::VectorXd& probabilities) {
  Eigen::Index best = 0;
  for (Eigen::Index i = 1; i < probabilities.size(); ++i)
    if (probabilities[i] > probabilities[best]) best = i;
  return static_cast<std::uint64_t>(best);
}

VqeOutcome optimize(const DiagonalHamiltonian& h, const VqeConfig& config) {
  config.validate();
  if (h.energies.size() == 0)
    throw Error(ErrorCode::kInvalidArgument, "empty Hamiltonian");
  check_dimension(static_cast<Eigen::Index>(h.dimension()), h);
  const Eigen::VectorXd energies = h.real_energies();
  const double ground = energies.minCoeff();

  std::vector<RestartRun> runs(static_cast<std::size_t>(config.restarts));
  if (config.threads == 1) {
    for (int r = 0; r < config.restarts; ++r)
      runs[r] = run_restart(h, energies, ground, config, r);
  } else {
    for (int first = 0; first < config.restarts; first += config.threads) {
      std::vector<std::future<RestartRun>> batch;
      const int last = std::min(config.restarts, first + config.threads);
      for (int r = first; r < last; ++r)
        batch.push_back(std::async(std::launch::async, run_restart, std::cref(h),
                                   std::cref(energies), ground, std::cref(config), r));
      for (int r = first; r < last; ++r) runs[r] = batch[r - first].get();
    }
  }

  VqeOutcome outcome;
  outcome.n_qubits = h.n_qubits;
  int best = 0;
  for (int r = 0; r < config.restarts; ++r) {
    outcome.per_restart_log.push_back(runs[r].record);
    if (runs[r].record.expectation < runs[best].record.expectation) best = r;
  }
  outcome.best_restart = best;
  outcome.best_params = runs[best].params;
  outcome.best_expectation = runs[best].record.expectation;
  outcome.converged = runs[best].record.converged;

  const StateVector state =
      apply_ansatz(Ansatz{h.n_qubits, config.depth}, outcome.best_params);
  outcome.probability_table = probabilities(state);
  if (config.shots > 0) {
    Rng rng(config.seed, Stream::kShots, 0);
    Eigen::VectorXd counts = Eigen::VectorXd::Zero(outcome.probability_table.size());
    for (int shot = 0; shot < config.shots; ++shot) {
      double u = rng.uniform();
      Eigen::Index i = 0;
      for (; i + 1 < counts.size(); ++i) {
        u -= outcome.probability_table[i];
        if (u < 0) break;
      }
      counts[i] += 1;
    }
    outcome.probability_table = counts / static_cast<double>(config.shots);
  }
  outcome.argmax_index = argmax_index(outcome.probability_table);
  outcome.argmax_bitstring = index_bitstring(outcome.argmax_index, h.n_qubits);
  return outcome;
}

std::vector<TableRow> report_table(const VqeOutcome& outcome,
                                   const DiagonalHamiltonian& h) {
  check_dimension(outcome.probability_table.size(), h);
  std::vector<TableRow> rows;
  for (std::uint64_t i = 0; i < h.dimension(); ++i) {
    const auto k = static_cast<Eigen::Index>(i);
    rows.push_back({index_bitstring(i, h.n_qubits), h.energies[k],
                    outcome.probability_table[k]});
  }
  std::stable_sort(rows.begin(), rows.end(), [](const TableRow& a, const TableRow& b) {
    return a.probability > b.probability;
  });
  return rows;
}

std::string format_table(const std::vector<TableRow>& rows, int decimals) {
  std::ostringstream out;
  out << std::left << std::setw(12) << "Selection" << std::setw(14) << "Value"
      << "Probability\n";
  out << std::fixed << std::setprecision(decimals);
  for (const auto& row : rows) {
    // Keep "-0.0000" out of the display.
    const double shown = std::abs(row.probability) < 0.5 * std::pow(10.0, -decimals)
                             ? 0.0
                             : row.probability;
    out << std::setw(12) << format_bitstring(row.selection) << std::setw(14)
        << to_string(row.value) << shown << '\n';
  }
  return out.str();
}

}  // namespace schnorr
