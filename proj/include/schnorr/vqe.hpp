#pragma once

// Statevector simulation of a variational eigensolver on a diagonal
// Hamiltonian.
//
// Ansatz: `depth` layers of (RY on every qubit, then CNOT(q, q+1) for
// q = 0..n-2), closed by a final RY layer.  Qubit q is x_{q+1}, i.e. bit
// n-1-q of the amplitude index.  Parameters are laid out layer by layer.

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "schnorr/ising.hpp"
#include "schnorr/numeric.hpp"

namespace schnorr {

using StateVector = Eigen::VectorXcd;

struct Ansatz {
  int n_qubits = 0;
  int depth = 0;

  int parameter_count() const { return n_qubits * (depth + 1); }
};

StateVector apply_ansatz(const Ansatz& ansatz, const Eigen::VectorXd& params);

double expectation(const StateVector& state, const DiagonalHamiltonian& h);
double expectation(const Eigen::VectorXd& probabilities,
                   const DiagonalHamiltonian& h);

Eigen::VectorXd probabilities(const StateVector& state);

struct VqeConfig {
  int depth = 2;
  int max_iterations = 500;
  int restarts = 5;
  std::uint64_t seed = 0;
  double tolerance = 1e-8;
  // 0 means exact probabilities; otherwise the reported table is estimated
  // from this many seeded samples of the final state.
  int shots = 0;
  int threads = 1;

  void validate() const;
};

struct RestartRecord {
  std::uint64_t seed = 0;  // derived per-restart seed
  double expectation = 0.0;
  int iterations = 0;
  bool converged = false;
};

struct VqeOutcome {
  int n_qubits = 0;
  Eigen::VectorXd best_params;
  double best_expectation = 0.0;
  // Indexed by bitstring_index.
  Eigen::VectorXd probability_table;
  Bitstring argmax_bitstring;
  std::uint64_t argmax_index = 0;
  bool converged = false;
  int best_restart = 0;
  std::vector<RestartRecord> per_restart_log;

  double probability(const Bitstring& x) const;
};

VqeOutcome optimize(const DiagonalHamiltonian& h, const VqeConfig& config);

// Largest probability, smallest index on ties.
std::uint64_t argmax_index(const Eigen::VectorXd& probabilities);

struct TableRow {
  Bitstring selection;
  Integer value;
  double probability = 0.0;
};

// Every bitstring, by descending probability then ascending index.
std::vector<TableRow> report_table(const VqeOutcome& outcome,
                                   const DiagonalHamiltonian& h);

std::string format_table(const std::vector<TableRow>& rows, int decimals = 4);

}  // namespace schnorr
