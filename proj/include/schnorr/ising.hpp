#pragma once

// QUBO refinement around the nearest-plane point.
//
// For x in {0,1}^n the cost is F(x) = ||t - b_op - sum_i x_i b_i||^2 over the
// reduced basis columns b_i.  The Hamiltonian built from x_i -> (Z_i + I)/2
// only contains Z and I terms, so it is diagonal in the computational basis
// and is stored as its 2^n energy table.  Basis state |x> carries F(x), with
// x_1 the most significant bit of the table index.

#include <cstdint>

#include <Eigen/Core>

#include "schnorr/numeric.hpp"

namespace schnorr {

struct QuboProblem {
  IntVector b_op;
  IntMatrix basis;  // reduced basis, one column per qubit
  IntVector target;

  int size() const { return static_cast<int>(basis.cols()); }
};

inline constexpr int kMaxQubits = 20;

struct DiagonalHamiltonian {
  int n_qubits = 0;
  IntVector energies;  // indexed by bitstring_index(x)

  static constexpr const char* kBitConvention = "x1-most-significant";

  std::uint64_t dimension() const { return std::uint64_t{1} << n_qubits; }
  Eigen::VectorXd real_energies() const;
};

Integer cost_function(const QuboProblem& problem, const Bitstring& x);

// Throws kCapacity above kMaxQubits.
DiagonalHamiltonian build_hamiltonian(const QuboProblem& problem);

struct GroundState {
  Bitstring bits;
  std::uint64_t index = 0;
  Integer energy;
};

// Minimal energy; ties go to the smallest index.
GroundState exact_ground_state(const DiagonalHamiltonian& hamiltonian);

// Spin form of the same cost with z_i = 2 x_i - 1:
//   F = offset + sum_i h_i z_i + sum_{i<j} J_ij z_i z_j.
// Coefficients are quarter-integers, so they are kept exact.
struct IsingModel {
  Rational offset;
  RatVector fields;     // h
  RatMatrix couplings;  // J, strictly upper triangular
};

IsingModel to_ising(const QuboProblem& problem);

// spins[i] in {-1, +1}.
Rational ising_energy(const IsingModel& model, const std::vector<int>& spins);

}  // namespace schnorr
