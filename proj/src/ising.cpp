#include "schnorr/ising.hpp"

#include <string>

#include "schnorr/error.hpp"

namespace schnorr {
namespace {

void check_shapes(const QuboProblem& problem) {
  const auto m = problem.basis.rows();
  if (problem.b_op.size() != m || problem.target.size() != m)
    throw Error(ErrorCode::kLengthMismatch,
                "b_op, target and basis columns must share a length");
}

}  // namespace

Eigen::VectorXd DiagonalHamiltonian::real_energies() const {
  Eigen::VectorXd out(energies.size());
  for (Eigen::Index i = 0; i < energies.size(); ++i)
    out[i] = energies[i].convert_to<double>();
  return out;
}

Integer cost_function(const QuboProblem& problem, const Bitstring& x) {
  check_shapes(problem);
  if (static_cast<Eigen::Index>(x.size()) != problem.basis.cols())
    throw Error(ErrorCode::kLengthMismatch,
                "bitstring has " + std::to_string(x.size()) + " bits, expected " +
                    std::to_string(problem.basis.cols()));
  IntVector residual = problem.target - problem.b_op;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i]) residual -= problem.basis.col(static_cast<Eigen::Index>(i));
  }
  return squared_norm(residual);
}

DiagonalHamiltonian build_hamiltonian(const QuboProblem& problem) {
  check_shapes(problem);
  const int n = problem.size();
  if (n > kMaxQubits)
    throw Error(ErrorCode::kCapacity,
                std::to_string(n) + " qubits exceeds the table limit of " +
                    std::to_string(kMaxQubits));
  DiagonalHamiltonian h;
  h.n_qubits = n;
  h.energies.resize(static_cast<Eigen::Index>(h.dimension()));

  // Gray-code walk: each step flips one x_i and moves the residual by b_i.
  IntVector residual = problem.target - problem.b_op;
  std::uint64_t gray = 0;
  h.energies[0] = squared_norm(residual);
  for (std::uint64_t step = 1; step < h.dimension(); ++step) {
    const std::uint64_t next = step ^ (step >> 1);
    const std::uint64_t flipped = gray ^ next;
    int bit = 0;
    while ((flipped >> bit) != 1) ++bit;
    const Eigen::Index column = n - 1 - bit;  // x_1 is the top bit
    if (next & flipped) {
      residual -= problem.basis.col(column);
    } else {
      residual += problem.basis.col(column);
    }
    gray = next;
    h.energies[static_cast<Eigen::Index>(gray)] = squared_norm(residual);
  }
  return h;
}

GroundState exact_ground_state(const DiagonalHamiltonian& hamiltonian) {
  if (hamiltonian.energies.size() == 0)
    throw Error(ErrorCode::kInvalidArgument, "empty Hamiltonian");
  Eigen::Index best = 0;
  for (Eigen::Index i = 1; i < hamiltonian.energies.size(); ++i) {
    if (hamiltonian.energies[i] < hamiltonian.energies[best]) best = i;
  }
  return GroundState{
      index_bitstring(static_cast<std::uint64_t>(best), hamiltonian.n_qubits),
      static_cast<std::uint64_t>(best), hamiltonian.energies[best]};
}

IsingModel to_ising(const QuboProblem& problem) {
  check_shapes(problem);
  const Eigen::Index n = problem.basis.cols();
  const IntVector r = problem.target - problem.b_op;
  const IntMatrix gram = problem.basis.transpose() * problem.basis;
  const IntVector overlap = problem.basis.transpose() * r;

  // F(x) = |r|^2 - 2 sum x_i <r,b_i> + sum x_i |b_i|^2
  //        + 2 sum_{i<j} x_i x_j <b_i,b_j>
  // with x_i = (z_i + 1)/2 and x_i x_j = (z_i z_j + z_i + z_j + 1)/4.
  IsingModel model;
  model.offset = Rational(squared_norm(r));
  model.fields = RatVector::Zero(n);
  model.couplings = RatMatrix::Zero(n, n);
  const Rational half(1, 2);
  for (Eigen::Index i = 0; i < n; ++i) {
    const Rational linear = Rational(gram(i, i) - 2 * overlap[i]);
    model.offset += half * linear;
    model.fields[i] += half * linear;
    for (Eigen::Index j = i + 1; j < n; ++j) {
      const Rational pair = half * Rational(gram(i, j));  // 2 <b_i,b_j> / 4
      model.couplings(i, j) = pair;
      model.fields[i] += pair;
      model.fields[j] += pair;
      model.offset += pair;
    }
  }
  return model;
}

Rational ising_energy(const IsingModel& model, const std::vector<int>& spins) {
  const Eigen::Index n = model.fields.size();
  if (static_cast<Eigen::Index>(spins.size()) != n)
    throw Error(ErrorCode::kLengthMismatch, "spin count");
  Rational energy = model.offset;
  for (Eigen::Index i = 0; i < n; ++i) {
    energy += model.fields[i] * spins[i];
    for (Eigen::Index j = i + 1; j < n; ++j)
      energy += model.couplings(i, j) * (spins[i] * spins[j]);
  }
  return energy;
}

}  // namespace schnorr
