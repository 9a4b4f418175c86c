#include "schnorr/ising.hpp"

#include <map>

#include "gtest/gtest.h"
#include "schnorr/error.hpp"
#include "support/generators.hpp"

namespace schnorr {
namespace {

using testing::columns;
using testing::random_basis;
using testing::random_vector;
using testing::reference_reduced_basis;
using testing::uniform_int;
using testing::vec;

QuboProblem three_qubit_problem() {
  return QuboProblem{vec({0, 4, 4, 242}), reference_reduced_basis(),
                     vec({0, 0, 0, 240})};
}

// Selection -> Value rows of the 3-qubit VQE table.
const std::map<std::string, int> kTableOne = {
    {"000", 36}, {"100", 66}, {"001", 97}, {"110", 91},
    {"111", 174}, {"011", 150}, {"010", 77}, {"101", 137}};

TEST(CostFunction, TableOneValues) {
  const auto problem = three_qubit_problem();
  for (const auto& [selection, value] : kTableOne)
    EXPECT_EQ(cost_function(problem, parse_bitstring(selection)), value)
        << selection;
}

TEST(CostFunction, LengthMismatch) {
  EXPECT_THROW(cost_function(three_qubit_problem(), parse_bitstring("01")), Error);
}

TEST(Hamiltonian, TableOneInIndexOrder) {
  const auto h = build_hamiltonian(three_qubit_problem());
  ASSERT_EQ(h.n_qubits, 3);
  EXPECT_EQ(h.energies, vec({36, 97, 77, 150, 66, 137, 91, 174}));
  for (const auto& [selection, value] : kTableOne)
    EXPECT_EQ(h.energies[bitstring_index(parse_bitstring(selection))], value);
  auto ground = exact_ground_state(h);
  EXPECT_EQ(format_bitstring(ground.bits), "000");
  EXPECT_EQ(ground.energy, 36);
}

TEST(Hamiltonian, SingleExactCorrection) {
  IntVector t = vec({3, 1});
  IntVector b_op = vec({1, 1});
  QuboProblem problem{b_op, columns({{2, 0}}), t};
  auto h = build_hamiltonian(problem);
  EXPECT_EQ(h.energies, vec({4, 0}));
  auto ground = exact_ground_state(h);
  EXPECT_EQ(ground.bits, Bitstring({1}));
  EXPECT_EQ(ground.energy, 0);
}

TEST(Hamiltonian, CapacityLimit) {
  QuboProblem big{IntVector::Zero(22), IntMatrix::Identity(22, 21),
                  IntVector::Zero(22)};
  try {
    build_hamiltonian(big);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kCapacity);
  }
}

TEST(GroundState, TieBreakAndDirectMinimum) {
  DiagonalHamiltonian constant{2, vec({4, 4, 4, 4})};
  EXPECT_EQ(format_bitstring(exact_ground_state(constant).bits), "00");
  DiagonalHamiltonian table{2, vec({5, 1, 7, 3})};
  auto ground = exact_ground_state(table);
  EXPECT_EQ(format_bitstring(ground.bits), "01");
  EXPECT_EQ(ground.energy, 1);
}

TEST(Hamiltonian, MatchesDirectEvaluationAndSpinForm) {
  Rng rng(77);
  for (int trial = 0; trial < 40; ++trial) {
    const auto n = uniform_int(rng, 1, 6);
    QuboProblem problem{random_vector(rng, n + 1, -30, 30),
                        random_basis(rng, n + 1, n, -20, 20),
                        random_vector(rng, n + 1, -30, 30)};
    const auto h = build_hamiltonian(problem);
    const auto ising = to_ising(problem);
    const IntVector shift = random_vector(rng, n + 1, -100, 100);
    const auto shifted = build_hamiltonian(
        QuboProblem{problem.b_op + shift, problem.basis, problem.target + shift});
    EXPECT_EQ(shifted.energies, h.energies);
    EXPECT_EQ(h.energies[0], squared_norm(IntVector(problem.target - problem.b_op)));
    for (std::uint64_t index = 0; index < h.dimension(); ++index) {
      const Bitstring x = index_bitstring(index, static_cast<int>(n));
      const Integer direct = cost_function(problem, x);
      const auto e = h.energies[static_cast<Eigen::Index>(index)];
      EXPECT_EQ(e, direct);
      EXPECT_GE(e, 0);
      std::vector<int> spins;
      for (auto bit : x) spins.push_back(2 * bit - 1);
      EXPECT_EQ(ising_energy(ising, spins), Rational(direct));
    }
  }
}

TEST(Ising, RealEnergies) {
  auto h = build_hamiltonian(three_qubit_problem());
  auto real = h.real_energies();
  EXPECT_DOUBLE_EQ(real[0], 36.0);
  EXPECT_DOUBLE_EQ(real[7], 174.0);
}

}  // namespace
}  // namespace schnorr
