#include "schnorr/vqe.hpp"

#include <chrono>
#include <cmath>
#include <numbers>

#include "gtest/gtest.h"
#include "schnorr/error.hpp"
#include "support/generators.hpp"

namespace schnorr {
namespace {

using testing::reference_reduced_basis;
using testing::vec;

DiagonalHamiltonian table_one() {
  return build_hamiltonian(
      QuboProblem{vec({0, 4, 4, 242}), reference_reduced_basis(), vec({0, 0, 0, 240})});
}

TEST(Ansatz, ParameterCount) {
  EXPECT_EQ((Ansatz{3, 2}).parameter_count(), 9);
  EXPECT_EQ((Ansatz{4, 0}).parameter_count(), 4);
}

TEST(Ansatz, ZeroParametersGiveAllZeroState) {
  for (int depth = 0; depth < 3; ++depth) {
    const Ansatz a{3, depth};
    const auto state = apply_ansatz(a, Eigen::VectorXd::Zero(a.parameter_count()));
    EXPECT_NEAR(std::abs(state[0]), 1.0, 1e-15);
    EXPECT_NEAR(state.squaredNorm(), 1.0, 1e-15);
  }
}

TEST(Ansatz, SingleRotation) {
  for (double theta : {0.3, -1.2, 2.9}) {
    const auto state = apply_ansatz(Ansatz{1, 0}, Eigen::VectorXd::Constant(1, theta));
    EXPECT_NEAR(state[0].real(), std::cos(theta / 2), 1e-15);
    EXPECT_NEAR(state[1].real(), std::sin(theta / 2), 1e-15);
  }
}

TEST(Ansatz, FirstQubitIsMostSignificant) {
  Eigen::VectorXd params = Eigen::VectorXd::Zero(2);
  params[0] = std::numbers::pi;
  const auto state = apply_ansatz(Ansatz{2, 0}, params);
  EXPECT_NEAR(std::abs(state[2]), 1.0, 1e-15);  // |10>
}

TEST(Ansatz, ChainEntangles) {
  Eigen::VectorXd params = Eigen::VectorXd::Zero(4);
  params[0] = std::numbers::pi / 2;
  const auto state = apply_ansatz(Ansatz{2, 1}, params);
  EXPECT_NEAR(std::norm(state[0]), 0.5, 1e-15);
  EXPECT_NEAR(std::norm(state[3]), 0.5, 1e-15);
}

TEST(Ansatz, NormPreservedAndLengthChecked) {
  Rng rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    const Ansatz a{1 + static_cast<int>(rng.below(6)), static_cast<int>(rng.below(4))};
    Eigen::VectorXd params(a.parameter_count());
    for (auto& p : params) p = rng.uniform(-10, 10);
    EXPECT_NEAR(apply_ansatz(a, params).squaredNorm(), 1.0, 1e-10);
  }
  EXPECT_THROW(apply_ansatz(Ansatz{3, 2}, Eigen::VectorXd::Zero(8)), Error);
}

TEST(Expectation, TableOneStates) {
  const auto h = table_one();
  StateVector basis = StateVector::Zero(8);
  basis[0] = 1.0;
  EXPECT_DOUBLE_EQ(expectation(basis, h), 36.0);
  const StateVector uniform = StateVector::Constant(8, 1.0 / std::sqrt(8.0)).eval();
  EXPECT_NEAR(expectation(uniform, h), 103.5, 1e-12);
  EXPECT_THROW(expectation(StateVector(StateVector::Zero(4)), h), Error);
}

TEST(Expectation, ConstantTable) {
  DiagonalHamiltonian h{2, vec({7, 7, 7, 7})};
  const auto state = apply_ansatz(Ansatz{2, 1}, Eigen::VectorXd::LinSpaced(4, -1, 2));
  EXPECT_NEAR(expectation(state, h), 7.0, 1e-12);
}

TEST(Optimize, SingleQubit) {
  DiagonalHamiltonian h{1, vec({0, 1})};
  VqeConfig config;
  config.depth = 0;
  const auto outcome = optimize(h, config);
  EXPECT_EQ(outcome.argmax_bitstring, Bitstring({0}));
  EXPECT_NEAR(outcome.best_expectation, 0.0, 1e-6);
  EXPECT_GE(outcome.best_expectation, 0.0);
}

TEST(Optimize, TableOneWithTenRestarts) {
  const auto h = table_one();
  VqeConfig config;
  config.restarts = 10;
  const auto outcome = optimize(h, config);
  EXPECT_EQ(format_bitstring(outcome.argmax_bitstring), "000");
  EXPECT_GE(outcome.probability(parse_bitstring("000")), 0.99);
  EXPECT_GE(outcome.best_expectation, 36.0);
  EXPECT_NEAR(outcome.probability_table.sum(), 1.0, 1e-9);
  EXPECT_NEAR(expectation(outcome.probability_table, h), outcome.best_expectation,
              1e-9);
  ASSERT_EQ(outcome.per_restart_log.size(), 10u);
  for (const auto& record : outcome.per_restart_log)
    EXPECT_GE(record.expectation, outcome.best_expectation);
}

TEST(Optimize, DeterministicAndThreadIndependent) {
  const auto h = table_one();
  VqeConfig config;
  config.seed = 1234;
  const auto a = optimize(h, config);
  const auto b = optimize(h, config);
  config.threads = 3;
  const auto c = optimize(h, config);
  for (const auto* other : {&b, &c}) {
    EXPECT_EQ(a.best_params, other->best_params);
    EXPECT_EQ(a.probability_table, other->probability_table);
    EXPECT_EQ(a.best_expectation, other->best_expectation);
    EXPECT_EQ(a.best_restart, other->best_restart);
    ASSERT_EQ(a.per_restart_log.size(), other->per_restart_log.size());
    for (std::size_t r = 0; r < a.per_restart_log.size(); ++r) {
      EXPECT_EQ(a.per_restart_log[r].seed, other->per_restart_log[r].seed);
      EXPECT_EQ(a.per_restart_log[r].expectation, other->per_restart_log[r].expectation);
    }
  }
}

TEST(Optimize, StochasticSuccessOverSeeds) {
  const auto h = table_one();
  int hits = 0;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    VqeConfig config;
    config.seed = seed;
    const auto start = std::chrono::steady_clock::now();
    const auto outcome = optimize(h, config);
    const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
    EXPECT_LT(elapsed.count(), 2.0);
    if (format_bitstring(outcome.argmax_bitstring) == "000") ++hits;
  }
  EXPECT_GE(hits, 16);
}

TEST(Optimize, ShotsSampleTheTable) {
  const auto h = table_one();
  VqeConfig config;
  config.shots = 1000;
  const auto outcome = optimize(h, config);
  EXPECT_NEAR(outcome.probability_table.sum(), 1.0, 1e-12);
  for (auto p : outcome.probability_table)
    EXPECT_DOUBLE_EQ(p * 1000, std::round(p * 1000));
}

TEST(Optimize, RejectsBadConfig) {
  VqeConfig config;
  config.tolerance = 0;
  EXPECT_THROW(optimize(table_one(), config), Error);
  config = VqeConfig{};
  config.restarts = 0;
  EXPECT_THROW(optimize(table_one(), config), Error);
}

TEST(ReportTable, OrderingAndValues) {
  const auto h = table_one();
  VqeOutcome uniform;
  uniform.n_qubits = 3;
  uniform.probability_table = Eigen::VectorXd::Constant(8, 0.125);
  auto rows = report_table(uniform, h);
  ASSERT_EQ(rows.size(), 8u);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    EXPECT_EQ(bitstring_index(rows[i].selection), i);
    EXPECT_DOUBLE_EQ(rows[i].probability, 0.125);
  }

  VqeOutcome peaked = uniform;
  peaked.probability_table = Eigen::VectorXd::Zero(8);
  peaked.probability_table[0] = 1.0;
  rows = report_table(peaked, h);
  EXPECT_EQ(format_bitstring(rows[0].selection), "000");
  EXPECT_EQ(rows[0].value, 36);
  EXPECT_EQ(format_bitstring(rows[1].selection), "001");
  const auto text = format_table(rows, 1);
  EXPECT_NE(text.find("000         36            1.0"), std::string::npos) << text;
}

TEST(ArgmaxIndex, TiesGoToSmallestIndex) {
  Eigen::VectorXd p(4);
  p << 0.1, 0.4, 0.1, 0.4;
  EXPECT_EQ(argmax_index(p), 1u);
}

}  // namespace
}  // namespace schnorr
