#pragma once

// End-to-end factoring run: lattice -> reduction -> nearest plane ->
// diagonal Hamiltonian -> VQE (or exact minimum) -> relations -> GF(2).

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "schnorr/gf2_factor.hpp"
#include "schnorr/ising.hpp"
#include "schnorr/lattice_reduction.hpp"
#include "schnorr/primes_lattice.hpp"
#include "schnorr/relations.hpp"
#include "schnorr/vqe.hpp"

namespace schnorr {

// Exchange format for lattice stages, schema 1.
struct Fixture {
  static constexpr int kSchema = 1;
  Integer modulus;
  IntMatrix basis;
  IntVector target;
  std::vector<int> diagonal;
  Rational delta{3, 4};
  std::optional<IntMatrix> reduced_basis;
  std::optional<IntVector> b_op;
  std::optional<std::vector<SmoothRelation>> relations;

  bool operator==(const Fixture& other) const;
};

enum class ReductionSource { kInternal, kFixture };
enum class Solver { kVqe, kExact };
enum class SelectionMode { kArgmax, kExhaustive };

struct RunConfig {
  FactoringInstance instance;
  Rational delta{3, 4};
  ReductionSource reduction_source = ReductionSource::kInternal;
  std::optional<Fixture> fixture;
  Solver solver = Solver::kVqe;
  VqeConfig vqe;  // seed is replaced per round, see round_vqe_seed
  int max_rounds = 1;
  SelectionMode selection = SelectionMode::kArgmax;
  std::uint64_t lll_iteration_cap = kDefaultIterationCap;
  double time_budget_seconds = 0;  // 0: unlimited

  void validate() const;
};

// VQE master seed for a round: derived from the instance seed.
std::uint64_t round_vqe_seed(std::uint64_t seed, int round);

struct VqeSummary {
  std::uint64_t seed = 0;
  double best_expectation = 0;
  bool converged = false;
  std::vector<RestartRecord> restarts;
  std::vector<TableRow> table;
};

struct RoundRecord {
  int round = 0;
  std::vector<int> diagonal;
  ReductionSource reduction_source = ReductionSource::kInternal;
  CvpInstance cvp;
  ReductionResult reduction;
  BabaiResult babai;
  std::optional<VqeSummary> vqe;
  GroundState ground;  // exact minimum, reported for every solver
  std::vector<Bitstring> selections;
  std::vector<Candidate> candidates;
  int new_relations = 0;
};

enum class RunStatus { kFactored, kNotFactored, kBudgetExceeded };

const char* run_status_name(RunStatus status);

struct RunReport {
  RunConfig config;
  int dimension = 0;
  PrimeBasis lattice_primes;
  PrimeBasis smooth_primes;
  std::vector<RoundRecord> rounds;
  std::vector<SmoothRelation> relations;
  FactorResult factor_result;
  RunStatus status = RunStatus::kNotFactored;
  std::optional<std::pair<Integer, Integer>> factors;
  std::string method;  // "congruence", "gcd" or empty
  std::map<std::string, double> timing;  // seconds per stage, summed
};

// Stage faults are rethrown with the stage name and round in the message.
RunReport run_pipeline(const RunConfig& config);

}  // namespace schnorr
