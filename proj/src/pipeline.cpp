#include "schnorr/pipeline.hpp"

#include <chrono>
#include <utility>

#include "schnorr/error.hpp"
#include "schnorr/random.hpp"

namespace schnorr {
namespace {

using Clock = std::chrono::steady_clock;

class StageRunner {
 public:
  StageRunner(std::map<std::string, double>& timing, Clock::time_point start)
      : timing_(timing), start_(start) {}

  template <typename F>
  auto operator()(const char* stage, int round, F&& body) {
    const auto begin = Clock::now();
    try {
      if constexpr (std::is_void_v<decltype(body())>) {
        body();
        record(stage, begin);
      } else {
        auto result = body();
        record(stage, begin);
        return result;
      }
    } catch (const Error& e) {
      throw Error(e.code(), std::string(stage) + " (round " + std::to_string(round) +
                                "): " + e.detail());
    }
  }

  double elapsed() const {
    return std::chrono::duration<double>(Clock::now() - start_).count();
  }

 private:
  void record(const char* stage, Clock::time_point begin) {
    timing_[stage] += std::chrono::duration<double>(Clock::now() - begin).count();
  }

  std::map<std::string, double>& timing_;
  Clock::time_point start_;
};

std::optional<std::pair<Integer, Integer>> split_by_gcd(const Integer& x,
                                                        const Integer& modulus) {
  const Integer g = gcd(x, modulus);
  if (g <= 1 || g >= modulus) return std::nullopt;
  Integer p = g, q = modulus / g;
  if (p > q) std::swap(p, q);
  return std::make_pair(p, q);
}

}  // namespace

bool Fixture::operator==(const Fixture& other) const {
  return modulus == other.modulus && basis == other.basis && target == other.target &&
         diagonal == other.diagonal && delta == other.delta &&
         reduced_basis == other.reduced_basis && b_op == other.b_op &&
         [&] {
           if (relations.has_value() != other.relations.has_value()) return false;
           if (!relations) return true;
           if (relations->size() != other.relations->size()) return false;
           for (std::size_t i = 0; i < relations->size(); ++i) {
             const auto& a = (*relations)[i];
             const auto& b = (*other.relations)[i];
             if (a.pair.u != b.pair.u || a.pair.v != b.pair.v ||
                 a.pair.exponents != b.pair.exponents ||
                 a.residue_exponents != b.residue_exponents)
               return false;
           }
           return true;
         }();
}

void RunConfig::validate() const {
  if (max_rounds < 1)
    throw Error(ErrorCode::kInvalidArgument, "max_rounds must be at least 1");
  if (delta <= Rational(1, 4) || delta > 1)
    throw Error(ErrorCode::kInvalidArgument, "delta must lie in (1/4, 1]");
  if (time_budget_seconds < 0)
    throw Error(ErrorCode::kInvalidArgument, "negative time budget");
  if (solver == Solver::kVqe) vqe.validate();
  if (reduction_source == ReductionSource::kFixture) {
    if (!fixture || !fixture->reduced_basis)
      throw Error(ErrorCode::kFixture, "fixture reduction needs a fixture with reduced_basis");
    if (fixture->modulus != instance.modulus)
      throw Error(ErrorCode::kFixture, "fixture N " + to_string(fixture->modulus) +
                                           " differs from " + to_string(instance.modulus));
  }
}

std::uint64_t round_vqe_seed(std::uint64_t seed, int round) {
  return derive_seed(seed, Stream::kRound, static_cast<std::uint64_t>(round));
}

const char* run_status_name(RunStatus status) {
  switch (status) {
    case RunStatus::kFactored: return "factored";
    case RunStatus::kNotFactored: return "not-factored";
    case RunStatus::kBudgetExceeded: return "budget-exceeded";
  }
  return "unknown";
}

RunReport run_pipeline(const RunConfig& config) {
  RunReport report;
  report.config = config;
  StageRunner stage(report.timing, Clock::now());
  const Integer& modulus = config.instance.modulus;

  stage("primes_lattice", 0, [&] {
    config.validate();
    report.dimension = validate_instance(config.instance);
    report.lattice_primes = first_primes(report.dimension);
    report.smooth_primes = first_primes(config.instance.smooth_bound);
  });
  const int n = report.dimension;
  auto over_budget = [&] {
    return config.time_budget_seconds > 0 && stage.elapsed() > config.time_budget_seconds;
  };

  for (int round = 0; round < config.max_rounds; ++round) {
    if (over_budget()) {
      report.status = RunStatus::kBudgetExceeded;
      return report;
    }
    RoundRecord rec;
    rec.round = round;

    stage("primes_lattice", round, [&] {
      rec.diagonal = diagonal_permutation(n, config.instance.seed,
                                          static_cast<std::uint64_t>(round),
                                          config.instance.diagonal_override);
      rec.cvp = build_cvp(modulus, config.instance.c, report.lattice_primes, rec.diagonal);
    });

    stage("lattice_reduction", round, [&] {
      const auto& fx = config.fixture;
      if (config.reduction_source == ReductionSource::kFixture &&
          fx->basis == rec.cvp.basis && fx->target == rec.cvp.target) {
        rec.reduction_source = ReductionSource::kFixture;
        rec.reduction = reduction_from_basis(rec.cvp.basis, *fx->reduced_basis, config.delta);
      } else {
        rec.reduction_source = ReductionSource::kInternal;
        rec.reduction = lll_reduce(rec.cvp.basis, config.delta, config.lll_iteration_cap);
      }
      rec.babai = babai_nearest_plane(rec.reduction, rec.cvp.target);
    });

    const auto hamiltonian = stage("ising", round, [&] {
      auto h = build_hamiltonian(
          QuboProblem{rec.babai.b_op, rec.reduction.reduced, rec.cvp.target});
      rec.ground = exact_ground_state(h);
      return h;
    });

    stage("vqe_sim", round, [&] {
      if (config.solver != Solver::kVqe) return;
      VqeConfig vc = config.vqe;
      vc.seed = round_vqe_seed(config.instance.seed, round);
      const auto outcome = optimize(hamiltonian, vc);
      rec.vqe = VqeSummary{vc.seed, outcome.best_expectation, outcome.converged,
                           outcome.per_restart_log, report_table(outcome, hamiltonian)};
      if (config.selection == SelectionMode::kArgmax)
        rec.selections = {outcome.argmax_bitstring};
    });
    if (config.selection == SelectionMode::kExhaustive)
      rec.selections = all_selections(n);
    else if (config.solver == Solver::kExact)
      rec.selections = {rec.ground.bits};

    stage("relations", round, [&] {
      auto set = collect_candidates(rec.cvp, rec.reduction, rec.babai, rec.selections,
                                    report.lattice_primes, modulus, report.smooth_primes);
      rec.candidates = std::move(set.candidates);
      for (auto& r : set.relations) {
        const bool known = std::any_of(
            report.relations.begin(), report.relations.end(), [&](const SmoothRelation& s) {
              return s.pair.u == r.pair.u && s.pair.v == r.pair.v;
            });
        if (!known) {
          report.relations.push_back(std::move(r));
          ++rec.new_relations;
        }
      }
    });
    report.rounds.push_back(std::move(rec));
    const auto& last = report.rounds.back();

    for (const auto& c : last.candidates) {
      for (const Integer* x : {&c.pair.u, &c.pair.v}) {
        if (auto split = split_by_gcd(*x, modulus)) {
          report.status = RunStatus::kFactored;
          report.factors = split;
          report.method = "gcd";
          return report;
        }
      }
    }

    stage("gf2_factor", round, [&] {
      report.factor_result =
          factor_from_relations(report.relations, modulus, report.smooth_primes);
    });
    if (report.factor_result.status == FactorStatus::kFound) {
      const auto& f = *report.factor_result.factors;
      if (f.first * f.second != modulus)
        throw Error(ErrorCode::kInternalInconsistency, "reported factors do not multiply to N");
      report.status = RunStatus::kFactored;
      report.factors = f;
      report.method = "congruence";
      return report;
    }
  }
  report.status = over_budget() ? RunStatus::kBudgetExceeded : RunStatus::kNotFactored;
  return report;
}

}  // namespace schnorr
