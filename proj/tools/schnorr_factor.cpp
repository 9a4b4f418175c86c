// Command-line front end for the lattice + VQE factoring pipeline.
//
// Exit status: 0 factored, 2 not factored, 1 error.

#include <filesystem>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "schnorr/error.hpp"
#include "schnorr/io.hpp"
#include "schnorr/pipeline.hpp"

namespace {

std::vector<int> parse_diagonal(const std::string& text) {
  std::vector<int> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw schnorr::Error(schnorr::ErrorCode::kInvalidOverride,
                           "bad diagonal entry \"" + item + "\"");
    }
  }
  return out;
}

int run(int argc, char** argv) {
  using namespace schnorr;
  CLI::App app{"Factor N with a Schnorr lattice, Babai rounding and a simulated VQE"};

  std::string modulus_text, diagonal_text, delta_text = "3/4", reduction = "internal";
  std::string solver = "vqe", selection = "argmax", format = "table", emit_dir;
  RunConfig config;
  app.add_option("--N", modulus_text, "Odd composite, not a prime power")->required();
  app.add_option("--l", config.instance.l, "Lattice size parameter")->capture_default_str();
  app.add_option("--c", config.instance.c, "Log scaling exponent, 10^c")->capture_default_str();
  app.add_option("--smooth-bound", config.instance.smooth_bound,
                 "Number of primes for smoothness tests")
      ->capture_default_str();
  app.add_option("--seed", config.instance.seed, "Master seed")->capture_default_str();
  app.add_option("--diagonal", diagonal_text, "Fixed diagonal, comma separated");
  app.add_option("--delta", delta_text, "LLL parameter a/b")->capture_default_str();
  app.add_option("--reduction", reduction, "internal or fixture:PATH")->capture_default_str();
  app.add_option("--solver", solver, "vqe or exact")
      ->check(CLI::IsMember({"vqe", "exact"}))
      ->capture_default_str();
  app.add_option("--depth", config.vqe.depth, "Ansatz layers")->capture_default_str();
  app.add_option("--iters", config.vqe.max_iterations, "Simplex iterations per restart")
      ->capture_default_str();
  app.add_option("--restarts", config.vqe.restarts, "VQE restarts")->capture_default_str();
  app.add_option("--shots", config.vqe.shots, "Sampled shots, 0 for exact probabilities")
      ->capture_default_str();
  app.add_option("--threads", config.vqe.threads, "Parallel VQE restarts")
      ->capture_default_str();
  app.add_option("--rounds", config.max_rounds, "Rounds with fresh diagonals")
      ->capture_default_str();
  app.add_option("--selection", selection, "argmax or all")
      ->check(CLI::IsMember({"argmax", "all"}))
      ->capture_default_str();
  app.add_option("--format", format, "table or json")
      ->check(CLI::IsMember({"table", "json"}))
      ->capture_default_str();
  app.add_option("--budget", config.time_budget_seconds, "Wall-clock budget in seconds, 0 off")
      ->capture_default_str();
  app.add_option("--lll-cap", config.lll_iteration_cap, "LLL iteration cap")
      ->capture_default_str();
  app.add_option("--emit-fixtures", emit_dir, "Write one fixture per round into DIR");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  config.instance.modulus = parse_integer(modulus_text);
  if (!diagonal_text.empty()) config.instance.diagonal_override = parse_diagonal(diagonal_text);
  config.delta = parse_rational(delta_text);
  if (reduction.rfind("fixture:", 0) == 0) {
    config.reduction_source = ReductionSource::kFixture;
    config.fixture = read_fixture(reduction.substr(8));
  } else if (reduction != "internal") {
    throw Error(ErrorCode::kInvalidArgument, "--reduction must be internal or fixture:PATH");
  }
  config.solver = solver == "vqe" ? Solver::kVqe : Solver::kExact;
  config.selection = selection == "all" ? SelectionMode::kExhaustive : SelectionMode::kArgmax;

  const auto report = run_pipeline(config);
  if (report.factors &&
      report.factors->first * report.factors->second != config.instance.modulus)
    throw Error(ErrorCode::kInternalInconsistency, "factors do not multiply to N");

  if (!emit_dir.empty()) {
    std::filesystem::create_directories(emit_dir);
    for (const auto& round : report.rounds)
      write_fixture(std::filesystem::path(emit_dir) /
                        ("round-" + std::to_string(round.round) + ".json"),
                    round_fixture(report, round));
  }

  if (format == "json")
    std::cout << dump(report_to_json(report));
  else
    std::cout << format_report(report);
  return report.status == RunStatus::kFactored ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
