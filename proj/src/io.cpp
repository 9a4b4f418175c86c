#include "schnorr/io.hpp"

#include <fstream>
#include <algorithm>
#include <limits>
#include <set>
#include <sstream>

#include "schnorr/error.hpp"

namespace schnorr {
namespace {

const char* source_name(ReductionSource s) {
  return s == ReductionSource::kFixture ? "fixture" : "internal";
}

constexpr std::size_t kListedPairs = 8;

std::string list_text(const std::vector<std::string>& items) {
  if (items.empty()) return "none";
  std::string out;
  const auto shown = std::min(items.size(), kListedPairs);
  for (std::size_t i = 0; i < shown; ++i) out += (i ? ", " : "") + items[i];
  if (items.size() > shown) out += " and " + std::to_string(items.size() - shown) + " more";
  return out;
}

std::string pair_text(const Integer& a, const Integer& b) {
  return "(" + to_string(a) + ", " + to_string(b) + ")";
}

template <typename F>
auto fixture_field(const Json& j, const char* key, F&& convert) {
  if (!j.contains(key)) throw Error(ErrorCode::kFixture, std::string("missing \"") + key + "\"");
  try {
    return convert(j.at(key));
  } catch (const Error& e) {
    throw Error(ErrorCode::kFixture, std::string("field \"") + key + "\": " + e.detail());
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kFixture, std::string("field \"") + key + "\": " + e.what());
  }
}

}  // namespace

Json integer_to_json(const Integer& x) {
  if (x >= std::numeric_limits<std::int64_t>::min() &&
      x <= std::numeric_limits<std::int64_t>::max())
    return x.convert_to<std::int64_t>();
  return to_string(x);
}

Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) {
    return j.is_number_unsigned() ? Integer(j.get<std::uint64_t>())
                                  : Integer(j.get<std::int64_t>());
  }
  if (j.is_string()) return parse_integer(j.get<std::string>());
  throw Error(ErrorCode::kFixture, "expected an integer, got " + j.dump());
}

Json matrix_to_json(const IntMatrix& m) {
  Json rows = Json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(integer_to_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

IntMatrix matrix_from_json(const Json& j) {
  if (!j.is_array() || j.empty() || !j[0].is_array())
    throw Error(ErrorCode::kFixture, "expected a non-empty array of rows");
  const auto rows = static_cast<Eigen::Index>(j.size());
  const auto cols = static_cast<Eigen::Index>(j[0].size());
  IntMatrix m(rows, cols);
  for (Eigen::Index r = 0; r < rows; ++r) {
    const auto& row = j[static_cast<std::size_t>(r)];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != cols)
      throw Error(ErrorCode::kFixture, "ragged matrix row " + std::to_string(r));
    for (Eigen::Index c = 0; c < cols; ++c)
      m(r, c) = integer_from_json(row[static_cast<std::size_t>(c)]);
  }
  return m;
}

Json vector_to_json(const IntVector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(integer_to_json(x));
  return out;
}

IntVector vector_from_json(const Json& j) {
  if (!j.is_array()) throw Error(ErrorCode::kFixture, "expected an array");
  IntVector v(static_cast<Eigen::Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i)
    v[static_cast<Eigen::Index>(i)] = integer_from_json(j[i]);
  return v;
}

Json relation_to_json(const SmoothRelation& r) {
  Json j;
  j["u"] = integer_to_json(r.pair.u);
  j["v"] = integer_to_json(r.pair.v);
  j["e"] = vector_to_json(r.pair.exponents);
  j["residue_exponents"] = vector_to_json(r.residue_exponents);
  return j;
}

SmoothRelation relation_from_json(const Json& j) {
  SmoothRelation r;
  r.pair.u = fixture_field(j, "u", integer_from_json);
  r.pair.v = fixture_field(j, "v", integer_from_json);
  r.pair.exponents = fixture_field(j, "e", vector_from_json);
  r.residue_exponents = fixture_field(j, "residue_exponents", vector_from_json);
  return r;
}

Json fixture_to_json(const Fixture& fixture) {
  Json j;
  j["schema"] = Fixture::kSchema;
  j["N"] = to_string(fixture.modulus);
  j["basis"] = matrix_to_json(fixture.basis);
  j["target"] = vector_to_json(fixture.target);
  j["diagonal"] = fixture.diagonal;
  j["delta"] = to_string(fixture.delta);
  if (fixture.reduced_basis) j["reduced_basis"] = matrix_to_json(*fixture.reduced_basis);
  if (fixture.b_op) j["b_op"] = vector_to_json(*fixture.b_op);
  if (fixture.relations) {
    j["relations"] = Json::array();
    for (const auto& r : *fixture.relations) j["relations"].push_back(relation_to_json(r));
  }
  return j;
}

Fixture fixture_from_json(const Json& j) {
  if (!j.is_object()) throw Error(ErrorCode::kFixture, "fixture must be a JSON object");
  const int schema = fixture_field(j, "schema", [](const Json& x) { return x.get<int>(); });
  if (schema != Fixture::kSchema)
    throw Error(ErrorCode::kFixture, "unsupported schema " + std::to_string(schema));
  Fixture f;
  f.modulus = fixture_field(j, "N", [](const Json& x) {
    if (!x.is_string()) throw Error(ErrorCode::kFixture, "N must be a decimal string");
    return parse_integer(x.get<std::string>());
  });
  f.basis = fixture_field(j, "basis", matrix_from_json);
  f.target = fixture_field(j, "target", vector_from_json);
  f.diagonal = fixture_field(j, "diagonal",
                             [](const Json& x) { return x.get<std::vector<int>>(); });
  f.delta = fixture_field(j, "delta", [](const Json& x) {
    return parse_rational(x.get<std::string>());
  });
  if (f.target.size() != f.basis.rows())
    throw Error(ErrorCode::kFixture, "target length does not match basis rows");
  if (static_cast<Eigen::Index>(f.diagonal.size()) != f.basis.cols())
    throw Error(ErrorCode::kFixture, "diagonal length does not match basis columns");
  if (j.contains("reduced_basis")) {
    f.reduced_basis = fixture_field(j, "reduced_basis", matrix_from_json);
    if (f.reduced_basis->rows() != f.basis.rows() || f.reduced_basis->cols() != f.basis.cols())
      throw Error(ErrorCode::kFixture, "reduced_basis shape differs from basis");
  }
  if (j.contains("b_op")) f.b_op = fixture_field(j, "b_op", vector_from_json);
  if (j.contains("relations")) {
    f.relations = fixture_field(j, "relations", [](const Json& x) {
      std::vector<SmoothRelation> out;
      for (const auto& r : x) out.push_back(relation_from_json(r));
      return out;
    });
  }
  return f;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

void write_fixture(const std::filesystem::path& path, const Fixture& fixture) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::kIo, "cannot open " + path.string() + " for writing");
  out << dump(fixture_to_json(fixture));
  if (!out) throw Error(ErrorCode::kIo, "failed writing " + path.string());
}

Fixture read_fixture(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot open " + path.string());
  Json j;
  try {
    j = Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kFixture, path.string() + ": " + e.what());
  }
  return fixture_from_json(j);
}

Fixture round_fixture(const RunReport& report, const RoundRecord& round) {
  Fixture f;
  f.modulus = report.config.instance.modulus;
  f.basis = round.cvp.basis;
  f.target = round.cvp.target;
  f.diagonal = round.diagonal;
  f.delta = round.reduction.delta;
  f.reduced_basis = round.reduction.reduced;
  f.b_op = round.babai.b_op;
  f.relations.emplace();
  for (const auto& c : round.candidates)
    if (c.relation) f.relations->push_back(*c.relation);
  return f;
}

Json report_to_json(const RunReport& report, bool include_timing) {
  const auto& cfg = report.config;
  Json config;
  config["N"] = to_string(cfg.instance.modulus);
  config["l"] = cfg.instance.l;
  config["c"] = cfg.instance.c;
  config["smooth_bound"] = cfg.instance.smooth_bound;
  config["seed"] = cfg.instance.seed;
  config["diagonal_override"] = cfg.instance.diagonal_override
                                    ? Json(*cfg.instance.diagonal_override)
                                    : Json(nullptr);
  config["delta"] = to_string(cfg.delta);
  config["reduction"] = source_name(cfg.reduction_source);
  config["fixture"] = cfg.fixture ? fixture_to_json(*cfg.fixture) : Json(nullptr);
  config["solver"] = cfg.solver == Solver::kVqe ? "vqe" : "exact";
  Json vqe;
  vqe["depth"] = cfg.vqe.depth;
  vqe["max_iterations"] = cfg.vqe.max_iterations;
  vqe["restarts"] = cfg.vqe.restarts;
  vqe["tolerance"] = cfg.vqe.tolerance;
  vqe["shots"] = cfg.vqe.shots;
  config["vqe"] = vqe;
  config["max_rounds"] = cfg.max_rounds;
  config["selection"] = cfg.selection == SelectionMode::kArgmax ? "argmax" : "all";
  config["lll_iteration_cap"] = cfg.lll_iteration_cap;
  config["time_budget_seconds"] = cfg.time_budget_seconds;

  Json j;
  j["report_schema"] = 1;
  j["config"] = config;
  j["dimension"] = report.dimension;
  j["lattice_primes"] = report.lattice_primes.primes;
  j["smooth_primes"] = report.smooth_primes.primes;

  Json rounds = Json::array();
  for (const auto& rec : report.rounds) {
    Json r;
    r["round"] = rec.round;
    r["diagonal"] = rec.diagonal;
    r["reduction_source"] = source_name(rec.reduction_source);
    r["basis"] = matrix_to_json(rec.cvp.basis);
    r["target"] = vector_to_json(rec.cvp.target);
    r["reduced_basis"] = matrix_to_json(rec.reduction.reduced);
    r["transform"] = matrix_to_json(rec.reduction.transform);
    r["lll_iterations"] = rec.reduction.iterations;
    r["b_op"] = vector_to_json(rec.babai.b_op);
    r["babai_coeffs"] = vector_to_json(rec.babai.coeffs_original);
    r["babai_dist_sq"] = integer_to_json(rec.babai.dist_sq);
    r["ground_state"] = {{"selection", format_bitstring(rec.ground.bits)},
                         {"value", integer_to_json(rec.ground.energy)}};
    if (rec.vqe) {
      Json v;
      v["seed"] = rec.vqe->seed;
      v["best_expectation"] = rec.vqe->best_expectation;
      v["converged"] = rec.vqe->converged;
      v["restarts"] = Json::array();
      for (const auto& rr : rec.vqe->restarts)
        v["restarts"].push_back({{"seed", rr.seed},
                                 {"expectation", rr.expectation},
                                 {"iterations", rr.iterations},
                                 {"converged", rr.converged}});
      v["table"] = Json::array();
      for (const auto& row : rec.vqe->table)
        v["table"].push_back({{"selection", format_bitstring(row.selection)},
                              {"value", integer_to_json(row.value)},
                              {"probability", row.probability}});
      r["vqe"] = v;
    } else {
      r["vqe"] = nullptr;
    }
    r["selections"] = Json::array();
    for (const auto& s : rec.selections) r["selections"].push_back(format_bitstring(s));
    r["uv_pairs"] = Json::array();
    for (const auto& c : rec.candidates)
      r["uv_pairs"].push_back({{"selection", format_bitstring(c.selection)},
                               {"vector", vector_to_json(c.vector)},
                               {"u", integer_to_json(c.pair.u)},
                               {"v", integer_to_json(c.pair.v)},
                               {"e", vector_to_json(c.pair.exponents)},
                               {"residue", integer_to_json(c.residue)},
                               {"sr_pair", c.relation.has_value()}});
    r["new_sr_pairs"] = rec.new_relations;
    rounds.push_back(std::move(r));
  }
  j["rounds"] = rounds;
  j["sr_pairs"] = Json::array();
  for (const auto& rel : report.relations) j["sr_pairs"].push_back(relation_to_json(rel));

  Json gf2;
  gf2["status"] = factor_status_name(report.factor_result.status);
  if (const auto& cert = report.factor_result.certificate) {
    gf2["certificate"] = {{"subset", cert->subset},
                          {"U", integer_to_json(cert->U)},
                          {"W", integer_to_json(cert->W)},
                          {"Z", integer_to_json(cert->Z)}};
  } else {
    gf2["certificate"] = nullptr;
  }
  j["gf2"] = gf2;
  j["status"] = run_status_name(report.status);
  j["factors"] = report.factors ? Json::array({to_string(report.factors->first),
                                               to_string(report.factors->second)})
                                : Json(nullptr);
  j["method"] = report.method.empty() ? Json(nullptr) : Json(report.method);
  if (include_timing) j["timing"] = report.timing;
  return j;
}

std::string format_report(const RunReport& report) {
  const auto& cfg = report.config;
  std::vector<std::string> uv, sr;
  std::set<std::pair<Integer, Integer>> seen;
  for (const auto& rec : report.rounds)
    for (const auto& c : rec.candidates)
      if (seen.emplace(c.pair.u, c.pair.v).second) uv.push_back(pair_text(c.pair.u, c.pair.v));
  for (const auto& r : report.relations) sr.push_back(pair_text(r.pair.u, r.pair.v));

  std::ostringstream out;
  out << "N          " << to_string(cfg.instance.modulus) << '\n'
      << "l          " << cfg.instance.l << '\n'
      << "qubits     " << report.dimension << '\n'
      << "c          " << cfg.instance.c << '\n'
      << "SB         " << cfg.instance.smooth_bound << '\n'
      << "rounds     " << report.rounds.size() << '\n'
      << "uv-pairs   " << list_text(uv) << '\n'
      << "sr-pairs   " << list_text(sr) << '\n'
      << "status     " << run_status_name(report.status) << '\n';
  if (report.factors)
    out << "factors    " << to_string(report.factors->first) << ", "
        << to_string(report.factors->second) << " (" << report.method << ")\n";

  for (const auto& rec : report.rounds) {
    out << "\nround " << rec.round << ": diagonal [";
    for (std::size_t i = 0; i < rec.diagonal.size(); ++i)
      out << (i ? "," : "") << rec.diagonal[i];
    out << "], reduction " << source_name(rec.reduction_source) << ", b_op (";
    for (Eigen::Index i = 0; i < rec.babai.b_op.size(); ++i)
      out << (i ? "," : "") << to_string(rec.babai.b_op[i]);
    out << "), ground " << format_bitstring(rec.ground.bits) << " = "
        << to_string(rec.ground.energy) << '\n';
    if (rec.vqe) {
      auto rows = rec.vqe->table;
      if (rows.size() > 8) rows.resize(8);
      out << format_table(rows, 4);
    }
  }
  return out.str();
}

}  // namespace schnorr
