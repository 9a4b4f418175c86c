#pragma once

#include <string>

#include "schnorr/io.hpp"

namespace schnorr::testing {

inline Fixture reference_fixture() {
  return read_fixture(std::string(SCHNORR_DATA_DIR) + "/fixtures/n1961_reference.json");
}

inline RunConfig n1961_config(ReductionSource source, Solver solver) {
  RunConfig config;
  config.instance.modulus = 1961;
  config.instance.l = 1;
  config.instance.c = 1.5;
  config.instance.smooth_bound = 15;
  config.instance.diagonal_override = std::vector<int>{1, 1, 2};
  config.reduction_source = source;
  if (source == ReductionSource::kFixture) config.fixture = reference_fixture();
  config.solver = solver;
  return config;
}

}  // namespace schnorr::testing
