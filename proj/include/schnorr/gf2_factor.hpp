#pragma once

// Congruence of squares from smooth relations.
//
// u_j is congruent to u_j - v_j N mod N, so for a subset S with
// U = prod u_j and W = prod (u_j - v_j N) the product U W is a square as soon
// as every prime (and the sign) appears to an even total power across u_j and
// u_j - v_j N.  Then U^2 = U W = Z^2 mod N and gcd(U - Z, N) may split N.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "schnorr/numeric.hpp"
#include "schnorr/primes_lattice.hpp"
#include "schnorr/relations.hpp"

namespace schnorr {

using Gf2Matrix = Eigen::Matrix<std::uint8_t, Eigen::Dynamic, Eigen::Dynamic>;
using Gf2Vector = std::vector<std::uint8_t>;

// Rows: sign, then each smooth prime.  Column j: exponents of u_j plus
// exponents of u_j - v_j N, mod 2.
Gf2Matrix build_system(const std::vector<SmoothRelation>& relations,
                       const PrimeBasis& smooth_primes);

// Basis of {t : M t = 0 mod 2}, zero vector excluded.  Gauss-Jordan with the
// first nonzero row as pivot; one basis vector per free column, ascending.
std::vector<Gf2Vector> nullspace_gf2(const Gf2Matrix& matrix);

Gf2Vector multiply_gf2(const Gf2Matrix& matrix, const Gf2Vector& t);

enum class FactorStatus { kFound, kAllTrivial, kNoSolution };

const char* factor_status_name(FactorStatus status);

struct Congruence {
  std::vector<int> subset;  // relation indices
  Integer U;
  Integer W;
  Integer Z;
};

struct FactorResult {
  FactorStatus status = FactorStatus::kNoSolution;
  std::optional<std::pair<Integer, Integer>> factors;  // p <= q, p q = N
  std::optional<Congruence> certificate;
};

// Throws kInternalInconsistency if U W is not a perfect square.
FactorResult extract_factors(const Gf2Vector& selection,
                             const std::vector<SmoothRelation>& relations,
                             const Integer& modulus);

// Tries every nullspace vector in order; the first split wins.
FactorResult factor_from_relations(const std::vector<SmoothRelation>& relations,
                                   const Integer& modulus, const PrimeBasis& smooth_primes);

}  // namespace schnorr
