#pragma once

// uv-pairs and smooth relations.
//
// A lattice vector with exponents e over primes p_1..p_n encodes
//   u = prod_{e_i > 0} p_i^{e_i},  v = prod_{e_i < 0} p_i^{-e_i}.
// (u, v) is a smooth relation (sr-pair) when u - vN factors completely over
// -1 and the first `smooth_bound` primes.

#include <optional>
#include <vector>

#include "schnorr/lattice_reduction.hpp"
#include "schnorr/numeric.hpp"
#include "schnorr/primes_lattice.hpp"

namespace schnorr {

struct UvPair {
  Integer u;
  Integer v;
  IntVector exponents;  // over the lattice primes
};

struct SmoothRelation {
  UvPair pair;
  // Slot 0 is the exponent of -1; slot i the exponent of the i-th smooth prime.
  IntVector residue_exponents;

  Integer residue(const PrimeBasis& smooth_primes) const;
};

// e_i = vector_i / f(i); throws kNotALatticeVector on an inexact division.
IntVector extract_exponents(const IntVector& vector, const std::vector<int>& diagonal);

UvPair vector_to_uv(const IntVector& exponents, const PrimeBasis& primes);

// Exponents of m over `primes` if m factors completely, nullopt otherwise.
std::optional<IntVector> smooth_factor(const Integer& m, const PrimeBasis& primes);

// Evaluates u - vN; nullopt if it is zero or not smooth.
std::optional<SmoothRelation> check_sr_pair(const UvPair& pair, const Integer& modulus,
                                            const PrimeBasis& smooth_primes);

struct Candidate {
  Bitstring selection;
  IntVector vector;  // b_h = b_op + sum x_i b_i
  IntVector coeffs;  // in the original basis
  UvPair pair;
  Integer residue;   // u - vN
  std::optional<SmoothRelation> relation;
};

struct CandidateSet {
  std::vector<Candidate> candidates;  // one per distinct (u, v), selection order
  std::vector<SmoothRelation> relations;
};

// For each selection x forms b_h from the reduced columns, maps it back to
// original-basis exponents through the transform, and tests the uv-pair.
// Throws kInternalInconsistency if the transform and the diagonal disagree.
CandidateSet collect_candidates(const CvpInstance& cvp, const ReductionResult& reduction,
                                const BabaiResult& babai,
                                const std::vector<Bitstring>& selections,
                                const PrimeBasis& lattice_primes, const Integer& modulus,
                                const PrimeBasis& smooth_primes);

// All 2^n bitstrings in index order.
std::vector<Bitstring> all_selections(int n);

}  // namespace schnorr
