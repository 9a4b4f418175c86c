#pragma once

// Factoring instance and the rounded-log CVP lattice built from it.
//
// For modulus N, precision c and the first n primes p_1..p_n the lattice
// basis is the (n+1) x n integer matrix
//
//   diag(f(1), ..., f(n))
//   [ round(10^c ln p_1)  ...  round(10^c ln p_n) ]
//
// with f a permutation of {round(i/2) : i = 1..n}, and the target is
// (0, ..., 0, round(10^c ln N)).  round() is half-away-from-zero evaluated on
// 60-digit reals.

#include <cstdint>
#include <optional>
#include <vector>

#include "schnorr/numeric.hpp"

namespace schnorr {

struct FactoringInstance {
  Integer modulus;
  int l = 1;
  double c = 1.5;
  int smooth_bound = 15;
  std::uint64_t seed = 0;
  std::optional<std::vector<int>> diagonal_override;
};

struct PrimeBasis {
  // p_0 = -1 is implicit; it is carried as the sign slot of exponent vectors.
  static constexpr int kSignElement = -1;
  std::vector<std::uint64_t> primes;

  int size() const { return static_cast<int>(primes.size()); }
};

struct CvpInstance {
  IntMatrix basis;   // (n+1) x n, one lattice vector per column
  IntVector target;  // length n+1
  std::vector<int> diagonal;
  double c = 0;

  int dimension() const { return static_cast<int>(basis.cols()); }
};

// Miller-Rabin with a fixed internal seed; deterministic.
bool is_probable_prime(const Integer& n);

// Rejects even, prime and prime-power moduli and N < 15 with distinct codes.
void validate_modulus(const Integer& modulus);

// floor(l log2 N / log2 log2 N); throws kInstanceRejected when < 2.
int lattice_dimension(const Integer& modulus, int l);

PrimeBasis first_primes(int n);

// Multiset {round(i/2) : i = 1..n}, ascending.
std::vector<int> diagonal_multiset(int n);

// Seeded shuffle of diagonal_multiset(n).  `draw` selects an independent
// permutation from the same seed (one per pipeline round).  An override is
// validated and returned verbatim.
std::vector<int> diagonal_permutation(
    int n, std::uint64_t seed, std::uint64_t draw = 0,
    const std::optional<std::vector<int>>& override_values = std::nullopt);

// round(10^c ln x) on 60-digit reals.
Integer scaled_log(const Integer& x, double c);

CvpInstance build_cvp(const Integer& modulus, double c, const PrimeBasis& primes,
                      const std::vector<int>& diagonal);

// Validates the full instance and returns its lattice dimension.
int validate_instance(const FactoringInstance& instance);

}  // namespace schnorr
